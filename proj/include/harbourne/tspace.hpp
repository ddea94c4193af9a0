#pragma once

// Solutions T = (t_2, ..., t_d) of sum_k t_k * C(k,2) = C(d,2) and their quotients
// q(T) = (d^2 - sum_k k^2 t_k) / sum_k t_k.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harbourne/error.hpp"
#include "harbourne/exactnum.hpp"

namespace harbourne {

inline constexpr int kSoftMaxDegree = 10;

inline std::int64_t binomial2(std::int64_t n) { return n * (n - 1) / 2; }

/// Multiplicity histogram of a line configuration: counts[k - 2] = t_k for k in [2, d].
class TVector {
public:
    TVector() = default;

    /// Throws InvalidDegree for d < 2 and InvalidConfiguration for a wrong length or negative count.
    TVector(int d, std::vector<std::int64_t> counts) : d_(d), counts_(std::move(counts)) {
        if (d_ < 2) throw InvalidDegree("number of lines must be at least 2, got " + std::to_string(d_));
        if (counts_.size() != static_cast<std::size_t>(d_ - 1))
            throw InvalidConfiguration("T-vector for d=" + std::to_string(d_) + " needs " +
                                       std::to_string(d_ - 1) + " entries, got " + std::to_string(counts_.size()));
        for (auto c : counts_)
            if (c < 0) throw InvalidConfiguration("negative entry in T-vector");
    }

    /// Builds a T-vector from {multiplicity, count} pairs, e.g. from_map(10, {{3, 9}, {4, 3}}).
    static TVector from_map(int d, std::initializer_list<std::pair<int, std::int64_t>> entries) {
        if (d < 2) throw InvalidDegree("number of lines must be at least 2, got " + std::to_string(d));
        std::vector<std::int64_t> counts(static_cast<std::size_t>(d - 1), 0);
        for (auto [k, t] : entries) {
            if (k < 2 || k > d) throw InvalidConfiguration("multiplicity " + std::to_string(k) + " out of range");
            counts[static_cast<std::size_t>(k - 2)] += t;
        }
        return {d, std::move(counts)};
    }

    /// Parses "t2,t3,...,td" (exactly d-1 entries).
    static TVector parse(int d, std::string_view text) {
        std::vector<std::int64_t> counts;
        std::size_t pos = 0;
        while (true) {
            auto comma = text.find(',', pos);
            auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
            while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
            if (item.empty()) throw InvalidConfiguration("empty entry in T-vector '" + std::string(text) + "'");
            std::int64_t v = 0;
            for (char c : item) {
                if (c < '0' || c > '9')
                    throw InvalidConfiguration("non-numeric entry in T-vector '" + std::string(text) + "'");
                v = v * 10 + (c - '0');
            }
            counts.push_back(v);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return {d, std::move(counts)};
    }

    int d() const noexcept { return d_; }
    const std::vector<std::int64_t>& counts() const noexcept { return counts_; }

    /// t_k; zero outside [2, d].
    std::int64_t t(int k) const noexcept {
        if (k < 2 || k > d_) return 0;
        return counts_[static_cast<std::size_t>(k - 2)];
    }

    /// Number of singular points s.
    std::int64_t points() const noexcept {
        std::int64_t s = 0;
        for (auto c : counts_) s += c;
        return s;
    }

    /// Largest k with t_k > 0, or 0 for the empty vector.
    int max_multiplicity() const noexcept {
        for (int k = d_; k >= 2; --k)
            if (t(k) > 0) return k;
        return 0;
    }

    /// Point multiplicities, largest first.
    std::vector<int> multiplicities() const {
        std::vector<int> m;
        for (int k = d_; k >= 2; --k)
            for (std::int64_t i = 0; i < t(k); ++i) m.push_back(k);
        return m;
    }

    /// "t2,t3,...,td".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(counts_[i]);
        }
        return s;
    }

    friend bool operator==(const TVector&, const TVector&) = default;

private:
    int d_ = 2;
    std::vector<std::int64_t> counts_{0};
};

/// True iff sum_k t_k * C(k,2) == C(d,2).
inline bool check_combinatorial_identity(const TVector& T) {
    std::int64_t pairs = 0;
    for (int k = 2; k <= T.d(); ++k) pairs += T.t(k) * binomial2(k);
    return pairs == binomial2(T.d());
}

/// C(d,2) minus the pairs accounted for by T; zero for a valid T-vector.
inline std::int64_t combinatorial_imbalance(const TVector& T) {
    std::int64_t pairs = 0;
    for (int k = 2; k <= T.d(); ++k) pairs += T.t(k) * binomial2(k);
    return binomial2(T.d()) - pairs;
}

/// Exact q(T) together with its decimal and mixed-fraction renderings.
struct QuotientValue {
    BigRational value;
    std::string decimal;  // 6 places
    std::string mixed;

    static QuotientValue of(BigRational v) {
        QuotientValue q{std::move(v), {}, {}};
        q.decimal = q.value.to_decimal(6);
        q.mixed = q.value.to_mixed();
        return q;
    }
};

inline QuotientValue combinatorial_quotient(const TVector& T) {
    const std::int64_t s = T.points();
    if (s < 1) throw InvalidConfiguration("T-vector without singular points");
    std::int64_t squares = 0;
    for (int k = 2; k <= T.d(); ++k) squares += static_cast<std::int64_t>(k) * k * T.t(k);
    return QuotientValue::of(BigRational(static_cast<long long>(T.d()) * T.d() - squares, s));
}

/// Ascending q(T), ties broken by (t_d, ..., t_2) lexicographically descending.
inline bool tvector_order(const TVector& x, const TVector& y) {
    auto qx = combinatorial_quotient(x).value;
    auto qy = combinatorial_quotient(y).value;
    if (qx != qy) return qx < qy;
    for (int k = x.d(); k >= 2; --k)
        if (x.t(k) != y.t(k)) return x.t(k) > y.t(k);
    return false;
}

/// Every nonnegative solution of the pair-count identity for d lines, sorted by `tvector_order`.
/// Solutions with q(T) above `q_ceiling` are dropped when a ceiling is given.
inline std::vector<TVector> enumerate_tvectors(int d, const std::optional<BigRational>& q_ceiling = std::nullopt) {
    if (d < 2) throw InvalidDegree("number of lines must be at least 2, got " + std::to_string(d));
    if (d > kSoftMaxDegree)
        std::clog << "warning: enumerating T-vectors for d=" << d << " beyond the supported range 2..10\n";

    std::vector<TVector> out;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(d - 1), 0);
    std::function<void(int, std::int64_t)> descend = [&](int k, std::int64_t budget) {
        if (k == 2) {
            counts[0] = budget;  // C(2,2) = 1 absorbs the remainder exactly
            TVector T(d, counts);
            if (!q_ceiling || combinatorial_quotient(T).value <= *q_ceiling) out.push_back(std::move(T));
            counts[0] = 0;
            return;
        }
        const std::int64_t w = binomial2(k);
        for (std::int64_t t = budget / w; t >= 0; --t) {
            counts[static_cast<std::size_t>(k - 2)] = t;
            descend(k - 1, budget - t * w);
        }
        counts[static_cast<std::size_t>(k - 2)] = 0;
    };
    descend(d, binomial2(d));
    std::sort(out.begin(), out.end(), tvector_order);
    return out;
}

}  // namespace harbourne
