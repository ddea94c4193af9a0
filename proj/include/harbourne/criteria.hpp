#pragma once

// Necessary conditions for a T-vector to come from a line configuration. Each filter
// either passes or names the violated inequality with the numbers plugged in.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "harbourne/tspace.hpp"

namespace harbourne {

enum class Mode { absolute, complex };

inline std::string to_string(Mode m) { return m == Mode::absolute ? "absolute" : "complex"; }

namespace criterion {
inline constexpr const char* kMultiplicitySum = "multiplicity_sum";
inline constexpr const char* kTwoPencils = "two_pencils";
inline constexpr const char* kParityProfile = "parity_profile";
inline constexpr const char* kHirzebruch = "hirzebruch";
}  // namespace criterion

struct ExclusionVerdict {
    enum class Status { passed, excluded };

    Status status = Status::passed;
    std::string criterion;
    std::string detail;

    bool excluded() const noexcept { return status == Status::excluded; }

    static ExclusionVerdict pass(std::string criterion, std::string detail = {}) {
        return {Status::passed, std::move(criterion), std::move(detail)};
    }
    static ExclusionVerdict exclude(std::string criterion, std::string detail) {
        return {Status::excluded, std::move(criterion), std::move(detail)};
    }
};

/// Multiplicities of the singular points met by one line. The line itself is counted
/// in each multiplicity, so sum (m - 1) = d - 1.
struct LineProfile {
    std::vector<int> parts;  // nonincreasing

    int count(int m) const { return static_cast<int>(std::count(parts.begin(), parts.end(), m)); }
    friend bool operator==(const LineProfile&, const LineProfile&) = default;
};

/// m_1 + ... + m_r <= d + C(r,2) for the r largest multiplicities.
inline ExclusionVerdict multiplicity_sum_filter(const TVector& T) {
    const auto m = T.multiplicities();
    const int d = T.d();
    const std::size_t limit = std::min(m.size(), static_cast<std::size_t>(d));
    std::int64_t sum = 0;
    for (std::size_t r = 1; r <= limit; ++r) {
        sum += m[r - 1];
        const std::int64_t bound = d + binomial2(static_cast<std::int64_t>(r));
        if (sum > bound) {
            std::ostringstream os;
            os << "r=" << r << ": ";
            for (std::size_t i = 0; i < r; ++i) os << (i ? "+" : "") << m[i];
            os << " = " << sum << " > " << bound << " = " << d << " + C(" << r << ",2)";
            return ExclusionVerdict::exclude(criterion::kMultiplicitySum, os.str());
        }
    }
    return ExclusionVerdict::pass(criterion::kMultiplicitySum);
}

/// (m_1 - 1)(m_2 - 1) + 2 <= s for the two largest multiplicities. This branch holds whether
/// or not the two points share a configuration line.
inline ExclusionVerdict two_pencils_filter(const TVector& T) {
    const std::int64_t s = T.points();
    if (s < 2) return ExclusionVerdict::pass(criterion::kTwoPencils, "inapplicable: s < 2");
    const auto m = T.multiplicities();
    const std::int64_t need = static_cast<std::int64_t>(m[0] - 1) * (m[1] - 1) + 2;
    if (need > s) {
        std::ostringstream os;
        os << "m1=" << m[0] << ", m2=" << m[1] << ": (" << m[0] - 1 << ")(" << m[1] - 1 << ")+2 = " << need
           << " > s = " << s;
        return ExclusionVerdict::exclude(criterion::kTwoPencils, os.str());
    }
    return ExclusionVerdict::pass(criterion::kTwoPencils);
}

/// All line profiles compatible with T: multisets over {k : t_k > 0} with sum (m - 1) = d - 1
/// and at most t_m parts equal to m (the points on a line are distinct).
inline std::vector<LineProfile> line_profiles(const TVector& T) {
    std::vector<int> support;
    for (int k = T.d(); k >= 2; --k)
        if (T.t(k) > 0) support.push_back(k);

    std::vector<LineProfile> out;
    std::vector<int> parts;
    std::function<void(std::size_t, int)> build = [&](std::size_t idx, int remaining) {
        if (remaining == 0) {
            out.push_back({parts});
            return;
        }
        if (idx == support.size()) return;
        const int m = support[idx];
        const auto cap = std::min<std::int64_t>(T.t(m), remaining / (m - 1));
        for (std::int64_t c = cap; c >= 0; --c) {
            for (std::int64_t i = 0; i < c; ++i) parts.push_back(m);
            build(idx + 1, remaining - static_cast<int>(c) * (m - 1));
            for (std::int64_t i = 0; i < c; ++i) parts.pop_back();
        }
    };
    build(0, T.d() - 1);
    return out;
}

/// Nonnegative x_P over `profiles` with sum x_P = d and sum_P count_m(P) x_P = m t_m for each m.
/// Returns the first solution found by depth-first search, or an empty vector.
inline std::vector<int> solve_profile_counts(const TVector& T, const std::vector<LineProfile>& profiles) {
    const int d = T.d();
    std::vector<std::int64_t> need(static_cast<std::size_t>(d + 1), 0);
    for (int k = 2; k <= d; ++k) need[static_cast<std::size_t>(k)] = k * T.t(k);

    std::vector<int> x(profiles.size(), 0);
    bool found = false;
    std::function<void(std::size_t, int)> assign = [&](std::size_t idx, int lines_left) {
        if (found) return;
        if (idx == profiles.size()) {
            if (lines_left != 0) return;
            for (int k = 2; k <= d; ++k)
                if (need[static_cast<std::size_t>(k)] != 0) return;
            found = true;
            return;
        }
        const auto& P = profiles[idx];
        int cap = lines_left;
        for (int m : P.parts) cap = std::min<std::int64_t>(cap, need[static_cast<std::size_t>(m)] / P.count(m));
        for (int c = cap; c >= 0 && !found; --c) {
            x[idx] = c;
            for (int m : P.parts) need[static_cast<std::size_t>(m)] -= c;
            assign(idx + 1, lines_left - c);
            for (int m : P.parts) need[static_cast<std::size_t>(m)] += c;
        }
        if (!found) x[idx] = 0;
    };
    assign(0, d);
    if (!found) return {};
    return x;
}

/// Each line must carry a profile, and the profiles of all d lines must account for
/// exactly m * t_m incidences with m-fold points.
inline ExclusionVerdict parity_profile_filter(const TVector& T) {
    const auto profiles = line_profiles(T);
    if (profiles.empty()) {
        std::ostringstream os;
        os << "no line profile: " << T.d() - 1 << " is not a sum of (m-1) over available multiplicities";
        return ExclusionVerdict::exclude(criterion::kParityProfile, os.str());
    }
    if (solve_profile_counts(T, profiles).empty()) {
        std::ostringstream os;
        os << profiles.size() << " line profile(s) {";
        for (std::size_t i = 0; i < profiles.size(); ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < profiles[i].parts.size(); ++j) os << (j ? "," : "") << profiles[i].parts[j];
        }
        os << "} cannot supply the incidences";
        for (int k = 2; k <= T.d(); ++k)
            if (T.t(k) > 0) os << " " << k << "*t_" << k << "=" << k * T.t(k);
        os << " with " << T.d() << " lines";
        return ExclusionVerdict::exclude(criterion::kParityProfile, os.str());
    }
    return ExclusionVerdict::pass(criterion::kParityProfile);
}

/// t_2 + (3/4) t_3 >= d + sum_{k>=5} (k - 4) t_k, valid over C when t_d = t_{d-1} = 0.
inline ExclusionVerdict hirzebruch_filter(const TVector& T) {
    const int d = T.d();
    if (T.t(d) != 0 || T.t(d - 1) != 0) return ExclusionVerdict::pass(criterion::kHirzebruch, "inapplicable");
    const BigRational lhs = BigRational(T.t(2)) + BigRational(3 * T.t(3), 4);
    std::int64_t rhs = d;
    for (int k = 5; k <= d; ++k) rhs += (k - 4) * T.t(k);
    if (lhs < BigRational(rhs)) {
        std::ostringstream os;
        os << "t2 + 3/4 t3 = " << lhs << " < " << rhs << " = d + sum_{k>=5}(k-4)t_k";
        return ExclusionVerdict::exclude(criterion::kHirzebruch, os.str());
    }
    return ExclusionVerdict::pass(criterion::kHirzebruch);
}

/// Runs the filters cheapest first; the Hirzebruch bound only in complex mode.
inline ExclusionVerdict apply_all(const TVector& T, Mode mode) {
    for (auto* filter : {&multiplicity_sum_filter, &two_pencils_filter, &parity_profile_filter}) {
        auto v = filter(T);
        if (v.excluded()) return v;
    }
    if (mode == Mode::complex) {
        auto v = hirzebruch_filter(T);
        if (v.excluded()) return v;
    }
    return ExclusionVerdict::pass("all");
}

}  // namespace harbourne
