#pragma once

// Field-independent realizability: lines are vertices of K_d, singular points are cliques,
// and a T-vector is combinatorially feasible iff the edges of K_d split into t_k cliques
// of size k for every k.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "harbourne/criteria.hpp"
#include "harbourne/tspace.hpp"

namespace harbourne {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ULL;

/// Node budget from HARB_NODE_BUDGET, falling back to `fallback` when unset or unparsable.
inline std::uint64_t node_budget_from_env(std::uint64_t fallback = kDefaultNodeBudget) {
    const char* env = std::getenv("HARB_NODE_BUDGET");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return fallback;
    return v;
}

struct CliquePartition {
    int d = 0;
    std::vector<std::vector<int>> points;  // each clique sorted ascending

    friend bool operator==(const CliquePartition&, const CliquePartition&) = default;
};

struct SearchOutcome {
    enum class Result { feasible, infeasible, inconclusive };

    Result result = Result::inconclusive;
    std::optional<CliquePartition> witness;
    std::uint64_t nodes_explored = 0;
    bool exhausted = false;

    bool feasible() const noexcept { return result == Result::feasible; }
    bool infeasible() const noexcept { return result == Result::infeasible; }
    bool inconclusive() const noexcept { return result == Result::inconclusive; }
};

inline std::string to_string(SearchOutcome::Result r) {
    switch (r) {
        case SearchOutcome::Result::feasible: return "feasible";
        case SearchOutcome::Result::infeasible: return "infeasible";
        case SearchOutcome::Result::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Independent checker: every pair in exactly one clique, cliques pairwise share at most
/// one line, and the clique-size histogram equals T.
inline bool validate_partition(const CliquePartition& P, const TVector& T) {
    const int d = P.d;
    if (d != T.d() || d < 2) return false;
    std::vector<int> cover(static_cast<std::size_t>(d * d), 0);
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(d + 1), 0);
    for (const auto& c : P.points) {
        if (c.size() < 2 || c.size() > static_cast<std::size_t>(d)) return false;
        for (std::size_t a = 0; a < c.size(); ++a) {
            if (c[a] < 0 || c[a] >= d) return false;
            for (std::size_t b = a + 1; b < c.size(); ++b) {
                if (c[a] == c[b]) return false;
                const int lo = std::min(c[a], c[b]), hi = std::max(c[a], c[b]);
                ++cover[static_cast<std::size_t>(lo * d + hi)];
            }
        }
        ++sizes[c.size()];
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (cover[static_cast<std::size_t>(i * d + j)] != 1) return false;
    for (std::size_t a = 0; a < P.points.size(); ++a)
        for (std::size_t b = a + 1; b < P.points.size(); ++b) {
            int shared = 0;
            for (int x : P.points[a])
                shared += static_cast<int>(std::count(P.points[b].begin(), P.points[b].end(), x));
            if (shared > 1) return false;
        }
    for (int k = 2; k <= d; ++k)
        if (sizes[static_cast<std::size_t>(k)] != T.t(k)) return false;
    return true;
}

namespace detail {

/// Exact-cover style backtracking. The lexicographically first uncovered pair {i, j} is
/// always covered next by a complete clique; cliques therefore appear in canonical order.
/// Untouched lines are interchangeable, so only a prefix of them may join a new clique.
class ArrangementSearch {
public:
    ArrangementSearch(const TVector& T, std::uint64_t budget)
        : T_(T), d_(T.d()), s_(T.points()), budget_(budget), remaining_(static_cast<std::size_t>(T.d() + 1), 0) {
        for (int k = 2; k <= d_; ++k) remaining_[static_cast<std::size_t>(k)] = T.t(k);
        const std::uint64_t all = d_ == 64 ? ~0ULL : ((1ULL << d_) - 1);
        uncovered_.resize(static_cast<std::size_t>(d_));
        for (int i = 0; i < d_; ++i) uncovered_[static_cast<std::size_t>(i)] = all & ~(1ULL << i);
    }

    SearchOutcome run() {
        SearchOutcome out;
        if (!check_combinatorial_identity(T_) || T_.points() < 1 || multiplicity_sum_filter(T_).excluded()) {
            out.result = SearchOutcome::Result::infeasible;
            out.exhausted = true;
            return out;
        }
        const bool found = descend();
        out.nodes_explored = nodes_;
        if (found) {
            out.result = SearchOutcome::Result::feasible;
            CliquePartition P{d_, {}};
            for (auto mask : cliques_) P.points.push_back(members(mask));
            out.witness = std::move(P);
        } else if (aborted_) {
            out.result = SearchOutcome::Result::inconclusive;
        } else {
            out.result = SearchOutcome::Result::infeasible;
            out.exhausted = true;
        }
        return out;
    }

private:
    static std::vector<int> members(std::uint64_t mask) {
        std::vector<int> v;
        while (mask) {
            v.push_back(std::countr_zero(mask));
            mask &= mask - 1;
        }
        return v;
    }

    bool descend() {
        if (++nodes_ > budget_) {
            aborted_ = true;
            return false;
        }
        int i = 0;
        while (i < d_ && uncovered_[static_cast<std::size_t>(i)] == 0) ++i;
        if (i == d_) return true;  // pair count identity forces the size budget to be spent too
        const int j = std::countr_zero(uncovered_[static_cast<std::size_t>(i)]);
        const std::uint64_t candidates = uncovered_[static_cast<std::size_t>(i)] & uncovered_[static_cast<std::size_t>(j)];
        const std::uint64_t base = (1ULL << i) | (1ULL << j);

        for (int k = d_; k >= 2; --k) {
            if (remaining_[static_cast<std::size_t>(k)] == 0) continue;
            if (choose(base, candidates, k - 2, false, k)) return true;
            if (aborted_) return false;
        }
        return false;
    }

    /// Extends `clique` by `need` members drawn in increasing order from `pool`.
    bool choose(std::uint64_t clique, std::uint64_t pool, int need, bool skipped_fresh, int k) {
        if (need == 0) return place(clique, k);
        while (pool && std::popcount(pool) >= need) {
            const int v = std::countr_zero(pool);
            const std::uint64_t bit = 1ULL << v;
            pool &= pool - 1;
            const bool fresh = (touched_ & bit) == 0;
            if (!(fresh && skipped_fresh)) {
                if (choose(clique | bit, pool & uncovered_[static_cast<std::size_t>(v)], need - 1, skipped_fresh, k))
                    return true;
                if (aborted_) return false;
            }
            if (fresh) skipped_fresh = true;
        }
        return false;
    }

    bool place(std::uint64_t clique, int k) {
        // Two pencils: cliques sharing a line need (|A|-1)(|B|-1)+2 <= s, disjoint ones |A||B|+2 <= s.
        for (auto other : cliques_) {
            const std::int64_t a = k, b = std::popcount(other);
            const std::int64_t need = (clique & other) ? (a - 1) * (b - 1) + 2 : a * b + 2;
            if (need > s_) return false;
        }
        apply(clique, k);
        const bool ok = consistent() && descend();
        if (!ok) undo(clique, k);
        return ok;
    }

    void apply(std::uint64_t clique, int k) {
        for (auto m = clique; m; m &= m - 1) uncovered_[static_cast<std::size_t>(std::countr_zero(m))] &= ~clique;
        saved_touched_.push_back(touched_);
        touched_ |= clique;
        --remaining_[static_cast<std::size_t>(k)];
        cliques_.push_back(clique);
    }

    void undo(std::uint64_t clique, int k) {
        cliques_.pop_back();
        ++remaining_[static_cast<std::size_t>(k)];
        touched_ = saved_touched_.back();
        saved_touched_.pop_back();
        for (auto m = clique; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            uncovered_[static_cast<std::size_t>(v)] |= clique & ~(1ULL << v);
        }
    }

    /// Every line's uncovered degree must be a sum of (k-1) over the remaining clique sizes,
    /// and the largest remaining clique needs enough lines with room for it.
    bool consistent() const {
        std::uint64_t reach = 1;  // bit r set: degree r attainable
        int largest = 0;
        for (int k = 2; k <= d_; ++k) {
            const auto count = remaining_[static_cast<std::size_t>(k)];
            if (count == 0) continue;
            largest = k;
            for (std::int64_t c = 0; c < count && c < d_; ++c) {
                const std::uint64_t next = reach | (reach << (k - 1));
                if (next == reach) break;
                reach = next;
            }
        }
        int roomy = 0;
        for (int l = 0; l < d_; ++l) {
            const int r = std::popcount(uncovered_[static_cast<std::size_t>(l)]);
            if (r >= 64 || !((reach >> r) & 1ULL)) return false;
            if (largest && r >= largest - 1) ++roomy;
        }
        return largest == 0 || roomy >= largest;
    }

    const TVector& T_;
    int d_;
    std::int64_t s_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<std::int64_t> remaining_;
    std::vector<std::uint64_t> uncovered_;
    std::uint64_t touched_ = 0;
    std::vector<std::uint64_t> saved_touched_;
    std::vector<std::uint64_t> cliques_;
};

}  // namespace detail

/// Decides whether the pairs of d lines split into cliques with the sizes prescribed by T.
/// `infeasible` is only reported after the whole canonical tree was searched; running out
/// of nodes yields `inconclusive`.
inline SearchOutcome feasible_arrangement(const TVector& T, std::uint64_t node_budget = kDefaultNodeBudget) {
    if (T.d() > 63) throw InvalidDegree("incidence search supports at most 63 lines");
    return detail::ArrangementSearch(T, node_budget).run();
}

/// Per line, the multiplicities of the cliques through it (sum (m - 1) = d - 1 in any valid partition).
inline std::vector<std::vector<int>> line_profiles_of(const CliquePartition& P) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(P.d));
    for (const auto& c : P.points)
        for (int v : c) out[static_cast<std::size_t>(v)].push_back(static_cast<int>(c.size()));
    for (auto& v : out) std::sort(v.rbegin(), v.rend());
    return out;
}

}  // namespace harbourne
