#pragma once

// Concrete line configurations over Q, F_p and Q(w): exact intersection points,
// multiplicity histograms, PG(2,p) and an exhaustive subset search inside it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "harbourne/error.hpp"
#include "harbourne/exactnum.hpp"
#include "harbourne/incidence.hpp"
#include "harbourne/tspace.hpp"

namespace harbourne {

/// Homogeneous coordinates (a : b : c) of a point or, dually, a line.
struct ProjTriple {
    std::array<Scalar, 3> c;

    friend bool operator==(const ProjTriple&, const ProjTriple&) = default;

    std::string to_string() const {
        return "(" + c[0].to_string() + " : " + c[1].to_string() + " : " + c[2].to_string() + ")";
    }
};

inline bool is_zero(const ProjTriple& t) { return t.c[0].is_zero() && t.c[1].is_zero() && t.c[2].is_zero(); }

inline Scalar dot(const ProjTriple& x, const ProjTriple& y) {
    return x.c[0] * y.c[0] + x.c[1] * y.c[1] + x.c[2] * y.c[2];
}

/// Join of two points, or meet of two lines.
inline ProjTriple cross(const ProjTriple& x, const ProjTriple& y) {
    return {{x.c[1] * y.c[2] - x.c[2] * y.c[1], x.c[2] * y.c[0] - x.c[0] * y.c[2], x.c[0] * y.c[1] - x.c[1] * y.c[0]}};
}

/// Canonical representative: coprime integers with positive leading entry over Q,
/// leading entry 1 over F_p and Q(w).
inline ProjTriple normalize(const ProjTriple& t) {
    if (is_zero(t)) throw InvalidConfiguration("zero coordinate triple");
    const FieldDescriptor f = t.c[0].field();
    for (const auto& x : t.c)
        if (!(x.field() == f)) throw DescriptorMismatch("coordinates from different fields");

    if (f.kind() == FieldDescriptor::Kind::rational) {
        BigInt lcm = 1;
        for (const auto& x : t.c) {
            const BigInt& den = x.as_rational().denominator();
            lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
        }
        std::array<BigInt, 3> ints;
        BigInt g = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& r = t.c[i].as_rational();
            ints[i] = r.numerator() * (lcm / r.denominator());
            g = boost::multiprecision::gcd(g, BigInt(boost::multiprecision::abs(ints[i])));
        }
        const auto lead = std::find_if(ints.begin(), ints.end(), [](const BigInt& v) { return v != 0; });
        if (*lead < 0) g = -g;
        return {{Scalar(BigRational(BigInt(ints[0] / g))), Scalar(BigRational(BigInt(ints[1] / g))),
                 Scalar(BigRational(BigInt(ints[2] / g)))}};
    }
    const auto lead = std::find_if(t.c.begin(), t.c.end(), [](const Scalar& v) { return !v.is_zero(); });
    const Scalar inv = field_inverse(*lead);
    return {{t.c[0] * inv, t.c[1] * inv, t.c[2] * inv}};
}

/// A singular point with the indices of the configuration lines through it.
struct SingularPoint {
    ProjTriple coords;
    std::vector<int> lines;

    int multiplicity() const noexcept { return static_cast<int>(lines.size()); }
};

/// Mutually distinct lines over one field together with their singular points.
class LineConfiguration {
public:
    LineConfiguration(FieldDescriptor field, std::vector<ProjTriple> lines) : field_(field) {
        if (lines.size() < 2) throw InvalidConfiguration("a configuration needs at least two lines");
        for (auto& l : lines) {
            for (const auto& x : l.c)
                if (!(x.field() == field_))
                    throw DescriptorMismatch("line coordinate " + x.to_string() + " is not in " + field_.name());
            lines_.push_back(normalize(l));
        }
        for (std::size_t i = 0; i < lines_.size(); ++i)
            for (std::size_t j = i + 1; j < lines_.size(); ++j)
                if (lines_[i] == lines_[j])
                    throw InvalidConfiguration("duplicate lines " + std::to_string(i) + " and " + std::to_string(j) +
                                               ": " + lines_[i].to_string());
        derive_points();
    }

    const FieldDescriptor& field() const noexcept { return field_; }
    int d() const noexcept { return static_cast<int>(lines_.size()); }
    const std::vector<ProjTriple>& lines() const noexcept { return lines_; }
    const std::vector<SingularPoint>& points() const noexcept { return points_; }
    std::int64_t s() const noexcept { return static_cast<std::int64_t>(points_.size()); }

    /// Singular points through line `i`.
    std::vector<const SingularPoint*> points_on(int i) const {
        std::vector<const SingularPoint*> out;
        for (const auto& p : points_)
            if (std::find(p.lines.begin(), p.lines.end(), i) != p.lines.end()) out.push_back(&p);
        return out;
    }

    /// The dual clique partition: one clique of line indices per singular point.
    CliquePartition clique_partition() const {
        CliquePartition P{d(), {}};
        for (const auto& p : points_) P.points.push_back(p.lines);
        return P;
    }

private:
    void derive_points() {
        std::map<std::string, std::size_t> index;
        const int n = d();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                ProjTriple p = normalize(cross(lines_[static_cast<std::size_t>(i)], lines_[static_cast<std::size_t>(j)]));
                auto [it, inserted] = index.emplace(p.to_string(), points_.size());
                if (inserted) points_.push_back({std::move(p), {}});
            }
        }
        // Incidence is recomputed exactly rather than inferred from the pairs that produced the point.
        for (auto& p : points_) {
            for (int l = 0; l < n; ++l)
                if (dot(p.coords, lines_[static_cast<std::size_t>(l)]).is_zero()) p.lines.push_back(l);
            if (p.lines.size() < 2) throw InvalidConfiguration("intersection point not incident to its lines");
        }
        std::int64_t pairs = 0;
        for (const auto& p : points_) pairs += binomial2(p.multiplicity());
        if (pairs != binomial2(n)) throw InvalidConfiguration("pair count of singular points does not match C(d,2)");
    }

    FieldDescriptor field_;
    std::vector<ProjTriple> lines_;
    std::vector<SingularPoint> points_;
};

inline TVector tvector_of_configuration(const LineConfiguration& C) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(C.d() - 1), 0);
    for (const auto& p : C.points()) ++counts[static_cast<std::size_t>(p.multiplicity() - 2)];
    return {C.d(), std::move(counts)};
}

/// (d^2 - sum_P m(P)^2) / s.
inline BigRational harbourne_value(const LineConfiguration& C) {
    std::int64_t squares = 0;
    for (const auto& p : C.points()) squares += static_cast<std::int64_t>(p.multiplicity()) * p.multiplicity();
    return {static_cast<long long>(C.d()) * C.d() - squares, static_cast<long long>(C.s())};
}

/// Rational line from integer coefficients.
inline ProjTriple rational_triple(long long a, long long b, long long c) {
    return {{Scalar(BigRational(a)), Scalar(BigRational(b)), Scalar(BigRational(c))}};
}

/// Line over F_p from integer coefficients (reduced mod p).
inline ProjTriple prime_triple(int p, long long a, long long b, long long c) {
    return {{Scalar(PrimeFieldElement(a, p)), Scalar(PrimeFieldElement(b, p)), Scalar(PrimeFieldElement(c, p))}};
}

/// The finite projective plane PG(2,p) with integer-coded incidences.
class ProjectivePlane {
public:
    explicit ProjectivePlane(int p) : p_(FieldDescriptor::prime(p).modulus()) {
        // Normalized triples in lexicographic order: (0,0,1), (0,1,c), (1,b,c).
        triples_.push_back({0, 0, 1});
        for (int c = 0; c < p_; ++c) triples_.push_back({0, 1, c});
        for (int b = 0; b < p_; ++b)
            for (int c = 0; c < p_; ++c) triples_.push_back({1, b, c});

        const std::size_t n = triples_.size();
        points_on_line_.resize(n);
        lines_through_point_.resize(n);
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t q = 0; q < n; ++q) {
                const auto& a = triples_[l];
                const auto& b = triples_[q];
                if ((a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % p_ == 0) {
                    points_on_line_[l].push_back(static_cast<int>(q));
                    lines_through_point_[q].push_back(static_cast<int>(l));
                }
            }
        const std::size_t expected = static_cast<std::size_t>(p_) * p_ + p_ + 1;
        if (n != expected) throw Error("PG(2," + std::to_string(p_) + ") has wrong number of elements");
        for (std::size_t i = 0; i < n; ++i)
            if (points_on_line_[i].size() != static_cast<std::size_t>(p_ + 1) ||
                lines_through_point_[i].size() != static_cast<std::size_t>(p_ + 1))
                throw Error("PG(2," + std::to_string(p_) + ") incidence is not regular");
    }

    int p() const noexcept { return p_; }
    int size() const noexcept { return static_cast<int>(triples_.size()); }
    const std::array<int, 3>& triple(int i) const { return triples_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& points_on_line(int l) const { return points_on_line_[static_cast<std::size_t>(l)]; }
    const std::vector<int>& lines_through_point(int q) const {
        return lines_through_point_[static_cast<std::size_t>(q)];
    }

    ProjTriple line(int i) const {
        const auto& t = triple(i);
        return prime_triple(p_, t[0], t[1], t[2]);
    }

    /// Index of a normalized triple, or -1.
    int index_of(const std::array<int, 3>& t) const {
        auto it = std::find(triples_.begin(), triples_.end(), t);
        return it == triples_.end() ? -1 : static_cast<int>(it - triples_.begin());
    }

private:
    int p_;
    std::vector<std::array<int, 3>> triples_;
    std::vector<std::vector<int>> points_on_line_;
    std::vector<std::vector<int>> lines_through_point_;
};

/// All p^2 + p + 1 lines of PG(2,p), normalized, in lexicographic order.
inline std::vector<ProjTriple> plane_lines(int p) {
    ProjectivePlane plane(p);
    std::vector<ProjTriple> out;
    for (int i = 0; i < plane.size(); ++i) out.push_back(plane.line(i));
    return out;
}

struct RealizationResult {
    std::optional<LineConfiguration> configuration;
    std::vector<int> line_indices;  // into plane_lines(p)
    bool exhausted = false;
    std::uint64_t nodes_explored = 0;

    bool found() const noexcept { return configuration.has_value(); }
};

namespace detail {

class SubsetSearch {
public:
    SubsetSearch(const ProjectivePlane& plane, const TVector& T, std::uint64_t budget)
        : plane_(plane), T_(T), d_(T.d()), budget_(budget),
          multiplicity_(static_cast<std::size_t>(plane.size()), 0),
          at_least_(static_cast<std::size_t>(T.d() + 2), 0),
          allowed_(static_cast<std::size_t>(T.d() + 2), 0) {
        for (int m = d_; m >= 2; --m)
            allowed_[static_cast<std::size_t>(m)] = allowed_[static_cast<std::size_t>(m + 1)] + T.t(m);
    }

    bool run() { return extend(0); }
    bool aborted() const noexcept { return aborted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    const std::vector<int>& chosen() const noexcept { return chosen_; }

private:
    bool extend(int start) {
        if (static_cast<int>(chosen_.size()) == d_) return matches();
        const int left = d_ - static_cast<int>(chosen_.size());
        for (int l = start; l + left <= plane_.size(); ++l) {
            if (++nodes_ > budget_) {
                aborted_ = true;
                return false;
            }
            if (add(l) && extend(l + 1)) return true;
            remove(l);
            if (aborted_) return false;
        }
        return false;
    }

    /// Adds line l; false when some multiplicity class already overflows T.
    bool add(int l) {
        chosen_.push_back(l);
        bool ok = true;
        for (int q : plane_.points_on_line(l)) {
            const int m = ++multiplicity_[static_cast<std::size_t>(q)];
            if (m >= 2 && m <= d_) {
                if (++at_least_[static_cast<std::size_t>(m)] > allowed_[static_cast<std::size_t>(m)]) ok = false;
            }
        }
        return ok;
    }

    void remove(int l) {
        for (int q : plane_.points_on_line(l)) {
            const int m = multiplicity_[static_cast<std::size_t>(q)]--;
            if (m >= 2 && m <= d_) --at_least_[static_cast<std::size_t>(m)];
        }
        chosen_.pop_back();
    }

    bool matches() const {
        for (int m = 2; m <= d_; ++m)
            if (at_least_[static_cast<std::size_t>(m)] - at_least_[static_cast<std::size_t>(m + 1)] != T_.t(m))
                return false;
        return true;
    }

    const ProjectivePlane& plane_;
    const TVector& T_;
    int d_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<int> chosen_;
    std::vector<int> multiplicity_;
    std::vector<std::int64_t> at_least_;  // points with multiplicity >= m so far
    std::vector<std::int64_t> allowed_;   // sum_{k >= m} t_k
};

}  // namespace detail

/// Searches the d-subsets of PG(2,p)'s lines in lexicographic order for one with T-vector T.
inline RealizationResult realize_over_prime_field(const TVector& T, int p,
                                                  std::uint64_t node_budget = kDefaultNodeBudget) {
    ProjectivePlane plane(p);
    if (T.d() > plane.size())
        throw InvalidDegree("PG(2," + std::to_string(p) + ") has only " + std::to_string(plane.size()) + " lines");
    RealizationResult out;
    if (!check_combinatorial_identity(T)) {
        out.exhausted = true;
        return out;
    }
    detail::SubsetSearch search(plane, T, node_budget);
    const bool found = search.run();
    out.nodes_explored = search.nodes();
    if (found) {
        out.line_indices = search.chosen();
        std::vector<ProjTriple> lines;
        for (int i : out.line_indices) lines.push_back(plane.line(i));
        out.configuration.emplace(FieldDescriptor::prime(p), std::move(lines));
    } else {
        out.exhausted = !search.aborted();
    }
    return out;
}

/// Serializable realization evidence; `claimed` is checked, never trusted.
struct Certificate {
    std::string label;
    FieldDescriptor field = FieldDescriptor::rational();
    std::vector<ProjTriple> lines;
    std::optional<TVector> claimed;
};

struct VerificationReport {
    TVector tvector;
    BigRational value;
    int d = 0;
    std::int64_t s = 0;
};

inline Certificate certificate_from_configuration(std::string label, const LineConfiguration& C,
                                                  bool with_claim = true) {
    Certificate cert{std::move(label), C.field(), C.lines(), std::nullopt};
    if (with_claim) cert.claimed = tvector_of_configuration(C);
    return cert;
}

/// Rebuilds the configuration from coordinates and recomputes everything.
inline VerificationReport verify_certificate(const Certificate& cert) {
    std::optional<LineConfiguration> C;
    try {
        C.emplace(cert.field, cert.lines);
    } catch (const VerificationError&) {
        throw;
    } catch (const Error& e) {
        throw VerificationError(std::string("certificate '") + cert.label + "': " + e.what(), "/lines");
    }
    VerificationReport report{tvector_of_configuration(*C), harbourne_value(*C), C->d(), C->s()};
    if (cert.claimed && !(*cert.claimed == report.tvector))
        throw VerificationError("certificate '" + cert.label + "': claimed T-vector " + cert.claimed->to_string() +
                                    " but the lines give " + report.tvector.to_string(),
                                "/claimed_tvector");
    return report;
}

}  // namespace harbourne
