#pragma once

// Replays the minimum search per d: walk T-vectors by ascending q(T), discard those failing a
// filter or with no clique partition, and stop at the first one with a verified realization.

#include <future>
#include <optional>
#include <string>
#include <vector>

#include "harbourne/criteria.hpp"
#include "harbourne/geometry.hpp"
#include "harbourne/incidence.hpp"
#include "harbourne/tspace.hpp"

namespace harbourne {

namespace certificates {

/// d lines through (0:0:1).
inline Certificate pencil(int d) {
    std::vector<ProjTriple> lines;
    for (int i = 0; i < d; ++i) lines.push_back(rational_triple(1, i, 0));
    return {"pencil-" + std::to_string(d), FieldDescriptor::rational(), std::move(lines), std::nullopt};
}

/// Lines (1, i, i^2): no three concurrent since the Vandermonde determinant never vanishes.
inline Certificate general_position(int d) {
    std::vector<ProjTriple> lines;
    for (long long i = 0; i < d; ++i) lines.push_back(rational_triple(1, i, i * i));
    return {"general-position-" + std::to_string(d), FieldDescriptor::rational(), std::move(lines), std::nullopt};
}

/// The six lines joining (1:0:0), (0:1:0), (0:0:1), (1:1:1).
inline std::vector<ProjTriple> quadrilateral_lines() {
    return {rational_triple(0, 0, 1),  rational_triple(0, 1, 0), rational_triple(0, 1, -1),
            rational_triple(1, 0, 0),  rational_triple(1, 0, -1), rational_triple(1, -1, 0)};
}

inline Certificate quadrilateral6() {
    return {"quadrilateral-6", FieldDescriptor::rational(), quadrilateral_lines(), TVector::from_map(6, {{2, 3}, {3, 4}})};
}

/// Complete quadrilateral with x + y = z through the diagonal points (0:1:1) and (1:0:1).
inline Certificate quadrilateral7() {
    auto lines = quadrilateral_lines();
    lines.push_back(rational_triple(1, 1, -1));
    return {"quadrilateral-7", FieldDescriptor::rational(), std::move(lines), TVector::from_map(7, {{2, 3}, {3, 6}})};
}

/// quadrilateral-7 plus 2y = z, the line through (1:0:0) and the double point (1:1:2).
inline Certificate d8_t4() {
    auto lines = quadrilateral7().lines;
    lines.push_back(rational_triple(0, 2, -1));
    return {"d8-t4-config", FieldDescriptor::rational(), std::move(lines),
            TVector::from_map(8, {{2, 4}, {3, 6}, {4, 1}})};
}

/// quadrilateral-6 without z = 0: two triple and four double points.
inline Certificate quadrilateral5() {
    auto lines = quadrilateral_lines();
    lines.erase(lines.begin());
    return {"quadrilateral-5", FieldDescriptor::rational(), std::move(lines), TVector::from_map(5, {{2, 4}, {3, 2}})};
}

/// Three lines through (0:0:1) and two further general lines.
inline Certificate triple_point5() {
    return {"triple-point-5",
            FieldDescriptor::rational(),
            {rational_triple(1, 0, 0), rational_triple(0, 1, 0), rational_triple(1, -1, 0), rational_triple(1, 2, 1),
             rational_triple(2, 1, 3)},
            TVector::from_map(5, {{2, 7}, {3, 1}})};
}

inline Certificate fano() {
    return {"fano-f2", FieldDescriptor::prime(2), plane_lines(2), TVector::from_map(7, {{3, 7}})};
}

/// PG(2,3) without `removed` of the four lines through (0:0:1).
inline Certificate pg23_minus_pencil(int removed) {
    std::vector<ProjTriple> lines;
    int dropped = 0;
    for (const auto& l : plane_lines(3)) {
        if (l.c[2].is_zero() && dropped < removed) {
            ++dropped;
            continue;
        }
        lines.push_back(l);
    }
    if (removed == 4)
        return {"pg23-minus-pencil4", FieldDescriptor::prime(3), std::move(lines), TVector::from_map(9, {{3, 12}})};
    return {"pg23-minus-pencil" + std::to_string(removed), FieldDescriptor::prime(3), std::move(lines),
            removed == 3 ? std::optional(TVector::from_map(10, {{3, 9}, {4, 3}})) : std::nullopt};
}

/// x^3 = y^3, y^3 = z^3, x^3 = z^3 split into nine lines over Q(w).
inline std::vector<ProjTriple> dual_hesse_lines() {
    const EisensteinRational one(BigRational(1));
    const EisensteinRational zero;
    const EisensteinRational w = EisensteinRational::omega();
    const std::array<EisensteinRational, 3> roots{one, w, w * w};
    std::vector<ProjTriple> lines;
    for (const auto& r : roots) lines.push_back({{Scalar(one), Scalar(-r), Scalar(zero)}});
    for (const auto& r : roots) lines.push_back({{Scalar(zero), Scalar(one), Scalar(-r)}});
    for (const auto& r : roots) lines.push_back({{Scalar(one), Scalar(zero), Scalar(-r)}});
    return lines;
}

inline Certificate dual_hesse() {
    return {"dual-hesse-eisenstein", FieldDescriptor::eisenstein(), dual_hesse_lines(), TVector::from_map(9, {{3, 12}})};
}

/// Dual Hesse plus z = 0, which joins the triple points (1:0:0) and (0:1:0).
inline Certificate dual_hesse_plus_line() {
    auto lines = dual_hesse_lines();
    const EisensteinRational one(BigRational(1));
    const EisensteinRational zero;
    lines.push_back({{Scalar(zero), Scalar(zero), Scalar(one)}});
    return {"dual-hesse-plus-line", FieldDescriptor::eisenstein(), std::move(lines),
            TVector::from_map(10, {{2, 3}, {3, 10}, {4, 2}})};
}

/// Dual Hesse without one line: its four triple points drop to double points, leaving the
/// Mobius-Kantor configuration (8 lines, 8 triple points).
inline Certificate mobius_kantor() {
    auto lines = dual_hesse_lines();
    lines.erase(lines.begin());
    return {"mobius-kantor-eisenstein", FieldDescriptor::eisenstein(), std::move(lines),
            TVector::from_map(8, {{2, 4}, {3, 8}})};
}

}  // namespace certificates

/// Verified certificates indexed by their recomputed T-vectors.
class CertificateDatabase {
public:
    struct Entry {
        Certificate certificate;
        VerificationReport report;
    };

    /// Verifies on insertion; a failing certificate throws VerificationError.
    void add(Certificate cert) {
        auto report = verify_certificate(cert);
        entries_.push_back({std::move(cert), std::move(report)});
    }

    const std::vector<Entry>& entries() const noexcept { return entries_; }

    const Entry* find(const std::string& label) const {
        for (const auto& e : entries_)
            if (e.certificate.label == label) return &e;
        return nullptr;
    }

    /// Entries realizing T; complex mode only accepts characteristic-zero fields.
    std::vector<const Entry*> realizations(const TVector& T, Mode mode) const {
        std::vector<const Entry*> out;
        for (const auto& e : entries_)
            if (e.report.tvector == T && (mode == Mode::absolute || e.certificate.field.characteristic_zero()))
                out.push_back(&e);
        return out;
    }

private:
    std::vector<Entry> entries_;
};

inline CertificateDatabase builtin_certificates() {
    CertificateDatabase db;
    for (int d = 2; d <= kSoftMaxDegree; ++d) {
        db.add(certificates::pencil(d));
        db.add(certificates::general_position(d));
    }
    db.add(certificates::quadrilateral5());
    db.add(certificates::triple_point5());
    db.add(certificates::quadrilateral6());
    db.add(certificates::quadrilateral7());
    db.add(certificates::d8_t4());
    db.add(certificates::fano());
    db.add(certificates::pg23_minus_pencil(4));
    db.add(certificates::pg23_minus_pencil(3));
    db.add(certificates::mobius_kantor());
    db.add(certificates::dual_hesse());
    db.add(certificates::dual_hesse_plus_line());
    return db;
}

struct SearchOptions {
    std::uint64_t incidence_budget = kDefaultNodeBudget;
    std::uint64_t realization_budget = kDefaultNodeBudget;
};

struct CandidateStatus {
    enum class Kind { excluded, combinatorially_infeasible, realized, inconclusive };

    TVector T;
    BigRational q;
    Kind kind = Kind::inconclusive;
    ExclusionVerdict verdict;             // excluded: the deciding filter
    std::uint64_t nodes_explored = 0;     // incidence search
    bool exhausted = false;               // incidence search completed
    std::vector<std::string> witnesses;   // realized: certificate labels
    std::optional<FieldDescriptor> field; // realized: field of the first witness
    std::optional<Certificate> found;     // realized by finite-field search
    std::string note;
};

inline std::string to_string(CandidateStatus::Kind k) {
    switch (k) {
        case CandidateStatus::Kind::excluded: return "excluded";
        case CandidateStatus::Kind::combinatorially_infeasible: return "combinatorially_infeasible";
        case CandidateStatus::Kind::realized: return "realized";
        case CandidateStatus::Kind::inconclusive: return "inconclusive";
    }
    return "?";
}

inline void check_search_primes(const std::vector<int>& primes) {
    for (int p : primes) FieldDescriptor::prime(p);
}

/// Filters, then the clique-partition search, then known certificates, then (absolute mode)
/// a search of PG(2,p) for each p in `primes`. Feasible but unrealized stays inconclusive.
inline CandidateStatus classify_candidate(const TVector& T, Mode mode, const std::vector<int>& primes,
                                          const CertificateDatabase& db, const SearchOptions& opts = {}) {
    CandidateStatus st;
    st.T = T;
    st.q = combinatorial_quotient(T).value;

    st.verdict = apply_all(T, mode);
    if (st.verdict.excluded()) {
        st.kind = CandidateStatus::Kind::excluded;
        return st;
    }

    const auto search = feasible_arrangement(T, opts.incidence_budget);
    st.nodes_explored = search.nodes_explored;
    st.exhausted = search.exhausted;
    if (search.infeasible()) {
        st.kind = CandidateStatus::Kind::combinatorially_infeasible;
        return st;
    }
    if (search.inconclusive()) {
        st.kind = CandidateStatus::Kind::inconclusive;
        st.note = "incidence search exceeded " + std::to_string(opts.incidence_budget) + " nodes";
        return st;
    }

    for (const auto* e : db.realizations(T, mode)) {
        if (!st.field) st.field = e->certificate.field;
        st.witnesses.push_back(e->certificate.label);
    }
    if (!st.witnesses.empty()) {
        st.kind = CandidateStatus::Kind::realized;
        return st;
    }

    if (mode == Mode::absolute) {
        std::string budget_notes;
        for (int p : primes) {
            if (T.d() > p * p + p + 1) continue;
            auto r = realize_over_prime_field(T, p, opts.realization_budget);
            if (r.found()) {
                auto cert = certificate_from_configuration("search-f" + std::to_string(p) + "-d" +
                                                               std::to_string(T.d()) + "-" + T.to_string(),
                                                           *r.configuration);
                const auto report = verify_certificate(cert);
                if (!(report.tvector == T)) throw Error("realization search returned a wrong configuration");
                st.kind = CandidateStatus::Kind::realized;
                st.field = cert.field;
                st.witnesses.push_back(cert.label);
                st.found = std::move(cert);
                return st;
            }
            if (!r.exhausted) budget_notes += " F_" + std::to_string(p) + " search hit its budget;";
        }
        st.note = "combinatorially feasible, no realization over Q, Q(w) or the searched prime fields;" + budget_notes;
    } else {
        st.note = "combinatorially feasible, no characteristic-zero certificate";
    }
    st.kind = CandidateStatus::Kind::inconclusive;
    return st;
}

struct TableRow {
    int d = 0;
    Mode mode = Mode::absolute;
    std::optional<BigRational> value;     // q(T*) of the first realized candidate
    std::optional<TVector> minimizer;     // T*
    std::vector<std::string> witnesses;   // certificate labels realizing T*
    std::vector<CandidateStatus> audit;   // every candidate with q <= value, in walk order
    bool integrity_ok = true;
    std::string failure;                  // set when integrity_ok is false
};

/// Walks T-vectors of d lines by ascending q until the first realized one, then finishes
/// the candidates tied with it. Every candidate strictly below must be excluded or infeasible.
inline TableRow compute_row(int d, Mode mode, const std::vector<int>& primes, const CertificateDatabase& db,
                            const SearchOptions& opts = {}) {
    TableRow row;
    row.d = d;
    row.mode = mode;
    for (const auto& T : enumerate_tvectors(d)) {
        const auto q = combinatorial_quotient(T).value;
        if (row.value && q > *row.value) break;
        auto st = classify_candidate(T, mode, primes, db, opts);
        if (!row.value && st.kind == CandidateStatus::Kind::realized) {
            row.value = q;
            row.minimizer = T;
            row.witnesses = st.witnesses;
        }
        row.audit.push_back(std::move(st));
    }
    if (!row.value) {
        row.integrity_ok = false;
        row.failure = "no realized candidate for d=" + std::to_string(d);
        return row;
    }
    for (const auto& st : row.audit) {
        if (st.q < *row.value && st.kind == CandidateStatus::Kind::inconclusive) {
            row.integrity_ok = false;
            row.failure = "candidate " + st.T.to_string() + " with q=" + st.q.to_string() +
                          " below the minimum is inconclusive: " + st.note;
            break;
        }
    }
    return row;
}

/// Rows for d = 2..max_d. Rows are independent; with jobs > 1 they are computed concurrently.
inline std::vector<TableRow> compute_table(int max_d, Mode mode, const std::vector<int>& primes,
                                           const CertificateDatabase& db, const SearchOptions& opts = {},
                                           int jobs = 1) {
    if (max_d < 2 || max_d > kSoftMaxDegree)
        throw InvalidDegree("table needs 2 <= max_d <= " + std::to_string(kSoftMaxDegree));
    check_search_primes(primes);
    std::vector<TableRow> rows;
    if (jobs <= 1) {
        for (int d = 2; d <= max_d; ++d) rows.push_back(compute_row(d, mode, primes, db, opts));
        return rows;
    }
    std::vector<std::future<TableRow>> pending;
    for (int d = 2; d <= max_d; ++d)
        pending.push_back(std::async(std::launch::async, [=, &db] { return compute_row(d, mode, primes, db, opts); }));
    for (auto& f : pending) rows.push_back(f.get());
    return rows;
}

/// First row that failed its integrity check, if any.
inline const TableRow* first_integrity_failure(const std::vector<TableRow>& rows) {
    for (const auto& r : rows)
        if (!r.integrity_ok) return &r;
    return nullptr;
}

}  // namespace harbourne
