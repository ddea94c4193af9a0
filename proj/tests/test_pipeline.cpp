#include <gtest/gtest.h>

#include "harbourne/pipeline.hpp"

using namespace harbourne;

namespace {

TVector tv(int d, const char* text) { return TVector::parse(d, text); }

const CertificateDatabase& db() {
    static const CertificateDatabase instance = builtin_certificates();
    return instance;
}

std::vector<BigRational> values(const std::vector<TableRow>& rows) {
    std::vector<BigRational> out;
    for (const auto& r : rows) {
        EXPECT_TRUE(r.integrity_ok) << "d=" << r.d << ": " << r.failure;
        out.push_back(r.value.value_or(BigRational(999)));
    }
    return out;
}

const std::vector<BigRational> kAbsolute{BigRational(0),      BigRational(-1),  BigRational(-4, 3),
                                         BigRational(-3, 2),  BigRational(-12, 7), BigRational(-2),
                                         BigRational(-2),     BigRational(-9, 4),  BigRational(-29, 12)};
const std::vector<BigRational> kComplex{BigRational(0),      BigRational(-1),     BigRational(-4, 3),
                                        BigRational(-3, 2),  BigRational(-12, 7), BigRational(-17, 9),
                                        BigRational(-2),     BigRational(-9, 4),  BigRational(-34, 15)};

}  // namespace

TEST(Database, RequiredEntries) {
    for (const char* label : {"quadrilateral-6", "quadrilateral-7", "d8-t4-config", "fano-f2", "pg23-minus-pencil4",
                              "pg23-minus-pencil3", "dual-hesse-eisenstein", "dual-hesse-plus-line"})
        EXPECT_NE(db().find(label), nullptr) << label;
    for (int d = 2; d <= 10; ++d) {
        EXPECT_NE(db().find("pencil-" + std::to_string(d)), nullptr);
        EXPECT_NE(db().find("general-position-" + std::to_string(d)), nullptr);
    }
}

TEST(Database, Examples) {
    EXPECT_EQ(db().find("general-position-6")->report.value, BigRational(-8, 5));
    EXPECT_EQ(db().find("quadrilateral-6")->report.value, BigRational(-12, 7));
    EXPECT_EQ(db().find("quadrilateral-7")->report.tvector, tv(7, "3,6,0,0,0,0"));
    EXPECT_EQ(db().find("d8-t4-config")->report.tvector, TVector::from_map(8, {{2, 4}, {3, 6}, {4, 1}}));
    EXPECT_EQ(db().find("d8-t4-config")->report.value, BigRational(-2));
    EXPECT_EQ(db().find("dual-hesse-plus-line")->report.value, BigRational(-34, 15));
    EXPECT_EQ(db().find("pg23-minus-pencil3")->report.tvector, TVector::from_map(10, {{3, 9}, {4, 3}}));
}

TEST(Database, RejectsBadCertificate) {
    CertificateDatabase local;
    auto cert = certificates::fano();
    cert.claimed = tv(7, "21,0,0,0,0,0");
    EXPECT_THROW(local.add(cert), VerificationError);
}

TEST(Classify, FanoAbsolute) {
    const auto st = classify_candidate(tv(7, "0,7,0,0,0,0"), Mode::absolute, {2, 3}, db());
    ASSERT_EQ(st.kind, CandidateStatus::Kind::realized);
    EXPECT_EQ(st.witnesses.front(), "fano-f2");
    EXPECT_EQ(st.field->name(), "F_2");
}

TEST(Classify, FanoComplex) {
    const auto st = classify_candidate(tv(7, "0,7,0,0,0,0"), Mode::complex, {2, 3}, db());
    ASSERT_EQ(st.kind, CandidateStatus::Kind::excluded);
    EXPECT_EQ(st.verdict.criterion, criterion::kHirzebruch);
}

TEST(Classify, TenLinesCaseSeven) {
    for (Mode m : {Mode::absolute, Mode::complex}) {
        const auto st = classify_candidate(tv(10, "2,7,2,1,0,0,0,0,0"), m, {2, 3}, db());
        ASSERT_EQ(st.kind, CandidateStatus::Kind::excluded);
        EXPECT_EQ(st.verdict.criterion, criterion::kTwoPencils);
    }
}

TEST(Classify, FiniteFieldCertificatesOnlyCountInAbsoluteMode) {
    const auto T = TVector::from_map(10, {{3, 9}, {4, 3}});
    const auto abs = classify_candidate(T, Mode::absolute, {2, 3}, db());
    ASSERT_EQ(abs.kind, CandidateStatus::Kind::realized);
    EXPECT_EQ(abs.witnesses.front(), "pg23-minus-pencil3");
    EXPECT_EQ(classify_candidate(T, Mode::complex, {2, 3}, db()).kind, CandidateStatus::Kind::excluded);
}

TEST(Classify, DualHesseHasBothWitnesses) {
    const auto st = classify_candidate(TVector::from_map(9, {{3, 12}}), Mode::absolute, {2, 3}, db());
    ASSERT_EQ(st.kind, CandidateStatus::Kind::realized);
    EXPECT_NE(std::find(st.witnesses.begin(), st.witnesses.end(), "pg23-minus-pencil4"), st.witnesses.end());
    EXPECT_NE(std::find(st.witnesses.begin(), st.witnesses.end(), "dual-hesse-eisenstein"), st.witnesses.end());
}

TEST(Classify, SearchFindsRealizationWithoutDatabase) {
    const CertificateDatabase empty;
    const auto st = classify_candidate(tv(7, "0,7,0,0,0,0"), Mode::absolute, {2, 3}, empty);
    ASSERT_EQ(st.kind, CandidateStatus::Kind::realized);
    ASSERT_TRUE(st.found.has_value());
    EXPECT_EQ(verify_certificate(*st.found).tvector, tv(7, "0,7,0,0,0,0"));
}

TEST(Classify, FeasibleButUnrealizedIsInconclusive) {
    const CertificateDatabase empty;
    const auto st = classify_candidate(tv(7, "0,7,0,0,0,0"), Mode::absolute, {3}, empty);
    EXPECT_EQ(st.kind, CandidateStatus::Kind::inconclusive);
}

TEST(Table, Absolute) { EXPECT_EQ(values(compute_table(10, Mode::absolute, {2, 3}, db())), kAbsolute); }

TEST(Table, Complex) { EXPECT_EQ(values(compute_table(10, Mode::complex, {2, 3}, db())), kComplex); }

TEST(Table, SmallDegrees) {
    for (Mode m : {Mode::absolute, Mode::complex})
        EXPECT_EQ(values(compute_table(3, m, {2, 3}, db())), (std::vector<BigRational>{BigRational(0), BigRational(-1)}));
    EXPECT_EQ(values(compute_table(5, Mode::absolute, {2, 3}, db())),
              (std::vector<BigRational>{BigRational(0), BigRational(-1), BigRational(-4, 3), BigRational(-3, 2)}));
}

TEST(Table, InvalidRange) {
    EXPECT_THROW(compute_table(11, Mode::absolute, {2, 3}, db()), InvalidDegree);
    EXPECT_THROW(compute_table(1, Mode::absolute, {2, 3}, db()), InvalidDegree);
    EXPECT_THROW(compute_table(5, Mode::absolute, {4}, db()), UnsupportedField);
}

TEST(Table, AuditIntegrity) {
    for (Mode m : {Mode::absolute, Mode::complex})
        for (const auto& row : compute_table(10, m, {2, 3}, db())) {
            for (const auto& st : row.audit) {
                EXPECT_LE(st.q, *row.value);
                if (st.q < *row.value) {
                    EXPECT_TRUE(st.kind == CandidateStatus::Kind::excluded ||
                                st.kind == CandidateStatus::Kind::combinatorially_infeasible)
                        << st.T.to_string();
                    if (st.kind == CandidateStatus::Kind::combinatorially_infeasible) EXPECT_TRUE(st.exhausted);
                }
                if (st.kind == CandidateStatus::Kind::realized) {
                    for (const auto& w : st.witnesses) {
                        const auto* e = db().find(w);
                        const auto report = e ? e->report : verify_certificate(*st.found);
                        EXPECT_EQ(report.tvector, st.T) << w;
                        EXPECT_EQ(report.value, st.q) << w;
                    }
                }
            }
        }
}

TEST(Table, BudgetExhaustionBreaksIntegrity) {
    SearchOptions opts;
    opts.incidence_budget = 5;
    const auto rows = compute_table(10, Mode::absolute, {2, 3}, db(), opts);
    const auto* bad = first_integrity_failure(rows);
    ASSERT_NE(bad, nullptr);
    EXPECT_NE(bad->failure.find("inconclusive"), std::string::npos) << bad->failure;
}

TEST(Table, ComplexNeverBelowAbsolute) {
    const auto a = compute_table(10, Mode::absolute, {2, 3}, db());
    const auto c = compute_table(10, Mode::complex, {2, 3}, db());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_GE(*c[i].value, *a[i].value) << "d=" << a[i].d;
}

TEST(Table, DeterministicAndJobIndependent) {
    const auto render = [](const std::vector<TableRow>& rows) {
        std::string out;
        for (const auto& r : rows) {
            out += std::to_string(r.d) + ":" + r.value->to_string() + ":" + r.minimizer->to_string() + "\n";
            for (const auto& st : r.audit)
                out += st.T.to_string() + " " + to_string(st.kind) + " " + st.verdict.detail + " " +
                       std::to_string(st.nodes_explored) + "\n";
        }
        return out;
    };
    const auto a = render(compute_table(10, Mode::absolute, {2, 3}, db()));
    EXPECT_EQ(a, render(compute_table(10, Mode::absolute, {2, 3}, db())));
    EXPECT_EQ(a, render(compute_table(10, Mode::absolute, {2, 3}, db(), {}, 4)));
}
