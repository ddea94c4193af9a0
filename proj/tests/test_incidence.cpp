#include <gtest/gtest.h>

#include "harbourne/criteria.hpp"
#include "harbourne/incidence.hpp"
#include "harbourne/serialize.hpp"
#include "oracles.hpp"

using namespace harbourne;

namespace {

TVector tv(int d, const char* text) { return TVector::parse(d, text); }

CliquePartition fano_partition() {
    return {7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
}

std::vector<long long> histogram(const TVector& T) {
    std::vector<long long> h(static_cast<std::size_t>(T.d() + 1), 0);
    for (int k = 2; k <= T.d(); ++k) h[static_cast<std::size_t>(k)] = T.t(k);
    return h;
}

void expect_line_parity(const CliquePartition& P) {
    for (const auto& profile : line_profiles_of(P)) {
        int sum = 0;
        for (int m : profile) sum += m - 1;
        EXPECT_EQ(sum, P.d - 1);
    }
}

}  // namespace

TEST(Feasible, Pencil) {
    const auto out = feasible_arrangement(tv(3, "0,1"));
    ASSERT_TRUE(out.feasible());
    EXPECT_EQ(out.witness->points, (std::vector<std::vector<int>>{{0, 1, 2}}));
}

TEST(Feasible, TwoTriplePointsOnFourLinesIsInfeasible) {
    const auto out = feasible_arrangement(tv(4, "0,2,0"));
    EXPECT_TRUE(out.infeasible());
    EXPECT_TRUE(out.exhausted);
}

TEST(Feasible, Fano) {
    const auto T = tv(7, "0,7,0,0,0,0");
    const auto out = feasible_arrangement(T);
    ASSERT_TRUE(out.feasible());
    EXPECT_TRUE(validate_partition(*out.witness, T));
    EXPECT_EQ(out.witness->points.size(), 7u);
}

TEST(Feasible, TenLinesSevenQuadruplePointsInfeasible) {
    const auto out = feasible_arrangement(tv(10, "0,1,7,0,0,0,0,0,0"));
    EXPECT_TRUE(out.infeasible());
    EXPECT_TRUE(out.exhausted);
}

TEST(Feasible, BudgetGivesInconclusive) {
    const auto out = feasible_arrangement(tv(10, "0,7,4,0,0,0,0,0,0"), 5);
    EXPECT_TRUE(out.inconclusive());
    EXPECT_FALSE(out.exhausted);
    EXPECT_FALSE(out.witness.has_value());
}

TEST(Validate, Fano) {
    EXPECT_TRUE(validate_partition(fano_partition(), tv(7, "0,7,0,0,0,0")));
}

TEST(Validate, MovedPairFails) {
    auto P = fano_partition();
    P.points.push_back({0, 1});  // pair {0,1} now covered twice
    EXPECT_FALSE(validate_partition(P, tv(7, "0,7,0,0,0,0")));
    auto Q = fano_partition();
    Q.points[0] = {0, 1};
    Q.points.push_back({1, 2});
    Q.points.push_back({0, 2});
    EXPECT_FALSE(validate_partition(Q, tv(7, "0,7,0,0,0,0")));
}

TEST(Validate, WrongHistogramFails) {
    EXPECT_FALSE(validate_partition(fano_partition(), tv(7, "21,0,0,0,0,0")));
}

TEST(Validate, SearchWitnessRoundTrip) {
    const auto T = TVector::from_map(10, {{3, 9}, {4, 3}});
    const auto out = feasible_arrangement(T);
    ASSERT_TRUE(out.feasible());
    EXPECT_TRUE(validate_partition(*out.witness, T));
    const auto back = partition_from_json(Json::parse(to_json(*out.witness).dump()));
    EXPECT_EQ(back, *out.witness);
}

TEST(IncidenceProperty, WitnessesValidateAndSatisfyParity) {
    for (int d = 2; d <= 9; ++d)
        for (const auto& T : enumerate_tvectors(d)) {
            const auto out = feasible_arrangement(T);
            ASSERT_FALSE(out.inconclusive()) << T.to_string();
            if (out.infeasible()) {
                EXPECT_TRUE(out.exhausted);
                continue;
            }
            EXPECT_TRUE(validate_partition(*out.witness, T)) << T.to_string();
            expect_line_parity(*out.witness);
        }
}

TEST(IncidenceProperty, ParityExclusionImpliesInfeasible) {
    for (int d = 2; d <= 8; ++d)
        for (const auto& T : enumerate_tvectors(d))
            if (parity_profile_filter(T).excluded()) EXPECT_TRUE(feasible_arrangement(T).infeasible()) << T.to_string();
}

TEST(IncidenceProperty, FiltersAreNecessary) {
    for (int d = 2; d <= 9; ++d)
        for (const auto& T : enumerate_tvectors(d))
            if (feasible_arrangement(T).feasible()) {
                EXPECT_FALSE(multiplicity_sum_filter(T).excluded()) << T.to_string();
                EXPECT_FALSE(two_pencils_filter(T).excluded()) << T.to_string();
                EXPECT_FALSE(parity_profile_filter(T).excluded()) << T.to_string();
            }
}

TEST(IncidenceProperty, MatchesBruteForceUpToSixLines) {
    for (int d = 2; d <= 6; ++d) {
        const auto achievable = oracle::achievable_histograms(d);
        for (const auto& T : enumerate_tvectors(d)) {
            const bool expected = achievable.count(histogram(T)) > 0;
            EXPECT_EQ(feasible_arrangement(T).feasible(), expected) << "d=" << d << " T=" << T.to_string();
        }
    }
}

TEST(IncidenceProperty, Deterministic) {
    const auto T = TVector::from_map(10, {{3, 9}, {4, 3}});
    const auto a = feasible_arrangement(T), b = feasible_arrangement(T);
    EXPECT_EQ(*a.witness, *b.witness);
    EXPECT_EQ(a.nodes_explored, b.nodes_explored);
}

TEST(NodeBudget, EnvironmentOverride) {
    ::setenv("HARB_NODE_BUDGET", "1234", 1);
    EXPECT_EQ(node_budget_from_env(), 1234u);
    ::setenv("HARB_NODE_BUDGET", "junk", 1);
    EXPECT_EQ(node_budget_from_env(), kDefaultNodeBudget);
    ::unsetenv("HARB_NODE_BUDGET");
    EXPECT_EQ(node_budget_from_env(77), 77u);
}
