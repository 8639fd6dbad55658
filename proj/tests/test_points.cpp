#include <gtest/gtest.h>

#include <random>

#include "mcp/points.hpp"
#include "oracles.hpp"

using namespace mcp;

namespace {

Point g16_nonvertex_point() {
    Point t(15, 0);
    t[2] = 2;
    t[3] = 1;
    t[4] = 1;
    return t;
}

}  // namespace

TEST(Solutions, Membership) {
    auto g63 = parse_instance("6", "3");
    EXPECT_TRUE(is_solution(g63, {1, 0, 0, 2, 0}));
    EXPECT_FALSE(is_solution(g63, {0, 0, 0, 0, 0}));
    EXPECT_TRUE(is_solution(parse_instance("16", "15"), g16_nonvertex_point()));
    EXPECT_THROW(is_solution(g63, {1, 0}), StructuralError);
    EXPECT_THROW(is_solution(g63, {-1, 0, 0, 0, 0}), StructuralError);
    EXPECT_FALSE(is_solution(parse_instance("4", "0"), {0, 0, 0}));
}

TEST(Irreducible, Examples) {
    EXPECT_TRUE(is_irreducible(parse_instance("16", "15"), g16_nonvertex_point()));
    auto g32 = parse_instance("3", "2");
    EXPECT_FALSE(is_irreducible(g32, {1, 2}));
    auto w = reducibility_witness(g32, {1, 2});
    ASSERT_TRUE(w);
    EXPECT_NE(w->first, w->second);
    EXPECT_EQ(group_sum(g32.spec, w->first), group_sum(g32.spec, w->second));
    EXPECT_TRUE(is_irreducible(parse_instance("7", "3"), {0, 0, 1, 0, 0, 0}));
}

TEST(MidpointOracle, Examples) {
    auto g32 = parse_instance("3", "2");
    auto w = midpoint_witness(g32, {1, 2});
    ASSERT_TRUE(w);
    Point t = {1, 2}, a(2), b(2);
    for (int p = 0; p < 2; ++p) {
        a[p] = t[p] + (*w)[p];
        b[p] = t[p] - (*w)[p];
    }
    EXPECT_TRUE(is_solution(g32, a));
    EXPECT_TRUE(is_solution(g32, b));
    EXPECT_FALSE(is_midpoint_of_solutions(parse_instance("16", "15"), g16_nonvertex_point()));
    EXPECT_FALSE(is_midpoint_of_solutions(parse_instance("6", "3"), {1, 0, 0, 2, 0}));
}

TEST(IrreducibleEnumeration, SmallCases) {
    EXPECT_EQ(enumerate_irreducible_points(parse_instance("3", "2")), (std::vector<Point>{{0, 1}, {2, 0}}));
    EXPECT_EQ(enumerate_irreducible_points(parse_instance("2", "1")), (std::vector<Point>{{1}}));
}

TEST(IrreducibleEnumeration, G16ContainsNonVertexPoint) {
    auto irr = enumerate_irreducible_points(parse_instance("16", "15"));
    EXPECT_TRUE(std::binary_search(irr.begin(), irr.end(), g16_nonvertex_point()));
}

// Irreducible points have total < |G| (their prefix sums are distinct), so listing
// every solution of total <= |G| and filtering with the brute-force oracle must
// reproduce the enumeration exactly.
TEST(IrreducibleEnumeration, MatchesBruteForceOracle) {
    for (const char* g : {"2", "3", "4", "2x2", "5", "6", "7", "3x2", "8", "4x2"}) {
        auto spec = parse_group(g);
        for (int e = 0; e < spec.order(); ++e) {
            Instance inst{spec, e};
            std::vector<Point> expect;
            for (const auto& t : oracle::solutions(inst, spec.order()))
                if (oracle::irreducible(inst, t)) expect.push_back(t);
            EXPECT_EQ(enumerate_irreducible_points(inst), expect) << inst.name();
        }
    }
}

TEST(IrreducibleEnumeration, SerialAndParallelAgree) {
    for (const char* g : {"9", "10", "11", "3x3", "2x2x2", "12"}) {
        auto spec = parse_group(g);
        for (int e = 0; e < spec.order(); e += 3) {
            Instance inst{spec, e};
            EXPECT_EQ(enumerate_irreducible_points(inst), enumerate_irreducible_points_serial(inst)) << inst.name();
        }
    }
}

TEST(IrreducibleEnumeration, EnumerateSolutionsMatchesOracle) {
    auto inst = parse_instance("5", "2");
    EXPECT_EQ(enumerate_solutions(inst, 6), oracle::solutions(inst, 6));
    auto z = parse_instance("2x2", "0,0");
    EXPECT_EQ(enumerate_solutions(z, 4), oracle::solutions(z, 4));
}

// Property: random solutions in random small groups; the reducibility check, the
// brute-force sub-vector oracle and the midpoint oracle all agree.
TEST(Irreducible, RandomPointsAgreeWithOracles) {
    std::mt19937 rng(7);
    const std::vector<std::string> groups = {"5", "6", "7", "8", "4x2", "3x3", "9", "10"};
    std::uniform_int_distribution<int> pick(0, static_cast<int>(groups.size()) - 1), val(0, 3);
    int checked = 0;
    while (checked < 300) {
        auto spec = parse_group(groups[pick(rng)]);
        Point t(spec.order() - 1, 0);
        for (auto& x : t)
            if (rng() % 3 == 0) x = val(rng);
        if (std::all_of(t.begin(), t.end(), [](int x) { return x == 0; })) continue;
        Instance inst{spec, group_sum(spec, t)};
        bool irr = is_irreducible(inst, t);
        EXPECT_EQ(irr, oracle::irreducible(inst, t)) << inst.name();
        EXPECT_EQ(irr, !is_midpoint_of_solutions(inst, t)) << inst.name();
        ++checked;
    }
}
