#include <gtest/gtest.h>

#include <random>

#include "mcp/exact_geometry.hpp"
#include "mcp/polyhedron.hpp"
#include "oracles.hpp"

using namespace mcp;

namespace {

RationalVector rv(std::initializer_list<int> xs) {
    RationalVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

std::vector<RationalVector> sorted(std::vector<RationalVector> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(Rank, IdentityZeroAndProportional) {
    EXPECT_EQ(rank(std::vector<RationalVector>{rv({1, 0}), rv({0, 1})}), 2u);
    EXPECT_EQ(rank(RationalMatrix(3, 5)), 0u);
    EXPECT_EQ(rank(std::vector<RationalVector>{rv({1, 2}), rv({2, 4})}), 1u);
    EXPECT_EQ(rank(std::vector<RationalVector>{}), 0u);
}

TEST(LpFeasible, TrivialSystems) {
    LinearSystem s;
    s.dimension = 1;
    s.add_inequality(rv({1}), 0);
    s.add_inequality(rv({1}), 1);
    auto v = lp_feasible(s);
    ASSERT_TRUE(v.feasible);
    EXPECT_TRUE(satisfies(s, v.witness));
    EXPECT_GE(v.witness[0], 1);

    LinearSystem bad;
    bad.dimension = 1;
    bad.add_inequality(rv({1}), 1);
    bad.add_inequality(rv({-1}), 0);
    EXPECT_FALSE(lp_feasible(bad).feasible);
}

TEST(LpFeasible, ThreePointCombinationInG16) {
    // t = (0,0,2,1,1,0...) as a convex combination of three solutions.
    std::vector<Point> gens = {{0, 0, 0, 0, 3}, {0, 0, 1, 3, 0}, {0, 0, 5, 0, 0}};
    Point t = {0, 0, 2, 1, 1};
    LinearSystem s;
    s.dimension = 3;
    for (int p = 0; p < 5; ++p) s.add_equality(rv({gens[0][p], gens[1][p], gens[2][p]}), t[p]);
    s.add_equality(rv({1, 1, 1}), 1);
    for (int i = 0; i < 3; ++i) {
        RationalVector e(3, 0);
        e[i] = 1;
        s.add_inequality(e, 0);
    }
    auto v = lp_feasible(s);
    ASSERT_TRUE(v.feasible);
    for (const auto& w : v.witness) EXPECT_EQ(w, Rational(1, 3));
}

TEST(LpMinimize, BoxCornerAndUnbounded) {
    LinearSystem s;
    s.dimension = 2;
    s.add_inequality(rv({1, 0}), 0);
    s.add_inequality(rv({0, 1}), 0);
    s.add_inequality(rv({-1, 0}), -3);
    s.add_inequality(rv({0, -1}), -2);
    auto sol = lp_minimize(s, rv({-1, -1}));
    ASSERT_EQ(sol.status, LpStatus::optimal);
    EXPECT_EQ(sol.value, -5);
    EXPECT_EQ(sol.point, rv({3, 2}));

    LinearSystem open;
    open.dimension = 1;
    open.add_inequality(rv({1}), 0);
    EXPECT_EQ(lp_minimize(open, rv({-1})).status, LpStatus::unbounded);
}

TEST(DoubleDescription, SquareAndSegment) {
    LinearSystem sq;
    sq.dimension = 2;
    sq.add_inequality(rv({1, 0}), 0);
    sq.add_inequality(rv({0, 1}), 0);
    sq.add_inequality(rv({-1, 0}), -1);
    sq.add_inequality(rv({0, -1}), -1);
    EXPECT_EQ(sorted(enumerate_polytope_vertices(sq)),
              (std::vector<RationalVector>{rv({0, 0}), rv({0, 1}), rv({1, 0}), rv({1, 1})}));

    LinearSystem seg;
    seg.dimension = 2;
    seg.add_equality(rv({1, 1}), 1);
    seg.add_inequality(rv({1, 0}), 0);
    seg.add_inequality(rv({0, 1}), 0);
    EXPECT_EQ(sorted(enumerate_polytope_vertices(seg)), (std::vector<RationalVector>{rv({0, 1}), rv({1, 0})}));
}

TEST(DoubleDescription, OrthantGivesRays) {
    LinearSystem s;
    s.dimension = 2;
    s.add_inequality(rv({1, 0}), 1);
    s.add_inequality(rv({0, 1}), 0);
    auto vr = double_description(s);
    EXPECT_EQ(vr.vertices, (std::vector<RationalVector>{rv({1, 0})}));
    EXPECT_EQ(sorted(vr.rays), (std::vector<RationalVector>{rv({0, 1}), rv({1, 0})}));
    EXPECT_THROW(enumerate_polytope_vertices(s), UnboundedError);
}

TEST(DoubleDescription, SubadditivePolytopeOfG6) {
    auto inst = parse_instance("6", "3");
    auto verts = enumerate_polytope_vertices(subadditive_system(inst));
    EXPECT_EQ(verts.size(), 4u);
    EXPECT_EQ(sorted(verts), sorted(oracle::basis_vertices(subadditive_system(inst))));
}

// Random bounded polytopes: box [0,3]^d cut by random half-spaces through small
// integer coefficients. DD must agree with the brute-force basis enumeration.
TEST(DoubleDescription, AgreesWithBasisEnumerationOnRandomPolytopes) {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coef(-3, 3), dimd(2, 4), cuts(1, 4), rhs(-4, 2);
    for (int trial = 0; trial < 60; ++trial) {
        LinearSystem s;
        s.dimension = dimd(rng);
        for (std::size_t i = 0; i < s.dimension; ++i) {
            RationalVector lo(s.dimension, 0), hi(s.dimension, 0);
            lo[i] = 1;
            hi[i] = -1;
            s.add_inequality(lo, 0);
            s.add_inequality(hi, -3);
        }
        int k = cuts(rng);
        for (int c = 0; c < k; ++c) {
            RationalVector a(s.dimension);
            for (auto& x : a) x = coef(rng);
            s.add_inequality(a, rhs(rng));
        }
        if (trial % 5 == 0) {
            RationalVector a(s.dimension, 1);
            s.add_equality(a, 2);
        }
        auto dd = sorted(double_description(s).vertices);
        EXPECT_EQ(dd, oracle::basis_vertices(s)) << "trial " << trial;
    }
}

TEST(LinearSystem, ValidateRejectsWrongLength) {
    LinearSystem s;
    s.dimension = 2;
    s.add_inequality(rv({1}), 0);
    EXPECT_THROW(s.validate(), StructuralError);
}
