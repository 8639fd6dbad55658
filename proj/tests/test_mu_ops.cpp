#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mcp/mu_ops.hpp"
#include "mcp/polyhedron.hpp"

using namespace mcp;

namespace {

const Point t1 = {3, 0, 0, 0, 0}, t2 = {1, 1, 0, 0, 0}, t3 = {0, 0, 1, 0, 0}, t4 = {1, 0, 0, 2, 0},
            t5 = {0, 2, 0, 0, 1}, t6 = {0, 0, 0, 1, 1}, t7 = {0, 0, 0, 0, 3};

Instance g63() { return parse_instance("6", "3"); }

bool has(const std::vector<MuOp>& ops, const MuOp& op) { return std::find(ops.begin(), ops.end(), op) != ops.end(); }

}  // namespace

TEST(ApplicableOps, Examples) {
    auto inst = g63();
    auto a4 = applicable_ops(inst, t4);
    EXPECT_TRUE(has(a4, MuOp::pair(1, 4)));
    EXPECT_TRUE(has(a4, MuOp::single(4)));
    EXPECT_FALSE(has(a4, MuOp::pair(4, 1)));  // t(4) > t(1)
    EXPECT_TRUE(applicable_ops(inst, t3).empty());
    auto a2 = applicable_ops(inst, t2);
    EXPECT_TRUE(has(a2, MuOp::pair(1, 2)));
    EXPECT_TRUE(has(a2, MuOp::pair(2, 1)));
}

TEST(ApplicableOps, Rules) {
    auto inst = parse_instance("6", "0");
    // h + f = 0 is excluded.
    EXPECT_FALSE(is_applicable(inst, {1, 0, 0, 0, 1}, MuOp::pair(1, 5)));
    // t(h) h = 0 is excluded for single ops.
    EXPECT_FALSE(is_applicable(inst, {0, 0, 0, 0, 6}, MuOp::single(5)));
    // t(h) h = h is excluded too: 3 * 3 = 3 in G6.
    EXPECT_FALSE(is_applicable(g63(), {0, 0, 3, 0, 0}, MuOp::single(3)));
    EXPECT_FALSE(is_applicable(g63(), t4, MuOp::single(1)));  // t(1) = 1
}

TEST(ApplyMu, WorkedExamples) {
    auto inst = g63();
    auto a = apply_mu(inst, t4, MuOp::single(4));
    EXPECT_EQ(a.result, t2);
    EXPECT_EQ(a.leading, 4);
    EXPECT_EQ(a.new_element, 2);
    EXPECT_EQ(apply_mu(inst, t4, MuOp::pair(1, 4)).result, t6);
    auto b = apply_mu(inst, t2, MuOp::pair(1, 2));
    EXPECT_EQ(b.result, t3);
    EXPECT_EQ(b.new_element, 3);
    EXPECT_THROW(apply_mu(inst, t3, MuOp::single(3)), ApplicabilityError);
}

TEST(MuImageMap, G63ArrowsAndSupport) {
    auto inst = g63();
    auto v = enumerate_vertices(inst);
    auto map = mu_image_map(inst, v);
    std::set<std::pair<Point, Point>> arrows;
    for (auto [s, r] : mu_arrows(v, map)) arrows.insert({v[s], v[r]});
    std::set<std::pair<Point, Point>> expect = {{t1, t3}, {t4, t2}, {t4, t6}, {t2, t3},
                                                {t5, t6}, {t5, t2}, {t7, t3}, {t6, t3}};
    EXPECT_EQ(arrows, expect);
    auto s = support_vertices(v, map);
    std::vector<Point> es = {t1, t4, t5, t7};
    std::sort(es.begin(), es.end());
    EXPECT_EQ(s, es);
    EXPECT_EQ(MuOp::pair(1, 4).name(inst.spec), "mu_{1,4}");
    EXPECT_EQ(MuOp::single(4).name(inst.spec), "mu_4");
}

TEST(MuImageMap, SmallCounts) {
    auto g21 = parse_instance("2", "1");
    auto m = mu_image_map(g21, enumerate_vertices(g21));
    ASSERT_EQ(m.size(), 1u);
    EXPECT_TRUE(m[0].empty());
    EXPECT_EQ(support_vertices(g21, enumerate_vertices(g21)), (std::vector<Point>{{1}}));
    auto g54 = parse_instance("5", "4");
    auto v = enumerate_vertices(g54);
    EXPECT_EQ(v.size(), 5u);
    EXPECT_EQ(support_vertices(g54, v).size(), 4u);
    auto g33 = parse_instance("3x3", "1,0");
    EXPECT_EQ(support_vertices(g33, enumerate_vertices(g33)).size(), 3u);
}

TEST(MuDerivation, CertificateReproducesTarget) {
    auto inst = g63();
    auto v = enumerate_vertices(inst);
    for (const auto& x : v) {
        auto d = mu_derivation(inst, v, x);
        bool support = x == t1 || x == t4 || x == t5 || x == t7;
        EXPECT_EQ(d.has_value(), !support);
        if (d) {
            EXPECT_EQ(apply_mu(inst, d->source, d->op).result, x);
        }
    }
}

TEST(Commutation, WorkedExampleAndSweep) {
    auto inst = g63();
    auto stab = stabilizer(automorphisms(inst.spec, AutScope::full), inst.g0);
    ASSERT_EQ(stab.size(), 2u);
    const Automorphism& phi5 = stab[1];
    EXPECT_EQ(conjugate(MuOp::single(4), phi5), MuOp::single(2));
    EXPECT_TRUE(verify_commutation(inst, t4, MuOp::single(4), phi5));
    for (const auto& x : enumerate_vertices(inst))
        for (const auto& op : applicable_ops(inst, x))
            for (const auto& phi : stab) EXPECT_TRUE(verify_commutation(inst, x, op, phi));
}

// Property: every mu-application on random vertices of random instances lowers
// the total multiplicity and yields a solution.
TEST(MuProperties, TotalStrictlyDecreases) {
    std::mt19937 rng(99);
    for (const char* g : {"7", "8", "9", "4x2", "3x3", "10"}) {
        auto spec = parse_group(g);
        int e = static_cast<int>(rng() % spec.order());
        Instance inst{spec, e};
        for (const auto& x : enumerate_vertices(inst))
            for (const auto& op : applicable_ops(inst, x)) {
                auto r = apply_mu(inst, x, op);
                EXPECT_TRUE(is_solution(inst, r.result));
                int drop = total(x) - total(r.result);
                int th = x[op.h - 1];
                EXPECT_EQ(drop, op.kind == MuOp::Kind::pair ? th : th - 1);
                EXPECT_GE(drop, 1);
            }
    }
}
