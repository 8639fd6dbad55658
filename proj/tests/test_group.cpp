#include <gtest/gtest.h>

#include <numeric>

#include "mcp/group.hpp"
#include "mcp/points.hpp"

using namespace mcp;

namespace {

int idx(const GroupSpec& g, const std::string& e) { return g.index(parse_element(g, e)); }

int euler_phi(int n) {
    int c = 0;
    for (int k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

}  // namespace

TEST(GroupSpec, OrdersAndNames) {
    EXPECT_EQ(make_group({6}).order(), 6);
    EXPECT_EQ(make_group({4, 2}).order(), 8);
    EXPECT_EQ(make_group({2, 2, 2}).order(), 8);
    EXPECT_EQ(parse_group("4x2").name(), "4x2");
    EXPECT_THROW(parse_group("0"), InvalidSpecError);
    EXPECT_THROW(parse_group("1"), InvalidSpecError);
    EXPECT_THROW(parse_group("4x"), InvalidSpecError);
    EXPECT_THROW(parse_group("300"), InvalidSpecError);
}

TEST(GroupSpec, Arithmetic) {
    auto g6 = make_group({6});
    EXPECT_EQ(g6.add(4, 4), 2);
    EXPECT_EQ(g6.scalar_mul(2, 4), 2);
    EXPECT_EQ(g6.neg(1), 5);
    auto g22 = make_group({2, 2});
    EXPECT_EQ(add(g22, parse_element(g22, "1,0"), parse_element(g22, "0,1")), parse_element(g22, "1,1"));
    EXPECT_EQ(scalar_mul(g22, 3, parse_element(g22, "1,1")), parse_element(g22, "(1,1)"));
    EXPECT_THROW(parse_element(g6, "6"), InvalidSpecError);
    EXPECT_THROW(parse_element(g22, "1"), InvalidSpecError);
}

TEST(GroupSpec, CanonicalNonzeroOrder) {
    auto g6 = make_group({6});
    std::vector<std::string> labels;
    for (int e = 1; e < 6; ++e) labels.push_back(g6.label(e));
    EXPECT_EQ(labels, (std::vector<std::string>{"1", "2", "3", "4", "5"}));

    auto g42 = make_group({4, 2});
    labels.clear();
    for (int e = 1; e < 8; ++e) labels.push_back(g42.label(e));
    EXPECT_EQ(labels, (std::vector<std::string>{"(1,0)", "(2,0)", "(3,0)", "(0,1)", "(1,1)", "(2,1)", "(3,1)"}));
    EXPECT_EQ(elements_nonzero(make_group({2})).size(), 1u);
}

TEST(Automorphisms, Counts) {
    EXPECT_EQ(enumerate_automorphisms(make_group({6})).size(), 2u);
    EXPECT_EQ(enumerate_automorphisms(make_group({5})).size(), 4u);
    EXPECT_EQ(enumerate_automorphisms(make_group({2})).size(), 1u);
    for (int n = 2; n <= 16; ++n)
        EXPECT_EQ(enumerate_automorphisms(make_group({n})).size(), static_cast<std::size_t>(euler_phi(n))) << n;
    // GL(2,2) and GL(3,2).
    EXPECT_EQ(enumerate_automorphisms(make_group({2, 2})).size(), 6u);
    EXPECT_EQ(enumerate_automorphisms(make_group({2, 2, 2})).size(), 168u);
    EXPECT_EQ(enumerate_automorphisms(make_group({4, 2})).size(), 8u);
    EXPECT_EQ(enumerate_automorphisms(make_group({3, 3})).size(), 48u);
    EXPECT_EQ(componentwise_automorphisms(make_group({4, 2})).size(), 2u);
    EXPECT_EQ(componentwise_automorphisms(make_group({2, 2, 2})).size(), 1u);
}

TEST(Automorphisms, AreAutomorphismsAndClosed) {
    for (const auto& spec : {make_group({6}), make_group({4, 2}), make_group({3, 3}), make_group({2, 2})}) {
        auto all = enumerate_automorphisms(spec);
        for (const auto& a : all) {
            EXPECT_TRUE(a.is_automorphism_of(spec));
            EXPECT_TRUE(a.then(a.inverse()).is_identity());
            for (const auto& b : all)
                EXPECT_TRUE(std::binary_search(all.begin(), all.end(), a.then(b)));
        }
        for (const auto& c : componentwise_automorphisms(spec))
            EXPECT_TRUE(std::binary_search(all.begin(), all.end(), c));
    }
}

TEST(Automorphisms, Stabilizers) {
    auto g6 = make_group({6});
    auto st = stabilizer(g6, parse_element(g6, "3"));
    ASSERT_EQ(st.size(), 2u);
    EXPECT_EQ(st[1](1), 5);
    auto g10 = make_group({10});
    EXPECT_EQ(stabilizer(g10, parse_element(g10, "9")).size(), 1u);
    auto g42 = make_group({4, 2});
    EXPECT_EQ(stabilizer(g42, parse_element(g42, "0,0")).size(), enumerate_automorphisms(g42).size());
}

TEST(Automorphisms, RightActionOnPoints) {
    auto g6 = make_group({6});
    Automorphism phi5 = stabilizer(g6, parse_element(g6, "3"))[1];
    EXPECT_EQ(act_on_point(phi5, {3, 0, 0, 0, 0}), (Point{0, 0, 0, 0, 3}));
    EXPECT_EQ(act_on_point(phi5, {1, 0, 0, 2, 0}), (Point{0, 2, 0, 0, 1}));
    Point t = {1, 2, 0, 0, 4};
    EXPECT_EQ(act_on_point(Automorphism::identity(g6), t), t);
}

TEST(Automorphisms, ActionComposes) {
    auto g = make_group({9});
    auto all = enumerate_automorphisms(g);
    Point t = {1, 0, 2, 0, 0, 1, 0, 3};
    for (const auto& a : all)
        for (const auto& b : all) EXPECT_EQ(act_on_point(a.then(b), t), act_on_point(b, act_on_point(a, t)));
}

TEST(Automorphisms, ScopeNames) {
    EXPECT_EQ(parse_scope("full"), AutScope::full);
    EXPECT_EQ(scope_name(AutScope::componentwise), "componentwise");
    EXPECT_THROW(parse_scope("half"), std::invalid_argument);
    (void)idx;
}
