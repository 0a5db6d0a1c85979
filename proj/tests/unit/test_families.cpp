#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace hp_test;

namespace {

FamilySpec spec(const std::string& text) { return parse_family_spec(text); }

IntPolynomial computed(const std::string& text) { return harmonic_polynomial(generate(spec(text))); }

// Degree sums per edge, collected straight from the graph.
IntPolynomial edge_sum_oracle(const Graph& g) {
    std::vector<long long> c;
    g.for_each_edge([&](Vertex u, Vertex v) {
        std::size_t e = g.degree(u) + g.degree(v) - 1;
        if (c.size() <= e)
            c.resize(e + 1, 0);
        ++c[e];
    });
    return poly(c);
}

}  // namespace

TEST(Families, GeneratorExamples) {
    Graph w5 = generate(spec("wheel:5"));
    EXPECT_EQ(w5.order(), 5u);
    EXPECT_EQ(w5.size(), 8u);
    EXPECT_EQ(w5.degree(0), 4u);

    Graph q3 = generate(spec("hypercube:3"));
    EXPECT_EQ(q3.order(), 8u);
    EXPECT_EQ(q3.size(), 12u);
    EXPECT_TRUE(is_regular(q3));
    EXPECT_EQ(degree_summary(q3).distinct, (std::vector<std::size_t>{3}));

    Graph k23 = generate(spec("kbip:2,3"));
    EXPECT_EQ(k23.size(), 6u);
    EXPECT_EQ(degree_summary(k23).distinct, (std::vector<std::size_t>{2, 3}));
}

TEST(Families, GeneratorsMatchIndependentBuilders) {
    EXPECT_EQ(generate(spec("path:6")), path(6));
    EXPECT_EQ(generate(spec("cycle:7")), cycle(7));
    EXPECT_EQ(generate(spec("complete:5")), complete(5));
    EXPECT_EQ(generate(spec("kbip:3,4")), kbip(3, 4));
    EXPECT_EQ(generate(spec("wheel:7")), wheel(7));
    EXPECT_EQ(generate(spec("star:5")), kbip(1, 4));
}

TEST(Families, ClosedFormExamples) {
    EXPECT_EQ(computed("complete:5"), IntPolynomial::monomial(10, 7));
    EXPECT_EQ(computed("wheel:6"), poly({0, 0, 0, 0, 0, 5, 0, 5}));
    EXPECT_EQ(computed("path:3"), poly({0, 0, 2}));
    EXPECT_EQ(computed("path:2"), poly({0, 1}));
    EXPECT_EQ(computed("hypercube:1"), poly({0, 1}));
    EXPECT_TRUE(computed("complete:1").is_zero());
}

TEST(Families, ClosedFormsAgreeWithEdgeSumOracle) {
    std::vector<std::string> specs;
    for (int n = 1; n <= 10; ++n)
        specs.push_back("complete:" + std::to_string(n));
    for (int n = 3; n <= 12; ++n)
        specs.push_back("cycle:" + std::to_string(n));
    for (int n = 1; n <= 6; ++n)
        specs.push_back("hypercube:" + std::to_string(n));
    for (int a = 1; a <= 6; ++a)
        for (int b = a; b <= 6; ++b)
            specs.push_back("kbip:" + std::to_string(a) + "," + std::to_string(b));
    for (int n = 2; n <= 12; ++n)
        specs.push_back("path:" + std::to_string(n));
    for (int n = 4; n <= 12; ++n)
        specs.push_back("wheel:" + std::to_string(n));
    for (int n = 2; n <= 10; ++n)
        specs.push_back("star:" + std::to_string(n));
    for (int r = 1; r <= 10; ++r)
        specs.push_back("grunion:" + std::to_string(r));
    for (const auto& text : specs) {
        FamilySpec s = spec(text);
        Graph g = generate(s);
        ClosedForm cf = closed_form_polynomial(s);
        ASSERT_TRUE(cf.available()) << text;
        EXPECT_EQ(*cf.polynomial, edge_sum_oracle(g)) << text;
        EXPECT_EQ(*cf.polynomial, harmonic_polynomial(g)) << text;
        EXPECT_EQ(cf.nonzero_count, cf.polynomial->nonzero_count()) << text;
    }
}

TEST(Families, StarHasOneTerm) {
    for (std::size_t n = 3; n <= 10; ++n) {
        auto h = computed("star:" + std::to_string(n));
        EXPECT_EQ(h, IntPolynomial::monomial(static_cast<long long>(n - 1), n - 1));
        EXPECT_EQ(h.nonzero_count(), 1u);
    }
}

TEST(Families, TrDegreeOrder) {
    EXPECT_EQ(t_r_degree_order(3), (std::vector<std::size_t>{2, 3, 1}));
    EXPECT_EQ(t_r_degree_order(4), (std::vector<std::size_t>{3, 2, 4, 1}));
    for (std::size_t r = 3; r <= 30; ++r) {
        auto a = t_r_degree_order(r);
        ASSERT_EQ(a.size(), r);
        EXPECT_EQ(std::set<std::size_t>(a.begin(), a.end()).size(), r);
        EXPECT_EQ(*std::min_element(a.begin(), a.end()), 1u);
        EXPECT_EQ(*std::max_element(a.begin(), a.end()), r);
        EXPECT_EQ(a.back(), 1u);
        for (std::size_t j = 0; j + 1 < r; ++j) {
            std::size_t s = a[j] + a[j + 1];
            EXPECT_TRUE(s == r + 1 || s == r + 2) << "r=" << r << " j=" << j;
        }
    }
    EXPECT_THROW(t_r_degree_order(2), FamilyError);
}

TEST(Families, TrTreeExamples) {
    Graph t3 = t_r_tree(3);
    EXPECT_EQ(harmonic_polynomial(t3), poly({0, 0, 0, 4, 2}));
    EXPECT_EQ(t3.order(), 7u);
}

TEST(Families, TrTreeStructure) {
    for (std::size_t r = 3; r <= 10; ++r) {
        Graph t = t_r_tree(r);
        EXPECT_TRUE(is_connected(t)) << r;
        EXPECT_EQ(t.size() + 1, t.order()) << r;
        auto distinct = degree_summary(t).distinct;
        ASSERT_EQ(distinct.size(), r) << r;
        EXPECT_EQ(distinct.front(), 1u);
        EXPECT_EQ(distinct.back(), r);
        IntPolynomial h = harmonic_polynomial(t);
        EXPECT_EQ(h.nonzero_count(), 2u) << r;
        EXPECT_EQ(*h.min_degree(), r);
        EXPECT_EQ(*h.degree(), r + 1);

        auto cf = closed_form_polynomial(spec("trtree:" + std::to_string(r)));
        EXPECT_FALSE(cf.available());
        EXPECT_EQ(cf.nonzero_count, 2u);
        EXPECT_EQ(cf.exponent_support, (std::vector<std::size_t>{r, r + 1}));
    }
}

TEST(Families, GrUnionExamples) {
    EXPECT_EQ(harmonic_polynomial(g_r_union(1)), poly({0, 1}));
    EXPECT_EQ(harmonic_polynomial(g_r_union(3)), IntPolynomial::monomial(7, 3));
    EXPECT_EQ(harmonic_polynomial(g_r_union(4)), IntPolynomial::monomial(10, 4));
    EXPECT_EQ(g_r_parts(4), (std::vector<std::pair<std::size_t, std::size_t>>{{1, 4}, {2, 3}}));
}

TEST(Families, GrUnionStructure) {
    for (std::size_t r = 1; r <= 10; ++r) {
        Graph g = g_r_union(r);
        EXPECT_EQ(degree_summary(g).distinct.size(), r) << r;
        EXPECT_FALSE(g.has_isolated_vertex());
        IntPolynomial h = harmonic_polynomial(g);
        EXPECT_EQ(h.nonzero_count(), 1u) << r;
        EXPECT_EQ(h.degree(), r);
        EXPECT_TRUE(is_coherent(g)) << r;
    }
}

TEST(Families, ParseErrors) {
    EXPECT_EQ(spec("kbip:2,3"), (FamilySpec{Family::CompleteBipartite, {2, 3}}));
    EXPECT_EQ(to_string(spec("wheel:6")), "wheel:6");
    for (const char* bad : {"wheel", "wheel:", "wheel:3", "cycle:2", "kbip:2", "kbip:0,3", "path:1",
                            "nothing:4", "complete:-1", "complete:x", "trtree:2", "grunion:0", "hypercube:21",
                            "star:1", "path:3,4"})
        EXPECT_THROW(spec(bad), FamilyError) << bad;
}

TEST(Families, TrTreeBudget) {
    EXPECT_THROW(t_r_tree(12), FamilyError);
    EXPECT_EQ(t_r_tree(11).order(), 5302267u);
}
