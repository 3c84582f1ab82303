#include <doctest.h>

#include <random>

#include "netfix/digraph.hpp"
#include "oracles.hpp"

using namespace netfix;

namespace {

SignedDigraph random_digraph(std::mt19937& rng, int n, double arc_prob) {
    SignedDigraph d(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> sign(0, 2);
    const Sign signs[] = {Sign::positive, Sign::negative, Sign::zero};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (coin(rng) < arc_prob) d.add_arc(u, v, signs[sign(rng)]);
    return d;
}

}  // namespace

TEST_CASE("parsing the text format") {
    auto d = SignedDigraph::parse("vertices 2\narc 0 1 +\narc 1 0 +");
    CHECK(d.vertex_count() == 2);
    CHECK(d.arcs().size() == 2);
    CHECK(d.arc_sign(0, 1) == Sign::positive);

    auto loop = SignedDigraph::parse("vertices 1\narc 0 0 -");
    CHECK(loop.has_loop());

    // order-insensitive, comments allowed
    auto shuffled = SignedDigraph::parse("# a comment\narc 0 1 -\nvertices 3\narc 2 0 0\n");
    CHECK(shuffled.vertex_count() == 3);
    CHECK(shuffled.arc_sign(2, 0) == Sign::zero);

    CHECK_THROWS_AS(SignedDigraph::parse("vertices 2\narc 0 1 +\narc 0 1 -"), ParseError);
    CHECK_THROWS_AS(SignedDigraph::parse("vertices 2\narc 0 5 +"), ParseError);
    CHECK_THROWS_AS(SignedDigraph::parse("arc 0 1 +"), ParseError);
    try {
        SignedDigraph::parse("vertices 2\narc 0 1 ?");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("degree statistics") {
    auto stats = degree_stats(positive_clique(3));
    for (const auto& v : stats.vertex) {
        CHECK(v.d_plus == 2);
        CHECK(v.d_zero == 0);
        CHECK(v.d_minus == 0);
    }
    CHECK(stats.delta == 2);
    CHECK(stats.delta_pm == 2);

    auto cycle = degree_stats(positive_cycle(4));
    CHECK(cycle.delta == 1);
    CHECK(cycle.Delta == 1);
    CHECK(cycle.delta_zero == 0);
    CHECK(cycle.delta_pm == 1);

    auto unsigned_stats = degree_stats(unsigned_clique(3));
    CHECK(unsigned_stats.delta_zero == 2);
    CHECK(unsigned_stats.delta_pm == 0);
}

TEST_CASE("cycle signs") {
    auto k2m = negative_clique(2);
    CHECK(cycle_sign(k2m, {0, 1}) == Sign::positive);

    SignedDigraph mixed(2);
    mixed.add_arc(0, 1, Sign::positive);
    mixed.add_arc(1, 0, Sign::negative);
    CHECK(cycle_sign(mixed, {0, 1}) == Sign::negative);

    SignedDigraph triangle(3);
    triangle.add_arc(0, 1, Sign::positive);
    triangle.add_arc(1, 2, Sign::zero);
    triangle.add_arc(2, 0, Sign::positive);
    CHECK(cycle_sign(triangle, {0, 1, 2}) == Sign::zero);

    CHECK_THROWS_AS(cycle_sign(triangle, {0, 2, 1}), std::invalid_argument);
}

TEST_CASE("non-negative girth on named instances") {
    CHECK(nonneg_girth(positive_clique(3)) == 2);
    CHECK(nonneg_girth(negative_clique(3)) == 2);  // two negative arcs multiply to +
    CHECK(nonneg_girth(positive_cycle(5)) == 5);
    CHECK_FALSE(nonneg_girth(signed_cycle({Sign::negative, Sign::positive, Sign::positive,
                                           Sign::positive, Sign::positive})));

    // a cycle with an even number of negative arcs is non-negative
    CHECK(nonneg_girth(signed_cycle({Sign::negative, Sign::negative, Sign::positive})) == 3);

    SignedDigraph loop(1);
    loop.add_arc(0, 0, Sign::negative);
    CHECK_FALSE(nonneg_girth(loop));
    SignedDigraph posloop(1);
    posloop.add_arc(0, 0, Sign::positive);
    CHECK(nonneg_girth(posloop) == 1);
}

TEST_CASE("non-negative girth matches naive cycle enumeration") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> size(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        SignedDigraph d = random_digraph(rng, size(rng), 0.35);
        CHECK(nonneg_girth(d) == oracles::naive_nonneg_girth(d));
    }
}

TEST_CASE("feedback vertex sets and cycle packings") {
    for (int n = 2; n <= 4; ++n) {
        CHECK(min_nonneg_fvs(positive_clique(n)) == n - 1);
        CHECK(min_nonneg_fvs(negative_clique(n)) == n - 1);
    }
    CHECK(max_disjoint_nonneg_cycles(positive_cycle(4)) == 1);

    SignedDigraph two_cycles(4);
    two_cycles.add_arc(0, 1, Sign::positive);
    two_cycles.add_arc(1, 0, Sign::positive);
    two_cycles.add_arc(2, 3, Sign::negative);
    two_cycles.add_arc(3, 2, Sign::negative);
    CHECK(max_disjoint_nonneg_cycles(two_cycles) == 2);

    SignedDigraph acyclic(3);
    acyclic.add_arc(0, 1, Sign::positive);
    acyclic.add_arc(1, 2, Sign::negative);
    CHECK(min_nonneg_fvs(acyclic) == 0);
    CHECK(max_disjoint_nonneg_cycles(acyclic) == 0);
}

TEST_CASE("structural parameter invariants on random digraphs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> size(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        SignedDigraph d = random_digraph(rng, size(rng), 0.4);
        StructuralParams p = structural_params(d);
        CHECK(p.c_plus <= p.k_plus);
        CHECK((p.k_plus == 0) == !p.gamma_plus);
        if (p.gamma_plus) {
            CHECK(p.c_plus <= d.vertex_count() / *p.gamma_plus);
            if (p.k_plus >= 1) CHECK(*p.gamma_plus <= d.vertex_count() - p.k_plus + 1);
        }
    }
}

TEST_CASE("subgraph relation") {
    SignedDigraph plus(2), zero(2), minus(2), empty(2);
    plus.add_arc(0, 1, Sign::positive);
    zero.add_arc(0, 1, Sign::zero);
    minus.add_arc(0, 1, Sign::negative);

    CHECK(is_subgraph(plus, zero));   // zero sign in the host is unconstrained
    CHECK_FALSE(is_subgraph(minus, plus));
    CHECK(is_subgraph(empty, plus));
    CHECK(is_subgraph(plus, plus));  // reflexive

    // transitivity on a random triple chain
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        SignedDigraph a = random_digraph(rng, 3, 0.4);
        SignedDigraph b = random_digraph(rng, 3, 0.5);
        SignedDigraph c = random_digraph(rng, 3, 0.6);
        if (is_subgraph(a, b) && is_subgraph(b, c)) CHECK(is_subgraph(a, c));
    }
}
