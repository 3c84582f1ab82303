#include <doctest.h>

#include <random>

#include "netfix/guessing.hpp"
#include "oracles.hpp"

using namespace netfix;

namespace {

bool strictly_below_everywhere(const State& x, const State& y) {
    return below_count(x, y) == x.n();
}

bool comparable(const State& x, const State& y) {
    for (int i = 0; i < x.n(); ++i)
        if (x.x[i] < y.x[i]) return below_count(y, x) == 0;
    return true;  // x >= y componentwise
}

std::uint64_t direct_edge_count_at_vertex(const SignedDigraph& d, int s, const State& x, int i) {
    std::uint64_t count = 0;
    for (const auto& y : oracles::all_states(x.n(), s)) {
        bool witnessed = (leq_i(d, i, x, y) && x.x[i] > y.x[i]) ||
                         (leq_i(d, i, y, x) && y.x[i] > x.x[i]);
        if (witnessed) ++count;
    }
    return count;
}

SignedDigraph random_digraph(std::mt19937& rng, int n, double arc_prob, bool loops) {
    SignedDigraph d(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> sign(0, 2);
    const Sign signs[] = {Sign::positive, Sign::negative, Sign::zero};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v && !loops) continue;
            if (coin(rng) < arc_prob) d.add_arc(u, v, signs[sign(rng)]);
        }
    return d;
}

}  // namespace

TEST_CASE("edge predicate is symmetric and irreflexive") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        SignedDigraph d = random_digraph(rng, 3, 0.4, true);
        for (int s : {2, 3}) {
            auto pts = oracles::all_states(3, s);
            for (const auto& x : pts) {
                CHECK_FALSE(is_edge(d, s, x, x));
                for (const auto& y : pts) CHECK(is_edge(d, s, x, y) == is_edge(d, s, y, x));
            }
        }
    }
}

TEST_CASE("negative cliques give the comparability graph") {
    for (int n : {2, 3})
        for (int s : {2, 3}) {
            auto d = negative_clique(n);
            auto pts = oracles::all_states(n, s);
            for (const auto& x : pts)
                for (const auto& y : pts)
                    CHECK(is_edge(d, s, x, y) == (x != y && comparable(x, y)));
        }
}

TEST_CASE("positive cycles join everything except fully strict chains") {
    for (int n : {2, 3})
        for (int s : {2, 3}) {
            auto d = positive_cycle(n);
            auto pts = oracles::all_states(n, s);
            for (const auto& x : pts)
                for (const auto& y : pts) {
                    bool chain = strictly_below_everywhere(x, y) ||
                                 strictly_below_everywhere(y, x);
                    CHECK(is_edge(d, s, x, y) == (x != y && !chain));
                }
        }
}

TEST_CASE("the empty digraph yields the complete graph") {
    SignedDigraph d(3);
    for (int s : {2, 3}) {
        auto pts = oracles::all_states(3, s);
        for (const auto& x : pts) {
            std::uint64_t expect = static_cast<std::uint64_t>(pts.size()) - 1;
            CHECK(neighbour_count(d, s, x) == expect);
        }
        auto result = alpha(d, s);
        CHECK(result.alpha == 1);
        CHECK(result.g == doctest::Approx(0.0));
    }
}

TEST_CASE("degree formula agrees with direct counting") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> size(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
        SignedDigraph d = random_digraph(rng, size(rng), 0.45, false);
        for (const auto& x : oracles::all_states(d.vertex_count(), 2))
            CHECK(degree_by_formula(d, x) == neighbour_count(d, 2, x));
    }

    // rejected inputs: non-binary use and loops
    SignedDigraph loop(2);
    loop.add_arc(0, 0, Sign::positive);
    CHECK_THROWS(degree_by_formula(loop, State{{0, 0}, 2}));
}

TEST_CASE("per-vertex edge counts match enumeration") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> size(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = size(rng);
        SignedDigraph d = random_digraph(rng, n, 0.5, true);
        for (int s : {2, 3})
            for (const auto& x : oracles::all_states(n, s))
                for (int i = 0; i < n; ++i)
                    CHECK(edge_count_at_vertex(d, s, x, i) ==
                          direct_edge_count_at_vertex(d, s, x, i));
    }
}

TEST_CASE("binary loopless per-vertex counts have a closed form") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        SignedDigraph d = random_digraph(rng, 4, 0.5, false);
        for (const auto& x : oracles::all_states(4, 2))
            for (int i = 0; i < 4; ++i) {
                int frustrated = 0;
                for (const auto& [j, sign] : d.in_neighbours(i)) {
                    (void)sign;
                    if (is_frustrated(d, j, i, x)) ++frustrated;
                }
                int d_i = static_cast<int>(d.in_neighbours(i).size());
                std::uint64_t expect = 1ull << (4 - 1 - d_i + frustrated);
                CHECK(edge_count_at_vertex(d, 2, x, i) == expect);
            }
    }
}

TEST_CASE("independence numbers of small instances") {
    for (int n = 2; n <= 4; ++n)
        for (int s = 2; s <= 3; ++s) {
            auto result = alpha(positive_cycle(n), s);
            CHECK(result.alpha == static_cast<std::uint64_t>(s));
            CHECK(result.g == doctest::Approx(1.0));
            // canonical witness: the s constant states
            REQUIRE(result.witness.size() == static_cast<std::size_t>(s));
            for (int v = 0; v < s; ++v)
                CHECK(result.witness[static_cast<std::size_t>(v)] ==
                      State{std::vector<int>(static_cast<std::size_t>(n), v), s});
        }

    CHECK(alpha(negative_clique(2), 3).alpha == 3);
    CHECK(alpha(negative_clique(4), 2).alpha == 6);
}

TEST_CASE("solver cap is honoured") {
    GuessingConfig tight;
    tight.solver_cap = 8;
    CHECK_THROWS_AS(alpha(positive_clique(4), 2, tight), CapExceeded);
    CHECK_THROWS_AS(GuessingGraph::materialized(positive_clique(4), 2, 8), CapExceeded);
}
