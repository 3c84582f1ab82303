#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "netfix/codes.hpp"
#include "netfix/guessing.hpp"
#include "oracles.hpp"

using namespace netfix;

TEST_CASE("code text format") {
    Code c = parse_code("code n=3 s=2\n# a comment\n0,0,0\n1,1,0\n");
    CHECK(c.n == 3);
    CHECK(c.s == 2);
    REQUIRE(c.size() == 2);
    CHECK(c.words[1] == State{{1, 1, 0}, 2});

    Code back = parse_code(code_to_text(c));
    CHECK(back.words == c.words);

    CHECK_THROWS_AS(parse_code("0,0\ncode n=2 s=2"), ParseError);           // words before header
    CHECK_THROWS_AS(parse_code("code n=2 s=2\n0,0\n0,0"), ParseError);      // duplicate word
    CHECK_THROWS_AS(parse_code("code n=2 s=2\n0,0,0"), ParseError);         // wrong length
    try {
        parse_code("code n=2 s=2\n0,0\n0,2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("minimum distances") {
    Code c = parse_code("code n=4 s=2\n0,0,0,0\n1,1,0,0\n1,1,1,1");
    CHECK(min_distance(c, DistanceKind::hamming) == 2);
    CHECK(min_distance(c, DistanceKind::max) == 2);
    CHECK(min_distance(c, DistanceKind::min) == 0);

    Code single = parse_code("code n=4 s=2\n0,1,0,1");
    CHECK_FALSE(min_distance(single, DistanceKind::hamming).has_value());
    CHECK_FALSE(min_distance(Code{4, 2, {}}, DistanceKind::hamming).has_value());
}

TEST_CASE("maximum code sizes on known instances") {
    CHECK(max_code(4, 2, 2, DistanceKind::hamming).size() == 8);
    CHECK(max_code(3, 1, 2, DistanceKind::min).size() == 3);
    CHECK(max_code(2, 1, 2, DistanceKind::max).size() == 4);
    CHECK(max_code(7, 3, 2, DistanceKind::hamming).size() == 16);

    CHECK(max_constant_weight_code(7, 4, 3).size() == 7);
    CHECK(max_constant_weight_code(4, 4, 2).size() == 2);
    for (int w = 0; w <= 5; ++w)
        CHECK(max_constant_weight_code(5, 2, w).size() == weight_level(5, w, 2).size());
}

TEST_CASE("maximum codes match the naive search") {
    for (int n = 1; n <= 3; ++n)
        for (int s = 2; s <= 3; ++s) {
            auto pts = oracles::all_states(n, s);
            for (int d = 1; d <= n; ++d)
                for (auto kind :
                     {DistanceKind::hamming, DistanceKind::max, DistanceKind::min}) {
                    Code c = max_code(n, d, s, kind);
                    auto found = min_distance(c, kind);
                    if (found) CHECK(*found >= d);
                    CHECK(c.size() == oracles::naive_max_code_size(pts, d, kind));
                }
        }
}

TEST_CASE("weight levels and the middle antichain") {
    Code level = weight_level(4, 2, 2);
    CHECK(level.size() == 6);
    for (const auto& w : level.words) CHECK(weight(w) == 2);

    for (int n = 1; n <= 3; ++n)
        for (int s = 2; s <= 3; ++s) {
            Code a = sperner_antichain(n, s);
            CHECK(a.words == weight_level(n, n * (s - 1) / 2, s).words);
            if (a.size() > 1) CHECK(*min_distance(a, DistanceKind::min) >= 1);
            // the antichain attains the independence number of the negative clique
            CHECK(a.size() == alpha(negative_clique(n), s).alpha);
        }
}

TEST_CASE("the chain construction for the positive triangle") {
    Code c = chain_code_k3(4);
    REQUIRE(c.size() == 5);
    CHECK(c.words[0] == State{{0, 0, 0}, 4});
    CHECK(c.words[1] == State{{1, 1, 0}, 4});
    CHECK(c.words[2] == State{{1, 2, 1}, 4});
    CHECK(c.words[3] == State{{2, 2, 2}, 4});
    CHECK(c.words[4] == State{{3, 3, 2}, 4});

    for (int s = 2; s <= 4; ++s) {
        Code chain = chain_code_k3(s);
        CHECK(chain.size() == static_cast<std::size_t>(3 * (s - 1) / 2 + 1));
        // consecutive words are strictly ordered with two coordinates moving
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            CHECK(below_count(chain.words[k], chain.words[k + 1]) == 2);
            CHECK(below_count(chain.words[k + 1], chain.words[k]) == 0);
        }
        // independent in the guessing graph of the positive triangle, and maximum
        auto d = positive_clique(3);
        for (std::size_t a = 0; a < chain.size(); ++a)
            for (std::size_t b = a + 1; b < chain.size(); ++b)
                CHECK_FALSE(is_edge(d, s, chain.words[a], chain.words[b]));
        CHECK(chain.size() == alpha(d, s).alpha);
    }
}

TEST_CASE("moment fibers partition the state space") {
    CHECK(moments(State{{2, 0, 1}, 3}) == MomentVector{3, 2 + 3, 2 + 9});

    for (int n = 1; n <= 4; ++n)
        for (int s = 2; s <= 3; ++s) {
            auto pts = oracles::all_states(n, s);
            std::map<std::tuple<long long, long long, long long>, std::size_t> fiber_sizes;
            for (const auto& x : pts) {
                MomentVector m = moments(x);
                ++fiber_sizes[{m.m0, m.m1, m.m2}];
            }
            std::size_t total = 0, largest = 0;
            for (const auto& [key, count] : fiber_sizes) {
                auto fiber = moment_code(n, s, {std::get<0>(key), std::get<1>(key),
                                                std::get<2>(key)});
                CHECK(fiber.size() == count);
                total += count;
                largest = std::max(largest, count);
            }
            CHECK(total == pts.size());
            CHECK(best_moment_code(n, s).size() == largest);
        }
}

TEST_CASE("the distance chain holds on small lengths") {
    auto report = check_distance_chain(5, 2);
    CHECK(report.holds);
    CHECK(report.a_h_2d == 2);        // A_H(5,4,2)
    CHECK(report.a_min == 2);         // A_m(5,2,2)
    CHECK(report.a_max <= 2 * report.a_h_2d_minus_1);

    CHECK(check_distance_chain(4, 1).holds);
    CHECK(check_distance_chain(5, 3).holds);
}
