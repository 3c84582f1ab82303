#include <doctest.h>

#include <string>

#include "netfix/codes.hpp"
#include "netfix/digraph.hpp"
#include "netfix/synthesis.hpp"

using namespace netfix;

TEST_CASE("blank lines and inline comments are ignored everywhere") {
    auto d = SignedDigraph::parse("\nvertices 2  # two vertices\n\narc 0 1 -  # the only arc\n");
    CHECK(d.vertex_count() == 2);
    CHECK(d.arcs().size() == 1);

    auto c = parse_code("code n=2 s=2  # header\n\n0,1  # word\n");
    CHECK(c.size() == 1);

    auto f = Network::parse("network n=1 s=2  # header\n\n0 -> 1\n1 -> 1  # absorbing\n");
    CHECK(f.evaluate_code(0) == State{{1}, 2});
}

TEST_CASE("parse errors carry the offending line") {
    try {
        SignedDigraph::parse("vertices 2\n\narc 0 1 + extra");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
    }
    try {
        Network::parse("network n=1 s=2\n0 -> 0\nnonsense");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("emitted text parses back unchanged") {
    SignedDigraph d(3);
    d.add_arc(0, 1, Sign::positive);
    d.add_arc(1, 2, Sign::negative);
    d.add_arc(2, 2, Sign::zero);
    auto back = SignedDigraph::parse(d.to_text());
    CHECK(back.vertex_count() == 3);
    CHECK(is_subgraph(d, back));
    CHECK(is_subgraph(back, d));
    CHECK(back.arc_sign(2, 2) == Sign::zero);
}
