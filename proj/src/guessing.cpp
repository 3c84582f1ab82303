#include "netfix/guessing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace netfix {

bool is_edge(const SignedDigraph& d, int s, const State& x, const State& y) {
    if (x.n() != d.vertex_count() || y.n() != d.vertex_count())
        throw std::invalid_argument("state length does not match digraph");
    if (x.s != s || y.s != s) throw std::invalid_argument("state alphabet mismatch");
    if (x == y) return false;
    for (int i = 0; i < d.vertex_count(); ++i) {
        int xi = x.x[static_cast<std::size_t>(i)];
        int yi = y.x[static_cast<std::size_t>(i)];
        if (xi > yi && leq_i(d, i, x, y)) return true;
        if (yi > xi && leq_i(d, i, y, x)) return true;
    }
    return false;
}

GuessingGraph::GuessingGraph(SignedDigraph d, int s)
    : d_(std::move(d)), s_(s), space_(d_.vertex_count(), s) {}

GuessingGraph GuessingGraph::materialized(SignedDigraph d, int s, std::uint64_t cap) {
    GuessingGraph graph(std::move(d), s);
    if (graph.order() > cap)
        throw CapExceeded("state space of size " + std::to_string(graph.order()) +
                          " exceeds materialization cap " + std::to_string(cap));
    const int n_states = static_cast<int>(graph.order());
    BitGraph adj(n_states);
    std::vector<State> states;
    states.reserve(static_cast<std::size_t>(n_states));
    for (int c = 0; c < n_states; ++c) states.push_back(graph.space_.decode(static_cast<std::uint64_t>(c)));
    for (int a = 0; a < n_states; ++a)
        for (int b = a + 1; b < n_states; ++b)
            if (is_edge(graph.d_, s, states[static_cast<std::size_t>(a)],
                        states[static_cast<std::size_t>(b)]))
                adj.add_edge(a, b);
    graph.adjacency_ = std::move(adj);
    return graph;
}

bool GuessingGraph::edge(std::uint64_t a, std::uint64_t b) const {
    if (adjacency_)
        return a != b && adjacency_->edge(static_cast<int>(a), static_cast<int>(b));
    return is_edge(d_, s_, space_.decode(a), space_.decode(b));
}

const BitGraph& GuessingGraph::adjacency() const {
    if (!adjacency_) throw std::logic_error("guessing graph is not materialized");
    return *adjacency_;
}

std::uint64_t neighbour_count(const SignedDigraph& d, int s, const State& x) {
    StateSpace space(d.vertex_count(), s);
    std::uint64_t count = 0;
    std::uint64_t self = space.encode(x);
    for (std::uint64_t c = 0; c < space.size(); ++c) {
        if (c == self) continue;
        if (is_edge(d, s, x, space.decode(c))) ++count;
    }
    return count;
}

namespace {

// D[I] is x-frustrated when every arc with both ends in I is x-frustrated.
bool induced_frustrated(const SignedDigraph& d, std::uint32_t set, const State& x) {
    for (const auto& a : d.arcs()) {
        if (!((set >> a.from) & 1u) || !((set >> a.to) & 1u)) continue;
        if (!is_frustrated(d, a.from, a.to, x)) return false;
    }
    return true;
}

}  // namespace

std::uint64_t degree_by_formula(const SignedDigraph& d, const State& x) {
    const int n = d.vertex_count();
    if (x.s != 2) throw std::invalid_argument("degree formula requires s=2");
    if (d.has_loop()) throw std::invalid_argument("degree formula requires a loopless digraph");
    if (n > 25) throw CapExceeded("degree formula enumerates subsets; n too large");

    long long total = 0;
    const std::uint32_t full = (n == 0) ? 0u : ((1u << n) - 1u);
    for (std::uint32_t set = 1; set <= full && full; ++set) {
        if (!induced_frustrated(d, set, x)) continue;
        // N(I): in-neighbours of members of I.
        std::uint32_t in_nbrs = 0;
        for (int i = 0; i < n; ++i) {
            if (!((set >> i) & 1u)) continue;
            for (const auto& [j, sign] : d.in_neighbours(i)) {
                (void)sign;
                in_nbrs |= 1u << j;
            }
        }
        // N(I,x): boundary in-neighbours all of whose arcs into I are frustrated.
        int boundary_frustrated = 0;
        std::uint32_t outside = in_nbrs & ~set;
        for (int j = 0; j < n; ++j) {
            if (!((outside >> j) & 1u)) continue;
            bool all = true;
            for (const auto& a : d.arcs()) {
                if (a.from != j || !((set >> a.to) & 1u)) continue;
                if (!is_frustrated(d, j, a.to, x)) {
                    all = false;
                    break;
                }
            }
            if (all) ++boundary_frustrated;
        }
        int closed = std::popcount(in_nbrs | set);
        int exponent = n - closed + boundary_frustrated;
        long long term = 1ll << exponent;
        total += (std::popcount(set) % 2 == 1) ? term : -term;
    }
    if (total < 0) throw std::logic_error("degree formula produced a negative value");
    return static_cast<std::uint64_t>(total);
}

std::uint64_t edge_count_at_vertex(const SignedDigraph& d, int s, const State& x, int i) {
    if (x.n() != d.vertex_count()) throw std::invalid_argument("state length mismatch");
    if (x.s != s) throw std::invalid_argument("state alphabet mismatch");
    const int xi = x.x[static_cast<std::size_t>(i)];

    // Case A: x <=_i y with y_i < x_i. Case B: y <=_i x with y_i > x_i.
    // The two cases are disjoint (they force y_i on opposite sides of x_i),
    // and each factorises over coordinates.
    std::uint64_t below = static_cast<std::uint64_t>(xi);           // y_i < x_i choices
    std::uint64_t above = static_cast<std::uint64_t>(s - 1 - xi);   // y_i > x_i choices
    int constrained = 1;  // coordinate i itself
    for (const auto& [j, sign] : d.in_neighbours(i)) {
        int xj = x.x[static_cast<std::size_t>(j)];
        if (j == i) {
            // A loop adds its own constraint on y_i: only a negative loop is
            // compatible with either case.
            if (sign != Sign::negative) {
                below = 0;
                above = 0;
            }
            continue;
        }
        ++constrained;
        switch (sign) {
            case Sign::positive:
                below *= static_cast<std::uint64_t>(s - xj);   // y_j >= x_j
                above *= static_cast<std::uint64_t>(xj + 1);   // y_j <= x_j
                break;
            case Sign::negative:
                below *= static_cast<std::uint64_t>(xj + 1);
                above *= static_cast<std::uint64_t>(s - xj);
                break;
            case Sign::zero:
                break;  // y_j = x_j, one choice
        }
    }
    std::uint64_t free_factor = 1;
    for (int k = d.vertex_count() - constrained; k > 0; --k)
        free_factor *= static_cast<std::uint64_t>(s);
    return (below + above) * free_factor;
}

GuessingResult alpha(const GuessingGraph& graph, const GuessingConfig& config) {
    if (graph.order() > config.solver_cap)
        throw CapExceeded("state space of size " + std::to_string(graph.order()) +
                          " exceeds the exact solver cap " + std::to_string(config.solver_cap) +
                          "; use the bound report instead");
    const BitGraph* adj = nullptr;
    std::optional<GuessingGraph> local;
    if (graph.is_materialized()) {
        adj = &graph.adjacency();
    } else {
        local = GuessingGraph::materialized(graph.digraph(), graph.alphabet(), config.solver_cap);
        adj = &local->adjacency();
    }
    MisResult mis = lexmin_max_independent_set(*adj);
    GuessingResult result;
    result.alpha = static_cast<std::uint64_t>(mis.size);
    result.g = std::log2(static_cast<double>(result.alpha)) / std::log2(static_cast<double>(graph.alphabet()));
    for (int v : mis.members) result.witness.push_back(graph.space().decode(static_cast<std::uint64_t>(v)));
    return result;
}

GuessingResult alpha(const SignedDigraph& d, int s, const GuessingConfig& config) {
    return alpha(GuessingGraph(d, s), config);
}

}  // namespace netfix
