#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netfix/bitgraph.hpp"
#include "netfix/digraph.hpp"
#include "netfix/states.hpp"

namespace netfix {

struct GuessingConfig {
    std::uint64_t materialize_cap = 1ull << 22;  // max s^n for adjacency rows
    std::uint64_t solver_cap = 1ull << 16;       // max s^n for the exact solver
};

/// Edge test of the guessing graph: some vertex i sees x below y (in its
/// order) while x_i > y_i, or symmetrically. Equal states are never adjacent.
bool is_edge(const SignedDigraph& d, int s, const State& x, const State& y);

/// The graph on [s]^n whose independent sets are exactly the realisable
/// fixed-point sets. Edges are answered by the pure predicate; a materialized
/// adjacency matrix may be attached for repeated queries.
class GuessingGraph {
public:
    GuessingGraph(SignedDigraph d, int s);

    /// Materializes the adjacency rows; throws CapExceeded past the cap.
    static GuessingGraph materialized(SignedDigraph d, int s,
                                      std::uint64_t cap = GuessingConfig{}.materialize_cap);

    bool edge(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t order() const { return space_.size(); }
    bool is_materialized() const { return adjacency_.has_value(); }
    const BitGraph& adjacency() const;

    const SignedDigraph& digraph() const { return d_; }
    int alphabet() const { return s_; }
    const StateSpace& space() const { return space_; }

private:
    SignedDigraph d_;
    int s_;
    StateSpace space_;
    std::optional<BitGraph> adjacency_;
};

/// Direct neighbour count of x in the guessing graph (enumerates all y).
std::uint64_t neighbour_count(const SignedDigraph& d, int s, const State& x);

/// Inclusion-exclusion degree formula over frustrated induced subgraphs
/// (binary, loopless digraphs only).
std::uint64_t degree_by_formula(const SignedDigraph& d, const State& x);

/// Closed-form |E_i(D,s) /\ {x}|: the number of neighbours y of x whose
/// witnessing vertex is i, counted by independent per-coordinate choices.
std::uint64_t edge_count_at_vertex(const SignedDigraph& d, int s, const State& x, int i);

struct GuessingResult {
    std::uint64_t alpha = 0;
    double g = 0.0;  // log_s(alpha)
    std::vector<State> witness;
    bool canonical_witness = true;
};

/// Exact independence number with a canonical (lexicographically smallest)
/// maximum witness. Throws CapExceeded past the solver cap.
GuessingResult alpha(const GuessingGraph& graph, const GuessingConfig& config = {});

GuessingResult alpha(const SignedDigraph& d, int s, const GuessingConfig& config = {});

}  // namespace netfix
