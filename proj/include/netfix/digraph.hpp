#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netfix {

/// Arc label of a signed digraph: -1, 0 or +1.
enum class Sign : int { negative = -1, zero = 0, positive = 1 };

constexpr int sign_value(Sign s) { return static_cast<int>(s); }

constexpr Sign sign_product(Sign a, Sign b) {
    return static_cast<Sign>(sign_value(a) * sign_value(b));
}

char sign_char(Sign s);
Sign sign_from_char(char c);

struct Arc {
    int from;
    int to;
    Sign sign;
};

/// Malformed textual input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line);
    int line() const { return line_; }

private:
    int line_;
};

/// An exact search was asked to run past its configured size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DegreeStats {
    struct PerVertex {
        int d = 0;        // total in-degree
        int d_plus = 0;   // in-arcs signed +
        int d_minus = 0;  // in-arcs signed -
        int d_zero = 0;   // in-arcs signed 0
    };
    std::vector<PerVertex> vertex;
    int delta = 0;       // min in-degree
    int Delta = 0;       // max in-degree
    double average = 0;  // average in-degree
    int delta_zero = 0;  // min_i d_i^0
    int delta_pm = 0;    // min_i (d_i^+ + d_i^-)
};

/// gamma_plus: minimum length of a cycle of sign >= 0 (nullopt when none exists).
/// k_plus: minimum vertex set hitting every such cycle.
/// c_plus: maximum family of vertex-disjoint such cycles.
struct StructuralParams {
    std::optional<int> gamma_plus;
    int k_plus = 0;
    int c_plus = 0;
};

/// Exact k_plus / c_plus searches refuse instances above this many vertices.
inline constexpr int kDefaultVertexCap = 20;

/// Immutable after construction; vertices are 0..n-1, at most one arc per
/// ordered pair, loops permitted.
class SignedDigraph {
public:
    explicit SignedDigraph(int n);

    /// Text format: `vertices <n>` once, then `arc <u> <v> <+|-|0>` lines.
    /// `#` starts a comment. Line order is irrelevant.
    static SignedDigraph parse(std::string_view text);

    void add_arc(int from, int to, Sign sign);

    int vertex_count() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    /// In-neighbours of i as (source vertex, arc sign) pairs.
    const std::vector<std::pair<int, Sign>>& in_neighbours(int i) const { return in_[i]; }

    bool has_arc(int from, int to) const;
    std::optional<Sign> arc_sign(int from, int to) const;
    bool has_loop() const;

    std::string to_text() const;

private:
    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::pair<int, Sign>>> in_;
};

DegreeStats degree_stats(const SignedDigraph& d);

/// Sign of a directed cycle given as its vertex sequence (closing arc implied).
/// Throws std::invalid_argument if the sequence is not a cycle of d.
Sign cycle_sign(const SignedDigraph& d, const std::vector<int>& cycle);

/// Minimum length of a non-negative cycle, nullopt when none exists.
std::optional<int> nonneg_girth(const SignedDigraph& d);

/// Same, restricted to the induced subgraph on the vertices of `vertex_mask`;
/// also reports one shortest witness cycle.
std::optional<std::vector<int>> shortest_nonneg_cycle(const SignedDigraph& d,
                                                      std::uint32_t vertex_mask);

bool has_nonneg_cycle(const SignedDigraph& d, std::uint32_t vertex_mask);

int min_nonneg_fvs(const SignedDigraph& d, int vertex_cap = kDefaultVertexCap);
int max_disjoint_nonneg_cycles(const SignedDigraph& d, int vertex_cap = kDefaultVertexCap);

StructuralParams structural_params(const SignedDigraph& d, int vertex_cap = kDefaultVertexCap);

/// d <= host: arcs of d occur in host, and host's +/- signs are respected
/// (a 0 sign in host leaves the sign in d free).
bool is_subgraph(const SignedDigraph& d, const SignedDigraph& host);

// Named families used throughout: loopless cliques and directed cycles.
SignedDigraph positive_clique(int n);
SignedDigraph negative_clique(int n);
SignedDigraph unsigned_clique(int n);
SignedDigraph signed_cycle(const std::vector<Sign>& arc_signs);  // arcs i -> i+1 mod n
SignedDigraph positive_cycle(int n);

}  // namespace netfix
