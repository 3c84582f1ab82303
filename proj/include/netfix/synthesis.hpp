#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netfix/codes.hpp"
#include "netfix/digraph.hpp"
#include "netfix/states.hpp"

namespace netfix {

enum class Provenance {
    synthesized_from_set,
    pair_fixing,
    kn_minus_saturation,
    kn_plus_threestep,
    user,
};

std::string provenance_name(Provenance p);

inline constexpr std::uint64_t kNetworkCap = 1ull << 16;

/// A network f:[s]^n -> [s]^n, either as a full table indexed by encoded
/// input or as a lazy named rule (which permits larger n).
class Network {
public:
    Network() = default;

    static Network from_table(int n, int s, std::vector<State> table, Provenance p);
    static Network from_rule(int n, int s, std::function<State(const State&)> rule, Provenance p);

    /// Format: header `network n=<n> s=<s>`, then s^n lines
    /// `<encoded-input> -> <state-literal>` in encoding order.
    static Network parse(std::string_view text);
    std::string to_text(std::uint64_t cap = kNetworkCap) const;

    int n() const { return n_; }
    int s() const { return s_; }
    Provenance provenance() const { return provenance_; }
    bool table_mode() const { return table_.has_value(); }
    const StateSpace& space() const { return space_; }

    State evaluate(const State& x) const;
    State evaluate_code(std::uint64_t code) const;

private:
    int n_ = 0;
    int s_ = 2;
    Provenance provenance_ = Provenance::user;
    StateSpace space_{0, 2};
    std::optional<std::vector<State>> table_;
    std::function<State(const State&)> rule_;
};

struct FixReport {
    std::vector<State> fixed_points;  // encoding order
    std::uint64_t count = 0;
    std::optional<bool> is_independent_in_guessing_graph;
};

/// True iff every f_i is monotone with respect to <=_i; equivalently the
/// interaction graph of f is a subgraph of d. Pairs are enumerated over
/// restrictions to the in-neighbourhood of i only.
bool is_in_F(const SignedDigraph& d, const Network& f, std::uint64_t cap = kNetworkCap);

/// Signed digraph of essential dependencies: arc (j,i) signed + when f_i is
/// non-decreasing in x_j, - when non-increasing, 0 when neither.
SignedDigraph interaction_graph(const Network& f, std::uint64_t cap = kNetworkCap);

/// The min-over-dominating-codewords network that fixes every state of an
/// independent set Z of the guessing graph.
Network network_from_independent_set(const SignedDigraph& d, int s, const std::vector<State>& z);

/// Two-case network fixing a non-adjacent pair x, y.
Network network_fixing_pair(const SignedDigraph& d, int s, const State& x, const State& y);

FixReport fixed_points(const Network& f, std::uint64_t cap = kNetworkCap);
FixReport fixed_points(const Network& f, const SignedDigraph& d, std::uint64_t cap = kNetworkCap);

State iterate(const Network& f, State x, std::uint64_t k);

struct ConvergenceReport {
    bool converges = false;
    std::uint64_t max_steps = 0;  // max over starting states that reached the target
};

/// True iff every trajectory enters `target` within kmax steps (default
/// kmax = s^n); entering a cycle disjoint from the target short-circuits.
ConvergenceReport converges_to(const Network& f, const std::vector<State>& target,
                               std::optional<std::uint64_t> kmax = std::nullopt,
                               std::uint64_t cap = kNetworkCap);

/// f_i(x) = saturation(w - sum_{j != i} x_j); Fix(f) = B(n,w,s).
Network kn_minus_network(int n, int s, int w);

/// Binary threshold rule on W(x_{-i}) whose fixed points are the codewords of
/// c plus the two constant states, converging within three steps. Requires a
/// constant-weight code with minimum Hamming distance 4, 3 <= w <= n-3 and
/// 2w != n.
Network kn_plus_network(const Code& c, int n, int w);

/// Exact maximum of |Fix(f)| over all networks whose interaction graph fits
/// in d, by enumerating monotone local functions per coordinate.
std::uint64_t brute_force_max_fixed_points(const SignedDigraph& d, int s);

}  // namespace netfix
