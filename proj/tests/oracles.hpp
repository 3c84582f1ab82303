#pragma once

// Independent reference implementations used to validate the optimized
// library routines. Deliberately naive.

#include <optional>
#include <vector>

#include "netfix/digraph.hpp"
#include "netfix/states.hpp"

namespace oracles {

// Minimum length over all simple non-negative cycles, by plain DFS over
// simple paths rooted at the smallest vertex of the cycle.
inline std::optional<int> naive_nonneg_girth(const netfix::SignedDigraph& d) {
    const int n = d.vertex_count();
    std::optional<int> best;
    std::vector<std::vector<std::pair<int, netfix::Sign>>> out(static_cast<std::size_t>(n));
    for (const auto& a : d.arcs()) out[static_cast<std::size_t>(a.from)].push_back({a.to, a.sign});

    std::vector<bool> on_path(static_cast<std::size_t>(n), false);
    auto dfs = [&](auto&& self, int root, int v, int length, int sign) -> void {
        for (const auto& [w, arc_sign] : out[static_cast<std::size_t>(v)]) {
            int s2 = sign * netfix::sign_value(arc_sign);
            if (w == root) {
                if (s2 >= 0 && (!best || length + 1 < *best)) best = length + 1;
                continue;
            }
            if (w < root || on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = true;
            self(self, root, w, length + 1, s2);
            on_path[static_cast<std::size_t>(w)] = false;
        }
    };
    for (int root = 0; root < n; ++root) {
        on_path.assign(static_cast<std::size_t>(n), false);
        on_path[static_cast<std::size_t>(root)] = true;
        dfs(dfs, root, root, 0, 1);
    }
    return best;
}

// Maximum subset of `points` whose pairwise distance is at least d, by plain
// recursion.
inline std::size_t naive_max_code_size(const std::vector<netfix::State>& points, int d,
                                       netfix::DistanceKind kind) {
    std::size_t best = 0;
    std::vector<std::size_t> chosen;
    auto dfs = [&](auto&& self, std::size_t next) -> void {
        best = std::max(best, chosen.size());
        if (chosen.size() + (points.size() - next) <= best) return;
        for (std::size_t i = next; i < points.size(); ++i) {
            bool compatible = true;
            for (std::size_t j : chosen)
                if (netfix::distance(points[i], points[j], kind) < d) {
                    compatible = false;
                    break;
                }
            if (!compatible) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    return best;
}

inline std::vector<netfix::State> all_states(int n, int s) {
    netfix::StateSpace space(n, s);
    std::vector<netfix::State> out;
    for (std::uint64_t c = 0; c < space.size(); ++c) out.push_back(space.decode(c));
    return out;
}

}  // namespace oracles
