#include "netfix/digraph.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace netfix {

char sign_char(Sign s) {
    switch (s) {
        case Sign::negative: return '-';
        case Sign::zero: return '0';
        case Sign::positive: return '+';
    }
    return '?';
}

Sign sign_from_char(char c) {
    switch (c) {
        case '-': return Sign::negative;
        case '0': return Sign::zero;
        case '+': return Sign::positive;
    }
    throw std::invalid_argument(std::string("invalid sign character '") + c + "'");
}

ParseError::ParseError(const std::string& msg, int line)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

SignedDigraph::SignedDigraph(int n) : n_(n), in_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

void SignedDigraph::add_arc(int from, int to, Sign sign) {
    if (from < 0 || from >= n_ || to < 0 || to >= n_)
        throw std::out_of_range("arc endpoint out of range: (" + std::to_string(from) + "," +
                                std::to_string(to) + ") with n=" + std::to_string(n_));
    if (has_arc(from, to))
        throw std::invalid_argument("duplicate arc (" + std::to_string(from) + "," +
                                    std::to_string(to) + ")");
    arcs_.push_back(Arc{from, to, sign});
    in_[to].emplace_back(from, sign);
}

bool SignedDigraph::has_arc(int from, int to) const {
    return arc_sign(from, to).has_value();
}

std::optional<Sign> SignedDigraph::arc_sign(int from, int to) const {
    if (to < 0 || to >= n_) return std::nullopt;
    for (const auto& [j, s] : in_[to])
        if (j == from) return s;
    return std::nullopt;
}

bool SignedDigraph::has_loop() const {
    return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.from == a.to; });
}

SignedDigraph SignedDigraph::parse(std::string_view text) {
    struct ArcLine {
        int from, to, line;
        Sign sign;
    };
    std::optional<int> n;
    int n_line = 0;
    std::vector<ArcLine> arc_lines;

    std::istringstream stream{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(stream, raw)) {
        ++lineno;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        std::istringstream line(raw);
        std::string keyword;
        if (!(line >> keyword)) continue;  // blank or comment-only line
        if (keyword == "vertices") {
            int value;
            if (!(line >> value) || value < 0)
                throw ParseError("expected `vertices <n>` with n >= 0", lineno);
            if (n) throw ParseError("repeated `vertices` line (first on line " +
                                    std::to_string(n_line) + ")", lineno);
            n = value;
            n_line = lineno;
        } else if (keyword == "arc") {
            int u, v;
            std::string sign_token;
            if (!(line >> u >> v >> sign_token) || sign_token.size() != 1)
                throw ParseError("expected `arc <u> <v> <+|-|0>`", lineno);
            Sign s;
            try {
                s = sign_from_char(sign_token[0]);
            } catch (const std::invalid_argument&) {
                throw ParseError("invalid arc sign `" + sign_token + "`", lineno);
            }
            arc_lines.push_back(ArcLine{u, v, lineno, s});
        } else {
            throw ParseError("unknown keyword `" + keyword + "`", lineno);
        }
        std::string trailing;
        if (line >> trailing) throw ParseError("trailing tokens `" + trailing + "`", lineno);
    }
    if (!n) throw ParseError("missing `vertices <n>` line", lineno);

    SignedDigraph d(*n);
    for (const auto& a : arc_lines) {
        try {
            d.add_arc(a.from, a.to, a.sign);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), a.line);
        }
    }
    return d;
}

std::string SignedDigraph::to_text() const {
    std::ostringstream out;
    out << "vertices " << n_ << "\n";
    for (const auto& a : arcs_)
        out << "arc " << a.from << " " << a.to << " " << sign_char(a.sign) << "\n";
    return out.str();
}

DegreeStats degree_stats(const SignedDigraph& d) {
    const int n = d.vertex_count();
    DegreeStats stats;
    stats.vertex.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& v = stats.vertex[static_cast<std::size_t>(i)];
        for (const auto& [j, s] : d.in_neighbours(i)) {
            (void)j;
            ++v.d;
            switch (s) {
                case Sign::positive: ++v.d_plus; break;
                case Sign::negative: ++v.d_minus; break;
                case Sign::zero: ++v.d_zero; break;
            }
        }
    }
    if (n == 0) return stats;
    stats.delta = INT_MAX;
    stats.delta_zero = INT_MAX;
    stats.delta_pm = INT_MAX;
    long total = 0;
    for (const auto& v : stats.vertex) {
        stats.delta = std::min(stats.delta, v.d);
        stats.Delta = std::max(stats.Delta, v.d);
        stats.delta_zero = std::min(stats.delta_zero, v.d_zero);
        stats.delta_pm = std::min(stats.delta_pm, v.d_plus + v.d_minus);
        total += v.d;
    }
    stats.average = static_cast<double>(total) / n;
    return stats;
}

Sign cycle_sign(const SignedDigraph& d, const std::vector<int>& cycle) {
    if (cycle.empty()) throw std::invalid_argument("empty vertex sequence is not a cycle");
    std::vector<bool> seen(static_cast<std::size_t>(d.vertex_count()), false);
    for (int v : cycle) {
        if (v < 0 || v >= d.vertex_count()) throw std::invalid_argument("cycle vertex out of range");
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("repeated vertex in cycle");
        seen[static_cast<std::size_t>(v)] = true;
    }
    Sign product = Sign::positive;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        int u = cycle[k];
        int v = cycle[(k + 1) % cycle.size()];
        auto s = d.arc_sign(u, v);
        if (!s)
            throw std::invalid_argument("missing arc (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") in cycle");
        product = sign_product(product, *s);
    }
    return product;
}

namespace {

bool in_mask(std::uint32_t mask, int v) { return (mask >> v) & 1u; }

// Shortest directed path from -> target inside `mask`, any arc signs.
// Returns the path vertices starting at `from` and excluding `target`.
// BFS runs backwards from target since adjacency is stored by in-neighbours.
std::optional<std::vector<int>> shortest_path(const SignedDigraph& d, std::uint32_t mask,
                                              int from, int target) {
    if (from == target) return std::vector<int>{};
    const int n = d.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    parent[static_cast<std::size_t>(target)] = -1;
    std::deque<int> q{target};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (const auto& [j, s] : d.in_neighbours(v)) {
            (void)s;
            if (!in_mask(mask, j) || j == v) continue;
            if (parent[static_cast<std::size_t>(j)] != -2) continue;
            parent[static_cast<std::size_t>(j)] = v;
            if (j == from) {
                std::vector<int> path;
                for (int w = from; w != target; w = parent[static_cast<std::size_t>(w)])
                    path.push_back(w);
                return path;
            }
            q.push_back(j);
        }
    }
    return std::nullopt;
}

struct CycleSearch {
    const SignedDigraph& d;
    std::uint32_t mask;
    // out-adjacency restricted to non-zero signs, built once
    std::vector<std::vector<std::pair<int, Sign>>> out_pm;
    int best_len = INT_MAX;
    std::vector<int> best_cycle;
    std::vector<int> path;
    std::uint32_t on_path = 0;
    int root = 0;
    int neg_parity = 0;

    explicit CycleSearch(const SignedDigraph& dg, std::uint32_t m) : d(dg), mask(m) {
        out_pm.resize(static_cast<std::size_t>(d.vertex_count()));
        for (const auto& a : d.arcs())
            if (a.sign != Sign::zero && in_mask(mask, a.from) && in_mask(mask, a.to))
                out_pm[static_cast<std::size_t>(a.from)].emplace_back(a.to, a.sign);
    }

    // Closed-walk parity reachability from root: a non-negative unate cycle of
    // length L with minimal vertex root implies an even-parity closed walk of
    // length <= L on vertices >= root, so this is a sound pruning bound.
    std::optional<int> even_walk_bound() {
        const int n = d.vertex_count();
        std::vector<int> dist(static_cast<std::size_t>(2 * n), INT_MAX);
        std::deque<int> q;
        dist[static_cast<std::size_t>(2 * root)] = 0;
        q.push_back(2 * root);
        int found = INT_MAX;
        while (!q.empty()) {
            int node = q.front();
            q.pop_front();
            int v = node / 2, parity = node % 2;
            int dv = dist[static_cast<std::size_t>(node)];
            if (dv >= found) continue;
            for (const auto& [w, s] : out_pm[static_cast<std::size_t>(v)]) {
                if (w < root) continue;
                int p2 = parity ^ (s == Sign::negative ? 1 : 0);
                if (w == root && p2 == 0) found = std::min(found, dv + 1);
                int idx = 2 * w + p2;
                if (dist[static_cast<std::size_t>(idx)] > dv + 1) {
                    dist[static_cast<std::size_t>(idx)] = dv + 1;
                    q.push_back(idx);
                }
            }
        }
        if (found == INT_MAX) return std::nullopt;
        return found;
    }

    void dfs(int v) {
        for (const auto& [w, s] : out_pm[static_cast<std::size_t>(v)]) {
            if (w < root) continue;
            int parity_step = (s == Sign::negative) ? 1 : 0;
            if (w == root) {
                if (((neg_parity + parity_step) & 1) == 0) {
                    int len = static_cast<int>(path.size());
                    if (len < best_len) {
                        best_len = len;
                        best_cycle = path;
                    }
                }
                continue;
            }
            if (on_path & (1u << w)) continue;
            if (static_cast<int>(path.size()) + 2 > best_len) continue;
            path.push_back(w);
            on_path |= 1u << w;
            neg_parity ^= parity_step;
            dfs(w);
            neg_parity ^= parity_step;
            on_path &= ~(1u << w);
            path.pop_back();
        }
    }
};

}  // namespace

std::optional<std::vector<int>> shortest_nonneg_cycle(const SignedDigraph& d,
                                                      std::uint32_t vertex_mask) {
    const int n = d.vertex_count();
    if (n > 31) throw CapExceeded("cycle search limited to 31 vertices");
    int best_len = INT_MAX;
    std::vector<int> best;

    // Length-1 cycles: loops of sign >= 0.
    for (const auto& a : d.arcs())
        if (a.from == a.to && a.sign != Sign::negative && in_mask(vertex_mask, a.from))
            return std::vector<int>{a.from};

    // Any cycle through a 0-signed arc is non-negative: close the arc with a
    // shortest path.
    for (const auto& a : d.arcs()) {
        if (a.sign != Sign::zero || a.from == a.to) continue;
        if (!in_mask(vertex_mask, a.from) || !in_mask(vertex_mask, a.to)) continue;
        auto path = shortest_path(d, vertex_mask, a.to, a.from);
        if (!path) continue;
        int len = static_cast<int>(path->size()) + 1;
        if (len < best_len) {
            best_len = len;
            best.clear();
            best.push_back(a.from);
            best.insert(best.end(), path->begin(), path->end());
        }
    }

    // Unate cycles with an even number of negative arcs, exact DFS enumeration
    // pruned by the current best and the parity-walk bound.
    CycleSearch search(d, vertex_mask);
    search.best_len = best_len;
    search.best_cycle = best;
    for (int r = 0; r < n; ++r) {
        if (!in_mask(vertex_mask, r)) continue;
        search.root = r;
        auto lb = search.even_walk_bound();
        if (!lb || *lb >= search.best_len) continue;
        search.path = {r};
        search.on_path = 1u << r;
        search.neg_parity = 0;
        search.dfs(r);
        search.path.clear();
        search.on_path = 0;
    }
    if (search.best_len == INT_MAX) return std::nullopt;
    return search.best_cycle;
}

std::optional<int> nonneg_girth(const SignedDigraph& d) {
    std::uint32_t all = (d.vertex_count() >= 31) ? 0x7fffffffu
                                                 : ((1u << d.vertex_count()) - 1u);
    auto cyc = shortest_nonneg_cycle(d, all);
    if (!cyc) return std::nullopt;
    return static_cast<int>(cyc->size());
}

bool has_nonneg_cycle(const SignedDigraph& d, std::uint32_t vertex_mask) {
    return shortest_nonneg_cycle(d, vertex_mask).has_value();
}

namespace {

void fvs_search(const SignedDigraph& d, std::uint32_t mask, int removed, int& best) {
    if (removed >= best) return;
    auto cyc = shortest_nonneg_cycle(d, mask);
    if (!cyc) {
        best = removed;
        return;
    }
    for (int v : *cyc) fvs_search(d, mask & ~(1u << v), removed + 1, best);
}

struct PackingSearch {
    const SignedDigraph& d;
    int gamma = 1;
    std::unordered_map<std::uint32_t, int> memo;

    int solve(std::uint32_t mask) {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        auto cyc = shortest_nonneg_cycle(d, mask);
        if (!cyc) return memo[mask] = 0;
        // Branch on the lowest vertex of the found cycle: it either joins some
        // packed cycle or is excluded.
        int v = *std::min_element(cyc->begin(), cyc->end());
        int best = solve(mask & ~(1u << v));
        std::vector<std::uint32_t> through_v;
        collect_cycles_through(mask, v, through_v);
        for (std::uint32_t cmask : through_v)
            best = std::max(best, 1 + solve(mask & ~cmask));
        return memo[mask] = best;
    }

    // All non-negative simple cycles within `mask` whose minimal vertex is v,
    // as vertex bitmasks (deduplicated).
    void collect_cycles_through(std::uint32_t mask, int v, std::vector<std::uint32_t>& out) {
        std::vector<std::uint32_t> found;
        // zero-arc cycles through v are handled by sign tracking below with
        // sign value carried as {+1,-1,0}.
        std::vector<int> path{v};
        std::uint32_t on_path = 1u << v;
        dfs_cycles(mask, v, v, 1, on_path, path, found);
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        out = std::move(found);
    }

    void dfs_cycles(std::uint32_t mask, int root, int v, int sign, std::uint32_t on_path,
                    std::vector<int>& path, std::vector<std::uint32_t>& found) {
        for (const auto& a : d.arcs()) {
            if (a.from != v) continue;
            int w = a.to;
            if (!in_mask(mask, w) || w < root) continue;
            int s2 = sign * sign_value(a.sign);
            if (w == root) {
                if (s2 >= 0) found.push_back(on_path);
                continue;
            }
            if (on_path & (1u << w)) continue;
            path.push_back(w);
            dfs_cycles(mask, root, w, s2, on_path | (1u << w), path, found);
            path.pop_back();
        }
    }
};

}  // namespace

int min_nonneg_fvs(const SignedDigraph& d, int vertex_cap) {
    const int n = d.vertex_count();
    if (n > vertex_cap)
        throw CapExceeded("instance too large for exact feedback search (n=" + std::to_string(n) +
                          ", cap=" + std::to_string(vertex_cap) + ")");
    std::uint32_t all = (n == 0) ? 0u : ((1u << n) - 1u);
    int best = n;
    fvs_search(d, all, 0, best);
    return best;
}

int max_disjoint_nonneg_cycles(const SignedDigraph& d, int vertex_cap) {
    const int n = d.vertex_count();
    if (n > vertex_cap)
        throw CapExceeded("instance too large for exact cycle packing (n=" + std::to_string(n) +
                          ", cap=" + std::to_string(vertex_cap) + ")");
    std::uint32_t all = (n == 0) ? 0u : ((1u << n) - 1u);
    PackingSearch search{d, {}};
    return search.solve(all);
}

StructuralParams structural_params(const SignedDigraph& d, int vertex_cap) {
    StructuralParams p;
    p.gamma_plus = nonneg_girth(d);
    p.k_plus = min_nonneg_fvs(d, vertex_cap);
    p.c_plus = max_disjoint_nonneg_cycles(d, vertex_cap);
    return p;
}

bool is_subgraph(const SignedDigraph& d, const SignedDigraph& host) {
    if (d.vertex_count() != host.vertex_count())
        throw std::invalid_argument("subgraph test requires equal vertex counts");
    for (const auto& a : d.arcs()) {
        auto host_sign = host.arc_sign(a.from, a.to);
        if (!host_sign) return false;
        if (*host_sign == Sign::positive && a.sign != Sign::positive) return false;
        if (*host_sign == Sign::negative && a.sign != Sign::negative) return false;
    }
    return true;
}

namespace {

SignedDigraph clique(int n, Sign sign) {
    SignedDigraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) d.add_arc(i, j, sign);
    return d;
}

}  // namespace

SignedDigraph positive_clique(int n) { return clique(n, Sign::positive); }
SignedDigraph negative_clique(int n) { return clique(n, Sign::negative); }
SignedDigraph unsigned_clique(int n) { return clique(n, Sign::zero); }

SignedDigraph signed_cycle(const std::vector<Sign>& arc_signs) {
    const int n = static_cast<int>(arc_signs.size());
    SignedDigraph d(n);
    for (int i = 0; i < n; ++i)
        d.add_arc(i, (i + 1) % n, arc_signs[static_cast<std::size_t>(i)]);
    return d;
}

SignedDigraph positive_cycle(int n) {
    return signed_cycle(std::vector<Sign>(static_cast<std::size_t>(n), Sign::positive));
}

}  // namespace netfix
