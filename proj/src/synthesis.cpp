#include "netfix/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "netfix/guessing.hpp"

namespace netfix {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::synthesized_from_set: return "synthesized-from-set";
        case Provenance::pair_fixing: return "pair-fixing";
        case Provenance::kn_minus_saturation: return "kn-minus-saturation";
        case Provenance::kn_plus_threestep: return "kn-plus-threestep";
        case Provenance::user: return "user";
    }
    return "?";
}

Network Network::from_table(int n, int s, std::vector<State> table, Provenance p) {
    Network f;
    f.n_ = n;
    f.s_ = s;
    f.provenance_ = p;
    f.space_ = StateSpace(n, s);
    if (table.size() != f.space_.size())
        throw std::invalid_argument("table has " + std::to_string(table.size()) +
                                    " entries, expected " + std::to_string(f.space_.size()));
    for (const State& out : table)
        if (out.n() != n || out.s != s)
            throw std::invalid_argument("table output outside the state space");
    f.table_ = std::move(table);
    return f;
}

Network Network::from_rule(int n, int s, std::function<State(const State&)> rule, Provenance p) {
    Network f;
    f.n_ = n;
    f.s_ = s;
    f.provenance_ = p;
    f.space_ = StateSpace(n, s);
    f.rule_ = std::move(rule);
    return f;
}

Network Network::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1, s = -1;
    bool have_header = false;
    std::vector<State> table;
    std::optional<StateSpace> space;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token)) continue;
        if (!have_header) {
            if (token != "network" || !(ls >> token) || token.rfind("n=", 0) != 0 ||
                sscanf(token.c_str(), "n=%d", &n) != 1 || !(ls >> token) ||
                token.rfind("s=", 0) != 0 || sscanf(token.c_str(), "s=%d", &s) != 1)
                throw ParseError("expected header `network n=<n> s=<s>`", lineno);
            if (n < 0 || s < 2) throw ParseError("invalid network dimensions", lineno);
            space.emplace(n, s);
            have_header = true;
            continue;
        }
        std::uint64_t input = 0;
        std::string arrow, literal;
        try {
            input = std::stoull(token);
        } catch (const std::exception&) {
            throw ParseError("expected an encoded input, got `" + token + "`", lineno);
        }
        if (!(ls >> arrow) || arrow != "->" || !(ls >> literal))
            throw ParseError("expected `<encoded-input> -> <state-literal>`", lineno);
        if (input != table.size())
            throw ParseError("table rows must appear in encoding order", lineno);
        try {
            State out = parse_state_literal(literal, s);
            if (out.n() != n) throw std::invalid_argument("output length mismatch");
            table.push_back(std::move(out));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (!have_header) throw ParseError("missing `network` header", lineno);
    if (table.size() != space->size())
        throw ParseError("table has " + std::to_string(table.size()) + " rows, expected " +
                             std::to_string(space->size()),
                         lineno);
    return from_table(n, s, std::move(table), Provenance::user);
}

std::string Network::to_text(std::uint64_t cap) const {
    if (space_.size() > cap)
        throw CapExceeded("network table of " + std::to_string(space_.size()) +
                          " rows exceeds cap " + std::to_string(cap));
    std::string out = "network n=" + std::to_string(n_) + " s=" + std::to_string(s_) + "\n";
    for (std::uint64_t c = 0; c < space_.size(); ++c)
        out += std::to_string(c) + " -> " + state_literal(evaluate_code(c)) + "\n";
    return out;
}

State Network::evaluate(const State& x) const {
    if (x.n() != n_ || x.s != s_) throw std::invalid_argument("state outside the network's space");
    if (table_) return (*table_)[space_.encode(x)];
    if (!rule_) throw std::logic_error("network has no evaluation rule");
    State out = rule_(x);
    if (out.n() != n_ || out.s != s_) throw std::logic_error("rule produced an invalid state");
    return out;
}

State Network::evaluate_code(std::uint64_t code) const {
    if (table_) return (*table_)[code];
    return evaluate(space_.decode(code));
}

namespace {

// Distinct in-neighbour vertices of i, ascending, with the arc signs.
std::vector<std::pair<int, Sign>> sorted_in_neighbours(const SignedDigraph& d, int i) {
    auto nb = d.in_neighbours(i);
    std::sort(nb.begin(), nb.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return nb;
}

std::uint64_t restriction_index(const std::vector<std::pair<int, Sign>>& nb, const State& x) {
    std::uint64_t idx = 0;
    for (const auto& [j, sign] : nb) {
        (void)sign;
        idx = idx * static_cast<std::uint64_t>(x.s) +
              static_cast<std::uint64_t>(x.x[static_cast<std::size_t>(j)]);
    }
    return idx;
}

// Decode a restriction index into per-neighbour coordinate values.
std::vector<int> restriction_values(std::uint64_t idx, std::size_t len, int s) {
    std::vector<int> vals(len, 0);
    for (std::size_t t = len; t-- > 0;) {
        vals[t] = static_cast<int>(idx % static_cast<std::uint64_t>(s));
        idx /= static_cast<std::uint64_t>(s);
    }
    return vals;
}

bool restriction_leq(const std::vector<std::pair<int, Sign>>& nb, const std::vector<int>& a,
                     const std::vector<int>& b) {
    for (std::size_t t = 0; t < nb.size(); ++t) {
        switch (nb[t].second) {
            case Sign::zero:
                if (a[t] != b[t]) return false;
                break;
            case Sign::positive:
                if (a[t] > b[t]) return false;
                break;
            case Sign::negative:
                if (a[t] < b[t]) return false;
                break;
        }
    }
    return true;
}

std::vector<int> local_function_values(const Network& f, int i,
                                       const std::vector<std::pair<int, Sign>>& nb,
                                       bool& well_defined) {
    const StateSpace& space = f.space();
    std::uint64_t classes = 1;
    for (std::size_t t = 0; t < nb.size(); ++t) classes *= static_cast<std::uint64_t>(f.s());
    std::vector<int> val(classes, -1);
    well_defined = true;
    for (std::uint64_t c = 0; c < space.size(); ++c) {
        State x = space.decode(c);
        int v = f.evaluate_code(c).x[static_cast<std::size_t>(i)];
        std::uint64_t idx = restriction_index(nb, x);
        if (val[idx] == -1) {
            val[idx] = v;
        } else if (val[idx] != v) {
            well_defined = false;
            return val;
        }
    }
    return val;
}

}  // namespace

bool is_in_F(const SignedDigraph& d, const Network& f, std::uint64_t cap) {
    if (d.vertex_count() != f.n()) throw std::invalid_argument("vertex count mismatch");
    if (f.space().size() > cap)
        throw CapExceeded("state space of size " + std::to_string(f.space().size()) +
                          " exceeds cap " + std::to_string(cap));
    const int s = f.s();
    for (int i = 0; i < f.n(); ++i) {
        auto nb = sorted_in_neighbours(d, i);
        bool well_defined = false;
        std::vector<int> val = local_function_values(f, i, nb, well_defined);
        if (!well_defined) return false;  // f_i depends outside N(i)
        const std::uint64_t classes = val.size();
        std::vector<std::vector<int>> coords(classes);
        for (std::uint64_t r = 0; r < classes; ++r)
            coords[r] = restriction_values(r, nb.size(), s);
        for (std::uint64_t a = 0; a < classes; ++a)
            for (std::uint64_t b = 0; b < classes; ++b)
                if (restriction_leq(nb, coords[a], coords[b]) && val[a] > val[b]) return false;
    }
    return true;
}

SignedDigraph interaction_graph(const Network& f, std::uint64_t cap) {
    const StateSpace& space = f.space();
    if (space.size() > cap)
        throw CapExceeded("state space of size " + std::to_string(space.size()) +
                          " exceeds cap " + std::to_string(cap));
    const int n = f.n();
    const int s = f.s();
    std::vector<State> table;
    table.reserve(space.size());
    for (std::uint64_t c = 0; c < space.size(); ++c) table.push_back(f.evaluate_code(c));

    SignedDigraph g(n);
    std::uint64_t stride = 1;
    std::vector<std::uint64_t> strides(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
        strides[static_cast<std::size_t>(j)] = stride;
        stride *= static_cast<std::uint64_t>(s);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool increases = false, decreases = false;
            for (std::uint64_t c = 0; c < space.size(); ++c) {
                State x = space.decode(c);
                if (x.x[static_cast<std::size_t>(j)] == s - 1) continue;
                int v1 = table[c].x[static_cast<std::size_t>(i)];
                int v2 = table[c + strides[static_cast<std::size_t>(j)]]
                             .x[static_cast<std::size_t>(i)];
                if (v2 > v1) increases = true;
                if (v2 < v1) decreases = true;
            }
            if (!increases && !decreases) continue;
            Sign sign = increases && decreases ? Sign::zero
                        : increases           ? Sign::positive
                                              : Sign::negative;
            g.add_arc(j, i, sign);
        }
    return g;
}

Network network_from_independent_set(const SignedDigraph& d, int s, const std::vector<State>& z) {
    if (z.empty()) throw std::invalid_argument("the fixed set must be non-empty");
    const int n = d.vertex_count();
    for (const State& w : z)
        if (w.n() != n || w.s != s) throw std::invalid_argument("state outside the state space");
    for (std::size_t a = 0; a < z.size(); ++a)
        for (std::size_t b = a + 1; b < z.size(); ++b)
            if (is_edge(d, s, z[a], z[b]))
                throw std::invalid_argument("states " + state_literal(z[a]) + " and " +
                                            state_literal(z[b]) +
                                            " are adjacent in the guessing graph");

    std::vector<int> ceiling(static_cast<std::size_t>(n), 0);
    for (const State& w : z)
        for (int i = 0; i < n; ++i)
            ceiling[static_cast<std::size_t>(i)] =
                std::max(ceiling[static_cast<std::size_t>(i)], w.x[static_cast<std::size_t>(i)]);

    StateSpace space(n, s);
    std::vector<State> table;
    table.reserve(space.size());
    for (std::uint64_t c = 0; c < space.size(); ++c) {
        State x = space.decode(c);
        State out = x;
        for (int i = 0; i < n; ++i) {
            int v = ceiling[static_cast<std::size_t>(i)];
            for (const State& w : z)
                if (leq_i(d, i, x, w)) v = std::min(v, w.x[static_cast<std::size_t>(i)]);
            out.x[static_cast<std::size_t>(i)] = v;
        }
        table.push_back(std::move(out));
    }
    Network f = Network::from_table(n, s, std::move(table), Provenance::synthesized_from_set);
    if (!is_in_F(d, f)) throw std::logic_error("synthesized network fell outside F(D,s)");
    for (const State& w : z)
        if (!(f.evaluate(w) == w))
            throw std::logic_error("synthesized network does not fix " + state_literal(w));
    return f;
}

Network network_fixing_pair(const SignedDigraph& d, int s, const State& x, const State& y) {
    const int n = d.vertex_count();
    if (x.n() != n || y.n() != n || x.s != s || y.s != s)
        throw std::invalid_argument("state outside the state space");
    StateSpace space(n, s);
    if (x == y) {
        std::vector<State> table(space.size(), x);
        return Network::from_table(n, s, std::move(table), Provenance::pair_fixing);
    }
    if (is_edge(d, s, x, y))
        throw std::invalid_argument("states " + state_literal(x) + " and " + state_literal(y) +
                                    " are adjacent in the guessing graph; no network fixes both");
    std::vector<bool> below(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        below[static_cast<std::size_t>(i)] =
            x.x[static_cast<std::size_t>(i)] < y.x[static_cast<std::size_t>(i)];
    std::vector<State> table;
    table.reserve(space.size());
    for (std::uint64_t c = 0; c < space.size(); ++c) {
        State in = space.decode(c);
        State out = in;
        for (int i = 0; i < n; ++i) {
            int xi = x.x[static_cast<std::size_t>(i)];
            int yi = y.x[static_cast<std::size_t>(i)];
            out.x[static_cast<std::size_t>(i)] = below[static_cast<std::size_t>(i)]
                                                     ? (leq_i(d, i, in, x) ? xi : yi)
                                                     : (leq_i(d, i, in, y) ? yi : xi);
        }
        table.push_back(std::move(out));
    }
    return Network::from_table(n, s, std::move(table), Provenance::pair_fixing);
}

FixReport fixed_points(const Network& f, std::uint64_t cap) {
    const StateSpace& space = f.space();
    if (space.size() > cap)
        throw CapExceeded("state space of size " + std::to_string(space.size()) +
                          " exceeds cap " + std::to_string(cap));
    FixReport report;
    for (std::uint64_t c = 0; c < space.size(); ++c) {
        State x = space.decode(c);
        if (f.evaluate_code(c) == x) report.fixed_points.push_back(std::move(x));
    }
    report.count = report.fixed_points.size();
    return report;
}

FixReport fixed_points(const Network& f, const SignedDigraph& d, std::uint64_t cap) {
    FixReport report = fixed_points(f, cap);
    bool independent = true;
    for (std::size_t a = 0; a < report.fixed_points.size() && independent; ++a)
        for (std::size_t b = a + 1; b < report.fixed_points.size(); ++b)
            if (is_edge(d, f.s(), report.fixed_points[a], report.fixed_points[b])) {
                independent = false;
                break;
            }
    report.is_independent_in_guessing_graph = independent;
    return report;
}

State iterate(const Network& f, State x, std::uint64_t k) {
    for (std::uint64_t t = 0; t < k; ++t) x = f.evaluate(x);
    return x;
}

ConvergenceReport converges_to(const Network& f, const std::vector<State>& target,
                               std::optional<std::uint64_t> kmax, std::uint64_t cap) {
    const StateSpace& space = f.space();
    if (space.size() > cap)
        throw CapExceeded("state space of size " + std::to_string(space.size()) +
                          " exceeds cap " + std::to_string(cap));
    std::unordered_set<std::uint64_t> goal;
    for (const State& t : target) goal.insert(space.encode(t));
    const std::uint64_t limit = kmax.value_or(space.size());

    ConvergenceReport report;
    report.converges = true;
    for (std::uint64_t start = 0; start < space.size(); ++start) {
        std::uint64_t c = start;
        std::unordered_set<std::uint64_t> visited;
        bool reached = false;
        for (std::uint64_t k = 0; k <= limit; ++k) {
            if (goal.count(c)) {
                report.max_steps = std::max(report.max_steps, k);
                reached = true;
                break;
            }
            if (!visited.insert(c).second) break;  // cycle disjoint from the target
            c = space.encode(f.evaluate_code(c));
        }
        if (!reached) {
            report.converges = false;
            return report;
        }
    }
    return report;
}

Network kn_minus_network(int n, int s, int w) {
    if (w < 0 || w > n * (s - 1))
        throw std::invalid_argument("target weight " + std::to_string(w) + " outside [0, " +
                                    std::to_string(n * (s - 1)) + "]");
    auto rule = [n, s, w](const State& x) {
        State out = x;
        int total = weight(x);
        for (int i = 0; i < n; ++i) {
            int a = w - (total - x.x[static_cast<std::size_t>(i)]);
            out.x[static_cast<std::size_t>(i)] = std::clamp(a, 0, s - 1);
        }
        return out;
    };
    return Network::from_rule(n, s, rule, Provenance::kn_minus_saturation);
}

Network kn_plus_network(const Code& c, int n, int w) {
    if (c.s != 2) throw std::invalid_argument("the code must be binary");
    if (c.n != n) throw std::invalid_argument("code length does not match n");
    if (w < 3) throw std::invalid_argument("weight must be at least 3");
    if (w > n - 3) throw std::invalid_argument("weight must be at most n-3");
    if (2 * w == n) throw std::invalid_argument("weight must differ from n/2");
    for (const State& word : c.words)
        if (weight(word) != w)
            throw std::invalid_argument("codeword " + state_literal(word) +
                                        " does not have weight " + std::to_string(w));
    if (auto d = min_distance(c, DistanceKind::hamming); d && *d < 4)
        throw std::invalid_argument("minimum Hamming distance " + std::to_string(*d) +
                                    " is below 4");

    StateSpace space(n, 2);
    auto member = std::make_shared<std::unordered_set<std::uint64_t>>();
    for (const State& word : c.words) member->insert(space.encode(word));
    auto rule = [n, w, space, member](const State& x) {
        State out = x;
        std::uint64_t code = space.encode(x);
        int total = weight(x);
        for (int i = 0; i < n; ++i) {
            std::uint64_t bit = 1;
            for (int t = n - 1 - i; t > 0; --t) bit *= 2;
            int xi = x.x[static_cast<std::size_t>(i)];
            std::uint64_t with_one = code | bit;
            std::uint64_t with_zero = with_one - bit;
            int rest = total - xi;
            bool one = member->count(with_one) || rest >= w + 1 ||
                       (rest == w && !member->count(with_zero));
            out.x[static_cast<std::size_t>(i)] = one ? 1 : 0;
        }
        return out;
    };
    return Network::from_rule(n, 2, rule, Provenance::kn_plus_threestep);
}

std::uint64_t brute_force_max_fixed_points(const SignedDigraph& d, int s) {
    const int n = d.vertex_count();
    StateSpace space(n, s);
    if (space.size() > 64)
        throw CapExceeded("brute force supports at most 64 states, got " +
                          std::to_string(space.size()));

    std::vector<std::vector<std::uint64_t>> masks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto nb = sorted_in_neighbours(d, i);
        std::uint64_t classes = 1;
        for (std::size_t t = 0; t < nb.size(); ++t) {
            if (classes > 32)
                throw CapExceeded("too many local-function inputs at vertex " + std::to_string(i));
            classes *= static_cast<std::uint64_t>(s);
        }
        double candidates = std::pow(static_cast<double>(s), static_cast<double>(classes));
        if (candidates > 4e6)
            throw CapExceeded("too many local functions at vertex " + std::to_string(i));

        std::vector<std::vector<int>> coords(classes);
        for (std::uint64_t r = 0; r < classes; ++r) coords[r] = restriction_values(r, nb.size(), s);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> comparable;
        for (std::uint64_t a = 0; a < classes; ++a)
            for (std::uint64_t b = 0; b < classes; ++b)
                if (a != b && restriction_leq(nb, coords[a], coords[b])) comparable.push_back({a, b});

        std::vector<std::uint64_t> class_of(space.size());
        std::vector<int> coord_of(space.size());
        for (std::uint64_t c = 0; c < space.size(); ++c) {
            State x = space.decode(c);
            class_of[c] = restriction_index(nb, x);
            coord_of[c] = x.x[static_cast<std::size_t>(i)];
        }

        std::unordered_set<std::uint64_t> seen;
        std::vector<int> g(classes, 0);
        while (true) {
            bool monotone = true;
            for (const auto& [a, b] : comparable)
                if (g[a] > g[b]) {
                    monotone = false;
                    break;
                }
            if (monotone) {
                std::uint64_t mask = 0;
                for (std::uint64_t c = 0; c < space.size(); ++c)
                    if (g[class_of[c]] == coord_of[c]) mask |= 1ull << c;
                if (seen.insert(mask).second) masks[static_cast<std::size_t>(i)].push_back(mask);
            }
            std::size_t t = classes;
            while (t > 0 && g[t - 1] == s - 1) g[--t] = 0;
            if (t == 0) break;
            ++g[t - 1];
        }
    }

    std::uint64_t full = space.size() == 64 ? ~0ull : (1ull << space.size()) - 1;
    std::uint64_t best = 0;
    auto dfs = [&](auto&& self, int level, std::uint64_t mask) -> void {
        if (static_cast<std::uint64_t>(std::popcount(mask)) <= best) return;
        if (level == n) {
            best = static_cast<std::uint64_t>(std::popcount(mask));
            return;
        }
        for (std::uint64_t m : masks[static_cast<std::size_t>(level)]) self(self, level + 1, mask & m);
    };
    dfs(dfs, 0, full);
    return best;
}

}  // namespace netfix
