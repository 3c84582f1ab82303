#include "netfix/codes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "netfix/bitgraph.hpp"
#include "netfix/digraph.hpp"

namespace netfix {

Code parse_code(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    Code code;
    bool have_header = false;
    std::set<std::vector<int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token)) continue;
        if (!have_header) {
            int n = -1, s = -1;
            if (token != "code" || !(ls >> token) || token.rfind("n=", 0) != 0 ||
                sscanf(token.c_str(), "n=%d", &n) != 1 || !(ls >> token) ||
                token.rfind("s=", 0) != 0 || sscanf(token.c_str(), "s=%d", &s) != 1)
                throw ParseError("expected header `code n=<n> s=<s>`", lineno);
            if (ls >> token) throw ParseError("trailing token `" + token + "`", lineno);
            if (n < 0) throw ParseError("length must be non-negative", lineno);
            if (s < 2) throw ParseError("alphabet size must be at least 2", lineno);
            code.n = n;
            code.s = s;
            have_header = true;
            continue;
        }
        std::string rest;
        std::getline(ls, rest);
        State word;
        try {
            word = parse_state_literal(token + rest, code.s);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), lineno);
        }
        if (word.n() != code.n)
            throw ParseError("codeword length " + std::to_string(word.n()) +
                                 " does not match n=" + std::to_string(code.n),
                             lineno);
        if (!seen.insert(word.x).second) throw ParseError("duplicate codeword", lineno);
        code.words.push_back(std::move(word));
    }
    if (!have_header) throw ParseError("missing `code` header", lineno);
    return code;
}

std::string code_to_text(const Code& code) {
    std::string out = "code n=" + std::to_string(code.n) + " s=" + std::to_string(code.s) + "\n";
    for (const State& w : code.words) out += state_literal(w) + "\n";
    return out;
}

std::optional<int> min_distance(const Code& code, DistanceKind kind) {
    if (code.words.size() <= 1) return std::nullopt;
    int best = -1;
    for (std::size_t a = 0; a < code.words.size(); ++a)
        for (std::size_t b = a + 1; b < code.words.size(); ++b) {
            int dist = distance(code.words[a], code.words[b], kind);
            if (best < 0 || dist < best) best = dist;
        }
    return best;
}

namespace {

Code mis_to_code(int n, int s, const std::vector<State>& states, const MisResult& mis) {
    Code code;
    code.n = n;
    code.s = s;
    for (int v : mis.members) code.words.push_back(states[static_cast<std::size_t>(v)]);
    return code;
}

}  // namespace

Code max_code(int n, int d, int s, DistanceKind kind, std::uint64_t cap) {
    if (d < 1) throw std::invalid_argument("distance must be positive");
    StateSpace space(n, s);
    if (space.size() > cap)
        throw CapExceeded("state space of size " + std::to_string(space.size()) +
                          " exceeds the code search cap " + std::to_string(cap));
    const int count = static_cast<int>(space.size());
    std::vector<State> states;
    states.reserve(static_cast<std::size_t>(count));
    for (int c = 0; c < count; ++c) states.push_back(space.decode(static_cast<std::uint64_t>(c)));
    BitGraph conflicts(count);
    for (int a = 0; a < count; ++a)
        for (int b = a + 1; b < count; ++b)
            if (distance(states[static_cast<std::size_t>(a)], states[static_cast<std::size_t>(b)],
                         kind) < d)
                conflicts.add_edge(a, b);
    return mis_to_code(n, s, states, lexmin_max_independent_set(conflicts));
}

Code max_constant_weight_code(int n, int d, int w, std::uint64_t cap) {
    if (d < 1) throw std::invalid_argument("distance must be positive");
    Code level = weight_level(n, w, 2);
    if (level.words.size() > cap)
        throw CapExceeded("weight level of size " + std::to_string(level.words.size()) +
                          " exceeds the code search cap");
    const int count = static_cast<int>(level.words.size());
    BitGraph conflicts(count);
    for (int a = 0; a < count; ++a)
        for (int b = a + 1; b < count; ++b)
            if (distance(level.words[static_cast<std::size_t>(a)],
                         level.words[static_cast<std::size_t>(b)], DistanceKind::hamming) < d)
                conflicts.add_edge(a, b);
    return mis_to_code(n, 2, level.words, lexmin_max_independent_set(conflicts));
}

Code weight_level(int n, int w, int s) {
    StateSpace space(n, s);
    Code code;
    code.n = n;
    code.s = s;
    for (std::uint64_t c = 0; c < space.size(); ++c) {
        State x = space.decode(c);
        if (weight(x) == w) code.words.push_back(std::move(x));
    }
    return code;
}

Code sperner_antichain(int n, int s) {
    return weight_level(n, n * (s - 1) / 2, s);
}

Code chain_code_k3(int s) {
    if (s < 2) throw std::invalid_argument("alphabet size must be at least 2");
    static const int steps[3][3] = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    Code code;
    code.n = 3;
    code.s = s;
    State c;
    c.s = s;
    c.x = {0, 0, 0};
    int terms = 3 * (s - 1) / 2 + 1;
    for (int k = 0; k < terms; ++k) {
        code.words.push_back(c);
        for (int j = 0; j < 3; ++j) c.x[static_cast<std::size_t>(j)] += steps[k % 3][j];
    }
    return code;
}

MomentVector moments(const State& x) {
    MomentVector m;
    for (int i = 0; i < x.n(); ++i) {
        long long v = x.x[static_cast<std::size_t>(i)];
        long long p = i + 1;
        m.m0 += v;
        m.m1 += p * v;
        m.m2 += p * p * v;
    }
    return m;
}

Code moment_code(int n, int s, const MomentVector& m) {
    StateSpace space(n, s);
    Code code;
    code.n = n;
    code.s = s;
    for (std::uint64_t c = 0; c < space.size(); ++c) {
        State x = space.decode(c);
        if (moments(x) == m) code.words.push_back(std::move(x));
    }
    return code;
}

Code best_moment_code(int n, int s) {
    StateSpace space(n, s);
    std::map<std::tuple<long long, long long, long long>, std::vector<State>> fibers;
    for (std::uint64_t c = 0; c < space.size(); ++c) {
        State x = space.decode(c);
        MomentVector m = moments(x);
        fibers[{m.m0, m.m1, m.m2}].push_back(std::move(x));
    }
    Code best;
    best.n = n;
    best.s = s;
    for (const auto& [m, words] : fibers)
        if (words.size() > best.words.size()) best.words = words;
    return best;
}

DistanceChainReport check_distance_chain(int n, int d) {
    DistanceChainReport r;
    r.n = n;
    r.d = d;
    r.a_h_2d = max_code(n, 2 * d, 2, DistanceKind::hamming).size();
    r.a_h_2d_constant_w = max_constant_weight_code(n, 2 * d, n / 2).size();
    r.a_min = max_code(n, d, 2, DistanceKind::min).size();
    r.a_max = max_code(n, d, 2, DistanceKind::max).size();
    r.a_h_2d_minus_1 = max_code(n, 2 * d - 1, 2, DistanceKind::hamming).size();
    double first = static_cast<double>(r.a_h_2d) / (2.0 * std::sqrt(2.0 * n));
    r.holds = first <= static_cast<double>(r.a_h_2d_constant_w) &&
              r.a_h_2d_constant_w <= r.a_min && r.a_min <= r.a_h_2d &&
              r.a_h_2d <= r.a_max &&
              r.a_max <= static_cast<std::uint64_t>(d) * r.a_h_2d_minus_1;
    return r;
}

}  // namespace netfix
