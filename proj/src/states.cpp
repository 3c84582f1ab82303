#include "netfix/states.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace netfix {

namespace {

void require_compatible(const State& x, const State& y) {
    if (x.n() != y.n())
        throw std::invalid_argument("state length mismatch: " + std::to_string(x.n()) + " vs " +
                                    std::to_string(y.n()));
    if (x.s != y.s)
        throw std::invalid_argument("alphabet mismatch: s=" + std::to_string(x.s) + " vs s=" +
                                    std::to_string(y.s));
}

void require_binary(const State& x) {
    if (x.s != 2) throw std::invalid_argument("frustration is defined for s=2 only");
}

}  // namespace

DistanceKind distance_kind_from_name(std::string_view name) {
    if (name == "hamming") return DistanceKind::hamming;
    if (name == "max") return DistanceKind::max;
    if (name == "min") return DistanceKind::min;
    throw std::invalid_argument("unknown distance kind `" + std::string(name) + "`");
}

std::string distance_kind_name(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::hamming: return "hamming";
        case DistanceKind::max: return "max";
        case DistanceKind::min: return "min";
    }
    return "?";
}

StateSpace::StateSpace(int n, int s) : n_(n), s_(s) {
    if (n < 0) throw std::invalid_argument("state length must be non-negative");
    if (s < 2) throw std::invalid_argument("alphabet size must be at least 2");
    size_ = 1;
    for (int i = 0; i < n; ++i) {
        if (size_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(s))
            throw std::overflow_error("state space size overflows 64 bits");
        size_ *= static_cast<std::uint64_t>(s);
    }
}

std::uint64_t StateSpace::encode(const State& state) const {
    if (state.n() != n_ || state.s != s_)
        throw std::invalid_argument("state does not belong to this space");
    std::uint64_t code = 0;
    for (int v : state.x) {
        if (v < 0 || v >= s_) throw std::invalid_argument("coordinate out of alphabet range");
        code = code * static_cast<std::uint64_t>(s_) + static_cast<std::uint64_t>(v);
    }
    return code;
}

State StateSpace::decode(std::uint64_t code) const {
    if (code >= size_) throw std::out_of_range("state code out of range");
    State state;
    state.s = s_;
    state.x.assign(static_cast<std::size_t>(n_), 0);
    for (int i = n_ - 1; i >= 0; --i) {
        state.x[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(s_));
        code /= static_cast<std::uint64_t>(s_);
    }
    return state;
}

int below_count(const State& x, const State& y) {
    require_compatible(x, y);
    int count = 0;
    for (int i = 0; i < x.n(); ++i)
        if (x.x[static_cast<std::size_t>(i)] < y.x[static_cast<std::size_t>(i)]) ++count;
    return count;
}

int weight(const State& x) {
    int total = 0;
    for (int v : x.x) total += v;
    return total;
}

int distance(const State& x, const State& y, DistanceKind kind) {
    int below = below_count(x, y);
    int above = below_count(y, x);
    switch (kind) {
        case DistanceKind::hamming: return below + above;
        case DistanceKind::max: return std::max(below, above);
        case DistanceKind::min: return std::min(below, above);
    }
    return 0;
}

bool leq_i(const SignedDigraph& d, int i, const State& x, const State& y) {
    require_compatible(x, y);
    if (x.n() != d.vertex_count())
        throw std::invalid_argument("state length does not match digraph");
    for (const auto& [j, sign] : d.in_neighbours(i)) {
        int xj = x.x[static_cast<std::size_t>(j)];
        int yj = y.x[static_cast<std::size_t>(j)];
        switch (sign) {
            case Sign::zero:
                if (xj != yj) return false;
                break;
            case Sign::positive:
                if (xj > yj) return false;
                break;
            case Sign::negative:
                if (xj < yj) return false;
                break;
        }
    }
    return true;
}

bool is_frustrated(const SignedDigraph& d, int j, int i, const State& x) {
    require_binary(x);
    auto sign = d.arc_sign(j, i);
    if (!sign)
        throw std::invalid_argument("arc (" + std::to_string(j) + "," + std::to_string(i) +
                                    ") not in digraph");
    int xj = x.x[static_cast<std::size_t>(j)];
    int xi = x.x[static_cast<std::size_t>(i)];
    switch (*sign) {
        case Sign::positive: return xj != xi;
        case Sign::negative: return xj == xi;
        case Sign::zero: return false;
    }
    return false;
}

std::vector<int> frustrated_boundary(const SignedDigraph& d, const std::vector<int>& vertices,
                                     const State& x) {
    require_binary(x);
    std::vector<bool> in_set(static_cast<std::size_t>(d.vertex_count()), false);
    for (int v : vertices) in_set[static_cast<std::size_t>(v)] = true;

    std::vector<int> boundary;
    for (int j = 0; j < d.vertex_count(); ++j) {
        if (in_set[static_cast<std::size_t>(j)]) continue;
        bool has_arc_into_set = false;
        bool all_frustrated = true;
        for (const auto& a : d.arcs()) {
            if (a.from != j || !in_set[static_cast<std::size_t>(a.to)]) continue;
            has_arc_into_set = true;
            if (!is_frustrated(d, j, a.to, x)) {
                all_frustrated = false;
                break;
            }
        }
        if (has_arc_into_set && all_frustrated) boundary.push_back(j);
    }
    return boundary;
}

State parse_state_literal(std::string_view text, int s) {
    if (s < 2) throw std::invalid_argument("alphabet size must be at least 2");
    State state;
    state.s = s;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        int value;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid state literal `" + std::string(text) + "`");
        }
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
        if (used != token.size())
            throw std::invalid_argument("invalid state literal `" + std::string(text) + "`");
        if (value < 0 || value >= s)
            throw std::invalid_argument("coordinate " + std::to_string(value) +
                                        " outside alphabet [0," + std::to_string(s - 1) + "]");
        state.x.push_back(value);
    }
    if (state.x.empty())
        throw std::invalid_argument("empty state literal");
    return state;
}

std::string state_literal(const State& state) {
    std::string out;
    for (int i = 0; i < state.n(); ++i) {
        if (i) out += ',';
        out += std::to_string(state.x[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace netfix
