#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "netfix/digraph.hpp"

namespace netfix {

/// A point of [s]^n. Carries its alphabet size; operations on states with
/// different lengths or alphabets are hard errors.
struct State {
    std::vector<int> x;
    int s = 2;

    int n() const { return static_cast<int>(x.size()); }

    friend bool operator==(const State& a, const State& b) { return a.s == b.s && a.x == b.x; }
    friend bool operator!=(const State& a, const State& b) { return !(a == b); }
    /// Lexicographic, x_0 most significant (the encoding order).
    friend bool operator<(const State& a, const State& b) { return a.x < b.x; }
};

enum class DistanceKind { hamming, max, min };

DistanceKind distance_kind_from_name(std::string_view name);
std::string distance_kind_name(DistanceKind kind);

/// Fixed enumeration of [s]^n: code = sum x_i * s^(n-1-i), so x_0 is the most
/// significant digit and code order is lexicographic on states.
class StateSpace {
public:
    StateSpace(int n, int s);

    int n() const { return n_; }
    int s() const { return s_; }
    std::uint64_t size() const { return size_; }

    std::uint64_t encode(const State& state) const;
    State decode(std::uint64_t code) const;

private:
    int n_;
    int s_;
    std::uint64_t size_;
};

/// Number of coordinates where x_i < y_i.
int below_count(const State& x, const State& y);

int weight(const State& x);

/// hamming = L(x,y)+L(y,x); max and min take the corresponding side.
int distance(const State& x, const State& y, DistanceKind kind);

/// The per-vertex order: equality on N^0(i), <= on N^+(i), >= on N^-(i).
/// Coordinates outside N(i) are unconstrained.
bool leq_i(const SignedDigraph& d, int i, const State& x, const State& y);

/// Binary-only frustration of the arc (j,i) under x: a + arc with unequal
/// endpoints, or a - arc with equal endpoints. 0 arcs are never frustrated.
bool is_frustrated(const SignedDigraph& d, int j, int i, const State& x);

/// N(I,x): in-neighbours of I outside I all of whose arcs into I are
/// x-frustrated (binary only).
std::vector<int> frustrated_boundary(const SignedDigraph& d, const std::vector<int>& vertices,
                                     const State& x);

/// Comma-separated digit literal, e.g. "0,2,1".
State parse_state_literal(std::string_view text, int s);
std::string state_literal(const State& state);

}  // namespace netfix
