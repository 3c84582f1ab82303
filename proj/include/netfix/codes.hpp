#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netfix/states.hpp"

namespace netfix {

/// A code over [s]^n. `words` keeps insertion order; constructions that are
/// inherently ordered (the K_3^+ chain) rely on that.
struct Code {
    int n = 0;
    int s = 2;
    std::vector<State> words;

    std::size_t size() const { return words.size(); }
};

Code parse_code(std::string_view text);
std::string code_to_text(const Code& code);

/// Pairwise minimum distance; no value when |C| <= 1 (infinite).
std::optional<int> min_distance(const Code& code, DistanceKind kind);

inline constexpr std::uint64_t kCodeSolverCap = 1ull << 16;

/// A maximum code with pairwise distance >= d: exact independence search on
/// the conflict graph (edge iff distance < d). Canonical witness:
/// lexicographically smallest maximum code in encoding order.
Code max_code(int n, int d, int s, DistanceKind kind, std::uint64_t cap = kCodeSolverCap);

/// Exact maximum binary constant-weight code (Hamming distance >= d, weight w).
Code max_constant_weight_code(int n, int d, int w, std::uint64_t cap = kCodeSolverCap);

/// All states of a given weight.
Code weight_level(int n, int w, int s);

/// The middle Sperner level B(n, floor(n(s-1)/2), s).
Code sperner_antichain(int n, int s);

/// The ordered chain c^0=(0,0,0), c^{k+1}=c^k+(1,1,0)/(0,1,1)/(1,0,1) as k mod
/// 3 cycles; first floor(3(s-1)/2)+1 terms.
Code chain_code_k3(int s);

struct MomentVector {
    long long m0 = 0;  // sum of coordinates
    long long m1 = 0;  // sum weighted by position (1-indexed)
    long long m2 = 0;  // sum weighted by squared position

    friend bool operator==(const MomentVector&, const MomentVector&) = default;
};

MomentVector moments(const State& x);

/// Fiber of the three weighted sums at m.
Code moment_code(int n, int s, const MomentVector& m);

/// A largest fiber over all m (ties: smallest m lexicographically).
Code best_moment_code(int n, int s);

struct DistanceChainReport {
    int n = 0;
    int d = 0;
    std::uint64_t a_h_2d = 0;               // A_H(n, 2d, 2)
    std::uint64_t a_h_2d_constant_w = 0;    // A_H(n, 2d, floor(n/2), 2)
    std::uint64_t a_min = 0;                // A_m(n, d, 2)
    std::uint64_t a_max = 0;                // A_M(n, d, 2)
    std::uint64_t a_h_2d_minus_1 = 0;       // A_H(n, 2d-1, 2)
    bool holds = false;
};

/// Exact evaluation of the chain
///   A_H(n,2d,2)/(2 sqrt(2n)) <= A_H(n,2d,fl(n/2),2) <= A_m(n,d,2)
///     <= A_H(n,2d,2) <= A_M(n,d,2) <= d * A_H(n,2d-1,2).
DistanceChainReport check_distance_chain(int n, int d);

}  // namespace netfix
