#pragma once

#include <cstdint>
#include <vector>

namespace netfix {

/// Fixed-size bitset sized at construction; word layout exposed for the solver.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int bits) : bits_(bits), words_((static_cast<std::size_t>(bits) + 63) / 64, 0) {}

    int size() const { return bits_; }
    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }
    void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1ull; }

    int count() const;
    bool any() const;
    /// Index of the lowest set bit, or -1.
    int first() const;
    /// Lowest set bit strictly greater than i, or -1.
    int next(int i) const;

    Bitset& operator&=(const Bitset& other);
    Bitset& operator|=(const Bitset& other);
    void and_not(const Bitset& other);  // *this &= ~other
    bool intersects(const Bitset& other) const;

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph as a symmetric adjacency matrix of bitset rows.
struct BitGraph {
    std::vector<Bitset> adj;

    explicit BitGraph(int n = 0) : adj(static_cast<std::size_t>(n), Bitset(n)) {}
    int size() const { return static_cast<int>(adj.size()); }
    void add_edge(int a, int b) {
        adj[static_cast<std::size_t>(a)].set(b);
        adj[static_cast<std::size_t>(b)].set(a);
    }
    bool edge(int a, int b) const { return adj[static_cast<std::size_t>(a)].test(b); }
    BitGraph complement() const;
};

struct MisResult {
    int size = 0;
    std::vector<int> members;  // ascending vertex order
};

/// Exact maximum independent set: branch and bound on the complement-clique
/// formulation with greedy colouring upper bounds. Deterministic.
MisResult max_independent_set(const BitGraph& graph);

/// Lexicographically smallest maximum independent set (by the vertex order),
/// built by repeated feasibility solves.
MisResult lexmin_max_independent_set(const BitGraph& graph);

MisResult max_clique(const BitGraph& graph);

}  // namespace netfix
