#include "netfix/bitgraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace netfix {

int Bitset::count() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool Bitset::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

int Bitset::first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k]) return static_cast<int>(k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k])));
    return -1;
}

int Bitset::next(int i) const {
    ++i;
    if (i >= bits_) return -1;
    std::size_t k = static_cast<std::size_t>(i) >> 6;
    std::uint64_t w = words_[k] & (~0ull << (i & 63));
    while (true) {
        if (w) return static_cast<int>(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        if (++k >= words_.size()) return -1;
        w = words_[k];
    }
}

Bitset& Bitset::operator&=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
}

void Bitset::and_not(const Bitset& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
}

bool Bitset::intersects(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k] & other.words_[k]) return true;
    return false;
}

BitGraph BitGraph::complement() const {
    const int n = size();
    BitGraph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!edge(i, j)) out.add_edge(i, j);
    return out;
}

namespace {

// Tomita-style branch and bound: candidates are greedily coloured, explored in
// reverse colour order, pruned when the colour bound cannot beat the best.
struct CliqueSolver {
    const BitGraph& g;
    int n;
    std::vector<int> best;
    std::vector<int> current;

    explicit CliqueSolver(const BitGraph& graph) : g(graph), n(graph.size()) {}

    void expand(const Bitset& candidates) {
        std::vector<int> order;
        std::vector<int> colour;
        colour_sort(candidates, order, colour);
        Bitset cand = candidates;
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            int v = order[static_cast<std::size_t>(idx)];
            if (static_cast<int>(current.size()) + colour[static_cast<std::size_t>(idx)] <=
                static_cast<int>(best.size()))
                return;
            Bitset next = cand;
            next &= g.adj[static_cast<std::size_t>(v)];
            current.push_back(v);
            if (!next.any()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
            cand.reset(v);
        }
    }

    void colour_sort(const Bitset& candidates, std::vector<int>& order,
                     std::vector<int>& colour) const {
        Bitset uncoloured = candidates;
        int colour_class = 0;
        while (uncoloured.any()) {
            ++colour_class;
            Bitset available = uncoloured;
            for (int v = available.first(); v != -1; v = available.next(v)) {
                order.push_back(v);
                colour.push_back(colour_class);
                uncoloured.reset(v);
                available.and_not(g.adj[static_cast<std::size_t>(v)]);
                available.reset(v);
            }
        }
    }
};

}  // namespace

MisResult max_clique(const BitGraph& graph) {
    CliqueSolver solver(graph);
    if (graph.size() > 0) {
        Bitset all(graph.size());
        for (int i = 0; i < graph.size(); ++i) all.set(i);
        solver.expand(all);
    }
    MisResult result;
    result.members = solver.best;
    std::sort(result.members.begin(), result.members.end());
    result.size = static_cast<int>(result.members.size());
    return result;
}

MisResult max_independent_set(const BitGraph& graph) {
    return max_clique(graph.complement());
}

namespace {

// Size of a maximum independent set of the subgraph induced on `allowed`.
int mis_size_within(const BitGraph& comp, const Bitset& allowed) {
    CliqueSolver solver(comp);
    // Restrict candidate rows to `allowed` implicitly by starting from it.
    if (!allowed.any()) return 0;
    // CliqueSolver explores cand & adj rows; vertices outside `allowed`
    // never enter because the initial candidate set excludes them.
    solver.expand(allowed);
    return static_cast<int>(solver.best.size());
}

}  // namespace

MisResult lexmin_max_independent_set(const BitGraph& graph) {
    const int n = graph.size();
    BitGraph comp = graph.complement();
    Bitset all(std::max(n, 1));
    for (int i = 0; i < n; ++i) all.set(i);
    int alpha = (n == 0) ? 0 : mis_size_within(comp, all);

    MisResult result;
    result.size = alpha;
    Bitset allowed = all;  // non-neighbours (in graph) of everything chosen so far
    for (int v = 0; v < n && static_cast<int>(result.members.size()) < alpha; ++v) {
        if (!allowed.test(v)) continue;
        Bitset rest = allowed;
        rest &= comp.adj[static_cast<std::size_t>(v)];  // compatible with v
        // keep only vertices after v so each candidate is tested once
        for (int u = rest.first(); u != -1 && u < v; u = rest.next(u)) rest.reset(u);
        int need = alpha - static_cast<int>(result.members.size()) - 1;
        if (mis_size_within(comp, rest) >= need) {
            result.members.push_back(v);
            allowed = rest;
        } else {
            allowed.reset(v);
        }
    }
    return result;
}

}  // namespace netfix
