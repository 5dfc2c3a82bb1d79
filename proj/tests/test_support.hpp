#pragma once

// Test-side oracles and generators. These deliberately avoid the library's
// counting/detection code paths: copies are counted by enumerating vertex
// subsets and bijections, isomorphism by trying all permutations.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "turan/graph.hpp"

namespace turan::test {

inline Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

inline Graph cycle_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.add_edge(i, j);
    return std::move(b).build();
}

inline Graph add_edge_copy(const Graph& g, int u, int v) {
    GraphBuilder b(g.order());
    for (int x = 0; x < g.order(); ++x)
        for (int y : g.neighbors(x))
            if (x < y) b.add_edge(x, y);
    b.add_edge(u, v);
    return std::move(b).build();
}

// Injective edge-preserving maps V(h) -> V(g), counted by brute force over
// all |V(h)|-subsets of V(g) and all bijections onto each subset.
inline long long naive_embeddings(const Graph& g, const Graph& h) {
    int n = g.order(), hn = h.order();
    if (hn == 0) return 1;
    if (hn > n) return 0;
    std::vector<std::pair<int, int>> h_edges;
    for (int i = 0; i < hn; ++i)
        for (int j = i + 1; j < hn; ++j)
            if (h.has_edge(i, j)) h_edges.push_back({i, j});
    long long total = 0;
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        if (std::popcount(mask) != hn) continue;
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) subset.push_back(v);
        std::sort(subset.begin(), subset.end());
        do {
            bool ok = true;
            for (auto [i, j] : h_edges)
                if (!g.has_edge(subset[i], subset[j])) {
                    ok = false;
                    break;
                }
            if (ok) ++total;
        } while (std::next_permutation(subset.begin(), subset.end()));
    }
    return total;
}

inline long long naive_copies(const Graph& g, const Graph& h) {
    long long emb = naive_embeddings(g, h);
    long long aut = naive_embeddings(h, h);
    return emb / aut;
}

inline bool brute_force_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    int n = a.order();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (a.has_edge(i, j) != b.has_edge(p[i], p[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return n == 0;
}

inline std::vector<Graph> all_labeled_graphs(int n) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) cells.push_back({i, j});
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (1ull << cells.size()); ++mask) {
        GraphBuilder b(n);
        for (size_t c = 0; c < cells.size(); ++c)
            if ((mask >> c) & 1) b.add_edge(cells[c].first, cells[c].second);
        out.push_back(std::move(b).build());
    }
    return out;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace turan::test
