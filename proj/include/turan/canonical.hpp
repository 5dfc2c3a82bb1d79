#pragma once

// Canonical labeling: iterated degree/neighborhood refinement, then a
// backtracking search for the lexicographically minimal adjacency bit
// string over labelings that respect the refined class order. The minimal
// string determines the graph, so equal keys <=> isomorphic. Leaves that
// tie the current best expose automorphisms; these are collected into a
// union-find whose orbits are partial (same root => same Aut orbit, the
// converse may fail) and serve only as a fast path for orbit queries.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "turan/graph.hpp"
#include "turan/graph6.hpp"

namespace turan {

struct CanonicalForm {
    std::string key;  // graph6 of the canonically relabeled graph

    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalResult {
    std::vector<int> canonical_order;  // position -> original vertex
    std::vector<int> orbit_root;       // partial automorphism orbits
    Graph canonical_graph;
    CanonicalForm form;
};

namespace detail {

// Class ranks assigned by sorting signature values, so they are invariant
// under relabeling. Stops when the class count stops growing.
inline std::vector<int> refine_classes(const Graph& g,
                                       const std::vector<int>& colors) {
    int n = g.order();
    std::vector<int> rank(n, 0);
    if (n == 0) return rank;
    {
        std::vector<std::pair<int, int>> keys(n);
        for (int v = 0; v < n; ++v)
            keys[v] = {colors.empty() ? 0 : colors[v], g.degree(v)};
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            rank[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                sorted.begin());
    }
    int classes = 1 + *std::max_element(rank.begin(), rank.end());
    for (int round = 0; round < n; ++round) {
        using Key = std::pair<int, std::vector<int>>;
        std::vector<Key> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(rank[u]);
            std::sort(nb.begin(), nb.end());
            keys[v] = {rank[v], std::move(nb)};
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            rank[v] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                sorted.begin());
        int next = static_cast<int>(sorted.size());
        if (next == classes) break;
        classes = next;
    }
    return rank;
}

struct CanonSearch {
    const Graph* g = nullptr;
    int n = 0;
    std::vector<int> pos_class;                 // position -> class rank
    std::vector<std::vector<int>> class_members;
    std::vector<int> perm;                      // position -> original vertex
    std::vector<char> used;
    std::vector<uint8_t> cur_bits, best_bits;   // column-major upper triangle
    std::vector<int> best_perm, pos_in_best;
    bool have_best = false;
    std::vector<int> uf;

    int find(int x) {
        while (uf[x] != x) {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }

    static size_t col_off(int d) {
        return static_cast<size_t>(d) * (d - 1) / 2;
    }

    void install_best() {
        best_bits = cur_bits;
        best_perm = perm;
        for (int p = 0; p < n; ++p) pos_in_best[best_perm[p]] = p;
        have_best = true;
    }

    // cur and best encode the same string, so perm o best^{-1} in Aut(g).
    void record_automorphism() {
        for (int v = 0; v < n; ++v) unite(v, perm[pos_in_best[v]]);
    }

    // Returns true when best was replaced somewhere in this subtree. `tied`
    // means columns 0..d-1 of cur equal best (meaningful once have_best).
    bool dfs(int d, bool tied) {
        if (d == n) {
            if (!have_best) {
                install_best();
                return true;
            }
            if (tied) {
                record_automorphism();
                return false;
            }
            int cmp = 0;
            for (size_t i = 0; i < cur_bits.size(); ++i) {
                if (cur_bits[i] != best_bits[i]) {
                    cmp = cur_bits[i] < best_bits[i] ? -1 : 1;
                    break;
                }
            }
            if (cmp < 0) {
                install_best();
                return true;
            }
            if (cmp == 0) record_automorphism();
            return false;
        }
        bool updated = false;
        size_t off = col_off(d);
        for (int v : class_members[pos_class[d]]) {
            if (used[v]) continue;
            bool compare = have_best && tied;
            int colcmp = 0;  // against best's column d, while still tied
            for (int i = 0; i < d; ++i) {
                uint8_t b = g->has_edge(perm[i], v) ? 1 : 0;
                cur_bits[off + i] = b;
                if (compare && colcmp == 0) {
                    if (b != best_bits[off + i]) {
                        colcmp = b < best_bits[off + i] ? -1 : 1;
                        if (colcmp > 0) break;
                    }
                }
            }
            if (compare && colcmp > 0) continue;  // strictly worse prefix
            perm[d] = v;
            used[v] = 1;
            if (dfs(d + 1, have_best && tied && colcmp == 0)) {
                updated = true;
                tied = true;  // new best runs through this node's prefix
            }
            used[v] = 0;
        }
        return updated;
    }
};

// Runs the full search; colors seed the refinement (empty = uncolored).
inline CanonSearch run_canon_search(const Graph& g,
                                    const std::vector<int>& colors) {
    CanonSearch s;
    s.g = &g;
    s.n = g.order();
    std::vector<int> class_of = refine_classes(g, colors);
    int classes =
        s.n == 0 ? 0 : 1 + *std::max_element(class_of.begin(), class_of.end());
    s.class_members.assign(classes, {});
    for (int v = 0; v < s.n; ++v) s.class_members[class_of[v]].push_back(v);
    s.pos_class.reserve(s.n);
    for (int c = 0; c < classes; ++c)
        for (size_t i = 0; i < s.class_members[c].size(); ++i)
            s.pos_class.push_back(c);
    s.perm.assign(s.n, -1);
    s.used.assign(s.n, 0);
    s.cur_bits.assign(static_cast<size_t>(s.n) * (s.n - 1) / 2, 0);
    s.best_perm.assign(s.n, -1);
    s.pos_in_best.assign(s.n, -1);
    s.uf.resize(s.n);
    for (int v = 0; v < s.n; ++v) s.uf[v] = v;
    if (s.n == 0) {
        s.have_best = true;
        return s;
    }
    s.dfs(0, false);
    return s;
}

}  // namespace detail

inline CanonicalResult canonicalize(const Graph& g) {
    auto s = detail::run_canon_search(g, {});
    CanonicalResult r;
    r.canonical_order = s.best_perm;
    r.orbit_root.resize(g.order());
    for (int v = 0; v < g.order(); ++v) r.orbit_root[v] = s.find(v);
    r.canonical_graph =
        g.order() == 0 ? Graph() : relabel(g, s.pos_in_best);
    r.form = CanonicalForm{g6_encode(r.canonical_graph)};
    return r;
}

inline CanonicalForm canonical_label(const Graph& g) {
    return canonicalize(g).form;
}

// Key for a vertex-colored graph; equal keys <=> a color-preserving
// isomorphism exists. The per-position color sequence is part of the key
// because different colorings can induce different position blocks.
inline std::string canonical_colored_key(const Graph& g,
                                         const std::vector<int>& colors) {
    auto s = detail::run_canon_search(g, colors);
    std::string key = std::to_string(g.order());
    key.push_back(':');
    for (int p = 0; p < g.order(); ++p) {
        key += std::to_string(colors[s.best_perm[p]]);
        key.push_back(',');
    }
    key.push_back('|');
    for (uint8_t b : s.best_bits) key.push_back(b ? '1' : '0');
    return key;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    return canonical_label(a) == canonical_label(b);
}

}  // namespace turan
