#pragma once

// Generators for the graph families used throughout: Turán graphs, Turán
// plus one edge, generalized books, complete multipartite graphs and the
// clique-join-Turán construction. Part layout is deterministic: larger
// parts take lower vertex indices, so outputs are byte-stable.

#include <numeric>
#include <string>
#include <vector>

#include "turan/errors.hpp"
#include "turan/graph.hpp"

namespace turan {

// Balanced part sizes of T(n, r), non-increasing; empty parts are dropped.
inline std::vector<int> turan_part_sizes(int n, int r) {
    if (n < 0) throw argument_error("turan: n must be non-negative");
    if (r < 1) {
        if (n == 0) return {};
        throw argument_error("turan: part count must be at least 1");
    }
    int q = n / r, rem = n % r;
    std::vector<int> sizes;
    for (int i = 0; i < rem; ++i) sizes.push_back(q + 1);
    if (q > 0)
        for (int i = rem; i < r; ++i) sizes.push_back(q);
    return sizes;
}

inline Graph complete_multipartite(const std::vector<int>& sizes) {
    long long total = 0;
    for (int s : sizes) {
        if (s < 1) throw argument_error("part sizes must be positive");
        total += s;
    }
    if (total > kMaxVertices)
        throw capacity_error("multipartite graph exceeds the vertex limit");
    GraphBuilder b(static_cast<int>(total));
    int offset = 0;
    std::vector<int> starts;
    for (int s : sizes) {
        starts.push_back(offset);
        offset += s;
    }
    for (size_t p = 0; p + 1 < sizes.size(); ++p)
        for (size_t qp = p + 1; qp < sizes.size(); ++qp)
            for (int u = starts[p]; u < starts[p] + sizes[p]; ++u)
                for (int v = starts[qp]; v < starts[qp] + sizes[qp]; ++v)
                    b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph clique(int k) {
    if (k < 0) throw argument_error("clique size must be non-negative");
    if (k > kMaxVertices) throw capacity_error("clique exceeds the vertex limit");
    GraphBuilder b(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph biclique(int a, int b) { return complete_multipartite({a, b}); }

inline Graph turan_graph(int n, int r) {
    auto sizes = turan_part_sizes(n, r);
    if (sizes.empty()) return Graph::edgeless(n);
    return complete_multipartite(sizes);
}

// T(n, r) plus one edge between the two lowest-indexed vertices of the
// smallest part that can host one. With parts laid out non-increasing
// that is the last part of size >= 2 (singleton parts cannot take an
// edge, which only matters for r < n < 2r).
inline Graph turan_plus(int n, int r) {
    auto sizes = turan_part_sizes(n, r);
    int host = static_cast<int>(sizes.size()) - 1;
    while (host >= 0 && sizes[host] < 2) --host;
    if (host < 0)
        throw argument_error(
            "turan_plus: no part of size >= 2 (need n >= r+1, or n >= 2 for "
            "r = 1)");
    Graph t = complete_multipartite(sizes);
    int start = 0;
    for (int i = 0; i < host; ++i) start += sizes[i];
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v : t.neighbors(u))
            if (u < v) b.add_edge(u, v);
    b.add_edge(start, start + 1);
    return std::move(b).build();
}

// Two r-cliques sharing exactly s vertices; 2r-s vertices in total.
// Rootlets occupy 0..s-1, the first page s..r-1, the second page the rest.
inline Graph book_graph(int r, int s) {
    if (r < 1) throw argument_error("book: clique size must be at least 1");
    if (s < 0 || s > r)
        throw argument_error("book: overlap must satisfy 0 <= s <= r");
    int n = 2 * r - s;
    GraphBuilder b(n);
    auto add_clique = [&](int page_start) {
        std::vector<int> verts;
        for (int i = 0; i < s; ++i) verts.push_back(i);
        for (int i = 0; i < r - s; ++i) verts.push_back(page_start + i);
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                b.add_edge(verts[i], verts[j]);
    };
    add_clique(s);
    add_clique(r);
    return std::move(b).build();
}

// K_m joined to T(n-m, q); the apex clique takes indices 0..m-1.
inline Graph clique_join_turan(int m, int q, int n) {
    if (m < 0) throw argument_error("apex clique size must be non-negative");
    if (n < m) throw argument_error("total vertex count below apex size");
    return join(clique(m), turan_graph(n - m, q));
}

// True iff every pair of non-adjacent vertices has identical neighborhoods,
// which characterizes complete multipartite graphs.
inline bool is_complete_multipartite(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v) && !g.rows_equal(u, v)) return false;
    return true;
}

}  // namespace turan
