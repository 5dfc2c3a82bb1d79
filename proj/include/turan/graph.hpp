#pragma once

// Immutable simple graph on {0..n-1} with bitset-backed neighborhoods.
// Rows are one machine word for n <= 64 and a word vector beyond; the
// counting and detection kernels are templated over the two row types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

inline constexpr int kMaxVertices = 4096;

class GraphBuilder;

class Graph {
public:
    Graph() = default;

    static Graph edgeless(int n);

    int order() const noexcept { return n_; }
    int words() const noexcept { return words_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int w = 0; w < words_; ++w)
            d += std::popcount(bits_[static_cast<size_t>(v) * words_ + w]);
        return d;
    }

    long long edge_count() const {
        long long twice = 0;
        for (uint64_t w : bits_) twice += std::popcount(w);
        return twice / 2;
    }

    // Single-word row; only meaningful when words() <= 1.
    uint64_t row64(int v) const { return words_ == 0 ? 0 : bits_[v]; }

    std::span<const uint64_t> row(int v) const {
        return {bits_.data() + static_cast<size_t>(v) * words_,
                static_cast<size_t>(words_)};
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int w = 0; w < words_; ++w) {
            uint64_t m = bits_[static_cast<size_t>(v) * words_ + w];
            while (m) {
                out.push_back(w * 64 + std::countr_zero(m));
                m &= m - 1;
            }
        }
        return out;
    }

    bool rows_equal(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        for (int w = 0; w < words_; ++w)
            if (bits_[static_cast<size_t>(u) * words_ + w] !=
                bits_[static_cast<size_t>(v) * words_ + w])
                return false;
        return true;
    }

    bool operator==(const Graph&) const = default;

private:
    Graph(int n, int words, std::vector<uint64_t> bits)
        : n_(n), words_(words), bits_(std::move(bits)) {}

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw argument_error("vertex index out of range");
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;

    friend class GraphBuilder;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n) : n_(n) {
        if (n < 0) throw argument_error("vertex count must be non-negative");
        if (n > kMaxVertices)
            throw capacity_error("vertex count " + std::to_string(n) +
                                 " exceeds the representation limit " +
                                 std::to_string(kMaxVertices));
        words_ = n == 0 ? 0 : (n + 63) / 64;
        bits_.assign(static_cast<size_t>(n) * words_, 0);
    }

    int order() const noexcept { return n_; }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw argument_error("edge endpoint out of range");
        if (u == v) throw argument_error("loops are not allowed");
        bits_[static_cast<size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
        bits_[static_cast<size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
    }

    Graph build() && { return Graph(n_, words_, std::move(bits_)); }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

inline Graph Graph::edgeless(int n) { return GraphBuilder(n).build(); }

inline Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph from_edges(int n,
                        std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(),
                                                              edges.size()));
}

// Relabels vertex v to new_index_of[v]; new_index_of must be a permutation.
inline Graph relabel(const Graph& g, std::span<const int> new_index_of) {
    int n = g.order();
    if (static_cast<int>(new_index_of.size()) != n)
        throw argument_error("relabel permutation has wrong length");
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        int t = new_index_of[v];
        if (t < 0 || t >= n || seen[t])
            throw argument_error("relabel map is not a permutation");
        seen[t] = 1;
    }
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) b.add_edge(new_index_of[u], new_index_of[v]);
    return std::move(b).build();
}

inline Graph join(const Graph& g1, const Graph& g2) {
    long long total = static_cast<long long>(g1.order()) + g2.order();
    if (total > kMaxVertices)
        throw capacity_error("join would exceed the vertex limit");
    int n1 = g1.order();
    GraphBuilder b(static_cast<int>(total));
    for (int u = 0; u < n1; ++u)
        for (int v : g1.neighbors(u))
            if (u < v) b.add_edge(u, v);
    for (int u = 0; u < g2.order(); ++u)
        for (int v : g2.neighbors(u))
            if (u < v) b.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < g2.order(); ++v) b.add_edge(u, n1 + v);
    return std::move(b).build();
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    long long total = static_cast<long long>(g1.order()) + g2.order();
    if (total > kMaxVertices)
        throw capacity_error("disjoint union would exceed the vertex limit");
    int n1 = g1.order();
    GraphBuilder b(static_cast<int>(total));
    for (int u = 0; u < n1; ++u)
        for (int v : g1.neighbors(u))
            if (u < v) b.add_edge(u, v);
    for (int u = 0; u < g2.order(); ++u)
        for (int v : g2.neighbors(u))
            if (u < v) b.add_edge(n1 + u, n1 + v);
    return std::move(b).build();
}

// Subgraph induced by the vertex set S, relabeled order-preservingly.
inline Graph induced(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw argument_error("induced vertex set contains duplicates");
    for (int v : s)
        if (v < 0 || v >= g.order())
            throw argument_error("induced vertex set out of range");
    GraphBuilder b(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j]))
                b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return std::move(b).build();
}

inline Graph remove_vertex(const Graph& g, int v) {
    std::vector<int> keep;
    keep.reserve(g.order() - 1);
    for (int u = 0; u < g.order(); ++u)
        if (u != v) keep.push_back(u);
    return induced(g, std::move(keep));
}

// ---------------------------------------------------------------------------
// Vertex-set masks. Single uint64_t for n <= 64, WideMask beyond. The
// detection/counting kernels are templates over the two, sharing one source.

inline uint64_t mask_and(uint64_t a, uint64_t b) { return a & b; }
inline uint64_t mask_andnot(uint64_t a, uint64_t b) { return a & ~b; }
inline bool bit_any(uint64_t m) { return m != 0; }
inline int bit_count(uint64_t m) { return std::popcount(m); }
inline int bit_first(uint64_t m) { return m ? std::countr_zero(m) : -1; }
inline void bit_clear(uint64_t& m, int i) { m &= ~(1ull << i); }
inline void bit_set(uint64_t& m, int i) { m |= 1ull << i; }
inline bool bit_test(uint64_t m, int i) { return (m >> i) & 1; }

class WideMask {
public:
    WideMask() = default;
    explicit WideMask(int words) : w_(words, 0) {}

    std::vector<uint64_t> w_;
};

inline WideMask mask_and(const WideMask& a, const WideMask& b) {
    WideMask r(static_cast<int>(a.w_.size()));
    for (size_t i = 0; i < a.w_.size(); ++i) r.w_[i] = a.w_[i] & b.w_[i];
    return r;
}
inline WideMask mask_andnot(const WideMask& a, const WideMask& b) {
    WideMask r(static_cast<int>(a.w_.size()));
    for (size_t i = 0; i < a.w_.size(); ++i) r.w_[i] = a.w_[i] & ~b.w_[i];
    return r;
}
inline bool bit_any(const WideMask& m) {
    for (uint64_t w : m.w_)
        if (w) return true;
    return false;
}
inline int bit_count(const WideMask& m) {
    int c = 0;
    for (uint64_t w : m.w_) c += std::popcount(w);
    return c;
}
inline int bit_first(const WideMask& m) {
    for (size_t i = 0; i < m.w_.size(); ++i)
        if (m.w_[i]) return static_cast<int>(i) * 64 + std::countr_zero(m.w_[i]);
    return -1;
}
inline void bit_clear(WideMask& m, int i) { m.w_[i / 64] &= ~(1ull << (i % 64)); }
inline void bit_set(WideMask& m, int i) { m.w_[i / 64] |= 1ull << (i % 64); }
inline bool bit_test(const WideMask& m, int i) {
    return (m.w_[i / 64] >> (i % 64)) & 1;
}

struct Adj64 {
    using Mask = uint64_t;
    const Graph* g = nullptr;

    int order() const { return g->order(); }
    Mask row(int v) const { return g->row64(v); }
    Mask universe() const {
        int n = g->order();
        if (n == 0) return 0;
        return n >= 64 ? ~0ull : ((1ull << n) - 1);
    }
    Mask empty_mask() const { return 0; }
    Mask single(int v) const { return 1ull << v; }
};

struct AdjWide {
    using Mask = WideMask;
    const Graph* g = nullptr;

    int order() const { return g->order(); }
    Mask row(int v) const {
        auto sp = g->row(v);
        Mask m(static_cast<int>(sp.size()));
        std::copy(sp.begin(), sp.end(), m.w_.begin());
        return m;
    }
    Mask universe() const {
        Mask m(g->words());
        for (int v = 0; v < g->order(); ++v) bit_set(m, v);
        return m;
    }
    Mask empty_mask() const { return Mask(g->words()); }
    Mask single(int v) const {
        Mask m(g->words());
        bit_set(m, v);
        return m;
    }
};

template <class F>
decltype(auto) with_adjacency(const Graph& g, F&& f) {
    if (g.words() <= 1) return f(Adj64{&g});
    return f(AdjWide{&g});
}

}  // namespace turan
