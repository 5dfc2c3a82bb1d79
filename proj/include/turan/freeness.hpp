#pragma once

// Forbidden-pattern containment. Books B_{r,s} are detected by scanning
// s-cliques R and searching the common neighborhood of R for two disjoint
// (r-s)-cliques, backtracking over the first clique choice (the first
// clique found may block a second one that a different choice admits).
// All checks stop at the first witness.

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"

namespace turan {

class ForbiddenPattern {
public:
    enum class Kind { Clique, Book, DisjointCliques, UnionPair, Explicit, Never };

    static ForbiddenPattern clique_pattern(int r) {
        if (r < 1) throw argument_error("forbidden clique size must be >= 1");
        ForbiddenPattern f(Kind::Clique);
        f.r_ = r;
        return f;
    }
    static ForbiddenPattern book(int r, int s) {
        if (r < 1) throw argument_error("book clique size must be >= 1");
        if (s < 0 || s > r)
            throw argument_error("book overlap must satisfy 0 <= s <= r");
        ForbiddenPattern f(Kind::Book);
        f.r_ = r;
        f.s_ = s;
        return f;
    }
    static ForbiddenPattern disjoint_cliques(int k, int r) {
        if (k < 1 || r < 1)
            throw argument_error("disjoint cliques need k >= 1 and r >= 1");
        ForbiddenPattern f(Kind::DisjointCliques);
        f.k_ = k;
        f.r_ = r;
        return f;
    }
    static ForbiddenPattern union_pair(Graph g1, Graph g2) {
        ForbiddenPattern f(Kind::UnionPair);
        f.graphs_ = {std::move(g1), std::move(g2)};
        return f;
    }
    static ForbiddenPattern explicit_graph(Graph h) {
        ForbiddenPattern f(Kind::Explicit);
        f.graphs_ = {std::move(h)};
        return f;
    }
    static ForbiddenPattern never() { return ForbiddenPattern(Kind::Never); }

    Kind kind() const { return kind_; }
    int r() const { return r_; }
    int s() const { return s_; }
    int k() const { return k_; }
    const Graph& first() const { return graphs_.at(0); }
    const Graph& second() const { return graphs_.at(1); }

    // Smallest host order that could contain the pattern.
    int min_vertices() const {
        switch (kind_) {
            case Kind::Clique: return r_;
            case Kind::Book: return 2 * r_ - s_;
            case Kind::DisjointCliques: return k_ * r_;
            case Kind::UnionPair:
                return graphs_[0].order() + graphs_[1].order();
            case Kind::Explicit: return graphs_[0].order();
            case Kind::Never: return INT_MAX;
        }
        return INT_MAX;
    }

    std::string describe() const {
        switch (kind_) {
            case Kind::Clique: return "clique:" + std::to_string(r_);
            case Kind::Book:
                return "book:" + std::to_string(r_) + "," + std::to_string(s_);
            case Kind::DisjointCliques:
                return "kcliques:" + std::to_string(k_) + "," +
                       std::to_string(r_);
            case Kind::UnionPair:
                return "union:" + g6_encode(graphs_[0]) + "," +
                       g6_encode(graphs_[1]);
            case Kind::Explicit: return "g6:" + g6_encode(graphs_[0]);
            case Kind::Never: return "never";
        }
        return "?";
    }

    // Isomorphism-invariant key for result caching.
    std::string cache_key() const {
        switch (kind_) {
            case Kind::UnionPair: {
                std::string a = canonical_label(graphs_[0]).key;
                std::string b = canonical_label(graphs_[1]).key;
                if (b < a) std::swap(a, b);
                return "union:" + a + "," + b;
            }
            case Kind::Explicit:
                return "g6:" + canonical_label(graphs_[0]).key;
            default: return describe();
        }
    }

private:
    explicit ForbiddenPattern(Kind k) : kind_(k) {}

    Kind kind_;
    int r_ = 0, s_ = 0, k_ = 0;
    std::vector<Graph> graphs_;
};

namespace detail {

// Two vertex-disjoint `size`-cliques inside cand; backtracks over the
// first clique. Fills rootlet-free witness pages when out != nullptr.
template <class A>
bool two_disjoint_cliques(const A& adj, const typename A::Mask& cand, int size,
                          std::vector<int>* page1, std::vector<int>* page2) {
    if (size == 0) return true;
    std::vector<int> stack;
    return for_each_clique(adj, cand, size, stack, [&](const std::vector<int>& first) {
        auto rest = cand;
        for (int v : first) bit_clear(rest, v);
        std::vector<int> second;
        if (clique_exists_rec(adj, rest, size, page2 ? &second : nullptr)) {
            if (page1) *page1 = first;
            if (page2) *page2 = second;
            return true;
        }
        return false;
    });
}

// One copy of B_{r,s} as (rootlets, page1, page2); nullopt when free.
inline std::optional<std::vector<int>> find_book(const Graph& g, int r, int s) {
    if (g.order() < 2 * r - s) return std::nullopt;
    return with_adjacency(g, [&](auto adj) -> std::optional<std::vector<int>> {
        std::vector<int> stack, p1, p2, out;
        bool found = for_each_clique(
            adj, adj.universe(), s, stack, [&](const std::vector<int>& roots) {
                auto common = adj.universe();
                for (int v : roots) common = mask_and(common, adj.row(v));
                if (two_disjoint_cliques(adj, common, r - s, &p1, &p2)) {
                    out = roots;
                    out.insert(out.end(), p1.begin(), p1.end());
                    out.insert(out.end(), p2.begin(), p2.end());
                    return true;
                }
                return false;
            });
        if (!found) return std::nullopt;
        return out;
    });
}

// k pairwise disjoint r-cliques, searched with backtracking over all
// earlier clique choices.
template <class A>
bool disjoint_cliques_rec(const A& adj, const typename A::Mask& cand, int k,
                          int r, std::vector<int>& acc) {
    if (k == 0) return true;
    std::vector<int> stack;
    return for_each_clique(adj, cand, r, stack, [&](const std::vector<int>& cl) {
        auto rest = cand;
        for (int v : cl) bit_clear(rest, v);
        size_t mark = acc.size();
        acc.insert(acc.end(), cl.begin(), cl.end());
        if (disjoint_cliques_rec(adj, rest, k - 1, r, acc)) return true;
        acc.resize(mark);
        return false;
    });
}

inline std::optional<std::vector<int>> find_disjoint_cliques(const Graph& g,
                                                             int k, int r) {
    if (g.order() < k * r) return std::nullopt;
    return with_adjacency(g, [&](auto adj) -> std::optional<std::vector<int>> {
        std::vector<int> acc;
        if (disjoint_cliques_rec(adj, adj.universe(), k, r, acc)) return acc;
        return std::nullopt;
    });
}

// Vertex-disjoint placement of two graphs: enumerate embeddings of the
// first part and search the rest of the graph for the second.
inline std::optional<std::vector<int>> find_union_pair(const Graph& g,
                                                       const Graph& a,
                                                       const Graph& b) {
    if (g.order() < a.order() + b.order()) return std::nullopt;
    if (a.order() == 0) {
        auto img = find_embedding_avoiding(g, b, {});
        if (!img) return std::nullopt;
        return *img;
    }
    auto plan = make_embed_plan(a);
    return with_adjacency(g, [&](auto host) -> std::optional<std::vector<int>> {
        std::vector<int> image(a.order(), -1), out;
        bool found = false;
        auto rec = [&](auto&& self, int depth, typename decltype(host)::Mask used) -> bool {
            if (depth == a.order()) {
                std::vector<int> first(image.begin(), image.end());
                auto rest = find_embedding_avoiding(g, b, first);
                if (!rest) return false;
                out = first;
                out.insert(out.end(), rest->begin(), rest->end());
                found = true;
                return true;
            }
            auto cand =
                embed_candidates(host, plan, depth, image, used, host.universe());
            while (bit_any(cand)) {
                int v = bit_first(cand);
                bit_clear(cand, v);
                image[depth] = v;
                auto used2 = used;
                bit_set(used2, v);
                if (self(self, depth + 1, used2)) return true;
            }
            return false;
        };
        rec(rec, 0, host.empty_mask());
        if (!found) return std::nullopt;
        return out;
    });
}

}  // namespace detail

// True iff g contains no B_{r,s} (two r-cliques sharing exactly s vertices).
inline bool is_book_free(const Graph& g, int r, int s) {
    if (r < 1 || s < 0 || s >= r)
        throw argument_error("is_book_free needs 0 <= s < r");
    return !detail::find_book(g, r, s).has_value();
}

// One witness copy of the pattern (as a vertex list), or nullopt.
inline std::optional<std::vector<int>> find_pattern(const Graph& g,
                                                    const ForbiddenPattern& f) {
    if (f.kind() != ForbiddenPattern::Kind::Never &&
        g.order() < f.min_vertices())
        return std::nullopt;
    switch (f.kind()) {
        case ForbiddenPattern::Kind::Never: return std::nullopt;
        case ForbiddenPattern::Kind::Clique: {
            return with_adjacency(
                g, [&](auto adj) -> std::optional<std::vector<int>> {
                    std::vector<int> w;
                    if (detail::clique_exists_rec(adj, adj.universe(), f.r(), &w))
                        return w;
                    return std::nullopt;
                });
        }
        case ForbiddenPattern::Kind::Book:
            if (f.s() == f.r())  // B_{r,r} is K_r
                return find_pattern(g, ForbiddenPattern::clique_pattern(f.r()));
            return detail::find_book(g, f.r(), f.s());
        case ForbiddenPattern::Kind::DisjointCliques:
            return detail::find_disjoint_cliques(g, f.k(), f.r());
        case ForbiddenPattern::Kind::UnionPair:
            return detail::find_union_pair(g, f.first(), f.second());
        case ForbiddenPattern::Kind::Explicit: {
            auto img = detail::find_embedding_avoiding(g, f.first(), {});
            if (!img) return std::nullopt;
            return *img;
        }
    }
    return std::nullopt;
}

inline bool contains(const Graph& g, const ForbiddenPattern& f) {
    return find_pattern(g, f).has_value();
}

// True iff some copy of B_{r,s} in g has v among its s shared vertices.
inline bool is_rootlet(const Graph& g, int v, int r, int s) {
    if (v < 0 || v >= g.order())
        throw argument_error("vertex index out of range");
    if (r < 1 || s < 1 || s > r)
        throw argument_error("is_rootlet needs 1 <= s <= r");
    if (g.order() < 2 * r - s) return false;
    return with_adjacency(g, [&](auto adj) {
        std::vector<int> stack;
        // (s-1)-cliques in N(v) complete {v} to an s-clique containing v.
        return detail::for_each_clique(
            adj, adj.row(v), s - 1, stack, [&](const std::vector<int>& rest) {
                auto common = adj.row(v);
                for (int u : rest) common = mask_and(common, adj.row(u));
                return detail::two_disjoint_cliques(adj, common, r - s,
                                                    nullptr, nullptr);
            });
    });
}

}  // namespace turan
