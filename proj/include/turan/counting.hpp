#pragma once

// Exact copy counting. Cliques are counted by recursive candidate-set
// intersection; arbitrary patterns by injective embedding backtracking
// over a connected-first order of H maximizing back-degree. Unlabeled
// counts divide embeddings by |Aut(H)| with an exact-division check.
// Internal tallies use uint64_t (any enumeration that finishes at desk
// scale fits); the public type is arbitrary precision.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "turan/errors.hpp"
#include "turan/graph.hpp"

namespace turan {

using Count = boost::multiprecision::cpp_int;

namespace detail {

template <class A>
uint64_t clique_count_rec(const A& adj, typename A::Mask cand, int need) {
    if (need == 0) return 1;
    int avail = bit_count(cand);
    if (avail < need) return 0;
    if (need == 1) return static_cast<uint64_t>(avail);
    uint64_t total = 0;
    auto rest = cand;
    while (bit_count(rest) >= need) {
        int v = bit_first(rest);
        bit_clear(rest, v);
        total += clique_count_rec(adj, mask_and(rest, adj.row(v)), need - 1);
    }
    return total;
}

template <class A>
bool clique_exists_rec(const A& adj, typename A::Mask cand, int need,
                       std::vector<int>* witness) {
    if (need == 0) return true;
    if (bit_count(cand) < need) return false;
    auto rest = cand;
    while (bit_count(rest) >= need) {
        int v = bit_first(rest);
        bit_clear(rest, v);
        if (witness) witness->push_back(v);
        if (need == 1 ||
            clique_exists_rec(adj, mask_and(rest, adj.row(v)), need - 1,
                              witness))
            return true;
        if (witness) witness->pop_back();
    }
    return false;
}

// Calls fn(stack) for every `size`-clique inside cand, vertices ascending.
// fn returns true to stop the enumeration early.
template <class A, class Fn>
bool for_each_clique(const A& adj, typename A::Mask cand, int size,
                     std::vector<int>& stack, Fn&& fn) {
    if (size == 0) return fn(stack);
    auto rest = cand;
    while (bit_count(rest) >= size) {
        int v = bit_first(rest);
        bit_clear(rest, v);
        stack.push_back(v);
        if (size == 1) {
            if (fn(stack)) {
                stack.pop_back();
                return true;
            }
        } else if (for_each_clique(adj, mask_and(rest, adj.row(v)), size - 1,
                                   stack, fn)) {
            stack.pop_back();
            return true;
        }
        stack.pop_back();
    }
    return false;
}

struct EmbedPlan {
    std::vector<int> order;              // plan position -> h vertex
    std::vector<std::vector<int>> back;  // earlier positions adjacent in h
};

inline EmbedPlan make_embed_plan(const Graph& h) {
    int hn = h.order();
    EmbedPlan plan;
    std::vector<char> chosen(hn, 0);
    std::vector<int> back_deg(hn, 0);
    for (int step = 0; step < hn; ++step) {
        int pick = -1;
        for (int v = 0; v < hn; ++v) {
            if (chosen[v]) continue;
            if (pick == -1 || back_deg[v] > back_deg[pick] ||
                (back_deg[v] == back_deg[pick] &&
                 h.degree(v) > h.degree(pick)))
                pick = v;
        }
        chosen[pick] = 1;
        std::vector<int> back;
        for (int p = 0; p < step; ++p)
            if (h.has_edge(plan.order[p], pick)) back.push_back(p);
        plan.order.push_back(pick);
        plan.back.push_back(std::move(back));
        for (int v : h.neighbors(pick))
            if (!chosen[v]) ++back_deg[v];
    }
    return plan;
}

template <class A>
typename A::Mask embed_candidates(const A& host, const EmbedPlan& plan,
                                  int depth, const std::vector<int>& image,
                                  const typename A::Mask& used,
                                  const typename A::Mask& allowed) {
    typename A::Mask cand = allowed;
    for (int p : plan.back[depth])
        cand = mask_and(cand, host.row(image[p]));
    return mask_andnot(cand, used);
}

template <class A>
uint64_t count_embeddings_rec(const A& host, const EmbedPlan& plan, int depth,
                              std::vector<int>& image,
                              const typename A::Mask& used,
                              const typename A::Mask& allowed) {
    auto cand = embed_candidates(host, plan, depth, image, used, allowed);
    if (depth + 1 == static_cast<int>(plan.order.size()))
        return static_cast<uint64_t>(bit_count(cand));
    uint64_t total = 0;
    auto rest = cand;
    while (bit_any(rest)) {
        int v = bit_first(rest);
        bit_clear(rest, v);
        image[depth] = v;
        auto used2 = used;
        bit_set(used2, v);
        total += count_embeddings_rec(host, plan, depth + 1, image, used2,
                                      allowed);
    }
    return total;
}

template <class A>
bool find_embedding_rec(const A& host, const EmbedPlan& plan, int depth,
                        std::vector<int>& image, const typename A::Mask& used,
                        const typename A::Mask& allowed) {
    if (depth == static_cast<int>(plan.order.size())) return true;
    auto rest = embed_candidates(host, plan, depth, image, used, allowed);
    while (bit_any(rest)) {
        int v = bit_first(rest);
        bit_clear(rest, v);
        image[depth] = v;
        auto used2 = used;
        bit_set(used2, v);
        if (find_embedding_rec(host, plan, depth + 1, image, used2, allowed))
            return true;
    }
    return false;
}

inline uint64_t count_embeddings_u64(const Graph& g, const Graph& h) {
    if (h.order() == 0) return 1;
    if (h.order() > g.order()) return 0;
    auto plan = make_embed_plan(h);
    return with_adjacency(g, [&](auto host) {
        std::vector<int> image(h.order(), -1);
        return count_embeddings_rec(host, plan, 0, image, host.empty_mask(),
                                    host.universe());
    });
}

// Image of one embedding of h into g avoiding `forbidden` (h-vertex i maps
// to result[i]); nullopt when none exists.
inline std::optional<std::vector<int>> find_embedding_avoiding(
    const Graph& g, const Graph& h, const std::vector<int>& forbidden) {
    if (h.order() == 0) return std::vector<int>{};
    if (h.order() > g.order() - static_cast<int>(forbidden.size()))
        return std::nullopt;
    auto plan = make_embed_plan(h);
    return with_adjacency(
        g, [&](auto host) -> std::optional<std::vector<int>> {
            auto allowed = host.universe();
            for (int v : forbidden) bit_clear(allowed, v);
            std::vector<int> image(h.order(), -1);
            if (!find_embedding_rec(host, plan, 0, image, host.empty_mask(),
                                    allowed))
                return std::nullopt;
            std::vector<int> by_h_vertex(h.order());
            for (int p = 0; p < h.order(); ++p)
                by_h_vertex[plan.order[p]] = image[p];
            return by_h_vertex;
        });
}

}  // namespace detail

inline Count count_cliques(const Graph& g, int k) {
    if (k < 0) throw argument_error("clique size must be non-negative");
    return with_adjacency(g, [&](auto adj) {
        return Count(detail::clique_count_rec(adj, adj.universe(), k));
    });
}

// Injective maps V(h) -> V(g) preserving the edges of h (non-induced).
inline Count count_embeddings(const Graph& g, const Graph& h) {
    return Count(detail::count_embeddings_u64(g, h));
}

// Unlabeled copies of h in g: embeddings divided by |Aut(h)|.
inline Count count_copies(const Graph& g, const Graph& h) {
    uint64_t emb = detail::count_embeddings_u64(g, h);
    uint64_t aut = detail::count_embeddings_u64(h, h);
    if (emb % aut != 0)
        throw consistency_error(
            "embedding count not divisible by the automorphism count");
    return Count(emb / aut);
}

// Copies of h whose vertex set contains v.
inline Count copies_at_vertex(const Graph& g, const Graph& h, int v) {
    if (v < 0 || v >= g.order())
        throw argument_error("vertex index out of range");
    return count_copies(g, h) - count_copies(remove_vertex(g, v), h);
}

inline Count count_family(const Graph& g, const std::vector<int>& sizes) {
    if (sizes.empty())
        throw argument_error("clique family must be non-empty");
    Count total = 0;
    for (int k : sizes) total += count_cliques(g, k);
    return total;
}

inline bool has_embedding(const Graph& g, const Graph& h) {
    return detail::find_embedding_avoiding(g, h, {}).has_value();
}

}  // namespace turan
