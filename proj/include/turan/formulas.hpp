#pragma once

// Closed-form and construction-backed evaluators for the predicted extremal
// values. predicted_ex builds the stated extremal graph and counts the
// stated target on it; cliques_in_turan is kept as an independent closed
// form so the two routes can cross-check each other.

#include <optional>
#include <string>
#include <vector>

#include "turan/construct.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/freeness.hpp"

namespace turan {

inline Count binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Count r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline Count ipow(Count base, long long e) {
    Count r = 1;
    while (e-- > 0) r *= base;
    return r;
}

// N(K_k, T(n, r)) by elementary symmetric sums over the balanced part
// sizes (rem parts of size q+1, the rest of size q).
inline Count cliques_in_turan(long long n, int r, int k) {
    if (r < 1) throw argument_error("turan part count must be >= 1");
    if (n < 0) throw argument_error("n must be non-negative");
    if (k < 0) throw argument_error("clique size must be non-negative");
    if (k == 0) return 1;
    long long q = n / r, rem = n % r;
    long long big = rem, small = q > 0 ? r - rem : 0;
    if (k > big + small) return 0;
    Count total = 0;
    for (long long i = std::max<long long>(0, k - small);
         i <= std::min<long long>(k, big); ++i)
        total += binomial(big, i) * ipow(q + 1, i) * binomial(small, k - i) *
                 ipow(q, k - i);
    return total;
}

// f_{r,s,t}(n) = N(K_{r+t}, K_{s+2t+1} v T(n-s-2t-1, r-s-t-1)), evaluated
// as the product of floors.
inline Count f_value(long long n, int r, int s, int t) {
    if (s < 0 || t < 0) throw argument_error("f: s and t must be non-negative");
    if (!(r > s + t + 1))
        throw argument_error("f: constraint r > s+t+1 violated");
    if (!(n > 2 * t + s + 1))
        throw argument_error("f: constraint n > 2t+s+1 violated");
    int parts = r - s - t - 1;
    Count prod = 1;
    for (int i = 0; i <= r - s - t - 2; ++i)
        prod *= Count((n - s - 2 * t - 1 + i) / parts);
    return prod;
}

enum class TheoremId {
    Thm1i,
    Thm1ii,
    Thm2Lower,
    Thm2iii,
    Thm3,
    Thm4,
    Zykov,
    MoonEdges,
    PropKrr1,
    Br1Edges,
};

inline const char* theorem_id_name(TheoremId id) {
    switch (id) {
        case TheoremId::Thm1i: return "thm1i";
        case TheoremId::Thm1ii: return "thm1ii";
        case TheoremId::Thm2Lower: return "thm2lower";
        case TheoremId::Thm2iii: return "thm2iii";
        case TheoremId::Thm3: return "thm3";
        case TheoremId::Thm4: return "thm4";
        case TheoremId::Zykov: return "zykov";
        case TheoremId::MoonEdges: return "moon";
        case TheoremId::PropKrr1: return "krr1";
        case TheoremId::Br1Edges: return "br1edges";
    }
    return "?";
}

struct CaseParams {
    std::optional<long long> n, r, s, t, k, a, b;
};

struct TheoremCase {
    TheoremId id;
    CaseParams params;
};

struct Prediction {
    Count value;
    Graph graph;                 // the construction attaining the value
    ForbiddenPattern forbidden;  // what the theorem forbids
    std::vector<Graph> targets;  // the counted graph(s); >1 means a family sum
    std::string target_desc;
};

struct BicliqueOpt {
    int m = 0;           // size of the first part of the maximizer
    Count value;
    int edge_side = 0;   // 0 = edge inside the first part, 1 = the second
    Graph graph;
};

// Maximizes the number of K_{a,b} copies over K_{m,n-m} plus one edge,
// over all m and both edge placements. Ties resolve to the smallest m,
// then the first side.
inline BicliqueOpt best_bipartite_plus_edge(int n, int a, int b) {
    if (a < 1 || a > b) throw argument_error("need 1 <= a <= b");
    if (n < a + b)
        throw argument_error("infeasible: n < a+b leaves no room for any copy");
    Graph target = biclique(a, b);
    std::optional<BicliqueOpt> best;
    for (int m = 1; m < n; ++m) {
        int sizes[2] = {m, n - m};
        for (int side = 0; side < 2; ++side) {
            if (sizes[side] < 2) continue;
            GraphBuilder gb(n);
            for (int u = 0; u < m; ++u)
                for (int v = m; v < n; ++v) gb.add_edge(u, v);
            int start = side == 0 ? 0 : m;
            gb.add_edge(start, start + 1);
            Graph g = std::move(gb).build();
            Count val = count_copies(g, target);
            if (!best || val > best->value)
                best = BicliqueOpt{m, val, side, std::move(g)};
        }
    }
    if (!best)
        throw argument_error(
            "no bipartition of n admits an extra edge inside a part");
    return *best;
}

namespace detail {

inline long long need_param(const std::optional<long long>& p,
                            const char* name) {
    if (!p) throw argument_error(std::string("missing parameter ") + name);
    return *p;
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw argument_error("parameter constraint violated: " + what);
}

}  // namespace detail

inline Prediction predicted_ex(const TheoremCase& c) {
    using detail::need_param;
    using detail::require;
    const auto& p = c.params;
    switch (c.id) {
        case TheoremId::Thm1i: {
            long long n = need_param(p.n, "n"), r = need_param(p.r, "r"),
                      k = need_param(p.k, "k");
            require(k >= 1 && k < r, "1 <= k < r");
            require(n >= 1, "n >= 1");
            Graph g = clique_join_turan(1, static_cast<int>(r - 1),
                                        static_cast<int>(n));
            return {count_cliques(g, static_cast<int>(k)), g,
                    ForbiddenPattern::disjoint_cliques(2, static_cast<int>(r)),
                    {clique(static_cast<int>(k))},
                    "K_" + std::to_string(k)};
        }
        case TheoremId::Thm1ii: {
            long long n = need_param(p.n, "n"), r = need_param(p.r, "r"),
                      k = need_param(p.k, "k");
            require(r <= k && k < 2 * r, "r <= k < 2r");
            long long apex = 2 * k - 2 * r + 1;
            require(n >= apex, "n >= 2k-2r+1");
            // k = 2r-1 leaves a 0-partite Turán factor; only the bare apex
            // clique remains, so n cannot exceed it.
            require(2 * r - k - 1 >= 1 || n == apex,
                    "k = 2r-1 requires n = 2k-2r+1");
            Graph g = clique_join_turan(static_cast<int>(apex),
                                        static_cast<int>(2 * r - k - 1),
                                        static_cast<int>(n));
            std::vector<Graph> targets;
            std::vector<int> sizes;
            for (long long j = k; j <= 2 * r - 1; ++j) {
                targets.push_back(clique(static_cast<int>(j)));
                sizes.push_back(static_cast<int>(j));
            }
            return {count_family(g, sizes), g,
                    ForbiddenPattern::disjoint_cliques(2, static_cast<int>(r)),
                    std::move(targets),
                    "K_" + std::to_string(k) + "..K_" + std::to_string(2 * r - 1)};
        }
        case TheoremId::Thm2Lower: {
            long long n = need_param(p.n, "n"), r = need_param(p.r, "r"),
                      s = need_param(p.s, "s"), t = need_param(p.t, "t");
            require(s >= 0 && t >= 1, "s >= 0, t >= 1");
            require(r > s + t + 1, "r > s+t+1");
            long long m = s + 2 * t + 1;
            require(n >= m, "n >= s+2t+1");
            Graph g = clique_join_turan(static_cast<int>(m),
                                        static_cast<int>(r - s - t - 1),
                                        static_cast<int>(n));
            return {count_cliques(g, static_cast<int>(r + t)), g,
                    ForbiddenPattern::book(static_cast<int>(r),
                                           static_cast<int>(s)),
                    {clique(static_cast<int>(r + t))},
                    "K_" + std::to_string(r + t)};
        }
        case TheoremId::Thm2iii: {
            long long n = need_param(p.n, "n"), r = need_param(p.r, "r"),
                      t = need_param(p.t, "t");
            require(t >= 1 && t + 3 < r, "t >= 1 and t+3 < r");
            require(n >= 2 * t + 2, "n >= 2t+2");
            Graph g = clique_join_turan(static_cast<int>(2 * t + 2),
                                        static_cast<int>(r - t - 2),
                                        static_cast<int>(n));
            return {count_cliques(g, static_cast<int>(r + t)), g,
                    ForbiddenPattern::book(static_cast<int>(r), 1),
                    {clique(static_cast<int>(r + t))},
                    "K_" + std::to_string(r + t)};
        }
        case TheoremId::Thm3: {
            long long n = need_param(p.n, "n"), r = need_param(p.r, "r"),
                      k = need_param(p.k, "k");
            require(k >= 1 && k < r, "1 <= k < r");
            Graph g = turan_plus(static_cast<int>(n), static_cast<int>(r - 1));
            return {count_cliques(g, static_cast<int>(k)), g,
                    ForbiddenPattern::book(static_cast<int>(r), 1),
                    {clique(static_cast<int>(k))},
                    "K_" + std::to_string(k)};
        }
        case TheoremId::Thm4: {
            long long n = need_param(p.n, "n"), a = need_param(p.a, "a"),
                      b = need_param(p.b, "b");
            require(a >= 1 && a <= b, "1 <= a <= b");
            auto opt = best_bipartite_plus_edge(static_cast<int>(n),
                                                static_cast<int>(a),
                                                static_cast<int>(b));
            return {opt.value, opt.graph, ForbiddenPattern::book(3, 1),
                    {biclique(static_cast<int>(a), static_cast<int>(b))},
                    "K_{" + std::to_string(a) + "," + std::to_string(b) + "}"};
        }
        case TheoremId::Zykov: {
            long long n = need_param(p.n, "n"), r = need_param(p.r, "r"),
                      k = need_param(p.k, "k");
            require(2 <= k && k < r && r <= n, "2 <= k < r <= n");
            Graph g = turan_graph(static_cast<int>(n), static_cast<int>(r - 1));
            return {count_cliques(g, static_cast<int>(k)), g,
                    ForbiddenPattern::clique_pattern(static_cast<int>(r)),
                    {clique(static_cast<int>(k))},
                    "K_" + std::to_string(k)};
        }
        case TheoremId::MoonEdges: {
            long long n = need_param(p.n, "n"), r = need_param(p.r, "r"),
                      k = need_param(p.k, "k");
            require(k >= 1 && r >= 2, "k >= 1 and r >= 2");
            require(n >= k - 1, "n >= k-1");
            Graph g = clique_join_turan(static_cast<int>(k - 1),
                                        static_cast<int>(r - 1),
                                        static_cast<int>(n));
            return {Count(g.edge_count()), g,
                    ForbiddenPattern::disjoint_cliques(static_cast<int>(k),
                                                       static_cast<int>(r)),
                    {clique(2)}, "K_2"};
        }
        case TheoremId::PropKrr1: {
            long long n = need_param(p.n, "n"), r = need_param(p.r, "r");
            require(r >= 3, "r >= 3");
            Graph g = turan_graph(static_cast<int>(n), static_cast<int>(r - 1));
            return {count_cliques(g, static_cast<int>(r - 1)), g,
                    ForbiddenPattern::union_pair(clique(static_cast<int>(r)),
                                                 clique(static_cast<int>(r - 1))),
                    {clique(static_cast<int>(r - 1))},
                    "K_" + std::to_string(r - 1)};
        }
        case TheoremId::Br1Edges: {
            long long n = need_param(p.n, "n"), r = need_param(p.r, "r");
            require(r >= 3, "r >= 3");
            Graph g = turan_plus(static_cast<int>(n), static_cast<int>(r - 1));
            return {Count(g.edge_count()), g,
                    ForbiddenPattern::book(static_cast<int>(r), 1),
                    {clique(2)}, "K_2"};
        }
    }
    throw argument_error("unknown theorem case");
}

}  // namespace turan
