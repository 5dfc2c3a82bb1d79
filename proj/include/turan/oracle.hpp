#pragma once

// Exhaustive ex(n, H, F) for small n. Graphs are generated one vertex at a
// time by canonical augmentation: a child on k vertices is kept only if its
// new vertex is automorphism-equivalent to the vertex in the last canonical
// position (so exactly one parent per isomorphism class produces it), with
// per-parent dedup of isomorphic siblings. F-freeness is hereditary under
// vertex deletion, so non-free children prune their whole subtree. A
// labeled-enumeration generator cross-validates the augmentation path at
// n <= 6. Parent expansion and copy counting are partitioned across worker
// threads; results are merged in parent order, so output is identical for
// every worker count.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/freeness.hpp"
#include "turan/graph.hpp"

namespace turan {

// Default enumeration size cap; the TURAN_ORACLE_MAX_N environment
// variable overrides it.
inline int oracle_limit() {
    static int lim = [] {
        if (const char* e = std::getenv("TURAN_ORACLE_MAX_N")) {
            int v = std::atoi(e);
            if (v > 0) return v;
        }
        return 10;
    }();
    return lim;
}

struct EnumeratedGraph {
    Graph graph;
    std::string canon_key;  // graph6 of the canonical labeling
};

struct EnumerateOptions {
    int jobs = 1;
    int max_n = -1;  // < 0: use oracle_limit()
};

namespace detail {

template <class Fn>
void run_chunked(size_t count, int jobs, Fn&& fn) {
    if (jobs < 1) jobs = 1;
    if (static_cast<size_t>(jobs) > count) jobs = static_cast<int>(count);
    if (jobs <= 1) {
        fn(0, 0, count);
        return;
    }
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    for (int t = 0; t < jobs; ++t) {
        size_t begin = count * t / jobs;
        size_t end = count * (t + 1) / jobs;
        threads.emplace_back([&, t, begin, end] {
            try {
                fn(t, begin, end);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
}

inline Graph extend_with_mask(const Graph& parent, uint64_t mask) {
    int k = parent.order();
    GraphBuilder b(k + 1);
    for (int u = 0; u < k; ++u)
        for (int v : parent.neighbors(u))
            if (u < v) b.add_edge(u, v);
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        b.add_edge(v, k);
    }
    return std::move(b).build();
}

// Accept iff the new vertex lies in the Aut orbit of the vertex at the
// last canonical position. The partial orbits from the canonical search
// give a cheap accept; otherwise compare the two vertex-marked keys.
inline bool augmentation_accept(const Graph& child,
                                const CanonicalResult& canon) {
    int n = child.order();
    int v_new = n - 1;
    int v_star = canon.canonical_order[n - 1];
    if (v_star == v_new) return true;
    if (canon.orbit_root[v_star] == canon.orbit_root[v_new]) return true;
    if (child.degree(v_star) != child.degree(v_new)) return false;
    std::vector<int> colors(n, 0);
    colors[v_new] = 1;
    std::string key_new = canonical_colored_key(child, colors);
    colors[v_new] = 0;
    colors[v_star] = 1;
    std::string key_star = canonical_colored_key(child, colors);
    return key_new == key_star;
}

inline void expand_parent(const Graph& parent, const ForbiddenPattern& f,
                          std::vector<EnumeratedGraph>& out) {
    int k = parent.order();
    std::unordered_set<std::string> accepted_forms;
    uint64_t limit = 1ull << k;
    for (uint64_t mask = 0; mask < limit; ++mask) {
        Graph child = extend_with_mask(parent, mask);
        if (contains(child, f)) continue;
        auto canon = canonicalize(child);
        if (accepted_forms.count(canon.form.key)) continue;
        if (!augmentation_accept(child, canon)) continue;
        accepted_forms.insert(canon.form.key);
        out.push_back({std::move(child), std::move(canon.form.key)});
    }
}

}  // namespace detail

// One representative per isomorphism class of F-free graphs on n vertices.
inline std::vector<EnumeratedGraph> enumerate_free(
    int n, const ForbiddenPattern& f, const EnumerateOptions& opt = {}) {
    if (n < 0) throw argument_error("n must be non-negative");
    int max_n = opt.max_n < 0 ? oracle_limit() : opt.max_n;
    if (n > max_n)
        throw capacity_error("enumeration size " + std::to_string(n) +
                             " exceeds the configured limit " +
                             std::to_string(max_n));
    if (n > 31)
        throw capacity_error("enumeration supports at most 31 vertices");

    std::vector<EnumeratedGraph> level;
    Graph empty;
    if (!contains(empty, f))
        level.push_back({empty, canonical_label(empty).key});
    for (int k = 1; k <= n && !level.empty(); ++k) {
        std::vector<std::vector<EnumeratedGraph>> parts(
            std::max(1, std::min<int>(opt.jobs, static_cast<int>(level.size()))));
        detail::run_chunked(level.size(), opt.jobs,
                            [&](int chunk, size_t begin, size_t end) {
                                for (size_t i = begin; i < end; ++i)
                                    detail::expand_parent(level[i].graph, f,
                                                          parts[chunk]);
                            });
        std::vector<EnumeratedGraph> next;
        for (auto& p : parts)
            for (auto& e : p) next.push_back(std::move(e));
        level = std::move(next);
    }
    return level;
}

// Independent generator: all labeled graphs, filtered and deduplicated by
// canonical form. Returned sorted by canonical key.
inline std::vector<EnumeratedGraph> enumerate_free_by_labeled_dedup(
    int n, const ForbiddenPattern& f) {
    if (n < 0) throw argument_error("n must be non-negative");
    if (n > 6)
        throw capacity_error("the labeled-dedup generator supports n <= 6");
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) cells.push_back({i, j});
    std::vector<EnumeratedGraph> out;
    std::unordered_set<std::string> seen;
    for (uint64_t mask = 0; mask < (1ull << cells.size()); ++mask) {
        GraphBuilder b(n);
        for (size_t c = 0; c < cells.size(); ++c)
            if ((mask >> c) & 1) b.add_edge(cells[c].first, cells[c].second);
        Graph g = std::move(b).build();
        if (contains(g, f)) continue;
        auto canon = canonicalize(g);
        if (!seen.insert(canon.form.key).second) continue;
        out.push_back({std::move(canon.canonical_graph), canon.form.key});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.canon_key < b.canon_key;
    });
    return out;
}

struct OracleOptions {
    int witness_cap = 10;
    int jobs = 1;
    int max_n = -1;
};

struct OracleResult {
    Count value;
    std::vector<std::string> witnesses;  // canonical graph6, ascending
    uint64_t graphs_enumerated = 0;
    double elapsed_seconds = 0.0;
};

inline OracleResult ex_family_oracle(int n, const std::vector<Graph>& hs,
                                     const ForbiddenPattern& f,
                                     const OracleOptions& opt = {}) {
    if (hs.empty()) throw argument_error("target family must be non-empty");
    auto t0 = std::chrono::steady_clock::now();
    auto graphs = enumerate_free(n, f, EnumerateOptions{opt.jobs, opt.max_n});

    std::vector<Count> counts(graphs.size());
    detail::run_chunked(graphs.size(), opt.jobs,
                        [&](int, size_t begin, size_t end) {
                            for (size_t i = begin; i < end; ++i) {
                                Count total = 0;
                                for (const auto& h : hs)
                                    total += count_copies(graphs[i].graph, h);
                                counts[i] = std::move(total);
                            }
                        });

    OracleResult res;
    res.graphs_enumerated = graphs.size();
    if (!graphs.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < counts.size(); ++i)
            if (counts[i] > counts[best]) best = i;
        res.value = counts[best];
        std::vector<std::string> winners;
        for (size_t i = 0; i < counts.size(); ++i)
            if (counts[i] == res.value) winners.push_back(graphs[i].canon_key);
        std::sort(winners.begin(), winners.end());
        if (static_cast<int>(winners.size()) > opt.witness_cap)
            winners.resize(opt.witness_cap);
        res.witnesses = std::move(winners);
    }
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

inline OracleResult ex_oracle(int n, const Graph& h, const ForbiddenPattern& f,
                              const OracleOptions& opt = {}) {
    return ex_family_oracle(n, {h}, f, opt);
}

}  // namespace turan
