#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "turan/formulas.hpp"

using namespace turan;

TEST_CASE("cliques_in_turan examples") {
    CHECK(cliques_in_turan(6, 3, 3) == 8);
    CHECK(cliques_in_turan(5, 2, 2) == 6);
    CHECK(cliques_in_turan(9, 4, 7) == 0);
    CHECK(cliques_in_turan(9, 4, 0) == 1);
    CHECK(cliques_in_turan(5, 8, 3) == 10);  // degenerate: K_5
}

TEST_CASE("closed form matches direct counting", "[property]") {
    for (int n = 0; n <= 30; n += 3)
        for (int r = 1; r <= 6; ++r)
            for (int k = 0; k <= 8; ++k)
                CHECK(cliques_in_turan(n, r, k) ==
                      count_cliques(turan_graph(n, r), k));
}

TEST_CASE("closed form handles large n without overflow") {
    Count v = cliques_in_turan(3000, 8, 8);  // 375^8 exceeds 64 bits
    CHECK(v == ipow(Count(375), 8));
    CHECK(v > Count(std::numeric_limits<uint64_t>::max()));
}

TEST_CASE("f_value") {
    CHECK(f_value(10, 5, 1, 1) == 9);
    CHECK(f_value(10, 4, 1, 1) == 6);
    CHECK_THROWS_AS(f_value(10, 3, 1, 1), argument_error);   // r > s+t+1 fails
    CHECK_THROWS_AS(f_value(4, 5, 1, 1), argument_error);    // n > 2t+s+1 fails
}

TEST_CASE("f_value equals the construction count", "[property]") {
    for (int r = 3; r <= 6; ++r)
        for (int s = 0; s + 3 <= r; ++s)
            for (int t = 1; s + t + 1 < r; ++t)
                for (int n = s + 2 * t + 2; n <= 24; n += 5) {
                    Graph g = clique_join_turan(s + 2 * t + 1, r - s - t - 1, n);
                    CHECK(f_value(n, r, s, t) == count_cliques(g, r + t));
                }
}

TEST_CASE("superadditivity of f", "[property]") {
    for (int r = 3; r <= 7; ++r)
        for (int s = 0; s + 3 <= r; ++s)
            for (int t = 1; s + t + 1 < r; ++t) {
                int lo = 2 * t + s + 2;
                for (int n1 = lo; n1 <= 30; n1 += 3)
                    for (int n2 = n1; n2 <= 30; n2 += 3)
                        CHECK(f_value(n1, r, s, t) + f_value(n2, r, s, t) <=
                              f_value(n1 + n2, r, s, t));
            }
}

TEST_CASE("predicted values for the worked cases") {
    CHECK(predicted_ex({TheoremId::Thm1i, {.n = 7, .r = 3, .k = 2}}).value == 15);
    CHECK(predicted_ex({TheoremId::Thm3, {.n = 7, .r = 3, .k = 2}}).value == 13);
    CHECK(predicted_ex({TheoremId::Thm2iii, {.n = 10, .r = 5, .t = 1}}).value ==
          f_value(10, 5, 1, 1));
    CHECK(predicted_ex({TheoremId::Br1Edges, {.n = 7, .r = 3}}).value == 13);
    CHECK(predicted_ex({TheoremId::MoonEdges, {.n = 6, .r = 3, .k = 2}}).value ==
          11);
}

TEST_CASE("predicted zykov equals the closed form", "[property]") {
    for (int r = 3; r <= 5; ++r)
        for (int k = 2; k < r; ++k)
            for (int n = r; n <= 12; ++n)
                CHECK(predicted_ex({TheoremId::Zykov, {.n = n, .r = r, .k = k}})
                          .value == cliques_in_turan(n, r - 1, k));
}

TEST_CASE("predicted constructions pass their own freeness checks") {
    std::vector<TheoremCase> cases = {
        {TheoremId::Thm1i, {.n = 9, .r = 3, .k = 2}},
        {TheoremId::Thm1ii, {.n = 9, .r = 3, .k = 4}},
        {TheoremId::Thm2Lower, {.n = 12, .r = 5, .s = 1, .t = 1}},
        {TheoremId::Thm2iii, {.n = 12, .r = 5, .t = 1}},
        {TheoremId::Thm3, {.n = 9, .r = 4, .k = 3}},
        {TheoremId::Thm4, {.n = 8, .a = 2, .b = 2}},
        {TheoremId::Zykov, {.n = 9, .r = 4, .k = 2}},
        {TheoremId::MoonEdges, {.n = 9, .r = 3, .k = 2}},
        {TheoremId::PropKrr1, {.n = 9, .r = 3}},
        {TheoremId::Br1Edges, {.n = 9, .r = 3}},
    };
    for (const auto& c : cases) {
        Prediction pred = predicted_ex(c);
        INFO(theorem_id_name(c.id));
        CHECK_FALSE(contains(pred.graph, pred.forbidden));
        CHECK(pred.value > 0);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(predicted_ex({TheoremId::Thm1i, {.n = 7, .r = 3, .k = 3}}),
                    argument_error);
    CHECK_THROWS_AS(predicted_ex({TheoremId::Thm1i, {.n = 7, .r = 3}}),
                    argument_error);  // missing k
    CHECK_THROWS_AS(predicted_ex({TheoremId::Thm2iii, {.n = 10, .r = 4, .t = 1}}),
                    argument_error);  // t+3 < r fails
    CHECK_THROWS_AS(predicted_ex({TheoremId::Zykov, {.n = 4, .r = 5, .k = 2}}),
                    argument_error);  // r <= n fails
    CHECK_THROWS_AS(predicted_ex({TheoremId::Thm4, {.n = 8, .a = 3, .b = 2}}),
                    argument_error);  // a <= b fails
    // k = 2r-1 leaves no Turán factor: only n = 2k-2r+1 is meaningful
    CHECK_THROWS_AS(predicted_ex({TheoremId::Thm1ii, {.n = 7, .r = 3, .k = 5}}),
                    argument_error);
    CHECK(predicted_ex({TheoremId::Thm1ii, {.n = 5, .r = 3, .k = 5}}).value ==
          1);
}

TEST_CASE("best bipartite plus edge") {
    auto r22 = best_bipartite_plus_edge(8, 2, 2);
    CHECK(r22.m == 4);
    CHECK(r22.value == 36);

    auto r11 = best_bipartite_plus_edge(6, 1, 1);
    CHECK(r11.m == 3);
    CHECK(r11.value == 10);

    auto r12 = best_bipartite_plus_edge(8, 1, 2);
    CHECK(r12.m == 4);
    CHECK(r12.value == 56);

    CHECK_THROWS_AS(best_bipartite_plus_edge(3, 2, 2), argument_error);
}

TEST_CASE("for a,b >= 2 the extra edge is in no copy", "[property]") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}})
        for (int n = a + b; n <= 11; ++n) {
            auto opt = best_bipartite_plus_edge(n, a, b);
            Count plain_best = 0;
            for (int m = 1; m < n; ++m) {
                Count v = count_copies(complete_multipartite({m, n - m}),
                                       biclique(a, b));
                if (v > plain_best) plain_best = v;
            }
            CHECK(opt.value == plain_best);
        }
}
