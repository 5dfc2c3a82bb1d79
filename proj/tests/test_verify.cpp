#include <catch2/catch_amalgamated.hpp>

#include "turan/verify.hpp"

using namespace turan;

TEST_CASE("zykov suite: every oracle row is an exact match") {
    VerifyReport r = verify(Suite::Zykov, {.oracle_limit = 6, .jobs = 2});
    CHECK(r.predicted_greater == 0);
    CHECK(r.oracle_greater == 0);
    for (const auto& row : r.rows)
        if (row.oracle) CHECK(row.relation == Relation::Equal);
}

TEST_CASE("thm3 suite at small n matches the added-edge formula") {
    VerifyReport r = verify(Suite::Thm3, {.oracle_limit = 7});
    for (const auto& row : r.rows) {
        if (!row.oracle) continue;
        long long n = 0, rr = 0, k = 0;
        for (auto& [key, v] : row.params) {
            if (key == "n") n = v;
            if (key == "r") rr = v;
            if (key == "k") k = v;
        }
        if (rr == 3 && k == 2) {
            CHECK(row.relation == Relation::Equal);
            CHECK(*row.oracle == Count(n * n / 4 + 1));
        }
        CHECK(row.relation != Relation::PredictedGreater);
    }
}

TEST_CASE("every equal row carries a witness") {
    VerifyReport r = verify(Suite::Krr1, {.oracle_limit = 7});
    for (const auto& row : r.rows)
        if (row.relation == Relation::Equal) CHECK(!row.witnesses.empty());
}

TEST_CASE("f_props suite passes") {
    VerifyReport r = verify(Suite::FProps, {});
    CHECK(r.predicted_greater == 0);
    CHECK(!r.rows.empty());
    for (const auto& row : r.rows) CHECK(row.relation == Relation::Equal);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
    auto a = report_json(verify(Suite::Thm4, {.oracle_limit = 6, .jobs = 1}));
    auto b = report_json(verify(Suite::Thm4, {.oracle_limit = 6, .jobs = 3}));
    CHECK(a.dump() == b.dump());

    auto c = report_json(verify(Suite::FProps, {.jobs = 2}));
    auto d = report_json(verify(Suite::FProps, {.jobs = 4}));
    CHECK(c.dump() == d.dump());
}

TEST_CASE("report renderers") {
    VerifyReport r = verify(Suite::FProps, {});
    auto j = report_json(r);
    CHECK(j["suite"] == "f_props");
    CHECK(j["rows"].size() == r.rows.size());
    CHECK(j["summary"]["predicted_greater"] == 0);
    std::string md = report_markdown(r);
    CHECK(md.find("| case |") != std::string::npos);
    std::string csv = report_csv(r);
    CHECK(csv.find("case,params,") == 0);
}

TEST_CASE("suite names round-trip") {
    for (Suite s : {Suite::Zykov, Suite::Thm1, Suite::Thm2, Suite::Thm3,
                    Suite::Thm4, Suite::Krr1, Suite::FProps})
        CHECK(parse_suite(suite_name(s)) == s);
    CHECK(!parse_suite("nope").has_value());
}
