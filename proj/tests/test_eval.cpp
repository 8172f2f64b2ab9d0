#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "qrkit/errors.hpp"
#include "qrkit/eval.hpp"
#include "support/oracles.hpp"

using namespace qrkit;

namespace {

PRCurve curve_of(std::initializer_list<double> pts) {
    PRCurve c;
    std::size_t i = 0;
    for (double p : pts) c.points[i++] = p;
    return c;
}

}  // namespace

TEST_CASE("precision at k") {
    const std::vector<DocId> ranked = {"d1", "d2", "d3", "d4"};
    const std::set<DocId> rel = {"d1", "d3", "d9"};
    CHECK(precision_at_k(ranked, rel, 1) == doctest::Approx(1.0));
    CHECK(precision_at_k(ranked, rel, 2) == doctest::Approx(0.5));
    CHECK(precision_at_k(ranked, rel, 3) == doctest::Approx(2.0 / 3.0));
    CHECK(precision_at_k(ranked, rel, 4) == doctest::Approx(0.5));
    // k beyond the retrieved list keeps k as the denominator
    CHECK(precision_at_k(ranked, rel, 8) == doctest::Approx(0.25));
    CHECK(precision_at_k({}, rel, 5) == doctest::Approx(0.0));
    CHECK_THROWS_AS(precision_at_k(ranked, rel, 0), std::invalid_argument);
}

TEST_CASE("interpolated curve on the worked three-document ranking") {
    // ranking R N R with two relevant documents: recall 0.5 at rank 1
    // (precision 1.0), recall 1.0 at rank 3 (precision 2/3)
    const std::vector<DocId> ranked = {"r1", "n1", "r2"};
    const std::set<DocId> rel = {"r1", "r2"};
    const auto c = interpolated_pr_curve(ranked, rel);
    for (std::size_t i = 0; i <= 5; ++i) CHECK(c.points[i] == doctest::Approx(1.0));
    for (std::size_t i = 6; i <= 10; ++i) CHECK(c.points[i] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("interpolated curve edge cases") {
    SUBCASE("unreached recall levels are zero") {
        // only one of three relevant docs is retrieved: recall tops out at 1/3
        const auto c = interpolated_pr_curve({"r1", "n1"}, {"r1", "r2", "r3"});
        CHECK(c.points[0] == doctest::Approx(1.0));
        CHECK(c.points[3] == doctest::Approx(1.0));  // 10*1 >= 3*3
        for (std::size_t i = 4; i <= 10; ++i) CHECK(c.points[i] == doctest::Approx(0.0));
    }

    SUBCASE("empty ranking yields an all-zero curve") {
        const auto c = interpolated_pr_curve({}, {"r1"});
        for (double p : c.points) CHECK(p == doctest::Approx(0.0));
    }

    SUBCASE("no relevant documents is an error") {
        CHECK_THROWS_AS(interpolated_pr_curve({"d1"}, {}), DataError);
    }

    SUBCASE("recall threshold uses exact arithmetic") {
        // 3 relevant, 1 found at rank 1: recall 1/3 covers level 0.3 exactly
        // when 10*1 >= 3*3, and fails level 0.4 since 10*1 < 4*3
        const auto c = interpolated_pr_curve({"r1"}, {"r1", "r2", "r3"});
        CHECK(c.points[3] == doctest::Approx(1.0));
        CHECK(c.points[4] == doctest::Approx(0.0));
    }
}

TEST_CASE("interpolated curve matches the reference and is monotone") {
    std::mt19937 rng(31337);
    for (int round = 0; round < 200; ++round) {
        const auto c = oracle::random_ranked_case(rng);
        const auto got = interpolated_pr_curve(c.ranked, c.rel);
        const auto want = oracle::pr_curve(c.ranked, c.rel);
        for (std::size_t i = 0; i <= 10; ++i) {
            CHECK(got.points[i] == doctest::Approx(want[i]).epsilon(1e-12));
        }
        for (std::size_t i = 1; i <= 10; ++i) {
            CHECK(got.points[i] <= got.points[i - 1] + 1e-15);
        }
        for (std::size_t k = 1; k <= 12; ++k) {
            CHECK(precision_at_k(c.ranked, c.rel, k) ==
                  doctest::Approx(oracle::precision_at_k(c.ranked, c.rel, k)).epsilon(1e-12));
        }
    }
}

TEST_CASE("improvement classification is strict at all eleven points") {
    const auto base = curve_of({1, 1, 1, .8, .8, .6, .6, .4, .4, .2, .1});
    auto up = base;
    auto down = base;
    for (auto& p : up.points) p += 0.05;
    for (auto& p : down.points) p -= 0.05;

    CHECK(classify_improvement(base, up) == ImprovementTag::improvement);
    CHECK(classify_improvement(base, down) == ImprovementTag::no_improvement);
    CHECK(classify_improvement(base, base) == ImprovementTag::no_decision);

    // equality at a single point forces X
    auto almost = up;
    almost.points[7] = base.points[7];
    CHECK(classify_improvement(base, almost) == ImprovementTag::no_decision);

    // crossing curves force X
    auto cross = base;
    cross.points[0] += 0.1;
    cross.points[10] -= 0.05;
    CHECK(classify_improvement(base, cross) == ImprovementTag::no_decision);

    CHECK(tag_symbol(ImprovementTag::improvement) == '+');
    CHECK(tag_symbol(ImprovementTag::no_improvement) == '-');
    CHECK(tag_symbol(ImprovementTag::no_decision) == 'X');
}

TEST_CASE("classification aggregation over fifty queries") {
    const auto tags = [](std::size_t plus, std::size_t minus, std::size_t x) {
        std::vector<ImprovementTag> v;
        v.insert(v.end(), plus, ImprovementTag::improvement);
        v.insert(v.end(), minus, ImprovementTag::no_improvement);
        v.insert(v.end(), x, ImprovementTag::no_decision);
        return v;
    };

    SUBCASE("7/29/14 gives 14/58/28 percent") {
        const auto c = aggregate_classification(tags(7, 29, 14));
        CHECK(c.n_improvement == 7);
        CHECK(c.n_no_improvement == 29);
        CHECK(c.n_no_decision == 14);
        CHECK(c.pct_improvement == 14);
        CHECK(c.pct_no_improvement == 58);
        CHECK(c.pct_no_decision == 28);
        CHECK(c.total() == 50);
    }

    SUBCASE("9/14/27 gives 18/28/54 percent") {
        const auto c = aggregate_classification(tags(9, 14, 27));
        CHECK(c.pct_improvement == 18);
        CHECK(c.pct_no_improvement == 28);
        CHECK(c.pct_no_decision == 54);
    }

    SUBCASE("percentages round half up") {
        const auto eighth = aggregate_classification(tags(1, 7, 0));
        CHECK(eighth.pct_improvement == 13);     // 12.5 -> 13
        CHECK(eighth.pct_no_improvement == 88);  // 87.5 -> 88
        const auto third = aggregate_classification(tags(1, 2, 0));
        CHECK(third.pct_improvement == 33);
        CHECK(third.pct_no_improvement == 67);
    }

    SUBCASE("empty input is an error") {
        CHECK_THROWS_AS(aggregate_classification({}), std::invalid_argument);
    }
}

namespace {

RunResult small_run(std::string tag) {
    RunResult run;
    run.tag = std::move(tag);
    run.order = {"q1", "q2", "q3"};
    run.ranked["q1"] = {{"a", 3.0}, {"b", 2.0}, {"c", 1.0}};
    run.ranked["q2"] = {{"d", 2.0}, {"e", 1.0}};
    run.ranked["q3"] = {{"f", 1.0}};  // not judged
    return run;
}

Qrels small_qrels() {
    Qrels q;
    q.relevant["q1"] = {"a", "c"};
    q.relevant["q2"] = {"e", "x"};
    q.relevant["q4"] = {"y"};  // judged but never retrieved
    return q;
}

}  // namespace

TEST_CASE("evaluate_run computes per-query metrics and means") {
    const auto report = evaluate_run(small_run("sr"), small_qrels(), {1, 2});
    CHECK(report.run_tag == "sr");
    REQUIRE(report.per_query.size() == 2);

    const auto& q1 = report.per_query[0];
    CHECK(q1.qid == "q1");
    CHECK(q1.n_rel == 2);
    CHECK(q1.n_ret == 3);
    CHECK(q1.p_at.at(1) == doctest::Approx(1.0));
    CHECK(q1.p_at.at(2) == doctest::Approx(0.5));
    // ranking R N R over 2 relevant: the worked curve from above
    CHECK(q1.curve.points[0] == doctest::Approx(1.0));
    CHECK(q1.curve.points[10] == doctest::Approx(2.0 / 3.0));

    const auto& q2 = report.per_query[1];
    CHECK(q2.p_at.at(1) == doctest::Approx(0.0));
    CHECK(q2.p_at.at(2) == doctest::Approx(0.5));

    CHECK(report.mean_p_at.at(1) == doctest::Approx(0.5));
    CHECK(report.mean_p_at.at(2) == doctest::Approx(0.5));
    CHECK(report.mean_curve.points[0] ==
          doctest::Approx((1.0 + q2.curve.points[0]) / 2.0));

    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].find("q3") != std::string::npos);
    CHECK(report.warnings[0].find("not in qrels") != std::string::npos);
}

TEST_CASE("evaluate_run flags queries with empty relevant sets") {
    RunResult run;
    run.tag = "t";
    run.order = {"q1", "q2"};
    run.ranked["q1"] = {{"a", 1.0}};
    run.ranked["q2"] = {{"b", 1.0}};
    Qrels qrels;
    qrels.relevant["q1"] = {"a"};
    qrels.relevant["q2"] = {};  // judged, nothing relevant
    const auto report = evaluate_run(run, qrels, {1});
    CHECK(report.per_query.size() == 1);
    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].find("no relevant documents") != std::string::npos);
}

TEST_CASE("evaluate_run with no evaluable queries is an error") {
    RunResult run;
    run.tag = "t";
    run.order = {"q9"};
    run.ranked["q9"] = {{"a", 1.0}};
    CHECK_THROWS_AS(evaluate_run(run, small_qrels(), {1}), DataError);
}

TEST_CASE("compare_runs classifies per query and aggregates") {
    // Baselines must sit strictly below 1.0 everywhere, otherwise a strict
    // improvement at all eleven points is impossible by construction.
    Qrels qrels;
    qrels.relevant["q1"] = {"a", "c"};
    qrels.relevant["q2"] = {"e"};

    RunResult base_run;
    base_run.tag = "sr";
    base_run.order = {"q1", "q2"};
    base_run.ranked["q1"] = {{"b", 3.0}, {"a", 2.0}, {"c", 1.0}};  // N R R -> 2/3 flat
    base_run.ranked["q2"] = {{"d", 2.0}, {"e", 1.0}};              // N R -> 1/2 flat
    const auto base = evaluate_run(base_run, qrels, {1, 2});

    RunResult var_run;
    var_run.tag = "cb";
    var_run.order = {"q1", "q2"};
    var_run.ranked["q1"] = {{"a", 3.0}, {"c", 2.0}, {"b", 1.0}};  // R R N -> 1.0 flat
    var_run.ranked["q2"] = {{"e", 2.0}, {"d", 1.0}};              // R N -> 1.0 flat
    const auto var = evaluate_run(var_run, qrels, {1, 2});

    const auto cmp = compare_runs(base, var);
    CHECK(cmp.baseline_tag == "sr");
    CHECK(cmp.variant_tag == "cb");
    REQUIRE(cmp.per_query.size() == 2);
    CHECK(cmp.per_query[0].qid == "q1");
    CHECK(cmp.per_query[0].tag == ImprovementTag::improvement);
    CHECK(cmp.per_query[1].qid == "q2");
    CHECK(cmp.per_query[1].tag == ImprovementTag::improvement);
    CHECK(cmp.counts.n_improvement == 2);
    CHECK(cmp.counts.pct_improvement == 100);
    CHECK(cmp.mean_p_at_delta.at(1) == doctest::Approx(1.0));
    CHECK(cmp.mean_p_at_delta.at(2) == doctest::Approx(0.25));

    SUBCASE("swapping the arguments flips the verdict") {
        const auto flipped = compare_runs(var, base);
        CHECK(flipped.per_query[0].tag == ImprovementTag::no_improvement);
        CHECK(flipped.per_query[1].tag == ImprovementTag::no_improvement);
        CHECK(flipped.counts.pct_no_improvement == 100);
    }

    SUBCASE("identical runs yield no decision everywhere") {
        const auto same = compare_runs(base, base);
        for (const auto& pq : same.per_query) {
            CHECK(pq.tag == ImprovementTag::no_decision);
        }
        CHECK(same.counts.n_no_decision == 2);
    }

    SUBCASE("query set mismatch is an error") {
        Qrels wider = qrels;
        wider.relevant["q4"] = {"y"};
        auto extra = base_run;
        extra.order.push_back("q4");
        extra.ranked["q4"] = {{"y", 1.0}};
        const auto ev = evaluate_run(extra, wider, {1, 2});
        try {
            compare_runs(base, ev);
            FAIL("expected DataError");
        } catch (const DataError& e) {
            CHECK(std::string(e.what()).find("q4") != std::string::npos);
        }
    }

    SUBCASE("k level mismatch is an error") {
        const auto other = evaluate_run(base_run, qrels, {1});
        CHECK_THROWS_AS(compare_runs(base, other), DataError);
    }
}
