#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qrkit/index.hpp"

namespace qrkit {

/// Relevance judgments. Every qid mentioned in the qrels file has an entry;
/// the set holds the documents judged relevant (absent pairs are implicitly
/// non-relevant).
struct Qrels {
    std::map<std::string, std::set<DocId>> relevant;
};

struct RunEntry {
    DocId doc;
    double score;
};

/// One retrieval run: per-query ranked lists, each strictly descending by
/// (score, then ascending DocId), no duplicate document within a query.
/// `order` keeps qids in input order so writes are reproducible.
struct RunResult {
    std::string tag;
    std::vector<std::string> order;
    std::map<std::string, std::vector<RunEntry>> ranked;
};

/// 11-point interpolated precision at recall 0.0, 0.1, ..., 1.0.
/// Interpolation guarantees points are non-increasing.
struct PRCurve {
    std::array<double, 11> points{};

    bool operator==(const PRCurve&) const = default;
};

enum class ImprovementTag { improvement, no_improvement, no_decision };

char tag_symbol(ImprovementTag tag);

/// |relevant among the top k| / k. The denominator stays k even when fewer
/// than k documents were retrieved.
double precision_at_k(const std::vector<DocId>& ranked, const std::set<DocId>& rel,
                      std::size_t k);

/// Standard max-over-suffix interpolation:
/// p_i = max{precision at rank r : recall at rank r >= i/10}, 0 when no rank
/// reaches that recall. Throws DataError when `rel` is empty.
PRCurve interpolated_pr_curve(const std::vector<DocId>& ranked, const std::set<DocId>& rel);

/// "+" iff `after` is strictly above `before` at all 11 points, "-" iff
/// strictly below at all 11; anything else (equality or crossing) is "X".
ImprovementTag classify_improvement(const PRCurve& before, const PRCurve& after);

/// Counts and whole-percent shares (round half up) per tag.
struct TagCounts {
    std::size_t n_improvement = 0;
    std::size_t n_no_improvement = 0;
    std::size_t n_no_decision = 0;
    int pct_improvement = 0;
    int pct_no_improvement = 0;
    int pct_no_decision = 0;

    std::size_t total() const { return n_improvement + n_no_improvement + n_no_decision; }
};

TagCounts aggregate_classification(const std::vector<ImprovementTag>& tags);

struct QueryEval {
    std::string qid;
    std::size_t n_rel = 0;
    std::size_t n_ret = 0;
    std::map<std::size_t, double> p_at;
    PRCurve curve;
};

struct EvalReport {
    std::string run_tag;
    std::vector<std::size_t> k_levels;
    std::vector<QueryEval> per_query;  // run order
    std::map<std::size_t, double> mean_p_at;
    PRCurve mean_curve;
    std::vector<std::string> warnings;
};

/// Score a run against judgments. Queries in the run that are missing from
/// the qrels or have zero relevant documents are excluded from the means and
/// reported in `warnings`. Throws DataError when nothing is evaluable.
EvalReport evaluate_run(const RunResult& run, const Qrels& qrels,
                        const std::vector<std::size_t>& k_levels);

struct QueryComparison {
    std::string qid;
    ImprovementTag tag;
};

struct ComparisonReport {
    std::string baseline_tag;
    std::string variant_tag;
    std::vector<std::size_t> k_levels;
    std::vector<QueryComparison> per_query;  // baseline order
    TagCounts counts;
    std::map<std::size_t, double> baseline_mean_p_at;
    std::map<std::size_t, double> variant_mean_p_at;
    std::map<std::size_t, double> mean_p_at_delta;  // variant - baseline
    PRCurve baseline_mean_curve;
    PRCurve variant_mean_curve;
};

/// Per-query improvement classification of `variant` against `baseline`.
/// Both reports must cover the same query set and k levels; a mismatch
/// throws DataError listing the difference.
ComparisonReport compare_runs(const EvalReport& baseline, const EvalReport& variant);

}  // namespace qrkit
