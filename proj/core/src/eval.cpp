#include "qrkit/eval.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "qrkit/errors.hpp"

namespace qrkit {

char tag_symbol(ImprovementTag tag) {
    switch (tag) {
        case ImprovementTag::improvement: return '+';
        case ImprovementTag::no_improvement: return '-';
        case ImprovementTag::no_decision: return 'X';
    }
    return '?';
}

double precision_at_k(const std::vector<DocId>& ranked, const std::set<DocId>& rel,
                      std::size_t k) {
    if (k < 1) throw std::invalid_argument("precision_at_k: k must be >= 1");
    std::size_t hits = 0;
    const std::size_t depth = std::min(k, ranked.size());
    for (std::size_t i = 0; i < depth; ++i) {
        if (rel.contains(ranked[i])) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(k);
}

PRCurve interpolated_pr_curve(const std::vector<DocId>& ranked, const std::set<DocId>& rel) {
    if (rel.empty()) throw DataError("query has no relevant documents");
    const std::size_t n = ranked.size();
    const std::size_t n_rel = rel.size();

    std::vector<double> prec(n);
    std::vector<std::size_t> rel_at(n);
    std::size_t hits = 0;
    for (std::size_t r = 0; r < n; ++r) {
        if (rel.contains(ranked[r])) ++hits;
        rel_at[r] = hits;
        prec[r] = static_cast<double>(hits) / static_cast<double>(r + 1);
    }
    // suffix maxima: best precision at or after each rank
    std::vector<double> best(n);
    for (std::size_t r = n; r-- > 0;) {
        best[r] = prec[r];
        if (r + 1 < n) best[r] = std::max(best[r], best[r + 1]);
    }

    PRCurve curve;
    for (std::size_t level = 0; level <= 10; ++level) {
        // recall(r) >= level/10  <=>  10 * rel_at[r] >= level * n_rel, exactly
        double p = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            if (10 * rel_at[r] >= level * n_rel) {
                p = best[r];
                break;
            }
        }
        curve.points[level] = p;
    }
    return curve;
}

ImprovementTag classify_improvement(const PRCurve& before, const PRCurve& after) {
    bool all_above = true;
    bool all_below = true;
    for (std::size_t i = 0; i < after.points.size(); ++i) {
        if (!(after.points[i] > before.points[i])) all_above = false;
        if (!(after.points[i] < before.points[i])) all_below = false;
    }
    if (all_above) return ImprovementTag::improvement;
    if (all_below) return ImprovementTag::no_improvement;
    return ImprovementTag::no_decision;
}

TagCounts aggregate_classification(const std::vector<ImprovementTag>& tags) {
    if (tags.empty()) throw std::invalid_argument("aggregate_classification: empty tag list");
    TagCounts c;
    for (auto t : tags) {
        switch (t) {
            case ImprovementTag::improvement: ++c.n_improvement; break;
            case ImprovementTag::no_improvement: ++c.n_no_improvement; break;
            case ImprovementTag::no_decision: ++c.n_no_decision; break;
        }
    }
    const auto pct = [n = tags.size()](std::size_t count) {
        // round half up, in exact integer arithmetic
        return static_cast<int>((200 * count + n) / (2 * n));
    };
    c.pct_improvement = pct(c.n_improvement);
    c.pct_no_improvement = pct(c.n_no_improvement);
    c.pct_no_decision = pct(c.n_no_decision);
    return c;
}

EvalReport evaluate_run(const RunResult& run, const Qrels& qrels,
                        const std::vector<std::size_t>& k_levels) {
    EvalReport report;
    report.run_tag = run.tag;
    report.k_levels = k_levels;

    for (const auto& qid : run.order) {
        const auto qit = qrels.relevant.find(qid);
        if (qit == qrels.relevant.end()) {
            report.warnings.push_back("query " + qid + ": not in qrels; excluded from means");
            continue;
        }
        if (qit->second.empty()) {
            report.warnings.push_back("query " + qid +
                                      ": no relevant documents; excluded from means");
            continue;
        }
        const auto& entries = run.ranked.at(qid);
        std::vector<DocId> ranked;
        ranked.reserve(entries.size());
        for (const auto& e : entries) ranked.push_back(e.doc);

        QueryEval qe;
        qe.qid = qid;
        qe.n_rel = qit->second.size();
        qe.n_ret = ranked.size();
        for (auto k : k_levels) qe.p_at[k] = precision_at_k(ranked, qit->second, k);
        qe.curve = interpolated_pr_curve(ranked, qit->second);
        report.per_query.push_back(std::move(qe));
    }

    if (report.per_query.empty()) {
        throw DataError("no queries in common between run '" + run.tag + "' and qrels");
    }

    const auto n = static_cast<double>(report.per_query.size());
    for (auto k : k_levels) {
        double sum = 0.0;
        for (const auto& qe : report.per_query) sum += qe.p_at.at(k);
        report.mean_p_at[k] = sum / n;
    }
    for (std::size_t i = 0; i <= 10; ++i) {
        double sum = 0.0;
        for (const auto& qe : report.per_query) sum += qe.curve.points[i];
        report.mean_curve.points[i] = sum / n;
    }
    return report;
}

ComparisonReport compare_runs(const EvalReport& baseline, const EvalReport& variant) {
    std::set<std::string> base_qids;
    std::set<std::string> var_qids;
    for (const auto& qe : baseline.per_query) base_qids.insert(qe.qid);
    for (const auto& qe : variant.per_query) var_qids.insert(qe.qid);
    if (base_qids != var_qids) {
        std::ostringstream os;
        os << "query sets differ between runs;";
        os << " only in " << baseline.run_tag << ":";
        for (const auto& q : base_qids) {
            if (!var_qids.contains(q)) os << " " << q;
        }
        os << "; only in " << variant.run_tag << ":";
        for (const auto& q : var_qids) {
            if (!base_qids.contains(q)) os << " " << q;
        }
        throw DataError(os.str());
    }
    if (baseline.k_levels != variant.k_levels) {
        throw DataError("k levels differ between the two evaluations");
    }

    std::unordered_map<std::string, const QueryEval*> var_by_qid;
    for (const auto& qe : variant.per_query) var_by_qid[qe.qid] = &qe;

    ComparisonReport rep;
    rep.baseline_tag = baseline.run_tag;
    rep.variant_tag = variant.run_tag;
    rep.k_levels = baseline.k_levels;
    std::vector<ImprovementTag> tags;
    for (const auto& qe : baseline.per_query) {
        const auto tag = classify_improvement(qe.curve, var_by_qid.at(qe.qid)->curve);
        rep.per_query.push_back({qe.qid, tag});
        tags.push_back(tag);
    }
    rep.counts = aggregate_classification(tags);
    rep.baseline_mean_p_at = baseline.mean_p_at;
    rep.variant_mean_p_at = variant.mean_p_at;
    for (auto k : rep.k_levels) {
        rep.mean_p_at_delta[k] = variant.mean_p_at.at(k) - baseline.mean_p_at.at(k);
    }
    rep.baseline_mean_curve = baseline.mean_curve;
    rep.variant_mean_curve = variant.mean_curve;
    return rep;
}

}  // namespace qrkit
