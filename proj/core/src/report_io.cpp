#include "qrkit/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include <json.hpp>

#include "qrkit/errors.hpp"

namespace qrkit {

namespace {

std::string fixed(double v, int decimals) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write: " + path.string());
    return out;
}

nlohmann::json curve_json(const PRCurve& c) {
    return nlohmann::json(std::vector<double>(c.points.begin(), c.points.end()));
}

nlohmann::json p_at_json(const std::map<std::size_t, double>& p_at) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : p_at) j[std::to_string(k)] = v;
    return j;
}

}  // namespace

void write_eval_csv(const std::filesystem::path& path, const EvalReport& report) {
    auto out = open_out(path);
    out << "qid,n_rel,n_ret";
    for (auto k : report.k_levels) out << ",p@" << k;
    for (int i = 0; i <= 10; ++i) out << ",ip@" << fixed(i / 10.0, 1);
    out << "\n";
    for (const auto& qe : report.per_query) {
        out << qe.qid << ',' << qe.n_rel << ',' << qe.n_ret;
        for (auto k : report.k_levels) out << ',' << fixed(qe.p_at.at(k), 6);
        for (double p : qe.curve.points) out << ',' << fixed(p, 6);
        out << "\n";
    }
    out << "mean,,";
    for (auto k : report.k_levels) out << ',' << fixed(report.mean_p_at.at(k), 6);
    for (double p : report.mean_curve.points) out << ',' << fixed(p, 6);
    out << "\n";
}

void write_eval_json(const std::filesystem::path& path, const EvalReport& report) {
    nlohmann::json j;
    j["run"] = report.run_tag;
    j["k_levels"] = report.k_levels;
    j["n_queries"] = report.per_query.size();
    auto queries = nlohmann::json::array();
    for (const auto& qe : report.per_query) {
        nlohmann::json q;
        q["qid"] = qe.qid;
        q["n_rel"] = qe.n_rel;
        q["n_ret"] = qe.n_ret;
        q["p_at"] = p_at_json(qe.p_at);
        q["curve"] = curve_json(qe.curve);
        queries.push_back(std::move(q));
    }
    j["queries"] = std::move(queries);
    j["mean"] = {{"p_at", p_at_json(report.mean_p_at)}, {"curve", curve_json(report.mean_curve)}};
    j["warnings"] = report.warnings;
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

void write_comparison_csv(const std::filesystem::path& path, const ComparisonReport& report) {
    auto out = open_out(path);
    out << "qid,tag,count,percent\n";
    for (const auto& qc : report.per_query) {
        out << qc.qid << ',' << tag_symbol(qc.tag) << ",,\n";
    }
    out << "all,+," << report.counts.n_improvement << ',' << report.counts.pct_improvement
        << "\n";
    out << "all,-," << report.counts.n_no_improvement << ',' << report.counts.pct_no_improvement
        << "\n";
    out << "all,X," << report.counts.n_no_decision << ',' << report.counts.pct_no_decision
        << "\n";
}

void write_comparison_json(const std::filesystem::path& path, const ComparisonReport& report) {
    nlohmann::json j;
    j["baseline"] = report.baseline_tag;
    j["variant"] = report.variant_tag;
    j["k_levels"] = report.k_levels;
    auto queries = nlohmann::json::array();
    for (const auto& qc : report.per_query) {
        queries.push_back({{"qid", qc.qid}, {"tag", std::string(1, tag_symbol(qc.tag))}});
    }
    j["queries"] = std::move(queries);
    j["counts"] = {{"improvement", report.counts.n_improvement},
                   {"no_improvement", report.counts.n_no_improvement},
                   {"no_decision", report.counts.n_no_decision}};
    j["percent"] = {{"improvement", report.counts.pct_improvement},
                    {"no_improvement", report.counts.pct_no_improvement},
                    {"no_decision", report.counts.pct_no_decision}};
    j["baseline_mean"] = {{"p_at", p_at_json(report.baseline_mean_p_at)},
                          {"curve", curve_json(report.baseline_mean_curve)}};
    j["variant_mean"] = {{"p_at", p_at_json(report.variant_mean_p_at)},
                         {"curve", curve_json(report.variant_mean_curve)}};
    j["p_at_delta"] = p_at_json(report.mean_p_at_delta);
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

void print_eval_summary(std::ostream& os, const EvalReport& report) {
    os << "run: " << report.run_tag << "  evaluated queries: " << report.per_query.size()
       << "\n";
    os << "P@k      ";
    for (auto k : report.k_levels) os << "  P@" << k << "=" << fixed(report.mean_p_at.at(k), 3);
    os << "\n";
    os << "recall   ";
    for (int i = 0; i <= 10; ++i) os << ' ' << fixed(i / 10.0, 1) << "  ";
    os << "\nprecision";
    for (double p : report.mean_curve.points) os << ' ' << fixed(p, 3);
    os << "\n";
    for (const auto& w : report.warnings) os << "warning: " << w << "\n";
}

void print_comparison(std::ostream& os, const ComparisonReport& report) {
    os << "baseline: " << report.baseline_tag << "  variant: " << report.variant_tag
       << "  queries: " << report.per_query.size() << "\n";
    os << "qid\ttag\n";
    for (const auto& qc : report.per_query) {
        os << qc.qid << '\t' << tag_symbol(qc.tag) << "\n";
    }
    os << "improvement(+): " << report.counts.n_improvement << " ("
       << report.counts.pct_improvement << "%)  ";
    os << "no improvement(-): " << report.counts.n_no_improvement << " ("
       << report.counts.pct_no_improvement << "%)  ";
    os << "no decision(X): " << report.counts.n_no_decision << " ("
       << report.counts.pct_no_decision << "%)\n";
    os << "P@k delta (variant - baseline):";
    for (auto k : report.k_levels) {
        const double d = report.mean_p_at_delta.at(k);
        os << "  P@" << k << ' ' << (d >= 0 ? "+" : "") << fixed(d, 3);
    }
    os << "\n";
    const std::size_t tag_width =
        std::max(report.baseline_tag.size(), report.variant_tag.size());
    os << "mean curve " << report.baseline_tag << ':'
       << std::string(tag_width - report.baseline_tag.size(), ' ');
    for (double p : report.baseline_mean_curve.points) os << ' ' << fixed(p, 3);
    os << "\nmean curve " << report.variant_tag << ':'
       << std::string(tag_width - report.variant_tag.size(), ' ');
    for (double p : report.variant_mean_curve.points) os << ' ' << fixed(p, 3);
    os << "\n";
}

}  // namespace qrkit
