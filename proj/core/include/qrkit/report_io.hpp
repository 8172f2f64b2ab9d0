#pragma once

#include <filesystem>
#include <iosfwd>

#include "qrkit/eval.hpp"

namespace qrkit {

/// CSV: header, one row per query, then a `mean` summary row.
/// Columns: qid,n_rel,n_ret,p@<k>...,ip@0.0..ip@1.0 (six decimals).
void write_eval_csv(const std::filesystem::path& path, const EvalReport& report);

/// JSON mirror of EvalReport (run, k_levels, queries[], mean, warnings).
void write_eval_json(const std::filesystem::path& path, const EvalReport& report);

/// CSV with columns qid,tag,count,percent: per-query rows carry qid+tag,
/// aggregate rows use qid `all`.
void write_comparison_csv(const std::filesystem::path& path, const ComparisonReport& report);

/// JSON mirror of ComparisonReport.
void write_comparison_json(const std::filesystem::path& path, const ComparisonReport& report);

/// Console summary: mean P@k row and the 11-point mean curve.
void print_eval_summary(std::ostream& os, const EvalReport& report);

/// Console comparison: per-query tag table, aggregate counts, P@k deltas,
/// and the two mean curves side by side.
void print_comparison(std::ostream& os, const ComparisonReport& report);

}  // namespace qrkit
