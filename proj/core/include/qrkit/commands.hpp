#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "qrkit/config.hpp"

namespace qrkit {

/// Retrieval modes: plain search, concept-based expansion, pseudo-relevance
/// feedback expansion.
enum class RunMode { sr, cb, prf };

std::string_view mode_name(RunMode m);

/// Throws UsageError on anything but "sr", "cb", "prf".
RunMode parse_mode(std::string_view name);

/// Command entry points. Each validates its inputs, does the work, reports
/// to `out`/`err`, and maps exceptions to exit codes: 0 success, 1 usage
/// errors (UsageError), 2 malformed or inconsistent data (DataError),
/// 3 anything else. `cfg` must already be finalized.

/// Build an index from --corpus into --index. Refuses to overwrite an
/// existing index unless --force is set.
int cmd_index(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

/// Execute queries in the given mode and write a TREC run file to --out.
/// The run tag is the mode name unless cfg.tag overrides it. Queries that
/// analyze to no terms or match no documents are skipped with a warning on
/// `err`; with --dump-expanded the post-expansion queries (all of them) go
/// to `<out>.expanded.tsv`.
int cmd_run(const ExperimentConfig& cfg, RunMode mode, std::ostream& out, std::ostream& err);

/// Score a run file against --qrels; writes `<out>.csv` and `<out>.json`
/// and prints a summary table.
int cmd_eval(const ExperimentConfig& cfg, const std::filesystem::path& run_path,
             std::ostream& out, std::ostream& err);

/// Classify per-query improvement of `variant_path` over `baseline_path`;
/// writes `<out>.csv` and `<out>.json` and prints the comparison table.
int cmd_compare(const ExperimentConfig& cfg, const std::filesystem::path& baseline_path,
                const std::filesystem::path& variant_path, std::ostream& out, std::ostream& err);

}  // namespace qrkit
