#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qrkit/analyzer.hpp"
#include "qrkit/expansion.hpp"

namespace qrkit {

/// Everything an experiment needs, assembled from a key-value config file
/// plus command-line flag overrides (flags win).
struct ExperimentConfig {
    std::filesystem::path corpus_dir;
    std::filesystem::path index_dir;
    std::filesystem::path queries_path;
    std::filesystem::path qrels_path;
    std::filesystem::path thesaurus_path;
    std::filesystem::path out;

    AnalyzerConfig analyzer;
    std::filesystem::path stopwords_path;
    /// True when any analyzer setting was given explicitly; query commands
    /// then verify it against the index manifest instead of silently adopting
    /// the manifest's analyzer.
    bool analyzer_explicit = false;

    PrfParams prf;
    std::size_t k_retrieve = 1000;
    std::vector<std::size_t> k_levels = {5, 10, 20, 100};

    std::string tag;  // run tag override; empty means "use the mode name"
    bool dump_expanded = false;
    bool force = false;
};

/// Apply a config file onto `cfg`. Format: `key = value` per line, `#`
/// comments, blank lines ignored; values may be double-quoted. Unknown keys
/// and unparseable values throw UsageError naming the line. Relative paths
/// are resolved against the config file's directory.
void apply_config_file(ExperimentConfig& cfg, const std::filesystem::path& path);

/// Load the stopword file (when one is configured) into
/// `cfg.analyzer.stopwords` and validate parameter ranges. Call after all
/// overrides are in place.
void finalize_config(ExperimentConfig& cfg);

}  // namespace qrkit
