#include "qrkit/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "qrkit/errors.hpp"

namespace qrkit {
namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t lineno, const std::string& msg) {
    throw UsageError(path.string() + ":" + std::to_string(lineno) + ": " + msg);
}

std::string unquote(std::string value, const std::filesystem::path& path, std::size_t lineno) {
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
        return value.substr(1, value.size() - 2);
    }
    if (!value.empty() && value.front() == '"') {
        fail(path, lineno, "unterminated quoted value");
    }
    return value;
}

bool parse_bool(const std::string& value, const std::filesystem::path& path, std::size_t lineno) {
    if (value == "true") return true;
    if (value == "false") return false;
    fail(path, lineno, "expected true or false, got '" + value + "'");
}

std::size_t parse_size(const std::string& value, const std::filesystem::path& path, std::size_t lineno) {
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        })) {
        fail(path, lineno, "expected a non-negative integer, got '" + value + "'");
    }
    try {
        return static_cast<std::size_t>(std::stoull(value));
    } catch (const std::out_of_range&) {
        fail(path, lineno, "integer out of range: '" + value + "'");
    }
}

std::vector<std::size_t> parse_size_list(const std::string& value, const std::filesystem::path& path,
                                         std::size_t lineno) {
    std::vector<std::size_t> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) fail(path, lineno, "empty element in integer list");
        out.push_back(parse_size(item, path, lineno));
    }
    if (out.empty()) fail(path, lineno, "expected a comma-separated integer list");
    return out;
}

std::filesystem::path resolve(const std::string& value, const std::filesystem::path& base) {
    std::filesystem::path p(value);
    if (p.is_absolute()) return p;
    return base / p;
}

// Cut a trailing comment, respecting double quotes.
std::string strip_comment(const std::string& line) {
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_quotes = !in_quotes;
        if (line[i] == '#' && !in_quotes) return line.substr(0, i);
    }
    return line;
}

}  // namespace

void apply_config_file(ExperimentConfig& cfg, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path.string());
    const std::filesystem::path base = path.has_parent_path() ? path.parent_path() : ".";

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (lineno == 1 && raw.size() >= 3 && raw.compare(0, 3, "\xEF\xBB\xBF") == 0) raw.erase(0, 3);
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(path, lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = unquote(trim(line.substr(eq + 1)), path, lineno);
        if (key.empty()) fail(path, lineno, "missing key before '='");

        if (key == "corpus") {
            cfg.corpus_dir = resolve(value, base);
        } else if (key == "index") {
            cfg.index_dir = resolve(value, base);
        } else if (key == "queries") {
            cfg.queries_path = resolve(value, base);
        } else if (key == "qrels") {
            cfg.qrels_path = resolve(value, base);
        } else if (key == "thesaurus") {
            cfg.thesaurus_path = resolve(value, base);
        } else if (key == "out") {
            cfg.out = resolve(value, base);
        } else if (key == "stopwords") {
            cfg.stopwords_path = resolve(value, base);
            cfg.analyzer_explicit = true;
        } else if (key == "analyzer.lowercase") {
            cfg.analyzer.lowercase = parse_bool(value, path, lineno);
            cfg.analyzer_explicit = true;
        } else if (key == "analyzer.strip_diacritics") {
            cfg.analyzer.strip_diacritics = parse_bool(value, path, lineno);
            cfg.analyzer_explicit = true;
        } else if (key == "analyzer.normalize_alef_ya") {
            cfg.analyzer.normalize_alef_ya = parse_bool(value, path, lineno);
            cfg.analyzer_explicit = true;
        } else if (key == "analyzer.min_token_length") {
            cfg.analyzer.min_token_length = parse_size(value, path, lineno);
            cfg.analyzer_explicit = true;
        } else if (key == "d") {
            cfg.prf.d = parse_size(value, path, lineno);
        } else if (key == "t") {
            cfg.prf.t = parse_size(value, path, lineno);
        } else if (key == "k_sample") {
            cfg.prf.k_sample = parse_size(value, path, lineno);
        } else if (key == "k") {
            cfg.k_retrieve = parse_size(value, path, lineno);
        } else if (key == "k_levels") {
            cfg.k_levels = parse_size_list(value, path, lineno);
        } else if (key == "tag") {
            cfg.tag = value;
        } else if (key == "dump_expanded") {
            cfg.dump_expanded = parse_bool(value, path, lineno);
        } else if (key == "force") {
            cfg.force = parse_bool(value, path, lineno);
        } else {
            fail(path, lineno, "unknown key: '" + key + "'");
        }
    }
}

void finalize_config(ExperimentConfig& cfg) {
    if (!cfg.stopwords_path.empty()) {
        cfg.analyzer.stopwords = load_stopwords(cfg.stopwords_path, cfg.analyzer);
    }
    if (cfg.prf.d < 1) throw UsageError("--d must be at least 1");
    if (cfg.prf.t < 1) throw UsageError("--t must be at least 1");
    if (cfg.k_retrieve < 1) throw UsageError("--k must be at least 1");
    cfg.prf.k_sample = std::max(cfg.prf.k_sample, cfg.prf.d);

    if (cfg.k_levels.empty()) throw UsageError("k_levels must not be empty");
    std::sort(cfg.k_levels.begin(), cfg.k_levels.end());
    cfg.k_levels.erase(std::unique(cfg.k_levels.begin(), cfg.k_levels.end()), cfg.k_levels.end());
    if (cfg.k_levels.front() < 1) throw UsageError("k_levels entries must be at least 1");
    if (cfg.k_retrieve < cfg.k_levels.back()) {
        throw UsageError("--k (" + std::to_string(cfg.k_retrieve) + ") must be >= the largest cutoff in k_levels (" +
                         std::to_string(cfg.k_levels.back()) + ")");
    }
}

}  // namespace qrkit
