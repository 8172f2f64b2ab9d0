#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qrkit {

/// An index/query term: non-empty UTF-8, already normalized, no whitespace.
using Term = std::string;

/// Settings shared by indexing and querying so both sides produce terms in
/// the same vocabulary. Stopword entries must be given in normalized form;
/// `load_stopwords` takes care of that when reading a stopword file.
struct AnalyzerConfig {
    bool lowercase = true;
    bool strip_diacritics = true;
    bool normalize_alef_ya = true;
    std::set<Term> stopwords;
    std::size_t min_token_length = 1;

    bool operator==(const AnalyzerConfig&) const = default;
};

/// Split on Unicode whitespace and trim leading/trailing punctuation from
/// each token. Keeps original order, drops tokens that become empty.
/// Total: undecodable bytes act as separators.
std::vector<std::string> tokenize(std::string_view text);

/// Apply, in order: case folding, Arabic diacritic removal (U+064B..U+065F,
/// U+0670), alef folding (U+0622/23/25 -> U+0627) and alef-maqsura folding
/// (U+0649 -> U+064A), each step gated by its config flag. Returns nothing
/// when the result is empty, shorter than min_token_length (in codepoints),
/// or a stopword.
std::optional<Term> normalize(std::string_view token, const AnalyzerConfig& cfg);

/// tokenize + normalize, dropped tokens removed, order and duplicates kept.
std::vector<Term> analyze(std::string_view text, const AnalyzerConfig& cfg);

/// Read a stopword file (UTF-8, one entry per line, `#` comments) and
/// normalize every entry with `cfg`'s folding flags.
std::set<Term> load_stopwords(const std::filesystem::path& path, const AnalyzerConfig& cfg);

/// Stable 64-bit hash of the canonical config serialization. Recorded in the
/// index manifest to detect index/query analyzer drift.
std::uint64_t config_hash(const AnalyzerConfig& cfg);

/// Canonical single-line text form used for hashing and the manifest.
std::string config_to_string(const AnalyzerConfig& cfg);

namespace unicode {
bool is_space(char32_t cp);
bool is_strippable_punct(char32_t cp);
bool is_arabic_diacritic(char32_t cp);
char32_t fold_case(char32_t cp);
}  // namespace unicode

}  // namespace qrkit
