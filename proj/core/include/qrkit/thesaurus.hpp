#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrkit/analyzer.hpp"

namespace qrkit {

enum class Pos { noun, verb, adjective, adverb, unknown };

/// One synonym set. Members are stored normalized with the same
/// AnalyzerConfig as the index; a multiword member keeps its words separated
/// by single spaces (expansion splits them into index terms).
struct Synset {
    std::string id;
    Pos pos = Pos::unknown;
    std::vector<std::string> members;  // sorted, unique
};

/// Synset collection with an inverted member -> synsets map. Immutable after
/// load; lookups are thread-safe.
class Thesaurus {
public:
    /// Parse a synset TSV file: `synset_id<TAB>pos<TAB>member1,member2,...`
    /// per line, `#` lines and blank lines skipped, UTF-8, LF (a trailing CR
    /// is tolerated). Members are normalized with `cfg`; members that
    /// normalize to nothing are dropped, and a synset left without members is
    /// dropped with a warning. Malformed lines and duplicate synset ids throw
    /// DataError naming the line.
    static Thesaurus load(const std::filesystem::path& path, const AnalyzerConfig& cfg);

    /// Union of the members of every synset containing `t`, minus `t` itself.
    /// Empty when `t` belongs to no synset. Members may be multiword.
    std::set<std::string> synonyms(const Term& t) const;

    std::size_t size() const { return synsets_.size(); }
    const std::vector<Synset>& synsets() const { return synsets_; }

private:
    std::vector<Synset> synsets_;
    std::unordered_map<std::string, std::vector<std::uint32_t>> by_term_;
};

}  // namespace qrkit
