#include "qrkit/thesaurus.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <unordered_set>

#include "qrkit/errors.hpp"

namespace qrkit {

namespace {

std::optional<Pos> parse_pos(const std::string& s) {
    if (s == "noun") return Pos::noun;
    if (s == "verb") return Pos::verb;
    if (s == "adjective") return Pos::adjective;
    if (s == "adverb") return Pos::adverb;
    if (s == "unknown") return Pos::unknown;
    return std::nullopt;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

// Normalize one member with the shared pipeline; words of a multiword member
// are re-joined with a single space. Empty result means the member vanished.
std::string normalize_member(const std::string& raw, const AnalyzerConfig& cfg) {
    std::string out;
    for (const auto& word : analyze(raw, cfg)) {
        if (!out.empty()) out += ' ';
        out += word;
    }
    return out;
}

}  // namespace

Thesaurus Thesaurus::load(const std::filesystem::path& path, const AnalyzerConfig& cfg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open thesaurus file: " + path.string());

    Thesaurus th;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        if (line.empty() || line[0] == '#') continue;

        const auto err = [&](const std::string& msg) {
            return DataError(path.string() + ":" + std::to_string(lineno) + ": " + msg);
        };

        auto fields = split(line, '\t');
        if (fields.size() != 3) throw err("expected synset_id<TAB>pos<TAB>members");
        if (fields[0].empty()) throw err("empty synset id");
        if (!seen_ids.insert(fields[0]).second) {
            throw err("duplicate synset id: " + fields[0]);
        }
        auto pos = parse_pos(fields[1]);
        if (!pos) throw err("unknown part of speech: " + fields[1]);

        Synset syn;
        syn.id = fields[0];
        syn.pos = *pos;
        for (const auto& raw : split(fields[2], ',')) {
            auto member = normalize_member(raw, cfg);
            if (!member.empty()) syn.members.push_back(std::move(member));
        }
        std::sort(syn.members.begin(), syn.members.end());
        syn.members.erase(std::unique(syn.members.begin(), syn.members.end()),
                          syn.members.end());
        if (syn.members.empty()) {
            std::cerr << "warning: " << path.string() << ":" << lineno << ": synset " << syn.id
                      << " has no members after normalization; dropped\n";
            continue;
        }
        const auto idx = static_cast<std::uint32_t>(th.synsets_.size());
        for (const auto& m : syn.members) th.by_term_[m].push_back(idx);
        th.synsets_.push_back(std::move(syn));
    }
    return th;
}

std::set<std::string> Thesaurus::synonyms(const Term& t) const {
    std::set<std::string> out;
    auto it = by_term_.find(t);
    if (it == by_term_.end()) return out;
    for (auto idx : it->second) {
        for (const auto& m : synsets_[idx].members) {
            if (m != t) out.insert(m);
        }
    }
    return out;
}

}  // namespace qrkit
