#include "qrkit/analyzer.hpp"

#include <fstream>
#include <sstream>

#include "qrkit/errors.hpp"
#include "qrkit/utf8.hpp"

namespace qrkit {

namespace unicode {

bool is_space(char32_t cp) {
    switch (cp) {
        case U'\t':
        case U'\n':
        case U'\v':
        case U'\f':
        case U'\r':
        case U' ':
        case 0x0085:  // NEL
        case 0x00A0:  // NBSP
        case 0x1680:
        case 0x2028:
        case 0x2029:
        case 0x202F:
        case 0x205F:
        case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_strippable_punct(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
               (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
    }
    switch (cp) {
        case 0x00A1:  // inverted exclamation
        case 0x00AB:  // left guillemet
        case 0x00BB:  // right guillemet
        case 0x00BF:  // inverted question
        case 0x060C:  // Arabic comma
        case 0x061B:  // Arabic semicolon
        case 0x061F:  // Arabic question mark
        case 0x066D:  // Arabic five pointed star
        case 0x06D4:  // Arabic full stop
        case 0x2018:
        case 0x2019:
        case 0x201A:
        case 0x201C:
        case 0x201D:
        case 0x201E:
        case 0x2022:
        case 0x2026:  // ellipsis
        case 0x2039:
        case 0x203A:
            return true;
        default:
            return (cp >= 0x2010 && cp <= 0x2015) ||  // dashes
                   (cp >= 0x3008 && cp <= 0x3011);    // CJK brackets
    }
}

bool is_arabic_diacritic(char32_t cp) {
    return (cp >= 0x064B && cp <= 0x065F) || cp == 0x0670;
}

// Simple fold: ASCII plus the Latin-1 supplement letters. Arabic is caseless.
char32_t fold_case(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
    return cp;
}

}  // namespace unicode

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::vector<char32_t> current;
    std::size_t i = 0;
    auto flush = [&] {
        // trim strippable punctuation from both ends
        std::size_t lo = 0;
        std::size_t hi = current.size();
        while (lo < hi && unicode::is_strippable_punct(current[lo])) ++lo;
        while (hi > lo && unicode::is_strippable_punct(current[hi - 1])) --hi;
        if (lo < hi) {
            std::string tok;
            for (std::size_t k = lo; k < hi; ++k) utf8::append(tok, current[k]);
            tokens.push_back(std::move(tok));
        }
        current.clear();
    };
    while (i < text.size()) {
        char32_t cp = 0;
        if (!utf8::decode(text, i, cp)) {
            ++i;
            flush();
            continue;
        }
        if (unicode::is_space(cp)) {
            flush();
        } else {
            current.push_back(cp);
        }
    }
    flush();
    return tokens;
}

std::optional<Term> normalize(std::string_view token, const AnalyzerConfig& cfg) {
    std::string out;
    out.reserve(token.size());
    std::size_t i = 0;
    std::size_t n_cps = 0;
    char32_t cp = 0;
    while (i < token.size()) {
        if (!utf8::decode(token, i, cp)) {
            ++i;
            continue;
        }
        if (cfg.lowercase) cp = unicode::fold_case(cp);
        if (cfg.strip_diacritics && unicode::is_arabic_diacritic(cp)) continue;
        if (cfg.normalize_alef_ya) {
            if (cp == 0x0622 || cp == 0x0623 || cp == 0x0625) cp = 0x0627;  // alef variants
            if (cp == 0x0649) cp = 0x064A;                                  // alef maqsura -> ya
        }
        utf8::append(out, cp);
        ++n_cps;
    }
    if (out.empty() || n_cps < cfg.min_token_length) return std::nullopt;
    if (cfg.stopwords.contains(out)) return std::nullopt;
    return out;
}

std::vector<Term> analyze(std::string_view text, const AnalyzerConfig& cfg) {
    std::vector<Term> terms;
    for (const auto& tok : tokenize(text)) {
        if (auto t = normalize(tok, cfg)) terms.push_back(std::move(*t));
    }
    return terms;
}

std::set<Term> load_stopwords(const std::filesystem::path& path, const AnalyzerConfig& cfg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open stopword file: " + path.string());
    AnalyzerConfig fold = cfg;
    fold.stopwords.clear();  // entries must not filter each other
    fold.min_token_length = 1;
    std::set<Term> words;
    std::string line;
    bool first_line = true;
    while (std::getline(in, line)) {
        if (first_line && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
        first_line = false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        for (const auto& tok : analyze(line, fold)) words.insert(tok);
    }
    return words;
}

std::string config_to_string(const AnalyzerConfig& cfg) {
    std::ostringstream os;
    os << "lowercase=" << cfg.lowercase << ";strip_diacritics=" << cfg.strip_diacritics
       << ";normalize_alef_ya=" << cfg.normalize_alef_ya
       << ";min_token_length=" << cfg.min_token_length << ";stopwords=";
    bool first = true;
    for (const auto& w : cfg.stopwords) {
        if (!first) os << ',';
        os << w;
        first = false;
    }
    return os.str();
}

std::uint64_t config_hash(const AnalyzerConfig& cfg) {
    // FNV-1a, stable across platforms and runs
    const std::string s = config_to_string(cfg);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace qrkit
