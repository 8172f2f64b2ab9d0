#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qrkit/errors.hpp"
#include "qrkit/index.hpp"

// On-disk layout: <index_dir>/manifest.json + <index_dir>/postings.bin.
// postings.bin is little-endian:
//   magic "QRKIDX01"
//   u32 n_docs, then per doc: u32 id_bytes, id, u64 doc_len
//   u32 n_terms, then per term: u32 term_bytes, term, u32 df, df x (u32 doc, u32 tf)
// Docs and terms are written in their sorted in-memory order, so saving the
// same index always produces identical bytes.

namespace qrkit {

namespace {

constexpr char kMagic[8] = {'Q', 'R', 'K', 'I', 'D', 'X', '0', '1'};
constexpr int kFormatVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

struct Reader {
    const std::string& buf;
    std::size_t pos = 0;

    void need(std::size_t n) const {
        if (pos + n > buf.size()) throw DataError("corrupt index: truncated postings file");
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) {
            v |= static_cast<std::uint32_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
        }
        pos += 4;
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) {
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
        }
        pos += 8;
        return v;
    }
    std::string bytes(std::size_t n) {
        need(n);
        std::string s = buf.substr(pos, n);
        pos += n;
        return s;
    }
};

nlohmann::json analyzer_to_json(const AnalyzerConfig& cfg) {
    nlohmann::json j;
    j["lowercase"] = cfg.lowercase;
    j["strip_diacritics"] = cfg.strip_diacritics;
    j["normalize_alef_ya"] = cfg.normalize_alef_ya;
    j["min_token_length"] = cfg.min_token_length;
    j["stopwords"] = cfg.stopwords;
    return j;
}

AnalyzerConfig analyzer_from_json(const nlohmann::json& j) {
    AnalyzerConfig cfg;
    cfg.lowercase = j.at("lowercase").get<bool>();
    cfg.strip_diacritics = j.at("strip_diacritics").get<bool>();
    cfg.normalize_alef_ya = j.at("normalize_alef_ya").get<bool>();
    cfg.min_token_length = j.at("min_token_length").get<std::size_t>();
    cfg.stopwords = j.at("stopwords").get<std::set<Term>>();
    return cfg;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

void InvertedIndex::save(const std::filesystem::path& index_dir) const {
    std::filesystem::create_directories(index_dir);

    nlohmann::json manifest;
    manifest["format"] = "qrkit-index";
    manifest["version"] = kFormatVersion;
    manifest["n_docs"] = num_docs();
    manifest["total_len"] = total_len_;
    manifest["vocab_size"] = vocab_size();
    manifest["analyzer"] = analyzer_to_json(cfg_);
    manifest["analyzer_hash"] = hash_hex(config_hash(cfg_));
    {
        std::ofstream out(index_dir / "manifest.json", std::ios::binary);
        if (!out) throw DataError("cannot write: " + (index_dir / "manifest.json").string());
        out << manifest.dump(2) << "\n";
    }

    std::string blob;
    blob.append(kMagic, sizeof(kMagic));
    put_u32(blob, static_cast<std::uint32_t>(doc_ids_.size()));
    for (std::size_t d = 0; d < doc_ids_.size(); ++d) {
        put_u32(blob, static_cast<std::uint32_t>(doc_ids_[d].size()));
        blob += doc_ids_[d];
        put_u64(blob, doc_lens_[d]);
    }
    put_u32(blob, static_cast<std::uint32_t>(terms_.size()));
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        put_u32(blob, static_cast<std::uint32_t>(terms_[t].size()));
        blob += terms_[t];
        put_u32(blob, static_cast<std::uint32_t>(postings_[t].size()));
        for (const auto& p : postings_[t]) {
            put_u32(blob, p.doc);
            put_u32(blob, p.tf);
        }
    }
    std::ofstream out(index_dir / "postings.bin", std::ios::binary);
    if (!out) throw DataError("cannot write: " + (index_dir / "postings.bin").string());
    out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
}

InvertedIndex InvertedIndex::load(const std::filesystem::path& index_dir) {
    const auto manifest_path = index_dir / "manifest.json";
    std::ifstream min(manifest_path, std::ios::binary);
    if (!min) throw DataError("cannot open index manifest: " + manifest_path.string());
    nlohmann::json manifest;
    try {
        min >> manifest;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("bad index manifest " + manifest_path.string() + ": " + e.what());
    }
    if (manifest.value("format", "") != "qrkit-index" ||
        manifest.value("version", 0) != kFormatVersion) {
        throw DataError("unsupported index format in " + manifest_path.string());
    }

    InvertedIndex idx;
    try {
        idx.cfg_ = analyzer_from_json(manifest.at("analyzer"));
    } catch (const nlohmann::json::exception& e) {
        throw DataError("bad analyzer section in " + manifest_path.string() + ": " + e.what());
    }

    const auto postings_path = index_dir / "postings.bin";
    std::ifstream pin(postings_path, std::ios::binary);
    if (!pin) throw DataError("cannot open postings file: " + postings_path.string());
    std::ostringstream buf;
    buf << pin.rdbuf();
    const std::string blob = std::move(buf).str();

    Reader r{blob};
    if (r.bytes(sizeof(kMagic)) != std::string(kMagic, sizeof(kMagic))) {
        throw DataError("corrupt index: bad magic in " + postings_path.string());
    }
    const std::uint32_t n_docs = r.u32();
    idx.doc_ids_.reserve(n_docs);
    idx.doc_lens_.reserve(n_docs);
    for (std::uint32_t d = 0; d < n_docs; ++d) {
        idx.doc_ids_.push_back(r.bytes(r.u32()));
        idx.doc_lens_.push_back(r.u64());
        idx.total_len_ += idx.doc_lens_.back();
    }
    const std::uint32_t n_terms = r.u32();
    idx.terms_.reserve(n_terms);
    idx.postings_.resize(n_terms);
    for (std::uint32_t t = 0; t < n_terms; ++t) {
        idx.terms_.push_back(r.bytes(r.u32()));
        if (t > 0 && idx.terms_[t - 1] >= idx.terms_[t]) {
            throw DataError("corrupt index: vocabulary out of order");
        }
        const std::uint32_t df = r.u32();
        idx.postings_[t].reserve(df);
        for (std::uint32_t i = 0; i < df; ++i) {
            const std::uint32_t doc = r.u32();
            const std::uint32_t tf = r.u32();
            idx.postings_[t].push_back({doc, tf});
        }
    }
    if (r.pos != blob.size()) throw DataError("corrupt index: trailing bytes");
    if (manifest.value("n_docs", std::size_t{0}) != idx.doc_ids_.size()) {
        throw DataError("corrupt index: manifest n_docs disagrees with postings");
    }
    idx.check_invariants();
    idx.build_forward();
    return idx;
}

}  // namespace qrkit
