#include "qrkit/index.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "qrkit/errors.hpp"
#include "qrkit/utf8.hpp"

namespace qrkit {

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw DataError("cannot read file: " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

}  // namespace

InvertedIndex build_from_analyzed(std::vector<std::pair<DocId, std::vector<Term>>> docs,
                                  AnalyzerConfig cfg) {
    std::sort(docs.begin(), docs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < docs.size(); ++i) {
        if (docs[i].first == docs[i - 1].first) {
            throw DataError("duplicate document id: " + docs[i].first);
        }
    }

    InvertedIndex idx;
    idx.cfg_ = std::move(cfg);
    idx.doc_ids_.reserve(docs.size());
    idx.doc_lens_.reserve(docs.size());

    // per-document term counts, terms interned afterwards
    std::vector<std::map<Term, std::uint32_t>> counts(docs.size());
    for (std::size_t d = 0; d < docs.size(); ++d) {
        idx.doc_ids_.push_back(docs[d].first);
        idx.doc_lens_.push_back(docs[d].second.size());
        idx.total_len_ += docs[d].second.size();
        for (const auto& t : docs[d].second) ++counts[d][t];
    }

    std::map<Term, std::uint32_t> term_ids;
    for (const auto& c : counts) {
        for (const auto& [t, _] : c) term_ids.emplace(t, 0);
    }
    idx.terms_.reserve(term_ids.size());
    for (auto& [t, id] : term_ids) {
        id = static_cast<std::uint32_t>(idx.terms_.size());
        idx.terms_.push_back(t);
    }

    idx.postings_.resize(idx.terms_.size());
    for (std::size_t d = 0; d < counts.size(); ++d) {
        for (const auto& [t, tf] : counts[d]) {
            idx.postings_[term_ids[t]].push_back({static_cast<std::uint32_t>(d), tf});
        }
    }
    idx.build_forward();
    return idx;
}

InvertedIndex InvertedIndex::build(const std::filesystem::path& corpus_dir, AnalyzerConfig cfg) {
    std::error_code ec;
    if (!std::filesystem::is_directory(corpus_dir, ec)) {
        throw DataError("cannot read corpus directory: " + corpus_dir.string());
    }

    std::vector<std::pair<DocId, std::filesystem::path>> files;
    for (auto it = std::filesystem::recursive_directory_iterator(corpus_dir, ec);
         it != std::filesystem::recursive_directory_iterator(); ++it) {
        if (!it->is_regular_file()) continue;
        const auto& p = it->path();
        if (p.extension() != ".txt") continue;
        auto rel = std::filesystem::relative(p, corpus_dir).generic_string();
        rel.erase(rel.size() - 4);  // drop ".txt"
        files.emplace_back(std::move(rel), p);
    }
    if (ec) throw DataError("cannot read corpus directory: " + corpus_dir.string());

    std::vector<std::pair<DocId, std::vector<Term>>> docs;
    docs.reserve(files.size());
    for (auto& [id, path] : files) {
        std::string text = read_file(path);
        if (!utf8::valid(text)) {
            std::cerr << "warning: skipping non-UTF-8 file: " << path.string() << "\n";
            continue;
        }
        docs.emplace_back(std::move(id), analyze(text, cfg));
    }
    if (docs.empty()) {
        throw DataError("no documents found in: " + corpus_dir.string());
    }
    return build_from_analyzed(std::move(docs), std::move(cfg));
}

InvertedIndex InvertedIndex::build_in_memory(std::vector<std::pair<DocId, std::string>> docs,
                                             AnalyzerConfig cfg) {
    if (docs.empty()) throw DataError("no documents found");
    std::vector<std::pair<DocId, std::vector<Term>>> analyzed;
    analyzed.reserve(docs.size());
    for (auto& [id, text] : docs) {
        analyzed.emplace_back(std::move(id), analyze(text, cfg));
    }
    return build_from_analyzed(std::move(analyzed), std::move(cfg));
}

void InvertedIndex::build_forward() {
    forward_.assign(doc_ids_.size(), {});
    for (std::uint32_t t = 0; t < postings_.size(); ++t) {
        for (const auto& p : postings_[t]) forward_[p.doc].emplace_back(t, p.tf);
    }
    // postings are iterated in ascending term order, so each forward list is
    // already sorted by term index
}

void InvertedIndex::check_invariants() const {
    for (std::size_t d = 1; d < doc_ids_.size(); ++d) {
        if (doc_ids_[d - 1] >= doc_ids_[d]) {
            throw DataError("corrupt index: document ids out of order");
        }
    }
    std::vector<std::uint64_t> sums(doc_ids_.size(), 0);
    std::uint64_t total = 0;
    for (const auto& plist : postings_) {
        if (plist.empty()) throw DataError("corrupt index: term with empty postings");
        for (std::size_t i = 0; i < plist.size(); ++i) {
            if (plist[i].doc >= doc_ids_.size() || plist[i].tf == 0) {
                throw DataError("corrupt index: bad posting");
            }
            if (i > 0 && plist[i - 1].doc >= plist[i].doc) {
                throw DataError("corrupt index: postings out of order");
            }
            sums[plist[i].doc] += plist[i].tf;
            total += plist[i].tf;
        }
    }
    for (std::size_t d = 0; d < sums.size(); ++d) {
        if (sums[d] != doc_lens_[d]) {
            throw DataError("corrupt index: document length mismatch for " + doc_ids_[d]);
        }
    }
    if (total != total_len_) throw DataError("corrupt index: total length mismatch");
}

std::optional<std::uint32_t> InvertedIndex::term_index(const Term& t) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
    if (it == terms_.end() || *it != t) return std::nullopt;
    return static_cast<std::uint32_t>(it - terms_.begin());
}

std::optional<std::uint32_t> InvertedIndex::doc_index(const DocId& d) const {
    auto it = std::lower_bound(doc_ids_.begin(), doc_ids_.end(), d);
    if (it == doc_ids_.end() || *it != d) return std::nullopt;
    return static_cast<std::uint32_t>(it - doc_ids_.begin());
}

double InvertedIndex::avg_doc_len() const {
    if (doc_ids_.empty()) return 0.0;
    return static_cast<double>(total_len_) / static_cast<double>(doc_ids_.size());
}

std::vector<ScoredHit> InvertedIndex::search(const std::vector<Term>& terms,
                                             std::size_t k) const {
    if (k < 1) throw std::invalid_argument("search: k must be >= 1");

    // distinct terms in lexicographic order; repeats weight additively
    std::map<Term, std::uint32_t> qcounts;
    for (const auto& t : terms) ++qcounts[t];

    const Bm25Params prm;
    const double n = static_cast<double>(num_docs());
    const double avg = avg_doc_len();

    std::unordered_map<std::uint32_t, double> acc;
    for (const auto& [term, qtf] : qcounts) {
        auto tid = term_index(term);
        if (!tid) continue;
        const auto& plist = postings_[*tid];
        const double df = static_cast<double>(plist.size());
        const double idf = std::log1p((n - df + 0.5) / (df + 0.5));
        const double w = static_cast<double>(qtf) * idf;
        for (const auto& p : plist) {
            const double tf = static_cast<double>(p.tf);
            const double dl = static_cast<double>(doc_lens_[p.doc]);
            const double denom = tf + prm.k1 * (1.0 - prm.b + prm.b * dl / avg);
            acc[p.doc] += w * tf * (prm.k1 + 1.0) / denom;
        }
    }

    std::vector<std::pair<std::uint32_t, double>> hits(acc.begin(), acc.end());
    std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (hits.size() > k) hits.resize(k);

    std::vector<ScoredHit> out;
    out.reserve(hits.size());
    for (const auto& [doc, score] : hits) out.push_back({doc_ids_[doc], score});
    return out;
}

std::uint32_t InvertedIndex::term_freq(const Term& t, const DocId& d) const {
    auto did = doc_index(d);
    if (!did) throw DataError("unknown document: " + d);
    auto tid = term_index(t);
    if (!tid) return 0;
    const auto& plist = postings_[*tid];
    auto it = std::lower_bound(plist.begin(), plist.end(), *did,
                               [](const Posting& p, std::uint32_t doc) { return p.doc < doc; });
    if (it == plist.end() || it->doc != *did) return 0;
    return it->tf;
}

std::vector<std::pair<Term, std::uint32_t>> InvertedIndex::doc_terms(const DocId& d) const {
    auto did = doc_index(d);
    if (!did) throw DataError("unknown document: " + d);
    std::vector<std::pair<Term, std::uint32_t>> out;
    out.reserve(forward_[*did].size());
    for (const auto& [tid, tf] : forward_[*did]) out.emplace_back(terms_[tid], tf);
    return out;
}

std::uint64_t InvertedIndex::doc_len(const DocId& d) const {
    auto did = doc_index(d);
    if (!did) throw DataError("unknown document: " + d);
    return doc_lens_[*did];
}

std::size_t InvertedIndex::doc_freq(const Term& t) const {
    auto tid = term_index(t);
    return tid ? postings_[*tid].size() : 0;
}

}  // namespace qrkit
