#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrkit/analyzer.hpp"

namespace qrkit {

/// Document identifier: relative corpus path without extension, `/`-separated.
using DocId = std::string;

/// One postings entry. `doc` is the internal dense document index assigned in
/// ascending DocId order, so postings sorted by `doc` are sorted by DocId.
struct Posting {
    std::uint32_t doc;
    std::uint32_t tf;
};

struct ScoredHit {
    DocId doc;
    double score;
};

/// BM25 constants used by search. idf = ln(1 + (N - df + 0.5) / (df + 0.5)).
struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
};

/// Immutable inverted index plus the forward (document -> terms) view needed
/// by feedback expansion. Searches are safe from any number of threads.
class InvertedIndex {
public:
    /// Index every `.txt` file under `corpus_dir` (recursively). DocIds are
    /// relative paths without the extension; iteration order is lexicographic
    /// by DocId, so identical input always produces an identical index.
    /// Throws DataError when the directory is unreadable or holds no
    /// documents; files that are not valid UTF-8 are skipped with a warning.
    static InvertedIndex build(const std::filesystem::path& corpus_dir, AnalyzerConfig cfg);

    /// Same construction from in-memory (DocId, text) pairs.
    static InvertedIndex build_in_memory(std::vector<std::pair<DocId, std::string>> docs,
                                         AnalyzerConfig cfg);

    static InvertedIndex load(const std::filesystem::path& index_dir);
    void save(const std::filesystem::path& index_dir) const;

    /// Ranked top-k retrieval. `terms` is a multiset: repeated terms weight
    /// their contribution additively. Results are sorted by BM25 score
    /// descending, ties broken by ascending DocId; only documents matching at
    /// least one query term appear.
    std::vector<ScoredHit> search(const std::vector<Term>& terms, std::size_t k) const;

    /// Term frequency of `t` in `d`; 0 when the term is absent from the
    /// document. Unknown DocId throws DataError.
    std::uint32_t term_freq(const Term& t, const DocId& d) const;

    /// Distinct terms of `d` with frequencies, term-sorted. Unknown DocId
    /// throws DataError.
    std::vector<std::pair<Term, std::uint32_t>> doc_terms(const DocId& d) const;

    std::size_t num_docs() const { return doc_ids_.size(); }
    std::size_t vocab_size() const { return terms_.size(); }
    std::uint64_t total_terms() const { return total_len_; }
    double avg_doc_len() const;
    std::uint64_t doc_len(const DocId& d) const;
    std::size_t doc_freq(const Term& t) const;
    bool has_doc(const DocId& d) const { return doc_index(d).has_value(); }

    /// All DocIds, ascending.
    const std::vector<DocId>& doc_ids() const { return doc_ids_; }
    /// Full vocabulary, ascending.
    const std::vector<Term>& vocabulary() const { return terms_; }
    const AnalyzerConfig& analyzer() const { return cfg_; }

private:
    AnalyzerConfig cfg_;
    std::vector<DocId> doc_ids_;
    std::vector<std::uint64_t> doc_lens_;
    std::vector<Term> terms_;
    std::vector<std::vector<Posting>> postings_;
    // doc -> (term index, tf), term index ascending
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> forward_;
    std::uint64_t total_len_ = 0;

    std::optional<std::uint32_t> term_index(const Term& t) const;
    std::optional<std::uint32_t> doc_index(const DocId& d) const;
    void build_forward();
    void check_invariants() const;

    friend InvertedIndex build_from_analyzed(std::vector<std::pair<DocId, std::vector<Term>>>,
                                             AnalyzerConfig);
};

}  // namespace qrkit
