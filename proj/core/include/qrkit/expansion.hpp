#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrkit/index.hpp"
#include "qrkit/thesaurus.hpp"

namespace qrkit {

/// A query as an ordered set of terms: first-occurrence order, duplicates
/// collapsed.
struct Query {
    std::string qid;
    std::vector<Term> terms;

    bool operator==(const Query&) const = default;
};

/// Analyze raw query text and collapse duplicate terms (first occurrence
/// wins).
Query make_query(std::string qid, std::string_view text, const AnalyzerConfig& cfg);

/// Feedback parameters: sample the top `d` documents and take the top `t`
/// correlates per query term. `k_sample` is the retrieval pool depth for
/// samplers that want more than `d` candidates; since ranking is a stable
/// prefix it cannot change which documents are sampled.
struct PrfParams {
    std::size_t d = 15;
    std::size_t t = 7;
    std::size_t k_sample = 100;
};

/// Sparse symmetric term-term co-occurrence scores over a local document
/// set: score(u, v) = sum over sampled docs of tf(u, doc) * tf(v, doc),
/// integer-exact. Pairs that never co-occur are absent. The diagonal is kept
/// but never selected as a correlate.
class AssociationMatrix {
public:
    std::int64_t score(const Term& u, const Term& v) const;
    const std::set<Term>& vocab() const { return vocab_; }
    bool contains(const Term& u) const { return vocab_.contains(u); }

    /// Co-occurring partners of `u` with their scores, unordered.
    std::vector<std::pair<Term, std::int64_t>> row(const Term& u) const;

private:
    std::unordered_map<Term, std::unordered_map<Term, std::int64_t>> rows_;
    std::set<Term> vocab_;

    friend AssociationMatrix build_association_matrix(const InvertedIndex&,
                                                      const std::vector<DocId>&);
};

/// Thesaurus expansion: append every synonym of every query term. Multiword
/// synonyms are split into their words. Original term order is preserved;
/// added terms follow in (source-term position, lexicographic) order. With
/// no synonyms the query comes back unchanged.
Query expand_cb(const Query& q, const Thesaurus& th);

/// The top-min(d, hits) documents of a ranked search for `q`, in rank order.
std::vector<DocId> sample_top_docs(const InvertedIndex& index, const Query& q, std::size_t d);

/// Build the local association matrix from the distinct terms of `docs`.
/// Unknown DocIds throw DataError.
AssociationMatrix build_association_matrix(const InvertedIndex& index,
                                           const std::vector<DocId>& docs);

/// The v != u with the `t` largest score(u, v) > 0, score-descending, ties
/// lexicographic ascending. Empty when `u` is outside the local vocabulary.
std::vector<Term> top_correlates(const AssociationMatrix& m, const Term& u, std::size_t t);

/// Feedback expansion: sample top documents, build the association matrix,
/// and append the top correlates of each query term. A query with zero hits
/// comes back unchanged.
Query expand_prf(const InvertedIndex& index, const Query& q, const PrfParams& p);

/// Read a queries file: TSV `qid<TAB>query text`, UTF-8, `#` comments and
/// blank lines skipped. Terms are produced with `cfg`. Malformed lines and
/// duplicate qids throw DataError naming the line. Queries whose text
/// normalizes to no terms are kept (with empty term lists) so callers can
/// warn about them.
std::vector<Query> load_queries(const std::filesystem::path& path, const AnalyzerConfig& cfg);

/// Write queries as TSV `qid<TAB>term1 term2 ...` for audit.
void write_expanded(const std::filesystem::path& path, const std::vector<Query>& queries);

}  // namespace qrkit
