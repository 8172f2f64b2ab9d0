#include "qrkit/expansion.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "qrkit/errors.hpp"

namespace qrkit {

namespace {

std::vector<Term> split_member(const std::string& member) {
    std::vector<Term> parts;
    std::size_t start = 0;
    while (start < member.size()) {
        auto pos = member.find(' ', start);
        if (pos == std::string::npos) pos = member.size();
        if (pos > start) parts.push_back(member.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

}  // namespace

Query make_query(std::string qid, std::string_view text, const AnalyzerConfig& cfg) {
    Query q;
    q.qid = std::move(qid);
    std::unordered_set<Term> seen;
    for (auto& t : analyze(text, cfg)) {
        if (seen.insert(t).second) q.terms.push_back(std::move(t));
    }
    return q;
}

std::int64_t AssociationMatrix::score(const Term& u, const Term& v) const {
    auto row = rows_.find(u);
    if (row == rows_.end()) return 0;
    auto cell = row->second.find(v);
    return cell == row->second.end() ? 0 : cell->second;
}

std::vector<std::pair<Term, std::int64_t>> AssociationMatrix::row(const Term& u) const {
    std::vector<std::pair<Term, std::int64_t>> out;
    auto row = rows_.find(u);
    if (row == rows_.end()) return out;
    out.assign(row->second.begin(), row->second.end());
    return out;
}

Query expand_cb(const Query& q, const Thesaurus& th) {
    Query out;
    out.qid = q.qid;
    out.terms = q.terms;
    std::unordered_set<Term> seen(q.terms.begin(), q.terms.end());
    for (const auto& t : q.terms) {
        // synonyms() is a sorted set; members append lexicographically
        for (const auto& member : th.synonyms(t)) {
            for (auto& part : split_member(member)) {
                if (seen.insert(part).second) out.terms.push_back(std::move(part));
            }
        }
    }
    return out;
}

std::vector<DocId> sample_top_docs(const InvertedIndex& index, const Query& q, std::size_t d) {
    if (d < 1) throw std::invalid_argument("sample_top_docs: d must be >= 1");
    std::vector<DocId> docs;
    for (auto& hit : index.search(q.terms, d)) docs.push_back(std::move(hit.doc));
    return docs;
}

AssociationMatrix build_association_matrix(const InvertedIndex& index,
                                           const std::vector<DocId>& docs) {
    if (docs.empty()) throw std::invalid_argument("build_association_matrix: no documents");
    AssociationMatrix m;
    for (const auto& d : docs) {
        const auto terms = index.doc_terms(d);  // throws on unknown doc
        for (const auto& [t, _] : terms) m.vocab_.insert(t);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const auto& [u, tf_u] = terms[i];
            const auto w_u = static_cast<std::int64_t>(tf_u);
            m.rows_[u][u] += w_u * w_u;
            for (std::size_t j = i + 1; j < terms.size(); ++j) {
                const auto& [v, tf_v] = terms[j];
                const std::int64_t s = w_u * static_cast<std::int64_t>(tf_v);
                m.rows_[u][v] += s;
                m.rows_[v][u] += s;
            }
        }
    }
    return m;
}

std::vector<Term> top_correlates(const AssociationMatrix& m, const Term& u, std::size_t t) {
    if (t < 1) throw std::invalid_argument("top_correlates: t must be >= 1");
    auto candidates = m.row(u);
    std::erase_if(candidates, [&](const auto& c) { return c.first == u; });
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (candidates.size() > t) candidates.resize(t);
    std::vector<Term> out;
    out.reserve(candidates.size());
    for (auto& [term, _] : candidates) out.push_back(std::move(term));
    return out;
}

Query expand_prf(const InvertedIndex& index, const Query& q, const PrfParams& p) {
    const auto docs = sample_top_docs(index, q, p.d);
    if (docs.empty()) return q;

    const auto matrix = build_association_matrix(index, docs);
    Query out;
    out.qid = q.qid;
    out.terms = q.terms;
    std::unordered_set<Term> seen(q.terms.begin(), q.terms.end());
    for (const auto& u : q.terms) {
        for (auto& v : top_correlates(matrix, u, p.t)) {
            if (seen.insert(v).second) out.terms.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<Query> load_queries(const std::filesystem::path& path, const AnalyzerConfig& cfg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open queries file: " + path.string());
    std::vector<Query> queries;
    std::unordered_set<std::string> seen;
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
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw err("expected qid<TAB>query text");
        std::string qid = line.substr(0, tab);
        if (qid.empty()) throw err("empty query id");
        if (!seen.insert(qid).second) throw err("duplicate query id: " + qid);
        queries.push_back(make_query(std::move(qid), line.substr(tab + 1), cfg));
    }
    return queries;
}

void write_expanded(const std::filesystem::path& path, const std::vector<Query>& queries) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write: " + path.string());
    for (const auto& q : queries) {
        out << q.qid << '\t';
        for (std::size_t i = 0; i < q.terms.size(); ++i) {
            if (i > 0) out << ' ';
            out << q.terms[i];
        }
        out << '\n';
    }
}

}  // namespace qrkit
