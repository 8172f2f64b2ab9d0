#include "qrkit/trec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "qrkit/errors.hpp"

namespace qrkit {

namespace {

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream is(line);
    std::string f;
    while (is >> f) fields.push_back(std::move(f));
    return fields;
}

DataError line_error(const std::filesystem::path& path, std::size_t lineno,
                     const std::string& msg) {
    return DataError(path.string() + ":" + std::to_string(lineno) + ": " + msg);
}

bool parse_size(const std::string& s, std::size_t& out) {
    if (s.empty()) return false;
    std::size_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    out = v;
    return true;
}

bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(s, &used);
        return used == s.size() && std::isfinite(out);
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

Qrels load_qrels(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open qrels file: " + path.string());
    Qrels qrels;
    std::set<std::pair<std::string, std::string>> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto f = fields_of(line);
        if (f.size() != 4) throw line_error(path, lineno, "expected: qid iter docid rel");
        std::size_t rel = 0;
        if (!parse_size(f[3], rel)) {
            throw line_error(path, lineno, "relevance must be a non-negative integer");
        }
        if (!seen.emplace(f[0], f[2]).second) {
            throw line_error(path, lineno, "duplicate judgment for (" + f[0] + ", " + f[2] + ")");
        }
        auto& docs = qrels.relevant[f[0]];  // registers the qid even for rel 0
        if (rel > 0) docs.insert(f[2]);
    }
    return qrels;
}

RunResult load_run(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open run file: " + path.string());
    RunResult run;
    std::set<std::pair<std::string, std::string>> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto f = fields_of(line);
        if (f.size() != 6) throw line_error(path, lineno, "expected: qid Q0 docid rank score tag");
        std::size_t rank = 0;
        if (!parse_size(f[3], rank)) {
            throw line_error(path, lineno, "rank must be a non-negative integer");
        }
        double score = 0.0;
        if (!parse_double(f[4], score)) {
            throw line_error(path, lineno, "score must be a finite number");
        }
        if (!seen.emplace(f[0], f[2]).second) {
            throw line_error(path, lineno,
                             "duplicate document " + f[2] + " for query " + f[0]);
        }
        if (run.tag.empty()) run.tag = f[5];
        auto [it, inserted] = run.ranked.try_emplace(f[0]);
        if (inserted) run.order.push_back(f[0]);
        it->second.push_back({f[2], score});
    }
    for (auto& [qid, entries] : run.ranked) {
        std::sort(entries.begin(), entries.end(), [](const RunEntry& a, const RunEntry& b) {
            if (a.score != b.score) return a.score > b.score;
            return a.doc < b.doc;
        });
    }
    return run;
}

void write_run(const std::filesystem::path& path, const RunResult& run) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write: " + path.string());
    char score_buf[40];
    for (const auto& qid : run.order) {
        const auto& entries = run.ranked.at(qid);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            std::snprintf(score_buf, sizeof(score_buf), "%.12g", entries[i].score);
            out << qid << " Q0 " << entries[i].doc << ' ' << (i + 1) << ' ' << score_buf << ' '
                << run.tag << '\n';
        }
    }
}

}  // namespace qrkit
