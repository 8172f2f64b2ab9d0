#include "qrkit/commands.hpp"

#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "qrkit/errors.hpp"
#include "qrkit/eval.hpp"
#include "qrkit/expansion.hpp"
#include "qrkit/index.hpp"
#include "qrkit/report_io.hpp"
#include "qrkit/thesaurus.hpp"
#include "qrkit/trec.hpp"

namespace qrkit {
namespace {

int guarded(std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw UsageError("missing required option " + what);
}

std::filesystem::path with_suffix(const std::filesystem::path& p, const char* suffix) {
    return std::filesystem::path(p.string() + suffix);
}

}  // namespace

std::string_view mode_name(RunMode m) {
    switch (m) {
        case RunMode::sr: return "sr";
        case RunMode::cb: return "cb";
        case RunMode::prf: return "prf";
    }
    return "sr";
}

RunMode parse_mode(std::string_view name) {
    if (name == "sr") return RunMode::sr;
    if (name == "cb") return RunMode::cb;
    if (name == "prf") return RunMode::prf;
    throw UsageError("invalid mode '" + std::string(name) + "' (expected sr, cb, or prf)");
}

int cmd_index(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require(!cfg.corpus_dir.empty(), "--corpus");
        require(!cfg.index_dir.empty(), "--index");
        if (std::filesystem::exists(cfg.index_dir / "manifest.json") && !cfg.force) {
            throw UsageError("index already exists at " + cfg.index_dir.string() +
                             " (use --force to overwrite)");
        }
        InvertedIndex idx = InvertedIndex::build(cfg.corpus_dir, cfg.analyzer);
        idx.save(cfg.index_dir);
        char avg[32];
        std::snprintf(avg, sizeof avg, "%.2f", idx.avg_doc_len());
        out << "indexed " << idx.num_docs() << " documents, " << idx.vocab_size()
            << " distinct terms, " << idx.total_terms() << " tokens\n"
            << "average document length: " << avg << " tokens\n"
            << "index written to " << cfg.index_dir.string() << '\n';
    });
}

int cmd_run(const ExperimentConfig& cfg, RunMode mode, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require(!cfg.index_dir.empty(), "--index");
        require(!cfg.queries_path.empty(), "--queries");
        require(!cfg.out.empty(), "--out");
        if (mode == RunMode::cb && cfg.thesaurus_path.empty()) {
            throw UsageError("mode cb requires --thesaurus");
        }

        InvertedIndex idx = InvertedIndex::load(cfg.index_dir);
        if (cfg.analyzer_explicit && !(cfg.analyzer == idx.analyzer())) {
            throw DataError("analyzer settings do not match the index at " + cfg.index_dir.string() +
                            " (re-index, or drop the analyzer overrides to use the index's settings)");
        }
        const AnalyzerConfig& an = idx.analyzer();

        std::vector<Query> queries = load_queries(cfg.queries_path, an);
        std::optional<Thesaurus> th;
        if (mode == RunMode::cb) th = Thesaurus::load(cfg.thesaurus_path, an);

        RunResult run;
        run.tag = cfg.tag.empty() ? std::string(mode_name(mode)) : cfg.tag;
        std::vector<Query> expanded;
        expanded.reserve(queries.size());
        for (const Query& q : queries) {
            Query e = q;
            if (q.terms.empty()) {
                err << "warning: query " << q.qid << ": no terms after analysis; skipped\n";
            } else if (mode == RunMode::cb) {
                e = expand_cb(q, *th);
            } else if (mode == RunMode::prf) {
                e = expand_prf(idx, q, cfg.prf);
            }
            expanded.push_back(e);
            if (e.terms.empty()) continue;

            std::vector<ScoredHit> hits = idx.search(e.terms, cfg.k_retrieve);
            if (hits.empty()) {
                err << "warning: query " << q.qid << ": no matching documents; omitted from run\n";
                continue;
            }
            run.order.push_back(q.qid);
            std::vector<RunEntry>& lst = run.ranked[q.qid];
            lst.reserve(hits.size());
            for (const ScoredHit& h : hits) lst.push_back({h.doc, h.score});
        }

        write_run(cfg.out, run);
        if (cfg.dump_expanded) {
            write_expanded(with_suffix(cfg.out, ".expanded.tsv"), expanded);
        }
        out << "run '" << run.tag << "': " << run.order.size() << " of " << queries.size()
            << " queries produced results -> " << cfg.out.string() << '\n';
    });
}

int cmd_eval(const ExperimentConfig& cfg, const std::filesystem::path& run_path,
             std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require(!cfg.qrels_path.empty(), "--qrels");
        require(!cfg.out.empty(), "--out");

        RunResult run = load_run(run_path);
        Qrels qrels = load_qrels(cfg.qrels_path);
        EvalReport report = evaluate_run(run, qrels, cfg.k_levels);

        write_eval_csv(with_suffix(cfg.out, ".csv"), report);
        write_eval_json(with_suffix(cfg.out, ".json"), report);
        print_eval_summary(out, report);
        out << "report written to " << cfg.out.string() << ".{csv,json}\n";
    });
}

int cmd_compare(const ExperimentConfig& cfg, const std::filesystem::path& baseline_path,
                const std::filesystem::path& variant_path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require(!cfg.qrels_path.empty(), "--qrels");
        require(!cfg.out.empty(), "--out");

        Qrels qrels = load_qrels(cfg.qrels_path);
        EvalReport baseline = evaluate_run(load_run(baseline_path), qrels, cfg.k_levels);
        EvalReport variant = evaluate_run(load_run(variant_path), qrels, cfg.k_levels);
        ComparisonReport report = compare_runs(baseline, variant);

        write_comparison_csv(with_suffix(cfg.out, ".csv"), report);
        write_comparison_json(with_suffix(cfg.out, ".json"), report);
        print_comparison(out, report);
        out << "comparison written to " << cfg.out.string() << ".{csv,json}\n";
    });
}

}  // namespace qrkit
