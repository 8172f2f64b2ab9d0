// qrkit: build an index, produce retrieval runs (plain / concept-expanded /
// feedback-expanded), and evaluate them TREC-style.

#include <cstddef>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qrkit/commands.hpp"
#include "qrkit/config.hpp"
#include "qrkit/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"ranked retrieval with concept-based and feedback query reformulation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qrkit 0.1.0");

    std::string config_path;
    std::string corpus, index_dir, queries, qrels, thesaurus, out, tag;
    std::string mode, run_path, baseline_path, variant_path;
    std::size_t d = 0, t = 0, k = 0;
    bool dump_expanded = false, force = false;

    CLI::App* c_index = app.add_subcommand("index", "Build an inverted index from a corpus directory");
    CLI::Option* o_i_corpus = c_index->add_option("--corpus", corpus, "Corpus directory, *.txt files, recursive");
    CLI::Option* o_i_index = c_index->add_option("--index", index_dir, "Index directory to write");
    CLI::Option* o_i_force = c_index->add_flag("--force", force, "Overwrite an existing index");
    c_index->add_option("--config", config_path, "Experiment config file");

    CLI::App* c_run = app.add_subcommand("run", "Execute queries and write a TREC run file");
    c_run->add_option("mode", mode, "Retrieval mode: sr, cb, or prf")
        ->required()
        ->check(CLI::IsMember({"sr", "cb", "prf"}));
    CLI::Option* o_r_index = c_run->add_option("--index", index_dir, "Index directory");
    CLI::Option* o_r_queries = c_run->add_option("--queries", queries, "Queries TSV: qid<TAB>text");
    CLI::Option* o_r_thes = c_run->add_option("--thesaurus", thesaurus, "Synset TSV (required for mode cb)");
    CLI::Option* o_r_out = c_run->add_option("--out", out, "Run file to write");
    CLI::Option* o_r_d = c_run->add_option("--d", d, "Feedback documents to sample (prf)");
    CLI::Option* o_r_t = c_run->add_option("--t", t, "Correlates per query term (prf)");
    CLI::Option* o_r_k = c_run->add_option("--k", k, "Documents to retrieve per query");
    CLI::Option* o_r_tag = c_run->add_option("--tag", tag, "Run tag (default: the mode name)");
    CLI::Option* o_r_dump = c_run->add_flag("--dump-expanded", dump_expanded,
                                            "Also write <out>.expanded.tsv with the post-expansion queries");
    c_run->add_option("--config", config_path, "Experiment config file");

    CLI::App* c_eval = app.add_subcommand("eval", "Score a run file against relevance judgments");
    c_eval->add_option("run", run_path, "Run file to evaluate")->required();
    CLI::Option* o_e_qrels = c_eval->add_option("--qrels", qrels, "TREC qrels file");
    CLI::Option* o_e_out = c_eval->add_option("--out", out, "Report base path; writes <out>.csv and <out>.json");
    c_eval->add_option("--config", config_path, "Experiment config file");

    CLI::App* c_cmp = app.add_subcommand("compare", "Classify per-query improvement of a variant run over a baseline");
    c_cmp->add_option("baseline", baseline_path, "Baseline run file")->required();
    c_cmp->add_option("variant", variant_path, "Variant run file")->required();
    CLI::Option* o_c_qrels = c_cmp->add_option("--qrels", qrels, "TREC qrels file");
    CLI::Option* o_c_out = c_cmp->add_option("--out", out, "Report base path; writes <out>.csv and <out>.json");
    c_cmp->add_option("--config", config_path, "Experiment config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    qrkit::ExperimentConfig cfg;
    try {
        if (!config_path.empty()) qrkit::apply_config_file(cfg, config_path);

        if (o_i_corpus->count()) cfg.corpus_dir = corpus;
        if (o_i_index->count() || o_r_index->count()) cfg.index_dir = index_dir;
        if (o_i_force->count()) cfg.force = force;
        if (o_r_queries->count()) cfg.queries_path = queries;
        if (o_r_thes->count()) cfg.thesaurus_path = thesaurus;
        if (o_r_out->count() || o_e_out->count() || o_c_out->count()) cfg.out = out;
        if (o_r_d->count()) cfg.prf.d = d;
        if (o_r_t->count()) cfg.prf.t = t;
        if (o_r_k->count()) cfg.k_retrieve = k;
        if (o_r_tag->count()) cfg.tag = tag;
        if (o_r_dump->count()) cfg.dump_expanded = dump_expanded;
        if (o_e_qrels->count() || o_c_qrels->count()) cfg.qrels_path = qrels;

        qrkit::finalize_config(cfg);
    } catch (const qrkit::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const qrkit::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }

    if (c_index->parsed()) return qrkit::cmd_index(cfg, std::cout, std::cerr);
    if (c_run->parsed()) return qrkit::cmd_run(cfg, qrkit::parse_mode(mode), std::cout, std::cerr);
    if (c_eval->parsed()) return qrkit::cmd_eval(cfg, run_path, std::cout, std::cerr);
    if (c_cmp->parsed()) return qrkit::cmd_compare(cfg, baseline_path, variant_path, std::cout, std::cerr);
    return 1;
}
