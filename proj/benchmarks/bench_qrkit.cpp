// Microbenchmarks for the hot paths: analysis, index construction, BM25
// search, association-matrix construction, feedback expansion, and the
// evaluation curve.  All inputs are synthetic and seeded, so numbers are
// comparable across runs on the same machine.

#include <benchmark/benchmark.h>

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qrkit/analyzer.hpp"
#include "qrkit/eval.hpp"
#include "qrkit/expansion.hpp"
#include "qrkit/index.hpp"

using namespace qrkit;

namespace {

std::string term_of(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "t%04zu", i);
    return buf;
}

// docs of ~80 tokens drawn Zipf-ish from a vocabulary of `vocab` terms
std::vector<std::pair<DocId, std::string>> synthetic_corpus(std::size_t docs, std::size_t vocab) {
    std::mt19937 rng(42);
    std::geometric_distribution<std::size_t> zipf(0.02);
    std::vector<std::pair<DocId, std::string>> corpus;
    corpus.reserve(docs);
    for (std::size_t d = 0; d < docs; ++d) {
        char name[32];
        std::snprintf(name, sizeof(name), "d%05zu", d);
        std::string text;
        for (int t = 0; t < 80; ++t) {
            text += term_of(zipf(rng) % vocab);
            text += ' ';
        }
        corpus.emplace_back(name, std::move(text));
    }
    return corpus;
}

const InvertedIndex& shared_index() {
    static const InvertedIndex idx =
        InvertedIndex::build_in_memory(synthetic_corpus(2000, 5000), AnalyzerConfig{});
    return idx;
}

void BM_Analyze(benchmark::State& state) {
    const AnalyzerConfig cfg;
    const std::string text =
        "ارتفعت أَسعار النفط الخام في الأسواق العالمية، وقال التقرير إن "
        "الإنتاج سيظل مستقراً؛ Global OIL prices rose by 3.4% this week.";
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze(text, cfg));
    }
}
BENCHMARK(BM_Analyze);

void BM_IndexBuild(benchmark::State& state) {
    const auto corpus = synthetic_corpus(static_cast<std::size_t>(state.range(0)), 5000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(InvertedIndex::build_in_memory(corpus, AnalyzerConfig{}));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IndexBuild)->Arg(100)->Arg(1000);

void BM_Search(benchmark::State& state) {
    const auto& idx = shared_index();
    const std::vector<Term> query = {term_of(3), term_of(17), term_of(40)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(idx.search(query, 100));
    }
}
BENCHMARK(BM_Search);

void BM_AssociationMatrix(benchmark::State& state) {
    const auto& idx = shared_index();
    Query query;
    query.qid = "q";
    query.terms = {term_of(3), term_of(17), term_of(40)};
    const auto sampled = sample_top_docs(idx, query, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_association_matrix(idx, sampled));
    }
}
BENCHMARK(BM_AssociationMatrix)->Arg(5)->Arg(15)->Arg(50);

void BM_ExpandPrf(benchmark::State& state) {
    const auto& idx = shared_index();
    Query query;
    query.qid = "q";
    query.terms = {term_of(3), term_of(17), term_of(40)};
    PrfParams params;  // d = 15, t = 7
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand_prf(idx, query, params));
    }
}
BENCHMARK(BM_ExpandPrf);

void BM_EvalCurve(benchmark::State& state) {
    std::mt19937 rng(7);
    std::vector<DocId> ranked;
    std::set<DocId> rel;
    for (std::size_t i = 0; i < 1000; ++i) {
        ranked.push_back(term_of(i));
        if (rng() % 10 == 0) rel.insert(term_of(i));
    }
    rel.insert(term_of(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(interpolated_pr_curve(ranked, rel));
    }
}
BENCHMARK(BM_EvalCurve);

}  // namespace

BENCHMARK_MAIN();
