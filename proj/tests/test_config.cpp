#include <doctest.h>

#include <string>
#include <vector>

#include "qrkit/config.hpp"
#include "qrkit/errors.hpp"
#include "support/tmpdir.hpp"

using namespace qrkit;

TEST_CASE("config files parse key = value lines") {
    testsupport::TempDir tmp;
    const auto p = tmp.file("exp/run.conf",
                            "# experiment\n"
                            "corpus = data/corpus\n"
                            "queries = \"queries.tsv\"  # quoted, with comment\n"
                            "d = 10\n"
                            "t = 3\n"
                            "k = 500\n"
                            "k_levels = 10, 5, 20, 10\n"
                            "dump_expanded = true\n"
                            "tag = base\n");
    ExperimentConfig cfg;
    apply_config_file(cfg, p);

    // relative paths resolve against the config file directory
    CHECK(cfg.corpus_dir == tmp.path() / "exp" / "data/corpus");
    CHECK(cfg.queries_path == tmp.path() / "exp" / "queries.tsv");
    CHECK(cfg.prf.d == 10);
    CHECK(cfg.prf.t == 3);
    CHECK(cfg.k_retrieve == 500);
    CHECK(cfg.dump_expanded);
    CHECK(cfg.tag == "base");
    CHECK_FALSE(cfg.analyzer_explicit);

    finalize_config(cfg);
    CHECK(cfg.k_levels == std::vector<std::size_t>{5, 10, 20});  // sorted, deduped
    CHECK(cfg.prf.k_sample == 100);                              // max(d, default)
}

TEST_CASE("analyzer keys mark the analyzer as explicit") {
    testsupport::TempDir tmp;
    tmp.file("stop.txt", "the\n");
    const auto p = tmp.file("a.conf",
                            "analyzer.lowercase = false\n"
                            "analyzer.min_token_length = 2\n"
                            "stopwords = stop.txt\n");
    ExperimentConfig cfg;
    apply_config_file(cfg, p);
    CHECK(cfg.analyzer_explicit);
    CHECK_FALSE(cfg.analyzer.lowercase);
    CHECK(cfg.analyzer.min_token_length == 2);

    finalize_config(cfg);
    CHECK(cfg.analyzer.stopwords == std::set<Term>{"the"});
}

TEST_CASE("config file errors name the line") {
    testsupport::TempDir tmp;
    const auto expect = [&](const std::string& text, const std::string& needle) {
        ExperimentConfig cfg;
        try {
            apply_config_file(cfg, tmp.file("bad.conf", text));
            FAIL("expected UsageError");
        } catch (const UsageError& e) {
            const std::string what = e.what();
            CHECK(what.find(needle) != std::string::npos);
            CHECK(what.find(":1:") != std::string::npos);
        }
    };
    expect("no equals sign\n", "expected 'key = value'");
    expect("mystery = 4\n", "unknown key");
    expect("force = maybe\n", "expected true or false");
    expect("d = ten\n", "non-negative integer");
    expect("d = -3\n", "non-negative integer");
    expect("k_levels = \n", "integer list");
    expect("= 4\n", "missing key");
    expect("queries = \"half\n", "unterminated");

    ExperimentConfig cfg;
    CHECK_THROWS_AS(apply_config_file(cfg, tmp.path() / "absent.conf"), UsageError);
}

TEST_CASE("finalize_config validates parameter ranges") {
    const auto expect = [](void (*mutate)(ExperimentConfig&), const std::string& needle) {
        ExperimentConfig cfg;
        mutate(cfg);
        try {
            finalize_config(cfg);
            FAIL("expected UsageError");
        } catch (const UsageError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect([](ExperimentConfig& c) { c.prf.d = 0; }, "--d");
    expect([](ExperimentConfig& c) { c.prf.t = 0; }, "--t");
    expect([](ExperimentConfig& c) { c.k_retrieve = 0; }, "--k");
    expect([](ExperimentConfig& c) { c.k_levels = {}; }, "k_levels");
    expect([](ExperimentConfig& c) { c.k_levels = {0, 5}; }, "at least 1");
    expect([](ExperimentConfig& c) { c.k_retrieve = 50; },
           "must be >= the largest cutoff");

    ExperimentConfig ok;
    ok.prf.d = 300;  // k_sample rises to keep the pool at least d deep
    finalize_config(ok);
    CHECK(ok.prf.k_sample == 300);

    ExperimentConfig missing;
    missing.stopwords_path = "/nonexistent/stopwords.txt";
    CHECK_THROWS_AS(finalize_config(missing), DataError);
}
