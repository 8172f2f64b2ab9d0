#pragma once

#include <filesystem>

#include "qrkit/eval.hpp"

namespace qrkit {

/// Parse TREC qrels: `qid iter docid rel`, whitespace-separated. `rel` must
/// be a non-negative integer; positive values mean relevant. Malformed lines
/// and duplicate (qid, docid) pairs throw DataError naming the line.
Qrels load_qrels(const std::filesystem::path& path);

/// Parse a TREC run file: `qid Q0 docid rank score tag`. Within each query
/// the entries are re-sorted by (score descending, DocId ascending), so the
/// rank column never overrides the scores. Duplicate documents within a
/// query, non-numeric fields, and non-finite scores throw DataError naming
/// the line.
RunResult load_run(const std::filesystem::path& path);

/// Write a run in TREC format, queries in `run.order`, ranks starting at 1.
/// Scores carry 12 significant digits so a written run reloads in the same
/// order.
void write_run(const std::filesystem::path& path, const RunResult& run);

}  // namespace qrkit
