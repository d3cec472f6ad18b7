#pragma once

#include <filesystem>
#include <string>

#include "cooc/align.hpp"
#include "cooc/config.hpp"
#include "cooc/phasediff.hpp"

namespace cooc {

// Full analysis run. Writes one directory per phase (phase_<label>) plus
// "union" under cfg.output_dir, each holding the term-document matrix, both
// co-occurrence matrices, term and row graph exports in every configured
// format, the teacher alignment table, and a summary JSON naming central
// nodes and communities. All writes are atomic; corpus and config problems
// throw InputError before anything is written, write failures OutputError.
void run_analyze(const PipelineConfig& cfg);

// Two-phase comparison. Writes diff_<a>_<b>.json and diff_<a>_<b>.txt under
// cfg.output_dir and returns the diff.
PhaseDiff run_diff(const PipelineConfig& cfg, const std::string& phase_a,
                   const std::string& phase_b);

// Rank an external "author,weight" CSV (optional header line) against a
// reference author. Throws InputError on malformed rows, duplicate authors,
// or negative weights.
AlignmentTable run_rank(const std::filesystem::path& weights_csv,
                        const AuthorId& reference);

// Token sequences of the configured corpus as JSONL, one
// {"doc_id":...,"tokens":[...]} object per document in canonical order.
std::string run_tokenize(const PipelineConfig& cfg);

} // namespace cooc
