#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cooc/align.hpp"
#include "cooc/config.hpp"
#include "cooc/corpus.hpp"
#include "cooc/graph.hpp"

namespace cooc {

struct CentralDelta {
    std::vector<std::string> added;    // central in b only
    std::vector<std::string> removed;  // central in a only
    std::vector<std::string> retained; // central in both

    friend bool operator==(const CentralDelta&, const CentralDelta&) = default;
};

struct EdgeDelta {
    std::string label_a;
    std::string label_b;
    std::int64_t weight_a = 0; // 0 when the edge is absent in a
    std::int64_t weight_b = 0;

    friend bool operator==(const EdgeDelta&, const EdgeDelta&) = default;
};

struct AlignmentDelta {
    AuthorId author;
    std::int64_t weight_a = 0;
    std::int64_t weight_b = 0;
    std::int64_t rank_a = 0; // 1-based
    std::int64_t rank_b = 0;

    friend bool operator==(const AlignmentDelta&, const AlignmentDelta&) = default;
};

// Structured comparison of two corpus phases computed over a shared union
// vocabulary, so every term keeps one column index across both sides.
struct PhaseDiff {
    std::string phase_a;
    std::string phase_b;
    std::vector<std::string> central_added;
    std::vector<std::string> central_removed;
    std::vector<std::string> central_retained;
    std::vector<EdgeDelta> edge_deltas;       // every edge of either graph, once
    std::vector<AlignmentDelta> alignment_deltas;

    friend bool operator==(const PhaseDiff&, const PhaseDiff&) = default;
};

// Set difference of two central-node lists; each output is sorted.
CentralDelta diff_central(const std::vector<std::string>& central_a,
                          const std::vector<std::string>& central_b);

// Union of both edge sets with per-side weights (absent side 0), pairs
// normalized and sorted lexicographically.
std::vector<EdgeDelta> diff_edges(const CoGraph& a, const CoGraph& b);

// Weight and 1-based rank movement per author; both tables must cover the
// same authors (guaranteed by union vectorization). Sorted by author in
// natural order. Throws InputError when the author sets differ.
std::vector<AlignmentDelta> diff_alignment(const AlignmentTable& a,
                                           const AlignmentTable& b);

// Full two-phase comparison: preprocess the union of the two phases (term
// frequency floor included), vectorize each phase against the union
// vocabulary and author set, then diff central nodes, term-graph edges, and
// teacher alignment. Throws InputError on an unknown phase.
PhaseDiff diff_phases(const Corpus& corpus, const std::string& phase_a,
                      const std::string& phase_b, const PipelineConfig& cfg);

} // namespace cooc
