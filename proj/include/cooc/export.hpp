#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cooc/align.hpp"
#include "cooc/graph.hpp"
#include "cooc/matrix.hpp"

namespace cooc {

struct PhaseDiff;

enum class GraphFormat { csv, dot, graphml, json, svg };

// Rendering knobs shared by the graph serializers. Scales must be strictly
// positive; width/radius attributes come out as weight * edge_width_scale and
// node_size_scale * sqrt(strength).
struct ExportConfig {
    GraphFormat format = GraphFormat::json;
    double edge_width_scale = 1.0;
    double node_size_scale = 8.0;

    friend bool operator==(const ExportConfig&, const ExportConfig&) = default;
};

// Serialize a graph to DOT, GraphML, JSON, or SVG. Every format is byte
// deterministic for a given graph and config: nodes in node order, edges in
// edge order, "\n" line endings, UTF-8 throughout. CSV is not a graph format
// and throws InputError, as do non-positive scales.
std::string export_graph(const CoGraph& g, const ExportConfig& cfg);

// Inverse of the JSON graph export. Throws InputError on malformed input.
CoGraph graph_from_json(std::string_view text);

// Tables and matrices serialize to CSV or JSON only; other formats throw
// InputError. Alignment CSV is "rank,author,weight" in rank order with
// 1-based ranks; matrix CSV is a dense grid with explicit zeros and an empty
// first header cell.
std::string export_table(const AlignmentTable& t, GraphFormat format);
std::string export_table(const CooccurMatrix& m, GraphFormat format);
std::string export_table(const PhaseDiff& d, GraphFormat format);

// Dense CSV of the term-document matrix: header = terms, one line per row key.
std::string term_doc_to_csv(const TermDocMatrix& x);

// Human-readable diff summary: central added/removed plus the top-5 alignment
// movers by absolute rank change (ties by author in natural order).
std::string diff_to_text(const PhaseDiff& d);

// Write content to path via a temp file in the same directory plus rename, so
// a failed run never leaves a partial file. Creates parent directories.
// Throws OutputError on any filesystem failure.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

} // namespace cooc
