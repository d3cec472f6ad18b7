#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/export.hpp"
#include "cooc/graph.hpp"
#include "cooc/matrix.hpp"
#include "cooc/names.hpp"
#include "cooc/textprep.hpp"

namespace cooc {

// Everything a pipeline run needs. Loadable from a JSON config file whose
// keys match the field names; command-line flags override individual fields.
struct PipelineConfig {
    std::filesystem::path corpus_path;
    std::optional<std::filesystem::path> stopwords_path;
    std::optional<std::filesystem::path> keywords_path;
    CountMode mode = CountMode::frequency;
    RowGrouping row_grouping = RowGrouping::per_author;
    std::int64_t min_weight = 1;
    std::int64_t min_term_frequency = 1;
    AuthorId teacher = "0";
    std::int64_t central_k = 3;
    CommunityMethod community_method = CommunityMethod::components;
    std::filesystem::path output_dir = "out";
    // Graph serializations each run writes; csv is not a graph format.
    std::vector<GraphFormat> graph_formats = {
        GraphFormat::dot, GraphFormat::graphml, GraphFormat::json,
        GraphFormat::svg};

    friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

// Parse a JSON config file. Unknown keys are rejected, enum values use the
// spellings in names.hpp, and relative input paths (corpus, stopwords,
// keywords) resolve against the config file's directory. output_dir stays
// relative to the working directory. Throws InputError on any problem.
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

// Bounds checks shared by file loading and flag overrides: nonempty
// corpus_path and teacher, min_weight >= 1, min_term_frequency >= 1,
// central_k >= 1, graph_formats free of csv. Throws InputError.
void validate_config(const PipelineConfig& cfg);

// Tokenization settings implied by a pipeline config: word lists loaded from
// the configured paths (absent path = empty list) and the term frequency
// floor carried over.
PrepConfig prep_config_from(const PipelineConfig& cfg);

} // namespace cooc
