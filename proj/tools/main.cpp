#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cooc/config.hpp"
#include "cooc/errors.hpp"
#include "cooc/export.hpp"
#include "cooc/names.hpp"
#include "cooc/pipeline.hpp"

namespace {

// One flag per PipelineConfig field; flags override config file values.
struct ConfigFlags {
    std::string config_file;
    std::string corpus_path;
    std::string stopwords_path;
    std::string keywords_path;
    std::string mode;
    std::string row_grouping;
    std::int64_t min_weight = 0;
    std::int64_t min_term_frequency = 0;
    std::string teacher;
    std::int64_t central_k = 0;
    std::string community_method;
    std::string output_dir;
    std::vector<std::string> graph_formats;

    CLI::Option* o_config = nullptr;
    CLI::Option* o_corpus = nullptr;
    CLI::Option* o_stopwords = nullptr;
    CLI::Option* o_keywords = nullptr;
    CLI::Option* o_mode = nullptr;
    CLI::Option* o_grouping = nullptr;
    CLI::Option* o_min_weight = nullptr;
    CLI::Option* o_min_tf = nullptr;
    CLI::Option* o_teacher = nullptr;
    CLI::Option* o_central_k = nullptr;
    CLI::Option* o_community = nullptr;
    CLI::Option* o_output = nullptr;
    CLI::Option* o_formats = nullptr;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f) {
    f.o_config =
        cmd->add_option("--config", f.config_file, "JSON config file");
    f.o_corpus = cmd->add_option("--corpus_path", f.corpus_path,
                                 "corpus JSONL file");
    f.o_stopwords = cmd->add_option("--stopwords_path", f.stopwords_path,
                                    "stopword list, one per line");
    f.o_keywords = cmd->add_option("--keywords_path", f.keywords_path,
                                   "keyword phrase list, one per line");
    f.o_mode = cmd->add_option("--mode", f.mode, "frequency|presence");
    f.o_grouping = cmd->add_option("--row_grouping", f.row_grouping,
                                   "per_document|per_author");
    f.o_min_weight = cmd->add_option("--min_weight", f.min_weight,
                                     "edge weight threshold (>= 1)");
    f.o_min_tf = cmd->add_option("--min_term_frequency", f.min_term_frequency,
                                 "corpus-wide term frequency floor (>= 1)");
    f.o_teacher = cmd->add_option("--teacher", f.teacher,
                                  "reference author id");
    f.o_central_k = cmd->add_option("--central_k", f.central_k,
                                    "number of central nodes (>= 1)");
    f.o_community = cmd->add_option("--community_method", f.community_method,
                                    "components|label_propagation");
    f.o_output = cmd->add_option("--output_dir", f.output_dir,
                                 "directory for result files");
    f.o_formats = cmd->add_option("--graph_formats", f.graph_formats,
                                  "graph export formats (dot,graphml,json,svg)")
                      ->delimiter(',');
}

cooc::PipelineConfig config_from(const ConfigFlags& f) {
    cooc::PipelineConfig cfg;
    if (f.o_config->count() > 0)
        cfg = cooc::load_pipeline_config(f.config_file);
    if (f.o_corpus->count() > 0)
        cfg.corpus_path = f.corpus_path;
    if (f.o_stopwords->count() > 0)
        cfg.stopwords_path = f.stopwords_path;
    if (f.o_keywords->count() > 0)
        cfg.keywords_path = f.keywords_path;
    if (f.o_mode->count() > 0)
        cfg.mode = cooc::count_mode_from(f.mode);
    if (f.o_grouping->count() > 0)
        cfg.row_grouping = cooc::row_grouping_from(f.row_grouping);
    if (f.o_min_weight->count() > 0)
        cfg.min_weight = f.min_weight;
    if (f.o_min_tf->count() > 0)
        cfg.min_term_frequency = f.min_term_frequency;
    if (f.o_teacher->count() > 0)
        cfg.teacher = f.teacher;
    if (f.o_central_k->count() > 0)
        cfg.central_k = f.central_k;
    if (f.o_community->count() > 0)
        cfg.community_method = cooc::community_method_from(f.community_method);
    if (f.o_output->count() > 0)
        cfg.output_dir = f.output_dir;
    if (f.o_formats->count() > 0) {
        cfg.graph_formats.clear();
        for (const auto& name : f.graph_formats) {
            const auto format = cooc::graph_format_from(name);
            if (std::find(cfg.graph_formats.begin(), cfg.graph_formats.end(),
                          format) == cfg.graph_formats.end())
                cfg.graph_formats.push_back(format);
        }
    }
    cooc::validate_config(cfg);
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"corpus co-occurrence analytics"};
    app.set_version_flag("--version", "0.1.0");
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand(
        "analyze", "run the full pipeline per phase plus union");
    ConfigFlags analyze_flags;
    add_config_flags(analyze, analyze_flags);

    auto* diff = app.add_subcommand("diff", "compare two corpus phases");
    ConfigFlags diff_flags;
    std::string phase_a;
    std::string phase_b;
    diff->add_option("phase_a", phase_a, "first phase label")->required();
    diff->add_option("phase_b", phase_b, "second phase label")->required();
    add_config_flags(diff, diff_flags);

    auto* rank = app.add_subcommand(
        "rank", "rank an author,weight CSV against a reference author");
    std::string weights_csv;
    std::string rank_teacher = "0";
    rank->add_option("weights_csv", weights_csv, "author,weight CSV file")
        ->required();
    rank->add_option("--teacher", rank_teacher, "reference author id");

    auto* tokenize = app.add_subcommand(
        "tokenize", "print token sequences as JSONL (debugging aid)");
    ConfigFlags tokenize_flags;
    add_config_flags(tokenize, tokenize_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) {
            cooc::run_analyze(config_from(analyze_flags));
        } else if (diff->parsed()) {
            cooc::run_diff(config_from(diff_flags), phase_a, phase_b);
        } else if (rank->parsed()) {
            const auto table = cooc::run_rank(weights_csv, rank_teacher);
            std::cout << cooc::export_table(table, cooc::GraphFormat::csv);
        } else if (tokenize->parsed()) {
            std::cout << cooc::run_tokenize(config_from(tokenize_flags));
        }
    } catch (const cooc::OutputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cooc::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
