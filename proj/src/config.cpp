#include "cooc/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cooc/errors.hpp"

namespace cooc {

namespace {

using nlohmann::json;

std::string want_string(const json& j, const std::string& key) {
    if (!j.is_string())
        throw InputError("config key \"" + key + "\" must be a string");
    return j.get<std::string>();
}

std::int64_t want_int(const json& j, const std::string& key) {
    if (!j.is_number_integer())
        throw InputError("config key \"" + key + "\" must be an integer");
    return j.get<std::int64_t>();
}

std::filesystem::path resolve_input(const std::filesystem::path& base,
                                    const std::filesystem::path& p) {
    return p.is_absolute() ? p : base / p;
}

} // namespace

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();

    json j = json::parse(buf.str(), nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw InputError("config file is not a JSON object: " + path.string());

    const auto base = path.parent_path();
    PipelineConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "corpus_path") {
            cfg.corpus_path = resolve_input(base, want_string(value, key));
        } else if (key == "stopwords_path") {
            cfg.stopwords_path = resolve_input(base, want_string(value, key));
        } else if (key == "keywords_path") {
            cfg.keywords_path = resolve_input(base, want_string(value, key));
        } else if (key == "mode") {
            cfg.mode = count_mode_from(want_string(value, key));
        } else if (key == "row_grouping") {
            cfg.row_grouping = row_grouping_from(want_string(value, key));
        } else if (key == "min_weight") {
            cfg.min_weight = want_int(value, key);
        } else if (key == "min_term_frequency") {
            cfg.min_term_frequency = want_int(value, key);
        } else if (key == "teacher") {
            cfg.teacher = want_string(value, key);
        } else if (key == "central_k") {
            cfg.central_k = want_int(value, key);
        } else if (key == "community_method") {
            cfg.community_method = community_method_from(want_string(value, key));
        } else if (key == "output_dir") {
            cfg.output_dir = want_string(value, key);
        } else if (key == "graph_formats") {
            if (!value.is_array())
                throw InputError("config key \"graph_formats\" must be an array");
            cfg.graph_formats.clear();
            for (const auto& item : value) {
                auto f = graph_format_from(want_string(item, key));
                if (std::find(cfg.graph_formats.begin(), cfg.graph_formats.end(),
                              f) == cfg.graph_formats.end())
                    cfg.graph_formats.push_back(f);
            }
        } else {
            throw InputError("unknown config key \"" + key + "\"");
        }
    }

    validate_config(cfg);
    return cfg;
}

PrepConfig prep_config_from(const PipelineConfig& cfg) {
    std::vector<std::string> stopwords;
    std::vector<std::string> keywords;
    if (cfg.stopwords_path)
        stopwords = load_word_list(*cfg.stopwords_path);
    if (cfg.keywords_path)
        keywords = load_word_list(*cfg.keywords_path);
    return make_prep_config(stopwords, keywords, true,
                            cfg.min_term_frequency);
}

void validate_config(const PipelineConfig& cfg) {
    if (cfg.corpus_path.empty())
        throw InputError("corpus_path is required");
    if (cfg.teacher.empty())
        throw InputError("teacher must be a nonempty author id");
    if (cfg.min_weight < 1)
        throw InputError("min_weight must be at least 1, got " +
                         std::to_string(cfg.min_weight));
    if (cfg.min_term_frequency < 1)
        throw InputError("min_term_frequency must be at least 1, got " +
                         std::to_string(cfg.min_term_frequency));
    if (cfg.central_k < 1)
        throw InputError("central_k must be at least 1, got " +
                         std::to_string(cfg.central_k));
    for (auto f : cfg.graph_formats) {
        if (f == GraphFormat::csv)
            throw InputError("csv is not a graph format");
    }
}

} // namespace cooc
