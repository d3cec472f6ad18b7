#include "cooc/names.hpp"

#include "cooc/errors.hpp"

namespace cooc {

std::string to_string(CountMode m) {
    return m == CountMode::frequency ? "frequency" : "presence";
}

std::string to_string(RowGrouping g) {
    return g == RowGrouping::per_document ? "per_document" : "per_author";
}

std::string to_string(CooccurKind k) {
    return k == CooccurKind::term_cooccurrence ? "term_cooccurrence"
                                               : "row_cooccurrence";
}

std::string to_string(CommunityMethod m) {
    return m == CommunityMethod::components ? "components"
                                            : "label_propagation";
}

std::string to_string(GraphFormat f) {
    switch (f) {
    case GraphFormat::csv: return "csv";
    case GraphFormat::dot: return "dot";
    case GraphFormat::graphml: return "graphml";
    case GraphFormat::json: return "json";
    case GraphFormat::svg: return "svg";
    }
    return "json";
}

namespace {

[[noreturn]] void bad_value(std::string_view what, std::string_view got,
                            std::string_view allowed) {
    throw InputError("invalid " + std::string(what) + " \"" +
                     std::string(got) + "\" (expected " + std::string(allowed) +
                     ")");
}

} // namespace

CountMode count_mode_from(std::string_view s) {
    if (s == "frequency")
        return CountMode::frequency;
    if (s == "presence")
        return CountMode::presence;
    bad_value("mode", s, "frequency|presence");
}

RowGrouping row_grouping_from(std::string_view s) {
    if (s == "per_document")
        return RowGrouping::per_document;
    if (s == "per_author")
        return RowGrouping::per_author;
    bad_value("row_grouping", s, "per_document|per_author");
}

CooccurKind cooccur_kind_from(std::string_view s) {
    if (s == "term_cooccurrence")
        return CooccurKind::term_cooccurrence;
    if (s == "row_cooccurrence")
        return CooccurKind::row_cooccurrence;
    bad_value("cooccurrence kind", s, "term_cooccurrence|row_cooccurrence");
}

CommunityMethod community_method_from(std::string_view s) {
    if (s == "components")
        return CommunityMethod::components;
    if (s == "label_propagation")
        return CommunityMethod::label_propagation;
    bad_value("community_method", s, "components|label_propagation");
}

GraphFormat graph_format_from(std::string_view s) {
    if (s == "csv")
        return GraphFormat::csv;
    if (s == "dot")
        return GraphFormat::dot;
    if (s == "graphml")
        return GraphFormat::graphml;
    if (s == "json")
        return GraphFormat::json;
    if (s == "svg")
        return GraphFormat::svg;
    bad_value("graph format", s, "csv|dot|graphml|json|svg");
}

} // namespace cooc
