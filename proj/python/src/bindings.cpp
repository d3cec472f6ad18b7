// Python bindings. Thin wrappers only; all behavior lives in cooc_core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "cooc/align.hpp"
#include "cooc/config.hpp"
#include "cooc/corpus.hpp"
#include "cooc/errors.hpp"
#include "cooc/export.hpp"
#include "cooc/graph.hpp"
#include "cooc/matrix.hpp"
#include "cooc/phasediff.hpp"
#include "cooc/pipeline.hpp"
#include "cooc/textprep.hpp"

namespace py = pybind11;
using namespace cooc;

PYBIND11_MODULE(_cooc, m) {
    m.doc() = "Co-occurrence analytics core";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<OutputError>(m, "OutputError", PyExc_OSError);

    py::enum_<CountMode>(m, "CountMode")
        .value("frequency", CountMode::frequency)
        .value("presence", CountMode::presence);
    py::enum_<RowGrouping>(m, "RowGrouping")
        .value("per_document", RowGrouping::per_document)
        .value("per_author", RowGrouping::per_author);
    py::enum_<CooccurKind>(m, "CooccurKind")
        .value("term_cooccurrence", CooccurKind::term_cooccurrence)
        .value("row_cooccurrence", CooccurKind::row_cooccurrence);
    py::enum_<CommunityMethod>(m, "CommunityMethod")
        .value("components", CommunityMethod::components)
        .value("label_propagation", CommunityMethod::label_propagation);
    py::enum_<GraphFormat>(m, "GraphFormat")
        .value("csv", GraphFormat::csv)
        .value("dot", GraphFormat::dot)
        .value("graphml", GraphFormat::graphml)
        .value("json", GraphFormat::json)
        .value("svg", GraphFormat::svg);

    py::class_<Document>(m, "Document")
        .def(py::init<std::string, std::string, std::string, std::string>(),
             py::arg("doc_id"), py::arg("author"), py::arg("phase"),
             py::arg("text") = "")
        .def_readwrite("doc_id", &Document::doc_id)
        .def_readwrite("author", &Document::author)
        .def_readwrite("phase", &Document::phase)
        .def_readwrite("text", &Document::text);

    py::class_<Corpus>(m, "Corpus")
        .def_readonly("documents", &Corpus::documents)
        .def_readonly("phases", &Corpus::phases)
        .def_readonly("authors", &Corpus::authors)
        .def("has_phase", &Corpus::has_phase)
        .def("has_author", &Corpus::has_author);

    m.def("natural_less", &natural_less);
    m.def("make_corpus", &make_corpus, py::arg("documents"));
    m.def(
        "load_corpus",
        [](const std::filesystem::path& path) { return load_corpus(path); },
        py::arg("path"));
    m.def("filter_phase", &filter_phase, py::arg("corpus"), py::arg("phase"));

    py::class_<PrepConfig>(m, "PrepConfig")
        .def_readwrite("stopwords", &PrepConfig::stopwords)
        .def_readwrite("keywords", &PrepConfig::keywords)
        .def_readwrite("lowercase", &PrepConfig::lowercase)
        .def_readwrite("min_term_frequency", &PrepConfig::min_term_frequency)
        .def_readwrite("min_term_length", &PrepConfig::min_term_length);
    m.def("make_prep_config", &make_prep_config,
          py::arg("stopwords") = std::vector<std::string>{},
          py::arg("keywords") = std::vector<std::string>{},
          py::arg("lowercase") = true, py::arg("min_term_frequency") = 1,
          py::arg("min_term_length") = 1);
    m.def("normalize", &normalize, py::arg("text"), py::arg("config"));
    m.def("tokenize", &tokenize, py::arg("text"), py::arg("config"));

    py::class_<TokenSeq>(m, "TokenSeq")
        .def(py::init<std::string, std::vector<std::string>>(),
             py::arg("doc_id"), py::arg("tokens"))
        .def_readwrite("doc_id", &TokenSeq::doc_id)
        .def_readwrite("tokens", &TokenSeq::tokens);
    m.def("prep_corpus", &prep_corpus, py::arg("corpus"), py::arg("config"));
    m.def("load_word_list", &load_word_list, py::arg("path"));
    m.def("default_stopwords", &default_stopwords);

    py::class_<Vocabulary>(m, "Vocabulary")
        .def_static("from_terms", &Vocabulary::from_terms, py::arg("terms"))
        .def_readonly("terms", &Vocabulary::terms)
        .def("find", &Vocabulary::find)
        .def("__len__", &Vocabulary::size);

    py::class_<TermDocMatrix>(m, "TermDocMatrix")
        .def_readonly("rows", &TermDocMatrix::rows)
        .def_readonly("vocab", &TermDocMatrix::vocab)
        .def_readonly("mode", &TermDocMatrix::mode)
        .def_readonly("row_entries", &TermDocMatrix::row_entries)
        .def("at", &TermDocMatrix::at, py::arg("row"), py::arg("col"));
    m.def("build_term_doc", &build_term_doc, py::arg("seqs"), py::arg("mode"),
          py::arg("grouping"), py::arg("corpus"));
    m.def("build_term_doc_fixed", &build_term_doc_fixed, py::arg("seqs"),
          py::arg("mode"), py::arg("grouping"), py::arg("corpus"),
          py::arg("vocab"), py::arg("row_keys"));

    py::class_<CooccurMatrix>(m, "CooccurMatrix")
        .def_readonly("keys", &CooccurMatrix::keys)
        .def_readonly("kind", &CooccurMatrix::kind)
        .def_readonly("mode", &CooccurMatrix::mode)
        .def_readonly("entries", &CooccurMatrix::entries)
        .def("entry",
             py::overload_cast<std::size_t, std::size_t>(
                 &CooccurMatrix::entry, py::const_),
             py::arg("i"), py::arg("j"))
        .def("entry",
             py::overload_cast<std::string_view, std::string_view>(
                 &CooccurMatrix::entry, py::const_),
             py::arg("a"), py::arg("b"))
        .def("key_index", &CooccurMatrix::key_index, py::arg("key"));
    m.def("term_cooccurrence", &term_cooccurrence, py::arg("x"));
    m.def("row_cooccurrence", &row_cooccurrence, py::arg("x"));

    py::class_<CoGraph> graph(m, "CoGraph");
    py::class_<CoGraph::Node>(graph, "Node")
        .def_readonly("label", &CoGraph::Node::label)
        .def_readonly("strength", &CoGraph::Node::strength);
    py::class_<CoGraph::Edge>(graph, "Edge")
        .def_readonly("a", &CoGraph::Edge::a)
        .def_readonly("b", &CoGraph::Edge::b)
        .def_readonly("weight", &CoGraph::Edge::weight);
    graph.def_readonly("nodes", &CoGraph::nodes)
        .def_readonly("edges", &CoGraph::edges)
        .def_readonly("min_weight", &CoGraph::min_weight);
    m.def("build_graph", &build_graph, py::arg("matrix"),
          py::arg("min_weight"), py::arg("keep_isolated") = false);
    m.def("central_nodes", &central_nodes, py::arg("graph"), py::arg("k"));

    py::class_<CommunitySet>(m, "CommunitySet")
        .def_readonly("communities", &CommunitySet::communities)
        .def_readonly("method", &CommunitySet::method);
    m.def("communities", &communities, py::arg("graph"), py::arg("method"));

    py::class_<AlignmentTable>(m, "AlignmentTable")
        .def_readonly("reference", &AlignmentTable::reference)
        .def_readonly("rows", &AlignmentTable::rows)
        .def_readonly("phase", &AlignmentTable::phase);
    m.def("alignment", &alignment, py::arg("matrix"), py::arg("reference"),
          py::arg("phase") = "");
    m.def("rank_table", &rank_table, py::arg("weights"), py::arg("reference"),
          py::arg("phase") = "");

    py::class_<CentralDelta>(m, "CentralDelta")
        .def_readonly("added", &CentralDelta::added)
        .def_readonly("removed", &CentralDelta::removed)
        .def_readonly("retained", &CentralDelta::retained);
    py::class_<EdgeDelta>(m, "EdgeDelta")
        .def_readonly("label_a", &EdgeDelta::label_a)
        .def_readonly("label_b", &EdgeDelta::label_b)
        .def_readonly("weight_a", &EdgeDelta::weight_a)
        .def_readonly("weight_b", &EdgeDelta::weight_b);
    py::class_<AlignmentDelta>(m, "AlignmentDelta")
        .def_readonly("author", &AlignmentDelta::author)
        .def_readonly("weight_a", &AlignmentDelta::weight_a)
        .def_readonly("weight_b", &AlignmentDelta::weight_b)
        .def_readonly("rank_a", &AlignmentDelta::rank_a)
        .def_readonly("rank_b", &AlignmentDelta::rank_b);
    py::class_<PhaseDiff>(m, "PhaseDiff")
        .def_readonly("phase_a", &PhaseDiff::phase_a)
        .def_readonly("phase_b", &PhaseDiff::phase_b)
        .def_readonly("central_added", &PhaseDiff::central_added)
        .def_readonly("central_removed", &PhaseDiff::central_removed)
        .def_readonly("central_retained", &PhaseDiff::central_retained)
        .def_readonly("edge_deltas", &PhaseDiff::edge_deltas)
        .def_readonly("alignment_deltas", &PhaseDiff::alignment_deltas);
    m.def("diff_central", &diff_central, py::arg("central_a"),
          py::arg("central_b"));
    m.def("diff_edges", &diff_edges, py::arg("a"), py::arg("b"));
    m.def("diff_alignment", &diff_alignment, py::arg("a"), py::arg("b"));
    m.def("diff_phases", &diff_phases, py::arg("corpus"), py::arg("phase_a"),
          py::arg("phase_b"), py::arg("config"));

    py::class_<ExportConfig>(m, "ExportConfig")
        .def(py::init([](GraphFormat format, double edge_width_scale,
                         double node_size_scale) {
                 return ExportConfig{format, edge_width_scale,
                                     node_size_scale};
             }),
             py::arg("format") = GraphFormat::json,
             py::arg("edge_width_scale") = 1.0,
             py::arg("node_size_scale") = 8.0)
        .def_readwrite("format", &ExportConfig::format)
        .def_readwrite("edge_width_scale", &ExportConfig::edge_width_scale)
        .def_readwrite("node_size_scale", &ExportConfig::node_size_scale);
    m.def("export_graph", &export_graph, py::arg("graph"), py::arg("config"));
    m.def("graph_from_json", &graph_from_json, py::arg("text"));
    m.def("export_table",
          py::overload_cast<const AlignmentTable&, GraphFormat>(&export_table),
          py::arg("table"), py::arg("format"));
    m.def("export_table",
          py::overload_cast<const CooccurMatrix&, GraphFormat>(&export_table),
          py::arg("matrix"), py::arg("format"));
    m.def("export_table",
          py::overload_cast<const PhaseDiff&, GraphFormat>(&export_table),
          py::arg("diff"), py::arg("format"));
    m.def("term_doc_to_csv", &term_doc_to_csv, py::arg("x"));
    m.def("diff_to_text", &diff_to_text, py::arg("diff"));
    m.def("write_file_atomic", &write_file_atomic, py::arg("path"),
          py::arg("content"));

    py::class_<PipelineConfig>(m, "PipelineConfig")
        .def(py::init<>())
        .def_readwrite("corpus_path", &PipelineConfig::corpus_path)
        .def_readwrite("stopwords_path", &PipelineConfig::stopwords_path)
        .def_readwrite("keywords_path", &PipelineConfig::keywords_path)
        .def_readwrite("mode", &PipelineConfig::mode)
        .def_readwrite("row_grouping", &PipelineConfig::row_grouping)
        .def_readwrite("min_weight", &PipelineConfig::min_weight)
        .def_readwrite("min_term_frequency",
                       &PipelineConfig::min_term_frequency)
        .def_readwrite("teacher", &PipelineConfig::teacher)
        .def_readwrite("central_k", &PipelineConfig::central_k)
        .def_readwrite("community_method", &PipelineConfig::community_method)
        .def_readwrite("output_dir", &PipelineConfig::output_dir)
        .def_readwrite("graph_formats", &PipelineConfig::graph_formats);
    m.def("load_pipeline_config", &load_pipeline_config, py::arg("path"));
    m.def("validate_config", &validate_config, py::arg("config"));
    m.def("prep_config_from", &prep_config_from, py::arg("config"));

    m.def("run_analyze", &run_analyze, py::arg("config"));
    m.def("run_diff", &run_diff, py::arg("config"), py::arg("phase_a"),
          py::arg("phase_b"));
    m.def("run_rank", &run_rank, py::arg("weights_csv"), py::arg("reference"));
    m.def("run_tokenize", &run_tokenize, py::arg("config"));
}
