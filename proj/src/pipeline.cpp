#include "cooc/pipeline.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cooc/errors.hpp"
#include "cooc/export.hpp"
#include "cooc/graph.hpp"
#include "cooc/matrix.hpp"
#include "cooc/names.hpp"
#include "cooc/textprep.hpp"

namespace cooc {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Directory-safe rendering of a label; non-ASCII bytes pass through, ASCII
// specials become '_'. Names are always used behind a fixed prefix.
std::string sanitize(std::string_view label) {
    std::string out;
    out.reserve(label.size());
    for (char c : label) {
        const auto u = static_cast<unsigned char>(c);
        if (u >= 0x80 || std::isalnum(u) || u == '.' || u == '_' || u == '-')
            out += c;
        else
            out += '_';
    }
    if (out.empty())
        out = "_";
    return out;
}

// Phase label -> unique directory name, stable across runs.
std::map<std::string, std::string> scope_dirs(const Corpus& corpus) {
    std::map<std::string, std::string> dirs;
    std::set<std::string> taken = {"union"};
    for (const auto& phase : corpus.phases) {
        std::string base = "phase_" + sanitize(phase);
        std::string name = base;
        for (int suffix = 2; taken.contains(name); ++suffix)
            name = base + "_" + std::to_string(suffix);
        taken.insert(name);
        dirs.emplace(phase, name);
    }
    return dirs;
}

struct ScopeInput {
    const Corpus& corpus;              // the scope's documents
    std::vector<TokenSeq> seqs;        // aligned with corpus.documents
    const Vocabulary& vocab;           // shared union vocabulary
    const std::vector<AuthorId>& authors; // shared union author set
};

void write_scope(const ScopeInput& in, const PipelineConfig& cfg,
                 const std::string& scope_label, const fs::path& dir) {
    std::vector<std::string> term_rows;
    if (cfg.row_grouping == RowGrouping::per_author) {
        term_rows = in.authors;
    } else {
        for (const auto& d : in.corpus.documents)
            term_rows.push_back(d.doc_id);
    }

    const auto x = build_term_doc_fixed(in.seqs, cfg.mode, cfg.row_grouping,
                                        in.corpus, in.vocab, term_rows);
    const auto terms = term_cooccurrence(x);
    const auto rows = row_cooccurrence(x);
    const auto term_graph = build_graph(terms, cfg.min_weight);
    const auto row_graph = build_graph(rows, cfg.min_weight);

    AlignmentTable align;
    if (cfg.row_grouping == RowGrouping::per_author) {
        align = alignment(rows, cfg.teacher, scope_label);
    } else {
        const auto xa =
            build_term_doc_fixed(in.seqs, cfg.mode, RowGrouping::per_author,
                                 in.corpus, in.vocab, in.authors);
        align = alignment(row_cooccurrence(xa), cfg.teacher, scope_label);
    }

    write_file_atomic(dir / "term_doc.csv", term_doc_to_csv(x));
    write_file_atomic(dir / "term_cooccurrence.csv",
                      export_table(terms, GraphFormat::csv));
    write_file_atomic(dir / "row_cooccurrence.csv",
                      export_table(rows, GraphFormat::csv));
    for (const auto format : cfg.graph_formats) {
        ExportConfig ec;
        ec.format = format;
        write_file_atomic(dir / ("term_graph." + to_string(format)),
                          export_graph(term_graph, ec));
        write_file_atomic(dir / ("row_graph." + to_string(format)),
                          export_graph(row_graph, ec));
    }
    write_file_atomic(dir / "alignment.csv",
                      export_table(align, GraphFormat::csv));

    const auto comm = communities(term_graph, cfg.community_method);
    const json summary = {
        {"central", central_nodes(term_graph, cfg.central_k)},
        {"communities", comm.communities},
        {"community_method", to_string(cfg.community_method)},
        {"min_weight", cfg.min_weight},
        {"mode", to_string(cfg.mode)},
        {"phase", scope_label},
        {"row_grouping", to_string(cfg.row_grouping)},
    };
    write_file_atomic(dir / "summary.json", summary.dump(2) + "\n");
}

} // namespace

void run_analyze(const PipelineConfig& cfg) {
    validate_config(cfg);
    const auto corpus = load_corpus(cfg.corpus_path);
    const auto prep = prep_config_from(cfg);
    const auto union_seqs = prep_corpus(corpus, prep);

    std::vector<std::string> all_tokens;
    for (const auto& s : union_seqs)
        all_tokens.insert(all_tokens.end(), s.tokens.begin(), s.tokens.end());
    const auto vocab = Vocabulary::from_terms(std::move(all_tokens));

    std::unordered_map<std::string, const TokenSeq*> by_doc;
    by_doc.reserve(union_seqs.size());
    for (const auto& s : union_seqs)
        by_doc.emplace(s.doc_id, &s);

    write_scope({corpus, union_seqs, vocab, corpus.authors}, cfg, "union",
                cfg.output_dir / "union");

    for (const auto& [phase, dirname] : scope_dirs(corpus)) {
        const auto sub = filter_phase(corpus, phase);
        std::vector<TokenSeq> seqs;
        seqs.reserve(sub.documents.size());
        for (const auto& d : sub.documents)
            seqs.push_back(*by_doc.at(d.doc_id));
        write_scope({sub, std::move(seqs), vocab, corpus.authors}, cfg, phase,
                    cfg.output_dir / dirname);
    }
}

PhaseDiff run_diff(const PipelineConfig& cfg, const std::string& phase_a,
                   const std::string& phase_b) {
    validate_config(cfg);
    const auto corpus = load_corpus(cfg.corpus_path);
    const auto d = diff_phases(corpus, phase_a, phase_b, cfg);

    const std::string stem =
        "diff_" + sanitize(phase_a) + "_" + sanitize(phase_b);
    write_file_atomic(cfg.output_dir / (stem + ".json"),
                      export_table(d, GraphFormat::json));
    write_file_atomic(cfg.output_dir / (stem + ".txt"), diff_to_text(d));
    return d;
}

namespace {

// One CSV record, RFC-4180 quoting, no embedded line breaks.
std::vector<std::string> split_csv_line(const std::string& line,
                                        std::size_t lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    i += 2;
                    continue;
                }
                quoted = false;
                ++i;
                continue;
            }
            cur += c;
            ++i;
            continue;
        }
        if (c == '"' && cur.empty()) {
            quoted = true;
            ++i;
            continue;
        }
        if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
            ++i;
            continue;
        }
        cur += c;
        ++i;
    }
    if (quoted)
        throw InputError("line " + std::to_string(lineno) +
                         ": unterminated quoted field");
    fields.push_back(std::move(cur));
    return fields;
}

} // namespace

AlignmentTable run_rank(const std::filesystem::path& weights_csv,
                        const AuthorId& reference) {
    std::ifstream in(weights_csv, std::ios::binary);
    if (!in)
        throw InputError("cannot open weights file: " + weights_csv.string());

    std::map<AuthorId, std::int64_t> weights;
    std::string line;
    std::size_t lineno = 0;
    bool first_data = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (first_data && line == "author,weight") {
            first_data = false;
            continue;
        }
        first_data = false;

        const auto fields = split_csv_line(line, lineno);
        if (fields.size() != 2)
            throw InputError("line " + std::to_string(lineno) +
                             ": expected author,weight");
        const auto& author = fields[0];
        if (author.empty())
            throw InputError("line " + std::to_string(lineno) +
                             ": empty author");
        std::int64_t w = 0;
        const auto* begin = fields[1].data();
        const auto* end = begin + fields[1].size();
        const auto [ptr, err] = std::from_chars(begin, end, w);
        if (err != std::errc() || ptr != end)
            throw InputError("line " + std::to_string(lineno) +
                             ": malformed weight \"" + fields[1] + "\"");
        if (!weights.emplace(author, w).second)
            throw InputError("line " + std::to_string(lineno) +
                             ": duplicate author \"" + author + "\"");
    }
    return rank_table(weights, reference);
}

std::string run_tokenize(const PipelineConfig& cfg) {
    validate_config(cfg);
    const auto corpus = load_corpus(cfg.corpus_path);
    const auto prep = prep_config_from(cfg);
    const auto seqs = prep_corpus(corpus, prep);

    std::string out;
    for (const auto& s : seqs) {
        const json j = {{"doc_id", s.doc_id}, {"tokens", s.tokens}};
        out += j.dump() + "\n";
    }
    return out;
}

} // namespace cooc
