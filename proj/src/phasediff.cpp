#include "cooc/phasediff.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "cooc/errors.hpp"
#include "cooc/matrix.hpp"
#include "cooc/textprep.hpp"

namespace cooc {

CentralDelta diff_central(const std::vector<std::string>& central_a,
                          const std::vector<std::string>& central_b) {
    const std::set<std::string> sa(central_a.begin(), central_a.end());
    const std::set<std::string> sb(central_b.begin(), central_b.end());

    CentralDelta d;
    for (const auto& label : sb) {
        if (!sa.contains(label))
            d.added.push_back(label);
    }
    for (const auto& label : sa) {
        if (sb.contains(label))
            d.retained.push_back(label);
        else
            d.removed.push_back(label);
    }
    return d;
}

std::vector<EdgeDelta> diff_edges(const CoGraph& a, const CoGraph& b) {
    const auto norm = [](const CoGraph::Edge& e) {
        return e.a <= e.b ? std::make_pair(e.a, e.b)
                          : std::make_pair(e.b, e.a);
    };

    std::map<std::pair<std::string, std::string>,
             std::pair<std::int64_t, std::int64_t>>
        merged;
    for (const auto& e : a.edges)
        merged[norm(e)].first = e.weight;
    for (const auto& e : b.edges)
        merged[norm(e)].second = e.weight;

    std::vector<EdgeDelta> out;
    out.reserve(merged.size());
    for (const auto& [pair, w] : merged)
        out.push_back({pair.first, pair.second, w.first, w.second});
    return out;
}

namespace {

struct NaturalLess {
    bool operator()(const AuthorId& a, const AuthorId& b) const {
        return natural_less(a, b);
    }
};

} // namespace

std::vector<AlignmentDelta> diff_alignment(const AlignmentTable& a,
                                           const AlignmentTable& b) {
    if (a.rows.size() != b.rows.size())
        throw InputError("alignment tables cover different author sets");

    std::map<AuthorId, AlignmentDelta, NaturalLess> by_author;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        AlignmentDelta d;
        d.author = a.rows[i].first;
        d.weight_a = a.rows[i].second;
        d.rank_a = static_cast<std::int64_t>(i) + 1;
        by_author.emplace(d.author, std::move(d));
    }
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
        auto it = by_author.find(b.rows[i].first);
        if (it == by_author.end())
            throw InputError("alignment tables cover different author sets: \"" +
                             b.rows[i].first + "\" is on one side only");
        it->second.weight_b = b.rows[i].second;
        it->second.rank_b = static_cast<std::int64_t>(i) + 1;
    }

    std::vector<AlignmentDelta> out;
    out.reserve(by_author.size());
    for (auto& [author, d] : by_author)
        out.push_back(std::move(d));
    return out;
}

namespace {

struct PhaseSide {
    std::vector<std::string> central;
    CoGraph term_graph;
    AlignmentTable align;
};

PhaseSide run_side(const Corpus& phase_corpus,
                   const std::vector<TokenSeq>& union_seqs,
                   const Vocabulary& vocab,
                   const std::vector<AuthorId>& union_authors,
                   const std::string& phase, const PipelineConfig& cfg) {
    std::unordered_map<std::string, const TokenSeq*> by_doc;
    by_doc.reserve(union_seqs.size());
    for (const auto& s : union_seqs)
        by_doc.emplace(s.doc_id, &s);

    std::vector<TokenSeq> seqs;
    seqs.reserve(phase_corpus.documents.size());
    for (const auto& d : phase_corpus.documents)
        seqs.push_back(*by_doc.at(d.doc_id));

    std::vector<std::string> term_rows;
    if (cfg.row_grouping == RowGrouping::per_author) {
        term_rows = union_authors;
    } else {
        for (const auto& d : phase_corpus.documents)
            term_rows.push_back(d.doc_id);
    }

    PhaseSide side;
    const auto x = build_term_doc_fixed(seqs, cfg.mode, cfg.row_grouping,
                                        phase_corpus, vocab, term_rows);
    side.term_graph = build_graph(term_cooccurrence(x), cfg.min_weight);
    side.central = central_nodes(side.term_graph, cfg.central_k);

    if (cfg.row_grouping == RowGrouping::per_author) {
        side.align = alignment(row_cooccurrence(x), cfg.teacher, phase);
    } else {
        const auto xa =
            build_term_doc_fixed(seqs, cfg.mode, RowGrouping::per_author,
                                 phase_corpus, vocab, union_authors);
        side.align = alignment(row_cooccurrence(xa), cfg.teacher, phase);
    }
    return side;
}

} // namespace

PhaseDiff diff_phases(const Corpus& corpus, const std::string& phase_a,
                      const std::string& phase_b, const PipelineConfig& cfg) {
    const Corpus ca = filter_phase(corpus, phase_a);
    const Corpus cb = filter_phase(corpus, phase_b);

    // Work on the union of the two phases so both sides share one vocabulary
    // and author set; the term frequency floor applies before the split.
    Corpus u;
    if (phase_a == phase_b) {
        u = ca;
    } else {
        auto docs = ca.documents;
        docs.insert(docs.end(), cb.documents.begin(), cb.documents.end());
        u = make_corpus(std::move(docs));
    }

    const auto prep = prep_config_from(cfg);
    const auto union_seqs = prep_corpus(u, prep);

    std::vector<std::string> terms;
    for (const auto& s : union_seqs)
        terms.insert(terms.end(), s.tokens.begin(), s.tokens.end());
    const auto vocab = Vocabulary::from_terms(std::move(terms));

    const auto side_a = run_side(ca, union_seqs, vocab, u.authors, phase_a, cfg);
    const auto side_b = run_side(cb, union_seqs, vocab, u.authors, phase_b, cfg);

    PhaseDiff d;
    d.phase_a = phase_a;
    d.phase_b = phase_b;
    auto central = diff_central(side_a.central, side_b.central);
    d.central_added = std::move(central.added);
    d.central_removed = std::move(central.removed);
    d.central_retained = std::move(central.retained);
    d.edge_deltas = diff_edges(side_a.term_graph, side_b.term_graph);
    d.alignment_deltas = diff_alignment(side_a.align, side_b.align);
    return d;
}

} // namespace cooc
