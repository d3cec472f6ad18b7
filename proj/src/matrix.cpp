#include "cooc/matrix.hpp"

#include <algorithm>
#include <set>

#include "cooc/errors.hpp"

namespace cooc {

Vocabulary Vocabulary::from_terms(std::vector<std::string> terms) {
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    Vocabulary v;
    v.terms = std::move(terms);
    v.index.reserve(v.terms.size());
    for (std::uint32_t i = 0; i < v.terms.size(); ++i) v.index.emplace(v.terms[i], i);
    return v;
}

std::optional<std::uint32_t> Vocabulary::find(std::string_view term) const {
    auto it = index.find(std::string(term));
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::int64_t TermDocMatrix::at(std::size_t row, std::uint32_t col) const {
    const auto& entries = row_entries.at(row);
    auto it = std::lower_bound(entries.begin(), entries.end(), col,
                               [](const auto& e, std::uint32_t c) {
                                   return e.first < c;
                               });
    return (it != entries.end() && it->first == col) ? it->second : 0;
}

std::int64_t CooccurMatrix::entry(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    auto it = entries.find({static_cast<std::uint32_t>(i),
                            static_cast<std::uint32_t>(j)});
    return it == entries.end() ? 0 : it->second;
}

std::size_t CooccurMatrix::key_index(std::string_view key) const {
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end())
        throw InputError("unknown key \"" + std::string(key) + "\"");
    return static_cast<std::size_t>(it - keys.begin());
}

std::int64_t CooccurMatrix::entry(std::string_view a, std::string_view b) const {
    return entry(key_index(a), key_index(b));
}

namespace {

void check_alignment(const std::vector<TokenSeq>& seqs, const Corpus& corpus) {
    if (seqs.empty()) throw InputError("no token sequences to vectorize");
    if (seqs.size() != corpus.documents.size())
        throw InputError("token sequences do not align with corpus documents");
    for (std::size_t i = 0; i < seqs.size(); ++i)
        if (seqs[i].doc_id != corpus.documents[i].doc_id)
            throw InputError("token sequence \"" + seqs[i].doc_id +
                             "\" does not align with corpus document \"" +
                             corpus.documents[i].doc_id + "\"");
}

TermDocMatrix build_common(const std::vector<TokenSeq>& seqs, CountMode mode,
                           RowGrouping grouping, const Corpus& corpus,
                           Vocabulary vocab, std::vector<std::string> row_keys,
                           bool skip_unknown_tokens) {
    check_alignment(seqs, corpus);

    TermDocMatrix x;
    x.mode = mode;
    x.vocab = std::move(vocab);
    x.rows = std::move(row_keys);

    std::unordered_map<std::string, std::size_t> row_of;
    row_of.reserve(x.rows.size());
    for (std::size_t i = 0; i < x.rows.size(); ++i) row_of.emplace(x.rows[i], i);

    // counts per row as ordered column map, then flattened
    std::vector<std::map<std::uint32_t, std::int64_t>> counts(x.rows.size());
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        const std::string& key = grouping == RowGrouping::per_document
                                     ? seqs[i].doc_id
                                     : corpus.documents[i].author;
        auto rit = row_of.find(key);
        if (rit == row_of.end())
            throw InputError("row key \"" + key + "\" not in row set");
        for (const auto& tok : seqs[i].tokens) {
            auto col = x.vocab.find(tok);
            if (!col) {
                if (skip_unknown_tokens) continue;
                throw InputError("token \"" + tok + "\" not in vocabulary");
            }
            ++counts[rit->second][*col];
        }
    }

    x.row_entries.resize(x.rows.size());
    for (std::size_t r = 0; r < counts.size(); ++r) {
        x.row_entries[r].reserve(counts[r].size());
        for (const auto& [col, cnt] : counts[r])
            x.row_entries[r].emplace_back(
                col, mode == CountMode::presence ? 1 : cnt);
    }
    return x;
}

std::vector<std::string> rows_for(RowGrouping grouping,
                                  const Corpus& corpus) {
    std::vector<std::string> keys;
    if (grouping == RowGrouping::per_document) {
        for (const auto& d : corpus.documents) keys.push_back(d.doc_id);
    } else {
        keys = corpus.authors; // already in natural order
    }
    return keys;
}

} // namespace

TermDocMatrix build_term_doc(const std::vector<TokenSeq>& seqs, CountMode mode,
                             RowGrouping grouping, const Corpus& corpus) {
    std::vector<std::string> all_tokens;
    for (const auto& s : seqs)
        all_tokens.insert(all_tokens.end(), s.tokens.begin(), s.tokens.end());
    return build_common(seqs, mode, grouping, corpus,
                        Vocabulary::from_terms(std::move(all_tokens)),
                        rows_for(grouping, corpus),
                        /*skip_unknown_tokens=*/false);
}

TermDocMatrix build_term_doc_fixed(const std::vector<TokenSeq>& seqs,
                                   CountMode mode, RowGrouping grouping,
                                   const Corpus& corpus, Vocabulary vocab,
                                   std::vector<std::string> row_keys) {
    return build_common(seqs, mode, grouping, corpus, std::move(vocab),
                        std::move(row_keys), /*skip_unknown_tokens=*/true);
}

CooccurMatrix term_cooccurrence(const TermDocMatrix& x) {
    CooccurMatrix m;
    m.keys = x.vocab.terms;
    m.kind = CooccurKind::term_cooccurrence;
    m.mode = x.mode;
    // Gram accumulation: each row contributes to every pair of its nonzero
    // columns. Presence rows hold 1s, so the same loop yields document
    // frequencies on the diagonal and both-terms counts off it.
    for (const auto& row : x.row_entries) {
        for (std::size_t a = 0; a < row.size(); ++a) {
            for (std::size_t b = a; b < row.size(); ++b) {
                m.entries[{row[a].first, row[b].first}] +=
                    row[a].second * row[b].second;
            }
        }
    }
    return m;
}

CooccurMatrix row_cooccurrence(const TermDocMatrix& x) {
    CooccurMatrix m;
    m.keys = x.rows;
    m.kind = CooccurKind::row_cooccurrence;
    m.mode = x.mode;
    const std::size_t n = x.row_entries.size();
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i; j < n; ++j) {
            // sorted sparse row intersection
            std::int64_t dot = 0;
            const auto& ri = x.row_entries[i];
            const auto& rj = x.row_entries[j];
            std::size_t a = 0, b = 0;
            while (a < ri.size() && b < rj.size()) {
                if (ri[a].first < rj[b].first) {
                    ++a;
                } else if (rj[b].first < ri[a].first) {
                    ++b;
                } else {
                    dot += ri[a].second * rj[b].second;
                    ++a;
                    ++b;
                }
            }
            if (dot != 0) m.entries[{i, j}] = dot;
        }
    }
    return m;
}

} // namespace cooc
