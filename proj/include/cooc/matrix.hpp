#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/textprep.hpp"

namespace cooc {

enum class CountMode { frequency, presence };
enum class RowGrouping { per_document, per_author };
enum class CooccurKind { term_cooccurrence, row_cooccurrence };

// Column space: unique terms sorted by Unicode code point.
struct Vocabulary {
    std::vector<std::string> terms;
    std::unordered_map<std::string, std::uint32_t> index;

    static Vocabulary from_terms(std::vector<std::string> terms);
    std::optional<std::uint32_t> find(std::string_view term) const;
    std::size_t size() const { return terms.size(); }

    friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
        return a.terms == b.terms;
    }
};

// Sparse nonnegative integer matrix X. Rows are documents or authors,
// columns vocabulary terms. No explicit zeros are stored; in presence mode
// every stored entry is 1.
struct TermDocMatrix {
    std::vector<std::string> rows;
    Vocabulary vocab;
    CountMode mode = CountMode::frequency;
    // per row: (column, count), strictly increasing columns, counts > 0
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> row_entries;

    std::int64_t at(std::size_t row, std::uint32_t col) const;

    friend bool operator==(const TermDocMatrix&, const TermDocMatrix&) = default;
};

// Symmetric nonnegative integer Gram matrix (X^T X or X X^T). Entries are
// stored once per unordered pair with i <= j; entry() mirrors.
struct CooccurMatrix {
    std::vector<std::string> keys;
    CooccurKind kind = CooccurKind::term_cooccurrence;
    CountMode mode = CountMode::frequency;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> entries;

    std::int64_t entry(std::size_t i, std::size_t j) const;
    // By key label; throws InputError on an unknown key.
    std::int64_t entry(std::string_view a, std::string_view b) const;
    std::size_t key_index(std::string_view key) const;

    friend bool operator==(const CooccurMatrix&, const CooccurMatrix&) = default;
};

// Builds X from prepped token sequences. The vocabulary is the sorted union
// of all tokens. per_author grouping concatenates each author's sequences
// before counting; presence mode clamps counts to 1. Throws InputError when
// seqs is empty or does not align with the corpus documents.
TermDocMatrix build_term_doc(const std::vector<TokenSeq>& seqs, CountMode mode,
                             RowGrouping grouping, const Corpus& corpus);

// Same, but against a caller-fixed vocabulary and row set, so several
// sub-corpora can share one column/row space. Tokens outside the vocabulary
// are ignored; rows without any sequence stay all-zero.
TermDocMatrix build_term_doc_fixed(const std::vector<TokenSeq>& seqs,
                                   CountMode mode, RowGrouping grouping,
                                   const Corpus& corpus, Vocabulary vocab,
                                   std::vector<std::string> row_keys);

// X^T X: keys are the vocabulary terms. In presence mode the off-diagonal
// (s, t) counts rows containing both terms and the diagonal is document
// frequency.
CooccurMatrix term_cooccurrence(const TermDocMatrix& x);

// X X^T: keys are the row keys. In presence mode (d, e) counts distinct
// shared terms; in frequency mode it is the dot product of the count rows.
CooccurMatrix row_cooccurrence(const TermDocMatrix& x);

} // namespace cooc
