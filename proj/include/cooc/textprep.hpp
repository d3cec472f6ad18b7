#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cooc/corpus.hpp"

namespace cooc {

// Tokenization settings. Stopwords and keyword phrases are stored in
// normalized form; build instances through make_prep_config so that holds.
struct PrepConfig {
    std::set<std::string> stopwords;
    std::vector<std::string> keywords; // multi-token dictionary phrases, no dups
    bool lowercase = true;
    std::int64_t min_term_frequency = 1; // applied corpus-wide by prep_corpus
    std::int64_t min_term_length = 1;    // in code points

    friend bool operator==(const PrepConfig&, const PrepConfig&) = default;
};

PrepConfig make_prep_config(const std::vector<std::string>& stopwords = {},
                            const std::vector<std::string>& keywords = {},
                            bool lowercase = true,
                            std::int64_t min_term_frequency = 1,
                            std::int64_t min_term_length = 1);

// NFKC, optional lowercasing, whitespace runs collapsed to single spaces,
// ends trimmed. Total: invalid UTF-8 bytes become U+FFFD.
std::string normalize(std::string_view text, const PrepConfig& config);

// Left-to-right segmentation. At each token start the longest matching
// keyword phrase wins; otherwise words split on whitespace and Unicode
// punctuation, and Han/Hiragana/Katakana code points become single-character
// tokens. Stopwords and tokens shorter than min_term_length are dropped.
std::vector<std::string> tokenize(std::string_view text, const PrepConfig& config);

struct TokenSeq {
    std::string doc_id;
    std::vector<std::string> tokens;

    friend bool operator==(const TokenSeq&, const TokenSeq&) = default;
};

// One TokenSeq per document in canonical corpus order; afterwards terms whose
// total corpus frequency is below min_term_frequency are removed everywhere.
std::vector<TokenSeq> prep_corpus(const Corpus& corpus, const PrepConfig& config);

// One entry per line, "#" lines are comments, blank lines skipped. Entries
// are returned raw; make_prep_config normalizes them.
std::vector<std::string> load_word_list(const std::filesystem::path& path);

// Small built-in English stopword list used when no file is supplied.
std::vector<std::string> default_stopwords();

} // namespace cooc
