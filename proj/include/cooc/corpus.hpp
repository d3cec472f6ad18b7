#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace cooc {

using AuthorId = std::string;

// Orders strings so that runs of digits compare by numeric value ("2" < "10").
// Non-digit runs compare bytewise, which on UTF-8 is code point order.
bool natural_less(std::string_view a, std::string_view b);

struct Document {
    std::string doc_id;
    AuthorId author;
    std::string phase;
    std::string text; // may be empty

    friend bool operator==(const Document&, const Document&) = default;
};

// Documents are kept in canonical order: (phase, author in natural order,
// doc_id). Every downstream row/column ordering derives from this.
struct Corpus {
    std::vector<Document> documents;
    std::vector<std::string> phases;  // sorted, exactly the labels observed
    std::vector<AuthorId> authors;    // natural order, exactly the ids observed

    bool has_phase(std::string_view phase) const;
    bool has_author(std::string_view author) const;

    friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Validates and canonicalizes documents assembled in memory.
Corpus make_corpus(std::vector<Document> documents);

// Loads a JSONL corpus: one object per line with keys doc_id, author, phase,
// text (all strings). Unknown keys are ignored with a warning. Warnings go to
// *warnings when given, otherwise to stderr.
// Throws InputError on IO failure, malformed lines (named by line number),
// duplicate doc_id, or empty author/phase.
Corpus load_corpus(const std::filesystem::path& path,
                   std::vector<std::string>* warnings = nullptr);

// Sub-corpus of exactly the documents labeled with the given phase, canonical
// order preserved. Throws InputError on an unknown phase label.
Corpus filter_phase(const Corpus& corpus, std::string_view phase);

} // namespace cooc
