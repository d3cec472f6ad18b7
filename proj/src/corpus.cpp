#include "cooc/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "cooc/errors.hpp"

namespace cooc {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Compares one chunk pair; a chunk is a maximal digit run or non-digit run.
// Digit chunks compare by numeric value first, then bytewise so the order
// stays total when values tie ("02" vs "2").
int compare_chunk(std::string_view a, std::string_view b, bool digits) {
    if (digits) {
        std::string_view sa = a.substr(std::min(a.find_first_not_of('0'), a.size()));
        std::string_view sb = b.substr(std::min(b.find_first_not_of('0'), b.size()));
        if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
        if (int c = sa.compare(sb); c != 0) return c < 0 ? -1 : 1;
    }
    int c = a.compare(b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

} // namespace

bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = is_digit(a[i]), db = is_digit(b[j]);
        std::size_t ei = i + 1, ej = j + 1;
        while (ei < a.size() && is_digit(a[ei]) == da) ++ei;
        while (ej < b.size() && is_digit(b[ej]) == db) ++ej;
        std::string_view ca = a.substr(i, ei - i), cb = b.substr(j, ej - j);
        if (int c = compare_chunk(ca, cb, da && db); c != 0) return c < 0;
        i = ei;
        j = ej;
    }
    return a.size() - i < b.size() - j;
}

namespace {

bool canonical_doc_less(const Document& x, const Document& y) {
    if (x.phase != y.phase) return x.phase < y.phase;
    if (x.author != y.author) return natural_less(x.author, y.author);
    return x.doc_id < y.doc_id;
}

bool has_edge_whitespace(const std::string& s) {
    if (s.empty()) return false;
    auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    return ws(s.front()) || ws(s.back());
}

void check_fields(const Document& d, const std::string& where) {
    if (d.author.empty()) throw InputError(where + "empty author");
    if (has_edge_whitespace(d.author))
        throw InputError(where + "author \"" + d.author +
                         "\" has leading or trailing whitespace");
    if (d.phase.empty()) throw InputError(where + "empty phase");
}

Corpus finalize(std::vector<Document> docs) {
    std::sort(docs.begin(), docs.end(), canonical_doc_less);
    Corpus c;
    c.documents = std::move(docs);
    for (const auto& d : c.documents) {
        c.phases.push_back(d.phase);
        c.authors.push_back(d.author);
    }
    std::sort(c.phases.begin(), c.phases.end());
    c.phases.erase(std::unique(c.phases.begin(), c.phases.end()), c.phases.end());
    std::sort(c.authors.begin(), c.authors.end(), natural_less);
    c.authors.erase(std::unique(c.authors.begin(), c.authors.end()), c.authors.end());
    return c;
}

} // namespace

bool Corpus::has_phase(std::string_view phase) const {
    return std::binary_search(phases.begin(), phases.end(), phase);
}

bool Corpus::has_author(std::string_view author) const {
    return std::find(authors.begin(), authors.end(), author) != authors.end();
}

Corpus make_corpus(std::vector<Document> documents) {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < documents.size(); ++i) {
        const Document& d = documents[i];
        if (!seen.emplace(d.doc_id, i).second)
            throw InputError("duplicate doc_id \"" + d.doc_id + "\"");
        check_fields(d, "");
    }
    return finalize(std::move(documents));
}

Corpus load_corpus(const std::filesystem::path& path,
                   std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open corpus file: " + path.string());

    std::vector<Document> docs;
    std::unordered_map<std::string, std::size_t> first_line; // doc_id -> line
    std::map<std::string, std::size_t> unknown_keys;         // key -> first line
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string where = "line " + std::to_string(lineno) + ": ";

        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw InputError(where + "not a JSON object");

        Document d;
        for (auto* field : {"doc_id", "author", "phase", "text"}) {
            auto it = j.find(field);
            if (it == j.end() || !it->is_string())
                throw InputError(where + "missing or non-string key \"" +
                                 field + "\"");
        }
        d.doc_id = j["doc_id"].get<std::string>();
        d.author = j["author"].get<std::string>();
        d.phase = j["phase"].get<std::string>();
        d.text = j["text"].get<std::string>();
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string& k = it.key();
            if (k != "doc_id" && k != "author" && k != "phase" && k != "text")
                unknown_keys.emplace(k, lineno);
        }

        auto [it, inserted] = first_line.emplace(d.doc_id, lineno);
        if (!inserted)
            throw InputError(where + "duplicate doc_id \"" + d.doc_id +
                             "\" (first seen on line " +
                             std::to_string(it->second) + ")");
        check_fields(d, where);
        docs.push_back(std::move(d));
    }
    if (in.bad()) throw InputError("error reading corpus file: " + path.string());

    for (const auto& [key, first] : unknown_keys) {
        std::string msg = "ignoring unknown key \"" + key +
                          "\" (first seen on line " + std::to_string(first) + ")";
        if (warnings)
            warnings->push_back(msg);
        else
            std::cerr << "warning: " << msg << "\n";
    }
    return finalize(std::move(docs));
}

Corpus filter_phase(const Corpus& corpus, std::string_view phase) {
    if (!corpus.has_phase(phase))
        throw InputError("unknown phase \"" + std::string(phase) + "\"");
    std::vector<Document> kept;
    for (const auto& d : corpus.documents)
        if (d.phase == phase) kept.push_back(d);
    return finalize(std::move(kept));
}

} // namespace cooc
