#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/errors.hpp"

using namespace cooc;

namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path;
}

} // namespace

TEST_CASE("natural_less orders digit runs numerically") {
    CHECK(natural_less("2", "10"));
    CHECK_FALSE(natural_less("10", "2"));
    CHECK(natural_less("a2", "a10"));
    CHECK(natural_less("a", "b"));
    CHECK_FALSE(natural_less("a", "a"));
    CHECK(natural_less("a", "a1"));
    CHECK(natural_less("01", "1")); // equal value falls back to bytewise
    CHECK(natural_less("x01y", "x1z"));
    // total order sanity on a shuffled set
    std::vector<std::string> ids = {"10", "2", "0", "21", "3", "1"};
    std::sort(ids.begin(), ids.end(),
              [](const auto& a, const auto& b) { return natural_less(a, b); });
    CHECK(ids == std::vector<std::string>{"0", "1", "2", "3", "10", "21"});
}

TEST_CASE("make_corpus sorts canonically and collects label sets") {
    const auto c = make_corpus({
        {"d3", "10", "p2", ""},
        {"d1", "2", "p1", "x"},
        {"d2", "2", "p2", "y"},
        {"d0", "10", "p1", ""},
    });
    std::vector<std::string> ids;
    for (const auto& d : c.documents)
        ids.push_back(d.doc_id);
    CHECK(ids == std::vector<std::string>{"d1", "d0", "d2", "d3"});
    CHECK(c.phases == std::vector<std::string>{"p1", "p2"});
    CHECK(c.authors == std::vector<std::string>{"2", "10"});
    CHECK(c.has_phase("p1"));
    CHECK_FALSE(c.has_phase("p3"));
    CHECK(c.has_author("10"));
    CHECK_FALSE(c.has_author("3"));
}

TEST_CASE("load_corpus reads JSONL in canonical order") {
    const auto path = write_temp(
        "cooc_t1.jsonl",
        R"({"doc_id": "b", "author": "1", "phase": "p", "text": "one"})"
        "\n"
        R"({"doc_id": "a", "author": "1", "phase": "p", "text": "two"})"
        "\n"
        R"({"doc_id": "c", "author": "0", "phase": "p", "text": "three"})"
        "\n");
    const auto c = load_corpus(path);
    REQUIRE(c.documents.size() == 3);
    CHECK(c.documents[0].doc_id == "c"); // author "0" first
    CHECK(c.documents[1].doc_id == "a");
    CHECK(c.documents[2].doc_id == "b");
    std::remove(path.string().c_str());
}

TEST_CASE("load_corpus rejects duplicate doc_id naming the line") {
    const auto path = write_temp(
        "cooc_t2.jsonl",
        R"({"doc_id": "A", "author": "1", "phase": "p", "text": ""})"
        "\n"
        R"({"doc_id": "B", "author": "1", "phase": "p", "text": ""})"
        "\n"
        R"({"doc_id": "C", "author": "1", "phase": "p", "text": ""})"
        "\n"
        R"({"doc_id": "A", "author": "2", "phase": "p", "text": ""})"
        "\n");
    CHECK_THROWS_WITH_AS(load_corpus(path),
                         doctest::Contains("line 4"), InputError);
    std::remove(path.string().c_str());
}

TEST_CASE("load_corpus error cases") {
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.jsonl"), InputError);
    }
    SUBCASE("malformed line reports its number") {
        const auto path = write_temp(
            "cooc_t3.jsonl",
            R"({"doc_id": "A", "author": "1", "phase": "p", "text": ""})"
            "\nnot json\n");
        CHECK_THROWS_WITH_AS(load_corpus(path), doctest::Contains("line 2"),
                             InputError);
        std::remove(path.string().c_str());
    }
    SUBCASE("empty author rejected") {
        const auto path = write_temp(
            "cooc_t4.jsonl",
            R"({"doc_id": "A", "author": "", "phase": "p", "text": ""})"
            "\n");
        CHECK_THROWS_AS(load_corpus(path), InputError);
        std::remove(path.string().c_str());
    }
    SUBCASE("missing key rejected") {
        const auto path = write_temp(
            "cooc_t5.jsonl", R"({"doc_id": "A", "author": "1", "text": ""})"
            "\n");
        CHECK_THROWS_WITH_AS(load_corpus(path), doctest::Contains("phase"),
                             InputError);
        std::remove(path.string().c_str());
    }
}

TEST_CASE("load_corpus warns on unknown keys but keeps the document") {
    const auto path = write_temp(
        "cooc_t6.jsonl",
        R"({"doc_id": "A", "author": "1", "phase": "p", "text": "", "extra": 1})"
        "\n");
    std::vector<std::string> warnings;
    const auto c = load_corpus(path, &warnings);
    CHECK(c.documents.size() == 1);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("extra") != std::string::npos);
    std::remove(path.string().c_str());
}

TEST_CASE("synthetic 25-author corpus over 2 phases") {
    std::string body;
    int line = 0;
    for (int phase = 0; phase < 2; ++phase) {
        for (int a = 0; a <= 24; ++a) {
            body += "{\"doc_id\": \"d" + std::to_string(line++) +
                    "\", \"author\": \"" + std::to_string(a) +
                    "\", \"phase\": \"p" + std::to_string(phase) +
                    "\", \"text\": \"w" + std::to_string(a) + "\"}\n";
        }
    }
    const auto path = write_temp("cooc_t7.jsonl", body);
    const auto c = load_corpus(path);
    CHECK(c.authors.size() == 25);
    CHECK(c.phases.size() == 2);
    CHECK(c.documents.size() == 50);
    // natural order puts "2" before "10"
    CHECK(c.authors.front() == "0");
    CHECK(c.authors[2] == "2");
    CHECK(c.authors[10] == "10");

    const auto sub = filter_phase(c, "p1");
    CHECK(sub.documents.size() == 25);
    for (const auto& d : sub.documents)
        CHECK(d.phase == "p1");
    CHECK(filter_phase(sub, "p1") == sub); // idempotent

    std::remove(path.string().c_str());
}

TEST_CASE("filter_phase unknown label throws") {
    const auto c = make_corpus({{"d", "1", "p", ""}});
    CHECK_THROWS_WITH_AS(filter_phase(c, "zzz"), doctest::Contains("zzz"),
                         InputError);
}

TEST_CASE("phase partition reassembles the corpus") {
    const auto c = make_corpus({
        {"a", "1", "x", "t"},
        {"b", "2", "y", "t"},
        {"c", "1", "y", "t"},
        {"d", "3", "x", "t"},
    });
    std::vector<Document> all;
    for (const auto& p : c.phases) {
        const auto sub = filter_phase(c, p);
        all.insert(all.end(), sub.documents.begin(), sub.documents.end());
    }
    CHECK(make_corpus(all) == c);
}
