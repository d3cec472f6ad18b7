#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cooc/config.hpp"
#include "cooc/errors.hpp"
#include "cooc/export.hpp"
#include "cooc/names.hpp"
#include "cooc/pipeline.hpp"

#include "validators.hpp"

using namespace cooc;
namespace fs = std::filesystem;

#ifndef COOC_DATA_DIR
#error "COOC_DATA_DIR must point at the bundled data directory"
#endif

namespace {

const fs::path kDataDir = COOC_DATA_DIR;

std::string read_all(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE_MESSAGE(bool(in), "missing file: ", p.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const auto path = fs::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path;
}

PipelineConfig demo_config(const fs::path& output_dir) {
    auto cfg = load_pipeline_config(kDataDir / "demo_config.json");
    cfg.output_dir = output_dir;
    return cfg;
}

struct TempDir {
    fs::path path;

    explicit TempDir(const std::string& name)
        : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("demo config loads with resolved input paths") {
    const auto cfg = load_pipeline_config(kDataDir / "demo_config.json");
    CHECK(cfg.corpus_path == kDataDir / "demo_corpus.jsonl");
    REQUIRE(cfg.stopwords_path.has_value());
    CHECK(*cfg.stopwords_path == kDataDir / "stopwords_en.txt");
    REQUIRE(cfg.keywords_path.has_value());
    CHECK(*cfg.keywords_path == kDataDir / "keywords_demo.txt");
    CHECK(cfg.mode == CountMode::frequency);
    CHECK(cfg.row_grouping == RowGrouping::per_author);
    CHECK(cfg.min_weight == 2);
    CHECK(cfg.min_term_frequency == 2);
    CHECK(cfg.teacher == "0");
    CHECK(cfg.central_k == 3);
    CHECK(cfg.community_method == CommunityMethod::components);
    CHECK(cfg.output_dir == fs::path("out")); // stays working-dir relative
    CHECK(cfg.graph_formats.size() == 4);
}

TEST_CASE("config loading rejects malformed files") {
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_pipeline_config("/nonexistent/cfg.json"),
                        InputError);
    }
    SUBCASE("not json") {
        const auto p = write_temp("cooc_cfg1.json", "nope");
        CHECK_THROWS_AS(load_pipeline_config(p), InputError);
    }
    SUBCASE("unknown key") {
        const auto p = write_temp(
            "cooc_cfg2.json", R"({"corpus_path": "c.jsonl", "typo_key": 1})");
        CHECK_THROWS_WITH_AS(load_pipeline_config(p),
                             doctest::Contains("typo_key"), InputError);
    }
    SUBCASE("bad enum spelling") {
        const auto p = write_temp(
            "cooc_cfg3.json",
            R"({"corpus_path": "c.jsonl", "mode": "counts"})");
        CHECK_THROWS_WITH_AS(load_pipeline_config(p),
                             doctest::Contains("presence"), InputError);
    }
    SUBCASE("csv as graph format") {
        const auto p = write_temp(
            "cooc_cfg4.json",
            R"({"corpus_path": "c.jsonl", "graph_formats": ["csv"]})");
        CHECK_THROWS_AS(load_pipeline_config(p), InputError);
    }
    SUBCASE("min_weight below one") {
        const auto p = write_temp(
            "cooc_cfg5.json", R"({"corpus_path": "c.jsonl", "min_weight": 0})");
        CHECK_THROWS_AS(load_pipeline_config(p), InputError);
    }
    SUBCASE("wrong value type") {
        const auto p = write_temp(
            "cooc_cfg6.json", R"({"corpus_path": "c.jsonl", "central_k": "3"})");
        CHECK_THROWS_AS(load_pipeline_config(p), InputError);
    }
}

TEST_CASE("validate_config bounds every knob") {
    PipelineConfig cfg;
    CHECK_THROWS_AS(validate_config(cfg), InputError); // empty corpus_path
    cfg.corpus_path = "c.jsonl";
    CHECK_NOTHROW(validate_config(cfg));
    cfg.central_k = 0;
    CHECK_THROWS_AS(validate_config(cfg), InputError);
    cfg.central_k = 3;
    cfg.teacher = "";
    CHECK_THROWS_AS(validate_config(cfg), InputError);
    cfg.teacher = "0";
    cfg.graph_formats.push_back(GraphFormat::csv);
    CHECK_THROWS_AS(validate_config(cfg), InputError);
}

TEST_CASE("prep settings derive from the config paths") {
    const auto cfg = load_pipeline_config(kDataDir / "demo_config.json");
    const auto prep = prep_config_from(cfg);
    CHECK(prep.stopwords.contains("the"));
    CHECK(prep.min_term_frequency == 2);
    CHECK(std::find(prep.keywords.begin(), prep.keywords.end(),
                    "value exchange") != prep.keywords.end());

    PipelineConfig bare;
    bare.corpus_path = "c.jsonl";
    const auto empty = prep_config_from(bare);
    CHECK(empty.stopwords.empty());
    CHECK(empty.keywords.empty());
}

TEST_CASE("analyze writes the full artifact tree for the demo corpus") {
    TempDir tmp("cooc_analyze_t1");
    run_analyze(demo_config(tmp.path));

    const std::vector<std::string> dirs = {"union", "phase_final",
                                           "phase_group", "phase_initial"};
    const std::vector<std::string> files = {
        "term_doc.csv",      "term_cooccurrence.csv", "row_cooccurrence.csv",
        "term_graph.dot",    "term_graph.graphml",    "term_graph.json",
        "term_graph.svg",    "row_graph.dot",         "row_graph.graphml",
        "row_graph.json",    "row_graph.svg",         "alignment.csv",
        "summary.json",
    };
    for (const auto& d : dirs) {
        for (const auto& f : files) {
            CHECK_MESSAGE(fs::exists(tmp.path / d / f), (tmp.path / d / f));
        }
        std::size_t count = 0;
        for (const auto& e : fs::directory_iterator(tmp.path / d)) {
            (void)e;
            ++count;
        }
        CHECK(count == files.size());
    }

    const auto summary = nlohmann::json::parse(
        read_all(tmp.path / "phase_initial" / "summary.json"));
    CHECK(summary["central"] ==
          nlohmann::json::array({"metaverse", "value", "virtual"}));
    CHECK(summary["communities"].size() == 1);
    CHECK(summary["phase"] == "initial");
    CHECK(summary["min_weight"] == 2);
    CHECK(summary["mode"] == "frequency");
    CHECK(summary["row_grouping"] == "per_author");
    CHECK(summary["community_method"] == "components");

    CHECK(read_all(tmp.path / "phase_initial" / "alignment.csv") ==
          "rank,author,weight\n"
          "1,3,3\n"
          "2,5,2\n"
          "3,1,1\n"
          "4,2,1\n"
          "5,4,0\n");

    CHECK(read_all(tmp.path / "phase_initial" / "term_graph.dot") ==
          "graph cooccurrence {\n"
          "  node [shape=circle];\n"
          "  \"metaverse\" [strength=5];\n"
          "  \"value\" [strength=5];\n"
          "  \"virtual\" [strength=4];\n"
          "  \"metaverse\" -- \"value\" [weight=3, penwidth=3.00];\n"
          "  \"metaverse\" -- \"virtual\" [weight=2, penwidth=2.00];\n"
          "  \"value\" -- \"virtual\" [weight=2, penwidth=2.00];\n"
          "}\n");

    // the union scope sees all three phases and both scripts
    const auto union_summary =
        nlohmann::json::parse(read_all(tmp.path / "union" / "summary.json"));
    CHECK(union_summary["central"] ==
          nlohmann::json::array({"metaverse", "experience", "value"}));
    CHECK(union_summary["communities"].size() == 2);

    // every export validates and the graph JSON round-trips
    for (const auto& d : dirs) {
        CHECK(testutil::dot_error(
                  read_all(tmp.path / d / "term_graph.dot")) == "");
        CHECK(testutil::xml_error(
                  read_all(tmp.path / d / "term_graph.graphml")) == "");
        CHECK(testutil::xml_error(
                  read_all(tmp.path / d / "term_graph.svg")) == "");
        const auto text = read_all(tmp.path / d / "term_graph.json");
        CHECK(export_graph(graph_from_json(text),
                           {GraphFormat::json, 1.0, 8.0}) == text);
    }
}

TEST_CASE("two analyze runs produce byte-identical trees") {
    TempDir a("cooc_analyze_t2a");
    TempDir b("cooc_analyze_t2b");
    run_analyze(demo_config(a.path));
    run_analyze(demo_config(b.path));

    std::set<fs::path> rel_a, rel_b;
    for (const auto& e : fs::recursive_directory_iterator(a.path))
        if (e.is_regular_file()) rel_a.insert(fs::relative(e.path(), a.path));
    for (const auto& e : fs::recursive_directory_iterator(b.path))
        if (e.is_regular_file()) rel_b.insert(fs::relative(e.path(), b.path));
    REQUIRE(rel_a == rel_b);
    REQUIRE_FALSE(rel_a.empty());
    for (const auto& rel : rel_a)
        CHECK_MESSAGE(read_all(a.path / rel) == read_all(b.path / rel), rel);
}

TEST_CASE("analyze fails fast without touching the output directory") {
    TempDir tmp("cooc_analyze_t3");
    auto cfg = demo_config(tmp.path / "out");
    cfg.corpus_path = "/nonexistent/corpus.jsonl";
    CHECK_THROWS_AS(run_analyze(cfg), InputError);
    CHECK_FALSE(fs::exists(tmp.path / "out"));
}

TEST_CASE("diff of the demo initial and group phases") {
    TempDir tmp("cooc_diff_t1");
    const auto cfg = demo_config(tmp.path);
    const auto d = run_diff(cfg, "initial", "group");

    CHECK(d.phase_a == "initial");
    CHECK(d.phase_b == "group");
    CHECK(d.central_added ==
          std::vector<std::string>{"experience", "group", "tokens"});
    CHECK(d.central_removed ==
          std::vector<std::string>{"metaverse", "value", "virtual"});
    CHECK(d.central_retained.empty());

    REQUIRE(d.alignment_deltas.size() == 5);
    CHECK(d.alignment_deltas[0] == AlignmentDelta{"1", 1, 2, 3, 1});
    CHECK(d.alignment_deltas[1] == AlignmentDelta{"2", 1, 1, 4, 3});
    CHECK(d.alignment_deltas[2] == AlignmentDelta{"3", 3, 1, 1, 4});
    CHECK(d.alignment_deltas[3] == AlignmentDelta{"4", 0, 0, 5, 5});
    CHECK(d.alignment_deltas[4] == AlignmentDelta{"5", 2, 2, 2, 2});

    REQUIRE(d.edge_deltas.size() == 18);
    bool found = false;
    for (const auto& e : d.edge_deltas) {
        if (e.label_a == "metaverse" && e.label_b == "value") {
            CHECK(e.weight_a == 3);
            CHECK(e.weight_b == 2);
            found = true;
        }
    }
    CHECK(found);

    CHECK(read_all(tmp.path / "diff_initial_group.txt") ==
          "phases: initial -> group\n"
          "central added: experience, group, tokens\n"
          "central removed: metaverse, value, virtual\n"
          "central retained: (none)\n"
          "top alignment movers:\n"
          "  author 3: weight 3 -> 1, rank 1 -> 4\n"
          "  author 1: weight 1 -> 2, rank 3 -> 1\n"
          "  author 2: weight 1 -> 1, rank 4 -> 3\n");

    const auto j = nlohmann::json::parse(
        read_all(tmp.path / "diff_initial_group.json"));
    CHECK(j["phase_a"] == "initial");
    CHECK(j["alignment"].size() == 5);
    CHECK(j["edges"].size() == 18);
}

TEST_CASE("diff rejects unknown phase labels before writing") {
    TempDir tmp("cooc_diff_t2");
    const auto cfg = demo_config(tmp.path / "out");
    CHECK_THROWS_WITH_AS(run_diff(cfg, "initial", "bogus"),
                         doctest::Contains("bogus"), InputError);
    CHECK_FALSE(fs::exists(tmp.path / "out"));
}

TEST_CASE("rank replays the bundled weight fixtures") {
    const auto a = run_rank(kDataDir / "fixtures" / "weights_phase1.csv", "0");
    REQUIRE(a.rows.size() == 24);
    CHECK(a.rows[0] == std::pair<AuthorId, std::int64_t>{"19", 506});
    CHECK(a.rows[1] == std::pair<AuthorId, std::int64_t>{"20", 359});
    CHECK(a.rows[10] == std::pair<AuthorId, std::int64_t>{"6", 178});
    CHECK(a.rows[11] == std::pair<AuthorId, std::int64_t>{"24", 178});
    CHECK(a.rows[23] == std::pair<AuthorId, std::int64_t>{"7", 38});

    const auto b = run_rank(kDataDir / "fixtures" / "weights_phase2.csv", "0");
    REQUIRE(b.rows.size() == 24);
    CHECK(b.rows[0] == std::pair<AuthorId, std::int64_t>{"8", 1128});
    CHECK(b.rows[21] == std::pair<AuthorId, std::int64_t>{"7", 247});
    CHECK(b.rows[23] == std::pair<AuthorId, std::int64_t>{"22", 208});
}

TEST_CASE("rank accepts headerless files and validates rows") {
    const auto ok = write_temp("cooc_rank1.csv", "5,10\n3,20\n");
    const auto t = run_rank(ok, "0");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0] == std::pair<AuthorId, std::int64_t>{"3", 20});

    CHECK_THROWS_AS(run_rank("/nonexistent/w.csv", "0"), InputError);

    const auto dup = write_temp("cooc_rank2.csv",
                                "author,weight\n1,5\n2,6\n1,7\n");
    CHECK_THROWS_WITH_AS(run_rank(dup, "0"), doctest::Contains("line 4"),
                         InputError);

    const auto bad = write_temp("cooc_rank3.csv", "1,notanumber\n");
    CHECK_THROWS_AS(run_rank(bad, "0"), InputError);

    const auto arity = write_temp("cooc_rank4.csv", "1,2,3\n");
    CHECK_THROWS_AS(run_rank(arity, "0"), InputError);

    const auto neg = write_temp("cooc_rank5.csv", "1,-4\n");
    CHECK_THROWS_AS(run_rank(neg, "0"), InputError);

    const auto empty_author = write_temp("cooc_rank6.csv", ",4\n");
    CHECK_THROWS_AS(run_rank(empty_author, "0"), InputError);
}

TEST_CASE("rank drops the reference row") {
    const auto p = write_temp("cooc_rank7.csv", "0,99\n1,5\n");
    const auto t = run_rank(p, "0");
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].first == "1");
}

TEST_CASE("tokenize emits one jsonl object per document in order") {
    const auto cfg = load_pipeline_config(kDataDir / "demo_config.json");
    const auto out = run_tokenize(cfg);

    std::vector<std::string> lines;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 19);

    const auto first = nlohmann::json::parse(lines.front());
    CHECK(first["doc_id"] == "f01"); // phase "final" sorts first
    CHECK(first["tokens"].is_array());

    // stopwords from the configured list never appear
    for (const auto& l : lines) {
        const auto j = nlohmann::json::parse(l);
        for (const auto& tok : j["tokens"]) CHECK(tok != "the");
    }
}
