#include "cooc/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cooc/errors.hpp"
#include "cooc/names.hpp"
#include "cooc/phasediff.hpp"

namespace cooc {

namespace {

using nlohmann::json;

constexpr double kCanvas = 512.0;
constexpr double kLayoutRadius = 200.0;
constexpr double kPi = 3.14159265358979323846;

std::string fmt2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(s);
    std::string out;
    out.reserve(s.size() + 2);
    out += '"';
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string dot_id(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    out += '"';
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string to_dot(const CoGraph& g, const ExportConfig& cfg) {
    std::string out = "graph cooccurrence {\n";
    out += "  node [shape=circle];\n";
    for (const auto& n : g.nodes) {
        out += "  " + dot_id(n.label) +
               " [strength=" + std::to_string(n.strength) + "];\n";
    }
    for (const auto& e : g.edges) {
        out += "  " + dot_id(e.a) + " -- " + dot_id(e.b) +
               " [weight=" + std::to_string(e.weight) +
               ", penwidth=" + fmt2(cfg.edge_width_scale *
                                    static_cast<double>(e.weight)) +
               "];\n";
    }
    out += "}\n";
    return out;
}

std::string to_graphml(const CoGraph& g) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    out += "  <key id=\"d0\" for=\"node\" attr.name=\"strength\" "
           "attr.type=\"long\"/>\n";
    out += "  <key id=\"d1\" for=\"edge\" attr.name=\"weight\" "
           "attr.type=\"long\"/>\n";
    out += "  <graph edgedefault=\"undirected\">\n";
    for (const auto& n : g.nodes) {
        out += "    <node id=\"" + xml_escape(n.label) + "\">\n";
        out += "      <data key=\"d0\">" + std::to_string(n.strength) +
               "</data>\n";
        out += "    </node>\n";
    }
    for (const auto& e : g.edges) {
        out += "    <edge source=\"" + xml_escape(e.a) + "\" target=\"" +
               xml_escape(e.b) + "\">\n";
        out += "      <data key=\"d1\">" + std::to_string(e.weight) +
               "</data>\n";
        out += "    </edge>\n";
    }
    out += "  </graph>\n";
    out += "</graphml>\n";
    return out;
}

json graph_json(const CoGraph& g) {
    json nodes = json::array();
    for (const auto& n : g.nodes)
        nodes.push_back({{"label", n.label}, {"strength", n.strength}});
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"a", e.a}, {"b", e.b}, {"weight", e.weight}});
    return {{"edges", std::move(edges)},
            {"min_weight", g.min_weight},
            {"nodes", std::move(nodes)}};
}

// Nodes sit on a fixed circle, clockwise from the top in stored (descending
// strength) order; circle area tracks strength via r = scale * sqrt(strength).
std::string to_svg(const CoGraph& g, const ExportConfig& cfg) {
    const double c = kCanvas / 2.0;
    const std::size_t n = g.nodes.size();

    std::unordered_map<std::string, std::pair<double, double>> pos;
    pos.reserve(n);
    std::vector<std::pair<double, double>> xy(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = 2.0 * kPi * static_cast<double>(i) /
                             static_cast<double>(n == 0 ? 1 : n);
        xy[i] = {c + kLayoutRadius * std::sin(angle),
                 c - kLayoutRadius * std::cos(angle)};
        pos.emplace(g.nodes[i].label, xy[i]);
    }

    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" "
        "height=\"512\" viewBox=\"0 0 512 512\">\n";
    out += "  <g stroke=\"#8899aa\">\n";
    for (const auto& e : g.edges) {
        const auto& [x1, y1] = pos.at(e.a);
        const auto& [x2, y2] = pos.at(e.b);
        out += "    <line x1=\"" + fmt2(x1) + "\" y1=\"" + fmt2(y1) +
               "\" x2=\"" + fmt2(x2) + "\" y2=\"" + fmt2(y2) +
               "\" stroke-width=\"" +
               fmt2(cfg.edge_width_scale * static_cast<double>(e.weight)) +
               "\"/>\n";
    }
    out += "  </g>\n";
    out += "  <g fill=\"#4878b0\" stroke=\"#23405e\">\n";
    for (std::size_t i = 0; i < n; ++i) {
        const double r = cfg.node_size_scale *
                         std::sqrt(static_cast<double>(g.nodes[i].strength));
        out += "    <circle cx=\"" + fmt2(xy[i].first) + "\" cy=\"" +
               fmt2(xy[i].second) + "\" r=\"" + fmt2(r) + "\"/>\n";
    }
    out += "  </g>\n";
    out += "  <g font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\" fill=\"#101418\">\n";
    for (std::size_t i = 0; i < n; ++i) {
        out += "    <text x=\"" + fmt2(xy[i].first) + "\" y=\"" +
               fmt2(xy[i].second) + "\" dy=\"4\">" +
               xml_escape(g.nodes[i].label) + "</text>\n";
    }
    out += "  </g>\n";
    out += "</svg>\n";
    return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string export_graph(const CoGraph& g, const ExportConfig& cfg) {
    if (cfg.edge_width_scale <= 0.0 || cfg.node_size_scale <= 0.0)
        throw InputError("export scales must be strictly positive");
    switch (cfg.format) {
    case GraphFormat::dot:
        return to_dot(g, cfg);
    case GraphFormat::graphml:
        return to_graphml(g);
    case GraphFormat::json:
        return dump_json(graph_json(g));
    case GraphFormat::svg:
        return to_svg(g, cfg);
    case GraphFormat::csv:
        break;
    }
    throw InputError("csv is not a graph export format");
}

CoGraph graph_from_json(std::string_view text) {
    const json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw InputError("graph JSON is not an object");
    if (!j.contains("nodes") || !j["nodes"].is_array() ||
        !j.contains("edges") || !j["edges"].is_array())
        throw InputError("graph JSON needs \"nodes\" and \"edges\" arrays");

    CoGraph g;
    if (j.contains("min_weight")) {
        if (!j["min_weight"].is_number_integer())
            throw InputError("graph JSON \"min_weight\" must be an integer");
        g.min_weight = j["min_weight"].get<std::int64_t>();
    }
    for (const auto& n : j["nodes"]) {
        if (!n.is_object() || !n.contains("label") || !n["label"].is_string() ||
            !n.contains("strength") || !n["strength"].is_number_integer())
            throw InputError("graph JSON node needs string \"label\" and "
                             "integer \"strength\"");
        g.nodes.push_back(
            {n["label"].get<std::string>(), n["strength"].get<std::int64_t>()});
    }
    for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("a") || !e["a"].is_string() ||
            !e.contains("b") || !e["b"].is_string() || !e.contains("weight") ||
            !e["weight"].is_number_integer())
            throw InputError("graph JSON edge needs string \"a\"/\"b\" and "
                             "integer \"weight\"");
        g.edges.push_back({e["a"].get<std::string>(), e["b"].get<std::string>(),
                           e["weight"].get<std::int64_t>()});
    }
    return g;
}

std::string export_table(const AlignmentTable& t, GraphFormat format) {
    if (format == GraphFormat::csv) {
        std::string out = "rank,author,weight\n";
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            out += std::to_string(i + 1) + "," + csv_field(t.rows[i].first) +
                   "," + std::to_string(t.rows[i].second) + "\n";
        }
        return out;
    }
    if (format == GraphFormat::json) {
        json rows = json::array();
        for (const auto& [author, weight] : t.rows)
            rows.push_back({{"author", author}, {"weight", weight}});
        return dump_json({{"phase", t.phase},
                          {"reference", t.reference},
                          {"rows", std::move(rows)}});
    }
    throw InputError("alignment tables export to csv or json only");
}

std::string export_table(const CooccurMatrix& m, GraphFormat format) {
    if (format == GraphFormat::csv) {
        std::string out;
        for (const auto& key : m.keys)
            out += "," + csv_field(key);
        out += "\n";
        for (std::size_t i = 0; i < m.keys.size(); ++i) {
            out += csv_field(m.keys[i]);
            for (std::size_t jx = 0; jx < m.keys.size(); ++jx)
                out += "," + std::to_string(m.entry(i, jx));
            out += "\n";
        }
        return out;
    }
    if (format == GraphFormat::json) {
        json entries = json::array();
        for (const auto& [pos, w] : m.entries)
            entries.push_back(
                {{"i", pos.first}, {"j", pos.second}, {"weight", w}});
        return dump_json({{"entries", std::move(entries)},
                          {"keys", m.keys},
                          {"kind", to_string(m.kind)},
                          {"mode", to_string(m.mode)}});
    }
    throw InputError("matrices export to csv or json only");
}

std::string export_table(const PhaseDiff& d, GraphFormat format) {
    if (format != GraphFormat::json)
        throw InputError("phase diffs export to json only");
    json alignment = json::array();
    for (const auto& a : d.alignment_deltas)
        alignment.push_back({{"author", a.author},
                             {"rank_a", a.rank_a},
                             {"rank_b", a.rank_b},
                             {"weight_a", a.weight_a},
                             {"weight_b", a.weight_b}});
    json edges = json::array();
    for (const auto& e : d.edge_deltas)
        edges.push_back({{"label_a", e.label_a},
                         {"label_b", e.label_b},
                         {"weight_a", e.weight_a},
                         {"weight_b", e.weight_b}});
    return dump_json({{"alignment", std::move(alignment)},
                      {"central",
                       {{"added", d.central_added},
                        {"removed", d.central_removed},
                        {"retained", d.central_retained}}},
                      {"edges", std::move(edges)},
                      {"phase_a", d.phase_a},
                      {"phase_b", d.phase_b}});
}

std::string term_doc_to_csv(const TermDocMatrix& x) {
    std::string out;
    for (const auto& term : x.vocab.terms)
        out += "," + csv_field(term);
    out += "\n";
    for (std::size_t r = 0; r < x.rows.size(); ++r) {
        out += csv_field(x.rows[r]);
        for (std::uint32_t c = 0; c < x.vocab.size(); ++c)
            out += "," + std::to_string(x.at(r, c));
        out += "\n";
    }
    return out;
}

std::string diff_to_text(const PhaseDiff& d) {
    const auto join = [](const std::vector<std::string>& v) {
        if (v.empty())
            return std::string("(none)");
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0)
                out += ", ";
            out += v[i];
        }
        return out;
    };

    std::string out = "phases: " + d.phase_a + " -> " + d.phase_b + "\n";
    out += "central added: " + join(d.central_added) + "\n";
    out += "central removed: " + join(d.central_removed) + "\n";
    out += "central retained: " + join(d.central_retained) + "\n";

    std::vector<AlignmentDelta> movers;
    for (const auto& a : d.alignment_deltas) {
        if (a.rank_a != a.rank_b || a.weight_a != a.weight_b)
            movers.push_back(a);
    }
    std::sort(movers.begin(), movers.end(),
              [](const AlignmentDelta& a, const AlignmentDelta& b) {
                  const auto da = std::abs(a.rank_a - a.rank_b);
                  const auto db = std::abs(b.rank_a - b.rank_b);
                  if (da != db)
                      return da > db;
                  return natural_less(a.author, b.author);
              });
    if (movers.size() > 5)
        movers.resize(5);

    out += "top alignment movers:\n";
    if (movers.empty()) {
        out += "  (none)\n";
    } else {
        for (const auto& a : movers) {
            out += "  author " + a.author + ": weight " +
                   std::to_string(a.weight_a) + " -> " +
                   std::to_string(a.weight_b) + ", rank " +
                   std::to_string(a.rank_a) + " -> " +
                   std::to_string(a.rank_b) + "\n";
        }
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
    namespace fs = std::filesystem;
    std::error_code ec;

    const auto parent = path.parent_path();
    if (!parent.empty()) {
        fs::create_directories(parent, ec);
        if (ec)
            throw OutputError("cannot create directory " + parent.string() +
                              ": " + ec.message());
    }

    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw OutputError("cannot open " + tmp.string() + " for writing");
        out.write(content.data(),
                  static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp, ec);
            throw OutputError("write failed: " + tmp.string());
        }
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw OutputError("cannot move " + tmp.string() + " into place: " +
                          ec.message());
    }
}

} // namespace cooc
