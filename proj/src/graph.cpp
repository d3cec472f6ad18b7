#include "cooc/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "cooc/errors.hpp"

namespace cooc {

CoGraph build_graph(const CooccurMatrix& m, std::int64_t min_weight,
                    bool keep_isolated) {
    if (min_weight < 1)
        throw InputError("min_weight must be at least 1, got " +
                         std::to_string(min_weight));

    CoGraph g;
    g.min_weight = min_weight;

    std::vector<std::int64_t> strength(m.keys.size(), 0);
    std::vector<bool> touched(m.keys.size(), false);

    // entries is keyed by (i, j) with i <= j, so iteration is key order.
    for (const auto& [pos, w] : m.entries) {
        auto [i, j] = pos;
        if (i == j || w < min_weight)
            continue;
        g.edges.push_back({m.keys[i], m.keys[j], w});
        strength[i] += w;
        strength[j] += w;
        touched[i] = true;
        touched[j] = true;
    }

    for (std::size_t i = 0; i < m.keys.size(); ++i) {
        if (touched[i] || keep_isolated)
            g.nodes.push_back({m.keys[i], strength[i]});
    }

    // Stable sort keeps key order inside each strength class.
    std::stable_sort(g.nodes.begin(), g.nodes.end(),
                     [](const CoGraph::Node& a, const CoGraph::Node& b) {
                         return a.strength > b.strength;
                     });
    return g;
}

std::vector<std::string> central_nodes(const CoGraph& g, std::int64_t k) {
    std::vector<std::string> out;
    if (k <= 0)
        return out;
    const auto n = std::min<std::size_t>(g.nodes.size(),
                                         static_cast<std::size_t>(k));
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(g.nodes[i].label);
    return out;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

CommunitySet pack(std::vector<std::vector<std::string>> groups,
                  CommunityMethod method) {
    for (auto& c : groups)
        std::sort(c.begin(), c.end());
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return {std::move(groups), method};
}

CommunitySet components_of(const CoGraph& g) {
    std::unordered_map<std::string, std::size_t> idx;
    idx.reserve(g.nodes.size());
    for (const auto& n : g.nodes)
        idx.emplace(n.label, idx.size());

    UnionFind uf(g.nodes.size());
    for (const auto& e : g.edges)
        uf.unite(idx.at(e.a), idx.at(e.b));

    std::unordered_map<std::size_t, std::vector<std::string>> buckets;
    for (const auto& n : g.nodes)
        buckets[uf.find(idx.at(n.label))].push_back(n.label);

    std::vector<std::vector<std::string>> groups;
    groups.reserve(buckets.size());
    for (auto& [root, members] : buckets)
        groups.push_back(std::move(members));
    return pack(std::move(groups), CommunityMethod::components);
}

CommunitySet propagate_labels(const CoGraph& g) {
    const std::size_t n = g.nodes.size();
    std::unordered_map<std::string, std::size_t> idx;
    idx.reserve(n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        idx.emplace(g.nodes[i].label, i);
        labels[i] = g.nodes[i].label;
    }

    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj(n);
    for (const auto& e : g.edges) {
        auto a = idx.at(e.a), b = idx.at(e.b);
        adj[a].emplace_back(b, e.weight);
        adj[b].emplace_back(a, e.weight);
    }

    for (int round = 0; round < 100; ++round) {
        std::vector<std::string> next(n);
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (adj[i].empty()) {
                next[i] = labels[i];
                continue;
            }
            // Weighted vote over the previous round's labels; ties go to the
            // smallest label.
            std::map<std::string, std::int64_t> votes;
            for (const auto& [nb, w] : adj[i])
                votes[labels[nb]] += w;
            const std::string* best = nullptr;
            std::int64_t best_w = 0;
            for (const auto& [lab, w] : votes) {
                if (best == nullptr || w > best_w) {
                    best = &lab;
                    best_w = w;
                }
            }
            next[i] = *best;
            if (next[i] != labels[i])
                changed = true;
        }
        labels = std::move(next);
        if (!changed)
            break;
    }

    std::unordered_map<std::string, std::vector<std::string>> buckets;
    for (std::size_t i = 0; i < n; ++i)
        buckets[labels[i]].push_back(g.nodes[i].label);

    std::vector<std::vector<std::string>> groups;
    groups.reserve(buckets.size());
    for (auto& [lab, members] : buckets)
        groups.push_back(std::move(members));
    return pack(std::move(groups), CommunityMethod::label_propagation);
}

} // namespace

CommunitySet communities(const CoGraph& g, CommunityMethod method) {
    switch (method) {
    case CommunityMethod::components:
        return components_of(g);
    case CommunityMethod::label_propagation:
        return propagate_labels(g);
    }
    throw InputError("unknown community method");
}

} // namespace cooc
