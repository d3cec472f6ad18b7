#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cooc/matrix.hpp"

namespace cooc {

// Weighted undirected graph thresholded out of a CooccurMatrix. Nodes are
// sorted by (strength descending, source key order ascending); edges keep the
// matrix key order, with each pair's lower-ordered key first.
struct CoGraph {
    struct Node {
        std::string label;
        std::int64_t strength = 0; // sum of incident edge weights

        friend bool operator==(const Node&, const Node&) = default;
    };
    struct Edge {
        std::string a;
        std::string b;
        std::int64_t weight = 0;

        friend bool operator==(const Edge&, const Edge&) = default;
    };

    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::int64_t min_weight = 1;

    friend bool operator==(const CoGraph&, const CoGraph&) = default;
};

// Edge for every off-diagonal pair at or above min_weight; the diagonal is
// ignored and isolated nodes are dropped unless keep_isolated.
// Throws InputError when min_weight < 1.
CoGraph build_graph(const CooccurMatrix& m, std::int64_t min_weight,
                    bool keep_isolated = false);

// Top-k labels by strength, ties by label order; the whole node list when the
// graph has fewer than k nodes. k <= 0 yields an empty list.
std::vector<std::string> central_nodes(const CoGraph& g, std::int64_t k);

enum class CommunityMethod { components, label_propagation };

// Communities partition the node set. Each community is sorted
// lexicographically and communities are ordered by their smallest member.
struct CommunitySet {
    std::vector<std::vector<std::string>> communities;
    CommunityMethod method = CommunityMethod::components;

    friend bool operator==(const CommunitySet&, const CommunitySet&) = default;
};

// components: connected components of the thresholded graph.
// label_propagation: synchronous updates from each node's own label, neighbor
// votes weighted by edge weight, ties to the smallest label, capped at 100
// rounds.
CommunitySet communities(const CoGraph& g, CommunityMethod method);

} // namespace cooc
