#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace netent {

using NodeId = std::uint32_t;

/// Undirected edge in canonical orientation (i < j).
struct EdgeRef {
    NodeId i;
    NodeId j;

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Canonicalizes an unordered node pair. Throws std::invalid_argument if a == b.
EdgeRef make_edge(NodeId a, NodeId b);

/// Simple undirected graph over dense node ids [0, node_count).
///
/// Neighbor lists are kept sorted, so membership tests are binary searches and
/// common-neighbor queries are linear merges over the two lists.
class Graph {
  public:
    Graph() = default;
    explicit Graph(std::size_t node_count) : adjacency_(node_count) {}

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::size_t degree(NodeId i) const;
    std::span<const NodeId> neighbors(NodeId i) const;
    bool has_edge(NodeId a, NodeId b) const;

    void add_edge(NodeId a, NodeId b);
    void remove_edge(NodeId a, NodeId b);

    /// Nodes adjacent to both a and b, in ascending order. Never contains a or
    /// b themselves, and does not depend on whether edge (a, b) exists.
    std::vector<NodeId> common_neighbors(NodeId a, NodeId b) const;
    std::size_t common_neighbor_count(NodeId a, NodeId b) const;

    /// Neighborhood overlap c_ij / (k_i + k_j - 2 - c_ij) of an existing edge.
    /// A pendant pair (both endpoints degree 1) makes the denominator zero;
    /// since no common neighbor is possible there, the strength is 0.
    double tie_strength(NodeId a, NodeId b) const;

    /// All edges as canonical (i < j) pairs, sorted ascending.
    std::vector<EdgeRef> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    void check_node(NodeId i) const;

    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Number of triangles through node i.
std::size_t triangle_count(const Graph& g, NodeId i);

/// triangles(i) / C(k_i, 2); 0 for nodes of degree < 2.
double local_clustering(const Graph& g, NodeId i);

/// Mean of local_clustering over all nodes; 0 for the empty graph.
double avg_clustering(const Graph& g);

/// Sum of c_ij / C(k_i, 2) over ordered adjacent pairs (i, j), divided by the
/// node count. Diagnostic companion to avg_clustering; the summand is
/// asymmetric in (i, j), so this is reported as a ratio check rather than used
/// as the clustering value. Terms with k_i < 2 are skipped.
double edge_sum_clustering(const Graph& g);

}  // namespace netent
