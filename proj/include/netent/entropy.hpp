#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "netent/graph.hpp"

namespace netent {

/// Multiset of information sources reaching a node through its ego network:
/// each friend q contributes itself once plus q's other friends. The owner
/// itself never appears. Entries are sorted by node id.
///
/// The total length equals the sum of the owner's neighbor degrees.
struct InfoSequence {
    NodeId owner = 0;
    std::vector<std::pair<NodeId, std::uint32_t>> counts;
    std::uint64_t length = 0;
};

InfoSequence info_sequence(const Graph& g, NodeId i);

/// Shannon entropy (natural log) of the normalized source counts; 0 for an
/// empty sequence.
double sequence_entropy(const InfoSequence& seq);

/// Entropy of node i's information sources; 0 for an isolated node.
double entropy(const Graph& g, NodeId i);

/// Entropy change at both endpoints caused by one tie.
struct EntropyDelta {
    EdgeRef edge{};
    std::size_t common_count = 0;  ///< c_ij, the edge itself never contributes
    double delta_i = 0.0;          ///< entropy change at edge.i
    double delta_j = 0.0;          ///< entropy change at edge.j
    double delta_pair = 0.0;       ///< delta_i + delta_j
};

/// Reusable scratch for entropy-delta evaluation. Builds a node's source
/// counts into flat per-node buffers and updates only the terms an edge
/// touches, so a full-graph sweep costs O(sum of sequence lengths) without
/// per-edge allocation.
///
/// Not thread-safe; give each worker its own instance. All evaluations are
/// counterfactual: the graph is never mutated.
class EntropyWorkspace {
  public:
    /// Entropy change at `owner` if the absent edge (owner, other) were added.
    double add_delta(const Graph& g, NodeId owner, NodeId other);

    /// Entropy change at `owner` attributable to the existing edge
    /// (owner, other): entropy with the edge minus entropy without it.
    double remove_delta(const Graph& g, NodeId owner, NodeId other);

  private:
    void build(const Graph& g, NodeId owner);

    std::vector<std::uint32_t> count_;
    std::vector<NodeId> touched_;
    std::uint64_t length_ = 0;
    double weighted_log_sum_ = 0.0;  // sum of n * ln(n) over touched counts
};

/// Entropy change at both endpoints if absent edge (i, j) were added,
/// by full recomputation of both information sequences on the graph with and
/// without the edge. Reference path; prefer delta_on_add_incremental at scale.
EntropyDelta delta_on_add_exact(const Graph& g, NodeId i, NodeId j);

/// Same contract as delta_on_add_exact, computed by updating only the count
/// terms the new edge touches. Agrees with the exact path to ~1e-9.
EntropyDelta delta_on_add_incremental(const Graph& g, NodeId i, NodeId j);
EntropyDelta delta_on_add_incremental(const Graph& g, NodeId i, NodeId j, EntropyWorkspace& ws);

/// Entropy gain the existing edge provides to its endpoints: entropy with the
/// edge minus entropy without it, per endpoint. A tie with positive delta_pair
/// diversifies its endpoints' information sources on net.
EntropyDelta delta_on_remove(const Graph& g, EdgeRef edge);
EntropyDelta delta_on_remove(const Graph& g, EdgeRef edge, EntropyWorkspace& ws);

/// Closed-form first-order estimate of the entropy change at i when absent
/// edge (i, j) is added:
///
///   -(k_j+1)/s' * eps(i) - sum_{l in {j} U c(i,j)} ln(n_l)/s'
///   - (c_ij+1)/s' + (k_j+1)/s' * ln(s')
///
/// with s' = s_i + k_j + 1. Valid only when c_ij >= 1 (n_j = c_ij must be
/// positive). Approximation diagnostic; the error shrinks as s' grows.
double delta_taylor_approx(const Graph& g, NodeId i, NodeId j);

/// One fixture of the fixed-k_j, growing-c_ij family.
struct MonotonicityCase {
    Graph graph;
    NodeId i = 0;
    NodeId j = 0;
    std::size_t common_count = 0;
};

/// Builds, for each c in [c_min, c_max], a graph where nodes i and j share
/// exactly c common friends, j has degree k_j, and i's neighborhood size is
/// held constant, so the exact entropy change of adding (i, j) is comparable
/// across c. Requires c_max <= k_j.
std::vector<MonotonicityCase> monotonicity_family(std::size_t k_j, std::size_t c_min,
                                                  std::size_t c_max);

}  // namespace netent
