#pragma once

#include <cstddef>
#include <cstdint>

#include "netent/graph.hpp"

namespace netent {

enum class GenModel { ba, sw, cnnr };

/// Parameters for generate(); only the fields of the chosen model are read.
struct GenParams {
    GenModel model = GenModel::ba;
    std::size_t n = 0;         ///< node count, all models
    std::size_t m = 0;         ///< BA: ties per new node; core is m fully connected nodes
    std::size_t k = 0;         ///< SW: lattice neighbors per side (mean degree 2k)
    double p = 0.0;            ///< SW: per-edge rewiring probability
    double u = 0.0;            ///< CNNR: probability a step is an edge event
    double r = 0.0;            ///< CNNR: share of edge events that rewire instead of convert
    std::uint64_t seed = 0;
};

/// Scale-free graph: complete core of m nodes, then each new node attaches to
/// m distinct existing nodes sampled proportionally to current degree.
/// Requires n >= m+1, m >= 1.
Graph gen_ba(std::size_t n, std::size_t m, std::uint64_t seed);

/// Ring lattice with k neighbors per side, each lattice edge's far endpoint
/// rewired to a uniform node with probability p (skipped if no simple target
/// is found in 100 tries). Edge count is exactly n*k. Requires n > 2k, k >= 1.
Graph gen_sw(std::size_t n, std::size_t k, double p, std::uint64_t seed);

/// Growing social-network model with a connected-nearest-neighbor flavor.
/// Each step is one of:
///   - probability u*(1-r): convert a uniformly random stored potential edge
///     (a two-hop pair recorded at node arrival) into a real edge;
///   - probability u*r: rewire, i.e. delete a uniformly random existing edge
///     and add a uniformly random currently absent pair;
///   - probability 1-u: add a node, tie it to a uniformly random existing
///     node, and record potential edges to that node's other neighbors.
/// A conversion drawn against an empty pool degenerates to node addition.
/// Mean degree approaches 2/(1-u). Requires 0 < u < 1, r in [0,1], n >= 2.
Graph gen_cnnr(std::size_t n, double u, double r, std::uint64_t seed);

/// Dispatches to the generator selected by params.model after validating the
/// fields that model reads. Throws std::invalid_argument on bad parameters.
Graph generate(const GenParams& params);

struct TuneParams {
    double target_clustering = 0.0;  ///< in [0, 1]
    std::size_t max_swaps = 0;       ///< cap on attempted swaps
    double tolerance = 0.0;          ///< stop once |clustering - target| <= tolerance
};

struct TuneResult {
    Graph graph;
    double achieved_clustering = 0.0;
    std::size_t accepted_swaps = 0;
    std::size_t attempted_swaps = 0;
    bool reached_target = false;
};

/// Degree-preserving clustering tuner: repeatedly proposes double-edge swaps
/// ((a,b),(c,d) -> (a,c),(b,d)) and greedily accepts those that keep the graph
/// simple and move average clustering strictly toward the target. The output
/// degree multiset always equals the input's. Stops at tolerance or after
/// max_swaps attempts, whichever first; an unreached target is reported via
/// the flag, not an error.
TuneResult tune_clustering(const Graph& g, const TuneParams& params, std::uint64_t seed);

}  // namespace netent
