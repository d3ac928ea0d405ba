#include "netent/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "netent/rng.hpp"

namespace netent {

namespace {

constexpr int kRewireTries = 100;
constexpr int kAbsentPairTries = 1000;

}  // namespace

Graph gen_ba(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (m < 1 || n < m + 1) {
        throw std::invalid_argument("scale-free model needs 1 <= m < n");
    }
    std::mt19937_64 rng(seed);
    Graph g(n);
    // One pool entry per edge endpoint makes a uniform pool draw
    // degree-proportional.
    std::vector<NodeId> pool;
    pool.reserve(2 * (m * (m - 1) / 2 + (n - m) * m));
    for (NodeId a = 0; a < m; ++a) {
        for (NodeId b = a + 1; b < m; ++b) {
            g.add_edge(a, b);
            pool.push_back(a);
            pool.push_back(b);
        }
    }
    std::vector<NodeId> targets;
    targets.reserve(m);
    for (NodeId v = static_cast<NodeId>(m); v < n; ++v) {
        targets.clear();
        while (targets.size() < m) {
            const NodeId t = pool.empty()
                                 ? static_cast<NodeId>(rand_below(rng, v))
                                 : pool[rand_below(rng, pool.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
                targets.push_back(t);
            }
        }
        for (NodeId t : targets) {
            g.add_edge(v, t);
            pool.push_back(v);
            pool.push_back(t);
        }
    }
    return g;
}

Graph gen_sw(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
    if (k < 1 || n <= 2 * k || p < 0.0 || p > 1.0) {
        throw std::invalid_argument("small-world model needs n > 2k >= 2 and p in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (std::size_t d = 1; d <= k; ++d) {
        for (NodeId i = 0; i < n; ++i) {
            g.add_edge(i, static_cast<NodeId>((i + d) % n));
        }
    }
    for (std::size_t d = 1; d <= k; ++d) {
        for (NodeId i = 0; i < n; ++i) {
            if (rand_unit(rng) >= p) {
                continue;
            }
            const NodeId j = static_cast<NodeId>((i + d) % n);
            for (int attempt = 0; attempt < kRewireTries; ++attempt) {
                const NodeId t = static_cast<NodeId>(rand_below(rng, n));
                if (t == i || g.has_edge(i, t)) {
                    continue;
                }
                g.remove_edge(i, j);
                g.add_edge(i, t);
                break;
            }
        }
    }
    return g;
}

Graph gen_cnnr(std::size_t n, double u, double r, std::uint64_t seed) {
    if (u <= 0.0 || u >= 1.0 || r < 0.0 || r > 1.0 || n < 2) {
        throw std::invalid_argument("growth model needs 0 < u < 1, r in [0, 1], n >= 2");
    }
    std::mt19937_64 rng(seed);
    Graph g(n);
    std::vector<EdgeRef> edge_list;
    std::vector<EdgeRef> pool;  // potential (two-hop) pairs; entries may go stale
    auto add_edge = [&](NodeId a, NodeId b) {
        g.add_edge(a, b);
        edge_list.push_back(make_edge(a, b));
    };
    add_edge(0, 1);
    NodeId active = 2;
    auto add_node = [&] {
        const NodeId v = active;
        const NodeId w = static_cast<NodeId>(rand_below(rng, active));
        for (NodeId l : g.neighbors(w)) {
            pool.push_back(make_edge(v, l));
        }
        add_edge(v, w);
        ++active;
    };
    while (active < n) {
        const double x = rand_unit(rng);
        if (x < u * (1.0 - r)) {
            if (pool.empty()) {
                add_node();
                continue;
            }
            const std::size_t idx = rand_below(rng, pool.size());
            const EdgeRef e = pool[idx];
            pool[idx] = pool.back();
            pool.pop_back();
            // A pair may have become adjacent since registration; the draw
            // still consumes the step.
            if (!g.has_edge(e.i, e.j)) {
                add_edge(e.i, e.j);
            }
        } else if (x < u) {
            if (edge_list.empty()) {
                add_node();
                continue;
            }
            const std::size_t idx = rand_below(rng, edge_list.size());
            const EdgeRef removed = edge_list[idx];
            edge_list[idx] = edge_list.back();
            edge_list.pop_back();
            g.remove_edge(removed.i, removed.j);
            bool added = false;
            for (int attempt = 0; attempt < kAbsentPairTries; ++attempt) {
                const NodeId a = static_cast<NodeId>(rand_below(rng, active));
                const NodeId b = static_cast<NodeId>(rand_below(rng, active));
                if (a == b || g.has_edge(a, b)) {
                    continue;
                }
                add_edge(a, b);
                added = true;
                break;
            }
            if (!added) {
                add_edge(removed.i, removed.j);
            }
        } else {
            add_node();
        }
    }
    return g;
}

Graph generate(const GenParams& params) {
    switch (params.model) {
        case GenModel::ba:
            return gen_ba(params.n, params.m, params.seed);
        case GenModel::sw:
            return gen_sw(params.n, params.k, params.p, params.seed);
        case GenModel::cnnr:
            return gen_cnnr(params.n, params.u, params.r, params.seed);
    }
    throw std::invalid_argument("unknown model");
}

namespace {

double node_contrib(std::size_t degree, std::size_t triangles) {
    if (degree < 2) {
        return 0.0;
    }
    const double pairs = 0.5 * static_cast<double>(degree) * static_cast<double>(degree - 1);
    return static_cast<double>(triangles) / pairs;
}

// Per-node triangle counts plus the average-clustering sum, kept in sync
// across accepted swaps.
struct ClusteringState {
    std::vector<std::size_t> tri;
    std::vector<double> contrib;
    double contrib_sum = 0.0;

    explicit ClusteringState(const Graph& g)
        : tri(g.node_count()), contrib(g.node_count()) {
        for (NodeId i = 0; i < g.node_count(); ++i) {
            tri[i] = triangle_count(g, i);
            contrib[i] = node_contrib(g.degree(i), tri[i]);
            contrib_sum += contrib[i];
        }
    }

    double average(const Graph& g) const {
        return g.node_count() == 0 ? 0.0 : contrib_sum / static_cast<double>(g.node_count());
    }

    void bump(const Graph& g, NodeId i, std::ptrdiff_t delta) {
        tri[i] = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(tri[i]) + delta);
        const double fresh = node_contrib(g.degree(i), tri[i]);
        contrib_sum += fresh - contrib[i];
        contrib[i] = fresh;
    }

    void on_remove(Graph& g, NodeId a, NodeId b) {
        const std::vector<NodeId> cn = g.common_neighbors(a, b);
        g.remove_edge(a, b);
        const auto c = static_cast<std::ptrdiff_t>(cn.size());
        bump(g, a, -c);
        bump(g, b, -c);
        for (NodeId x : cn) {
            bump(g, x, -1);
        }
    }

    void on_add(Graph& g, NodeId a, NodeId b) {
        const std::vector<NodeId> cn = g.common_neighbors(a, b);
        g.add_edge(a, b);
        const auto c = static_cast<std::ptrdiff_t>(cn.size());
        bump(g, a, c);
        bump(g, b, c);
        for (NodeId x : cn) {
            bump(g, x, 1);
        }
    }
};

}  // namespace

TuneResult tune_clustering(const Graph& g, const TuneParams& params, std::uint64_t seed) {
    if (params.target_clustering < 0.0 || params.target_clustering > 1.0 ||
        params.tolerance <= 0.0) {
        throw std::invalid_argument("need target in [0, 1] and tolerance > 0");
    }
    TuneResult result;
    result.graph = g;
    Graph& work = result.graph;
    std::vector<EdgeRef> edge_list = work.edges();
    std::mt19937_64 rng(seed);
    ClusteringState state(work);
    const double target = params.target_clustering;
    double current = state.average(work);
    while (result.attempted_swaps < params.max_swaps) {
        if (std::abs(current - target) <= params.tolerance) {
            break;
        }
        ++result.attempted_swaps;
        if (edge_list.size() < 2) {
            continue;
        }
        const std::size_t i1 = rand_below(rng, edge_list.size());
        const std::size_t i2 = rand_below(rng, edge_list.size());
        if (i1 == i2) {
            continue;
        }
        const EdgeRef e1 = edge_list[i1];
        EdgeRef e2 = edge_list[i2];
        if (rand_unit(rng) < 0.5) {
            std::swap(e2.i, e2.j);
        }
        const NodeId a = e1.i, b = e1.j, c = e2.i, d = e2.j;
        if (a == c || a == d || b == c || b == d) {
            continue;
        }
        if (work.has_edge(a, c) || work.has_edge(b, d)) {
            continue;
        }
        state.on_remove(work, a, b);
        state.on_remove(work, c, d);
        state.on_add(work, a, c);
        state.on_add(work, b, d);
        const double proposed = state.average(work);
        if (std::abs(proposed - target) < std::abs(current - target)) {
            edge_list[i1] = make_edge(a, c);
            edge_list[i2] = make_edge(b, d);
            current = proposed;
            ++result.accepted_swaps;
        } else {
            state.on_remove(work, a, c);
            state.on_remove(work, b, d);
            state.on_add(work, a, b);
            state.on_add(work, c, d);
        }
    }
    result.achieved_clustering = avg_clustering(work);
    result.reached_target = std::abs(result.achieved_clustering - target) <= params.tolerance;
    return result;
}

}  // namespace netent
