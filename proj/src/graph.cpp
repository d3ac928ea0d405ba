#include "netent/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace netent {

EdgeRef make_edge(NodeId a, NodeId b) {
    if (a == b) {
        throw std::invalid_argument("edge endpoints must differ: " + std::to_string(a));
    }
    return a < b ? EdgeRef{a, b} : EdgeRef{b, a};
}

void Graph::check_node(NodeId i) const {
    if (i >= adjacency_.size()) {
        throw std::out_of_range("node id " + std::to_string(i) + " out of range [0, " +
                                std::to_string(adjacency_.size()) + ")");
    }
}

std::size_t Graph::degree(NodeId i) const {
    check_node(i);
    return adjacency_[i].size();
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
    check_node(i);
    return adjacency_[i];
}

bool Graph::has_edge(NodeId a, NodeId b) const {
    check_node(a);
    check_node(b);
    if (a == b) {
        return false;
    }
    // probe the shorter list
    const auto& nb = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    const NodeId target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
    return std::binary_search(nb.begin(), nb.end(), target);
}

void Graph::add_edge(NodeId a, NodeId b) {
    check_node(a);
    check_node(b);
    if (a == b) {
        throw std::invalid_argument("self-loop rejected at node " + std::to_string(a));
    }
    if (has_edge(a, b)) {
        throw std::invalid_argument("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") already present");
    }
    auto& na = adjacency_[a];
    auto& nb = adjacency_[b];
    na.insert(std::lower_bound(na.begin(), na.end(), b), b);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++edge_count_;
}

void Graph::remove_edge(NodeId a, NodeId b) {
    check_node(a);
    check_node(b);
    auto& na = adjacency_[a];
    auto it = std::lower_bound(na.begin(), na.end(), b);
    if (a == b || it == na.end() || *it != b) {
        throw std::invalid_argument("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") not present");
    }
    na.erase(it);
    auto& nb = adjacency_[b];
    nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
    --edge_count_;
}

std::vector<NodeId> Graph::common_neighbors(NodeId a, NodeId b) const {
    check_node(a);
    check_node(b);
    if (a == b) {
        throw std::invalid_argument("common_neighbors requires distinct nodes");
    }
    std::vector<NodeId> out;
    const auto& na = adjacency_[a];
    const auto& nb = adjacency_[b];
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    return out;
}

std::size_t Graph::common_neighbor_count(NodeId a, NodeId b) const {
    check_node(a);
    check_node(b);
    if (a == b) {
        throw std::invalid_argument("common_neighbor_count requires distinct nodes");
    }
    const auto& na = adjacency_[a];
    const auto& nb = adjacency_[b];
    std::size_t n = 0;
    auto ia = na.begin();
    auto ib = nb.begin();
    while (ia != na.end() && ib != nb.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++n;
            ++ia;
            ++ib;
        }
    }
    return n;
}

double Graph::tie_strength(NodeId a, NodeId b) const {
    if (!has_edge(a, b)) {
        throw std::invalid_argument("tie_strength requires an existing edge (" + std::to_string(a) +
                                    ", " + std::to_string(b) + ")");
    }
    const std::size_t c = common_neighbor_count(a, b);
    const std::size_t denom = degree(a) + degree(b) - 2 - c;
    if (denom == 0) {
        return 0.0;  // pendant pair: c is forced to 0
    }
    return static_cast<double>(c) / static_cast<double>(denom);
}

std::vector<EdgeRef> Graph::edges() const {
    std::vector<EdgeRef> out;
    out.reserve(edge_count_);
    for (NodeId i = 0; i < adjacency_.size(); ++i) {
        for (NodeId j : adjacency_[i]) {
            if (j > i) {
                out.push_back(EdgeRef{i, j});
            }
        }
    }
    return out;
}

std::size_t triangle_count(const Graph& g, NodeId i) {
    std::size_t paths = 0;
    for (NodeId j : g.neighbors(i)) {
        paths += g.common_neighbor_count(i, j);
    }
    return paths / 2;  // each triangle seen once per incident neighbor pair
}

double local_clustering(const Graph& g, NodeId i) {
    const std::size_t k = g.degree(i);
    if (k < 2) {
        return 0.0;
    }
    const double pairs = 0.5 * static_cast<double>(k) * static_cast<double>(k - 1);
    return static_cast<double>(triangle_count(g, i)) / pairs;
}

double avg_clustering(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) {
        return 0.0;
    }
    double sum = 0.0;
    for (NodeId i = 0; i < n; ++i) {
        sum += local_clustering(g, i);
    }
    return sum / static_cast<double>(n);
}

double edge_sum_clustering(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) {
        return 0.0;
    }
    double sum = 0.0;
    for (NodeId i = 0; i < n; ++i) {
        const std::size_t k = g.degree(i);
        if (k < 2) {
            continue;
        }
        const double pairs = 0.5 * static_cast<double>(k) * static_cast<double>(k - 1);
        for (NodeId j : g.neighbors(i)) {
            sum += static_cast<double>(g.common_neighbor_count(i, j)) / pairs;
        }
    }
    return sum / static_cast<double>(n);
}

}  // namespace netent
