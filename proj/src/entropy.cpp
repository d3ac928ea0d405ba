#include "netent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace netent {

namespace {

// n * ln(n) with a table for the small counts that dominate sweeps.
double xlogx(std::uint64_t n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(1 << 16);
        t[0] = 0.0;
        for (std::size_t i = 1; i < t.size(); ++i) {
            t[i] = static_cast<double>(i) * std::log(static_cast<double>(i));
        }
        return t;
    }();
    if (n < table.size()) {
        return table[n];
    }
    return static_cast<double>(n) * std::log(static_cast<double>(n));
}

double entropy_from_sums(std::uint64_t length, double weighted_log_sum) {
    if (length == 0) {
        return 0.0;
    }
    const double s = static_cast<double>(length);
    return std::log(s) - weighted_log_sum / s;
}

void require_absent(const Graph& g, NodeId i, NodeId j) {
    if (g.has_edge(i, j)) {
        throw std::invalid_argument("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") already present");
    }
}

std::map<NodeId, std::uint32_t> counts_plain(const Graph& g, NodeId owner) {
    std::map<NodeId, std::uint32_t> counts;
    for (NodeId q : g.neighbors(owner)) {
        counts[q] += 1;
        for (NodeId l : g.neighbors(q)) {
            if (l != owner) {
                counts[l] += 1;
            }
        }
    }
    return counts;
}

// Information-source counts as if the absent edge (extra_a, extra_b) existed in g.
std::map<NodeId, std::uint32_t> counts_with_edge(const Graph& g, NodeId owner, NodeId extra_a,
                                                 NodeId extra_b) {
    std::map<NodeId, std::uint32_t> counts;
    auto visit_friend = [&](NodeId q) {
        counts[q] += 1;
        for (NodeId l : g.neighbors(q)) {
            if (l != owner) {
                counts[l] += 1;
            }
        }
        const NodeId virt = q == extra_a ? extra_b : (q == extra_b ? extra_a : owner);
        if (virt != owner) {
            counts[virt] += 1;
        }
    };
    for (NodeId q : g.neighbors(owner)) {
        visit_friend(q);
    }
    if (owner == extra_a) {
        visit_friend(extra_b);
    } else if (owner == extra_b) {
        visit_friend(extra_a);
    }
    return counts;
}

double plain_entropy(const std::map<NodeId, std::uint32_t>& counts) {
    std::uint64_t length = 0;
    for (const auto& [node, n] : counts) {
        length += n;
    }
    if (length == 0) {
        return 0.0;
    }
    double e = 0.0;
    const double s = static_cast<double>(length);
    for (const auto& [node, n] : counts) {
        const double p = static_cast<double>(n) / s;
        e -= p * std::log(p);
    }
    return e;
}

}  // namespace

InfoSequence info_sequence(const Graph& g, NodeId i) {
    std::map<NodeId, std::uint32_t> counts;
    for (NodeId q : g.neighbors(i)) {
        counts[q] += 1;
        for (NodeId l : g.neighbors(q)) {
            if (l != i) {
                counts[l] += 1;
            }
        }
    }
    InfoSequence seq;
    seq.owner = i;
    seq.counts.assign(counts.begin(), counts.end());
    for (const auto& [node, n] : seq.counts) {
        seq.length += n;
    }
    return seq;
}

double sequence_entropy(const InfoSequence& seq) {
    if (seq.length == 0) {
        return 0.0;
    }
    double weighted = 0.0;
    for (const auto& [node, n] : seq.counts) {
        weighted += xlogx(n);
    }
    return entropy_from_sums(seq.length, weighted);
}

double entropy(const Graph& g, NodeId i) {
    return sequence_entropy(info_sequence(g, i));
}

void EntropyWorkspace::build(const Graph& g, NodeId owner) {
    count_.resize(g.node_count(), 0);
    for (NodeId t : touched_) {
        count_[t] = 0;
    }
    touched_.clear();
    length_ = 0;
    for (NodeId q : g.neighbors(owner)) {
        if (count_[q]++ == 0) {
            touched_.push_back(q);
        }
        for (NodeId l : g.neighbors(q)) {
            if (l == owner) {
                continue;
            }
            if (count_[l]++ == 0) {
                touched_.push_back(l);
            }
        }
        length_ += g.degree(q);
    }
    weighted_log_sum_ = 0.0;
    for (NodeId t : touched_) {
        weighted_log_sum_ += xlogx(count_[t]);
    }
}

double EntropyWorkspace::add_delta(const Graph& g, NodeId owner, NodeId other) {
    build(g, owner);
    const double before = entropy_from_sums(length_, weighted_log_sum_);
    auto bump = [&](NodeId l) {
        const std::uint32_t n = count_[l];
        if (n == 0) {
            touched_.push_back(l);
        }
        weighted_log_sum_ += xlogx(n + 1) - xlogx(n);
        count_[l] = n + 1;
        ++length_;
    };
    bump(other);
    for (NodeId l : g.neighbors(other)) {
        if (l != owner) {
            bump(l);
        }
    }
    return entropy_from_sums(length_, weighted_log_sum_) - before;
}

double EntropyWorkspace::remove_delta(const Graph& g, NodeId owner, NodeId other) {
    build(g, owner);
    const double with_edge = entropy_from_sums(length_, weighted_log_sum_);
    auto drop = [&](NodeId l) {
        const std::uint32_t n = count_[l];
        weighted_log_sum_ += xlogx(n - 1) - xlogx(n);
        count_[l] = n - 1;
        --length_;
    };
    drop(other);
    for (NodeId l : g.neighbors(other)) {
        if (l != owner) {
            drop(l);
        }
    }
    return with_edge - entropy_from_sums(length_, weighted_log_sum_);
}

EntropyDelta delta_on_add_exact(const Graph& g, NodeId i, NodeId j) {
    const EdgeRef edge = make_edge(i, j);
    require_absent(g, i, j);
    EntropyDelta d;
    d.edge = edge;
    d.common_count = g.common_neighbor_count(i, j);
    const double before_i = plain_entropy(counts_plain(g, i));
    const double before_j = plain_entropy(counts_plain(g, j));
    const double after_i = plain_entropy(counts_with_edge(g, i, i, j));
    const double after_j = plain_entropy(counts_with_edge(g, j, i, j));
    d.delta_i = (i == edge.i ? after_i - before_i : after_j - before_j);
    d.delta_j = (i == edge.i ? after_j - before_j : after_i - before_i);
    d.delta_pair = (after_i - before_i) + (after_j - before_j);
    return d;
}

EntropyDelta delta_on_add_incremental(const Graph& g, NodeId i, NodeId j) {
    EntropyWorkspace ws;
    return delta_on_add_incremental(g, i, j, ws);
}

EntropyDelta delta_on_add_incremental(const Graph& g, NodeId i, NodeId j, EntropyWorkspace& ws) {
    const EdgeRef edge = make_edge(i, j);
    require_absent(g, i, j);
    EntropyDelta d;
    d.edge = edge;
    d.common_count = g.common_neighbor_count(i, j);
    const double di = ws.add_delta(g, i, j);
    const double dj = ws.add_delta(g, j, i);
    d.delta_i = (i == edge.i ? di : dj);
    d.delta_j = (i == edge.i ? dj : di);
    d.delta_pair = di + dj;
    return d;
}

EntropyDelta delta_on_remove(const Graph& g, EdgeRef edge) {
    EntropyWorkspace ws;
    return delta_on_remove(g, edge, ws);
}

EntropyDelta delta_on_remove(const Graph& g, EdgeRef edge, EntropyWorkspace& ws) {
    if (!g.has_edge(edge.i, edge.j)) {
        throw std::invalid_argument("edge (" + std::to_string(edge.i) + ", " +
                                    std::to_string(edge.j) + ") not present");
    }
    EntropyDelta d;
    d.edge = make_edge(edge.i, edge.j);
    d.common_count = g.common_neighbor_count(edge.i, edge.j);
    d.delta_i = ws.remove_delta(g, d.edge.i, d.edge.j);
    d.delta_j = ws.remove_delta(g, d.edge.j, d.edge.i);
    d.delta_pair = d.delta_i + d.delta_j;
    return d;
}

double delta_taylor_approx(const Graph& g, NodeId i, NodeId j) {
    make_edge(i, j);
    require_absent(g, i, j);
    const std::vector<NodeId> common = g.common_neighbors(i, j);
    if (common.empty()) {
        throw std::invalid_argument("closed-form delta needs at least one common neighbor");
    }
    const InfoSequence seq = info_sequence(g, i);
    const double eps_i = sequence_entropy(seq);
    const double k_j = static_cast<double>(g.degree(j));
    const double s_prime = static_cast<double>(seq.length) + k_j + 1.0;
    auto count_of = [&](NodeId l) {
        auto it = std::lower_bound(seq.counts.begin(), seq.counts.end(), l,
                                   [](const auto& entry, NodeId node) { return entry.first < node; });
        return it != seq.counts.end() && it->first == l ? it->second : 0u;
    };
    double log_count_sum = std::log(static_cast<double>(count_of(j)));
    for (NodeId l : common) {
        log_count_sum += std::log(static_cast<double>(count_of(l)));
    }
    const double c = static_cast<double>(common.size());
    return -(k_j + 1.0) / s_prime * eps_i - log_count_sum / s_prime - (c + 1.0) / s_prime +
           (k_j + 1.0) / s_prime * std::log(s_prime);
}

std::vector<MonotonicityCase> monotonicity_family(std::size_t k_j, std::size_t c_min,
                                                  std::size_t c_max) {
    if (k_j == 0 || c_max > k_j || c_min > c_max) {
        throw std::invalid_argument("need c_min <= c_max <= k_j and k_j >= 1");
    }
    // i keeps the same friend set in every case; only how many of those
    // friends also know j varies.
    const std::size_t k_i = c_max + 2;
    std::vector<MonotonicityCase> cases;
    cases.reserve(c_max - c_min + 1);
    for (std::size_t c = c_min; c <= c_max; ++c) {
        MonotonicityCase mc;
        mc.i = 0;
        mc.j = 1;
        mc.common_count = c;
        const std::size_t privates = k_j - c;
        Graph g(2 + k_i + privates);
        for (std::size_t t = 0; t < k_i; ++t) {
            g.add_edge(0, static_cast<NodeId>(2 + t));
        }
        for (std::size_t t = 0; t < c; ++t) {
            g.add_edge(1, static_cast<NodeId>(2 + t));
        }
        for (std::size_t t = 0; t < privates; ++t) {
            g.add_edge(1, static_cast<NodeId>(2 + k_i + t));
        }
        mc.graph = std::move(g);
        cases.push_back(std::move(mc));
    }
    return cases;
}

}  // namespace netent
