#include "netent/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

#include "netent/rng.hpp"

namespace netent {

namespace {

// Fills out[indices[idx]] for idx in [begin, end) on the calling thread.
void sweep_range(const Graph& g, const std::vector<EdgeRef>& edges, std::size_t begin,
                 std::size_t end, std::vector<SweepRecord>& out) {
    EntropyWorkspace ws;
    for (std::size_t idx = begin; idx < end; ++idx) {
        const EntropyDelta d = delta_on_remove(g, edges[idx], ws);
        out[idx] = SweepRecord{d.edge, d.common_count, d.delta_pair};
    }
}

std::vector<SweepRecord> sweep_edges(const Graph& g, const std::vector<EdgeRef>& edges,
                                     std::size_t workers) {
    std::vector<SweepRecord> out(edges.size());
    if (workers == 0) {
        workers = 1;
    }
    workers = std::min(workers, std::max<std::size_t>(edges.size(), 1));
    if (workers == 1) {
        sweep_range(g, edges, 0, edges.size(), out);
        return out;
    }
    const std::size_t chunk = (edges.size() + workers - 1) / workers;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(begin + chunk, edges.size());
        if (begin >= end) {
            break;
        }
        threads.emplace_back(sweep_range, std::cref(g), std::cref(edges), begin, end,
                             std::ref(out));
    }
    for (std::thread& t : threads) {
        t.join();
    }
    return out;
}

}  // namespace

std::vector<SweepRecord> edge_sweep(const Graph& g, std::size_t workers) {
    return sweep_edges(g, g.edges(), workers);
}

std::vector<SweepRecord> edge_sweep_sampled(const Graph& g, double fraction, std::uint64_t seed,
                                            std::size_t workers) {
    if (!(fraction > 0.0) || fraction > 1.0) {
        throw std::invalid_argument("sample fraction must be in (0, 1]");
    }
    std::vector<EdgeRef> edges = g.edges();
    if (edges.empty()) {
        throw std::invalid_argument("graph has no edges");
    }
    const auto take = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(fraction * static_cast<double>(edges.size()))));
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i + 1 < edges.size() && i < take; ++i) {
        const std::size_t j = i + rand_below(rng, edges.size() - i);
        std::swap(edges[i], edges[j]);
    }
    edges.resize(std::min(take, edges.size()));
    std::sort(edges.begin(), edges.end());
    return sweep_edges(g, edges, workers);
}

SweepAggregate aggregate_sweep(const std::vector<SweepRecord>& records) {
    if (records.empty()) {
        throw std::invalid_argument("no records to aggregate");
    }
    struct Acc {
        std::size_t count = 0;
        double min = 0.0;
        double max = 0.0;
        double sum = 0.0;
    };
    std::map<std::size_t, Acc> acc;
    for (const SweepRecord& rec : records) {
        auto [it, fresh] = acc.try_emplace(rec.common_count);
        Acc& a = it->second;
        if (fresh) {
            a.min = a.max = rec.delta_pair;
        } else {
            a.min = std::min(a.min, rec.delta_pair);
            a.max = std::max(a.max, rec.delta_pair);
        }
        ++a.count;
        a.sum += rec.delta_pair;
    }
    SweepAggregate out;
    for (const auto& [c, a] : acc) {
        out.buckets.emplace(
            c, BucketStats{a.count, a.min, a.sum / static_cast<double>(a.count), a.max});
    }
    return out;
}

double bucket_mean_slope(const SweepAggregate& aggregate) {
    if (aggregate.buckets.size() < 2) {
        return 0.0;
    }
    double x_sum = 0.0, y_sum = 0.0;
    for (const auto& [c, stats] : aggregate.buckets) {
        x_sum += static_cast<double>(c);
        y_sum += stats.mean;
    }
    const double n = static_cast<double>(aggregate.buckets.size());
    const double x_bar = x_sum / n, y_bar = y_sum / n;
    double cov = 0.0, var = 0.0;
    for (const auto& [c, stats] : aggregate.buckets) {
        const double dx = static_cast<double>(c) - x_bar;
        cov += dx * (stats.mean - y_bar);
        var += dx * dx;
    }
    return var == 0.0 ? 0.0 : cov / var;
}

PositivenessReport positiveness(const std::vector<SweepRecord>& records, double clustering) {
    if (records.empty()) {
        throw std::invalid_argument("no records");
    }
    PositivenessReport rep;
    for (const SweepRecord& rec : records) {
        if (rec.delta_pair > 0.0) {
            ++rep.positive_count;
        } else {
            ++rep.nonpositive_count;
        }
    }
    rep.tau = static_cast<double>(rep.positive_count) / static_cast<double>(records.size());
    rep.clustering = clustering;
    return rep;
}

PositivenessReport positiveness(const Graph& g, std::size_t workers) {
    if (g.edge_count() == 0) {
        throw std::invalid_argument("graph has no edges");
    }
    return positiveness(edge_sweep(g, workers), avg_clustering(g));
}

namespace {

void sort_by_clustering(std::vector<CurvePoint>& points) {
    std::sort(points.begin(), points.end(), [](const CurvePoint& a, const CurvePoint& b) {
        return a.clustering < b.clustering;
    });
}

}  // namespace

std::vector<CurvePoint> tau_vs_clustering_sw(const GenParams& base,
                                             const std::vector<double>& p_values,
                                             std::size_t workers) {
    if (base.model != GenModel::sw) {
        throw std::invalid_argument("curve base must use the small-world model");
    }
    std::vector<CurvePoint> points;
    points.reserve(p_values.size());
    for (std::size_t idx = 0; idx < p_values.size(); ++idx) {
        GenParams params = base;
        params.p = p_values[idx];
        params.seed = base.seed + idx;
        const Graph g = generate(params);
        const PositivenessReport rep = positiveness(g, workers);
        points.push_back(CurvePoint{p_values[idx], rep.clustering, rep.tau});
    }
    sort_by_clustering(points);
    return points;
}

std::vector<CurvePoint> tau_vs_clustering_tuned(const Graph& base,
                                                const std::vector<double>& targets,
                                                const TuneParams& tune, std::uint64_t seed,
                                                std::size_t workers) {
    std::vector<CurvePoint> points;
    points.reserve(targets.size());
    for (std::size_t idx = 0; idx < targets.size(); ++idx) {
        TuneParams params = tune;
        params.target_clustering = targets[idx];
        const TuneResult tuned = tune_clustering(base, params, seed + idx);
        const PositivenessReport rep = positiveness(tuned.graph, workers);
        points.push_back(CurvePoint{targets[idx], rep.clustering, rep.tau});
    }
    sort_by_clustering(points);
    return points;
}

StrengthCdf strength_cdf(const Graph& g) {
    const std::vector<EdgeRef> edges = g.edges();
    if (edges.empty()) {
        throw std::invalid_argument("graph has no edges");
    }
    std::vector<double> strengths;
    strengths.reserve(edges.size());
    for (const EdgeRef& e : edges) {
        strengths.push_back(g.tie_strength(e.i, e.j));
    }
    std::sort(strengths.begin(), strengths.end());
    StrengthCdf cdf;
    const double total = static_cast<double>(strengths.size());
    for (std::size_t i = 0; i < strengths.size(); ++i) {
        if (i + 1 < strengths.size() && strengths[i + 1] == strengths[i]) {
            continue;
        }
        cdf.points.emplace_back(strengths[i], static_cast<double>(i + 1) / total);
    }
    return cdf;
}

double cdf_at(const StrengthCdf& cdf, double w) {
    double frac = 0.0;
    for (const auto& [value, cum] : cdf.points) {
        if (value > w) {
            break;
        }
        frac = cum;
    }
    return frac;
}

}  // namespace netent
