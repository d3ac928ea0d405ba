#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "netent/entropy.hpp"
#include "netent/generators.hpp"
#include "netent/graph.hpp"

namespace netent {

/// Entropy contribution of one existing tie, as produced by edge_sweep.
struct SweepRecord {
    EdgeRef edge{};
    std::size_t common_count = 0;
    double delta_pair = 0.0;
};

/// Evaluates delta_on_remove for every edge. Records come back in canonical
/// edge order and are byte-identical for any worker count: edges are split
/// into fixed index ranges and each worker writes its own slots. workers == 0
/// means 1.
std::vector<SweepRecord> edge_sweep(const Graph& g, std::size_t workers = 1);

/// Sweep over a uniform sample of edges (fraction in (0, 1]), selected by a
/// seeded shuffle and returned in canonical edge order. A nonempty graph
/// always yields at least one record.
std::vector<SweepRecord> edge_sweep_sampled(const Graph& g, double fraction, std::uint64_t seed,
                                            std::size_t workers = 1);

struct BucketStats {
    std::size_t count = 0;
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
};

/// delta_pair statistics grouped by exact common-neighbor count (no binning).
struct SweepAggregate {
    std::map<std::size_t, BucketStats> buckets;
};

/// Groups records by common_count. Throws std::invalid_argument when records
/// is empty.
SweepAggregate aggregate_sweep(const std::vector<SweepRecord>& records);

/// Unweighted least-squares slope of bucket mean delta_pair against
/// common-neighbor count; 0 when fewer than two buckets exist.
double bucket_mean_slope(const SweepAggregate& aggregate);

/// Fraction of ties whose presence strictly increases the endpoints' combined
/// entropy, plus the clustering context it is analyzed against.
struct PositivenessReport {
    double tau = 0.0;
    std::size_t positive_count = 0;
    std::size_t nonpositive_count = 0;
    double clustering = 0.0;
};

/// tau over precomputed sweep records. Zero deltas count as non-positive.
PositivenessReport positiveness(const std::vector<SweepRecord>& records, double clustering);

/// Full-sweep tau of a graph. Throws std::invalid_argument on an empty edge
/// set.
PositivenessReport positiveness(const Graph& g, std::size_t workers = 1);

/// One point of a tau-versus-clustering curve; knob is the parameter that
/// produced the graph (rewiring probability or clustering target).
struct CurvePoint {
    double knob = 0.0;
    double clustering = 0.0;
    double tau = 0.0;
};

/// Generates one small-world graph per rewiring probability (seed offset by
/// point index) and computes tau for each. Points are sorted by clustering.
/// base.model must be the small-world model; base.p is overridden per point.
std::vector<CurvePoint> tau_vs_clustering_sw(const GenParams& base,
                                             const std::vector<double>& p_values,
                                             std::size_t workers = 1);

/// Tunes copies of `base` toward each clustering target (tune seed offset by
/// point index) and computes tau for each result. Points are sorted by
/// clustering.
std::vector<CurvePoint> tau_vs_clustering_tuned(const Graph& base,
                                                const std::vector<double>& targets,
                                                const TuneParams& tune, std::uint64_t seed,
                                                std::size_t workers = 1);

/// Empirical CDF of tie strength: one (w, cumulative fraction) point per
/// distinct strength value, both coordinates non-decreasing, last fraction 1.
struct StrengthCdf {
    std::vector<std::pair<double, double>> points;
};

/// CDF over all edges' tie strengths. Throws std::invalid_argument on an
/// empty edge set.
StrengthCdf strength_cdf(const Graph& g);

/// Fraction of ties with strength <= w; 0 below the smallest point.
double cdf_at(const StrengthCdf& cdf, double w);

}  // namespace netent
