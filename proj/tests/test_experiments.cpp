#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "netent/entropy.hpp"
#include "netent/experiments.hpp"
#include "netent/generators.hpp"
#include "netent/graph.hpp"
#include "oracle.hpp"

using namespace netent;

namespace {

Graph triangle() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    return g;
}

}  // namespace

TEST_CASE("sweep of a triangle: one record per edge, all equivalent") {
    const std::vector<SweepRecord> records = edge_sweep(triangle());
    REQUIRE(records.size() == 3);
    for (const SweepRecord& rec : records) {
        CHECK(rec.common_count == 1);
        CHECK(rec.delta_pair == doctest::Approx(records.front().delta_pair).epsilon(1e-12));
    }
    const SweepAggregate aggregate = aggregate_sweep(records);
    REQUIRE(aggregate.buckets.size() == 1);
    const BucketStats& stats = aggregate.buckets.at(1);
    CHECK(stats.count == 3);
    CHECK(stats.min == doctest::Approx(stats.max).epsilon(1e-12));
    CHECK(stats.mean == doctest::Approx(stats.max).epsilon(1e-12));
}

TEST_CASE("sweep records come in canonical edge order and match direct evaluation") {
    std::mt19937_64 rng(8801);
    const Graph g = oracle::random_graph(rng, 30, 0.2);
    const std::vector<SweepRecord> records = edge_sweep(g);
    REQUIRE(records.size() == g.edge_count());
    const std::vector<EdgeRef> edges = g.edges();
    for (std::size_t idx = 0; idx < records.size(); ++idx) {
        CHECK(records[idx].edge == edges[idx]);
        const EntropyDelta direct = delta_on_remove(g, edges[idx]);
        CHECK(records[idx].delta_pair == direct.delta_pair);
        CHECK(records[idx].common_count == direct.common_count);
    }
}

TEST_CASE("sweep output is identical for any worker count") {
    const Graph g = gen_sw(500, 5, 0.1, 31);
    const std::vector<SweepRecord> one = edge_sweep(g, 1);
    for (std::size_t workers : {2, 4, 8, 64}) {
        const std::vector<SweepRecord> many = edge_sweep(g, workers);
        REQUIRE(many.size() == one.size());
        for (std::size_t idx = 0; idx < one.size(); ++idx) {
            CHECK(many[idx].edge == one[idx].edge);
            CHECK(many[idx].delta_pair == one[idx].delta_pair);  // bitwise
            CHECK(many[idx].common_count == one[idx].common_count);
        }
    }
}

TEST_CASE("aggregate: exact grouping arithmetic") {
    std::vector<SweepRecord> records;
    records.push_back(SweepRecord{EdgeRef{0, 1}, 0, 0.5});
    records.push_back(SweepRecord{EdgeRef{0, 2}, 0, 0.1});
    records.push_back(SweepRecord{EdgeRef{1, 2}, 2, -0.1});
    const SweepAggregate aggregate = aggregate_sweep(records);
    REQUIRE(aggregate.buckets.size() == 2);
    CHECK(aggregate.buckets.at(0).count == 2);
    CHECK(aggregate.buckets.at(0).min == doctest::Approx(0.1));
    CHECK(aggregate.buckets.at(0).mean == doctest::Approx(0.3));
    CHECK(aggregate.buckets.at(0).max == doctest::Approx(0.5));
    CHECK(aggregate.buckets.at(2).count == 1);
    CHECK(aggregate.buckets.at(2).min == doctest::Approx(-0.1));
    CHECK(aggregate.buckets.at(2).max == doctest::Approx(-0.1));

    std::size_t total = 0;
    for (const auto& [c, stats] : aggregate.buckets) {
        total += stats.count;
        CHECK(stats.min <= stats.mean + 1e-15);
        CHECK(stats.mean <= stats.max + 1e-15);
    }
    CHECK(total == records.size());
    CHECK_THROWS_AS(aggregate_sweep({}), std::invalid_argument);
}

TEST_CASE("bucket mean slope on a hand-built aggregate") {
    SweepAggregate aggregate;
    aggregate.buckets[0] = BucketStats{1, 1.0, 1.0, 1.0};
    aggregate.buckets[1] = BucketStats{1, 0.5, 0.5, 0.5};
    aggregate.buckets[2] = BucketStats{1, 0.0, 0.0, 0.0};
    CHECK(bucket_mean_slope(aggregate) == doctest::Approx(-0.5).epsilon(1e-12));
    SweepAggregate single;
    single.buckets[3] = BucketStats{5, 0.0, 0.1, 0.2};
    CHECK(bucket_mean_slope(single) == 0.0);
}

TEST_CASE("small-world sweep shows the declining trend") {
    const Graph g = gen_sw(2000, 10, 0.1, 77);
    const SweepAggregate aggregate = aggregate_sweep(edge_sweep(g, 4));
    CHECK(bucket_mean_slope(aggregate) < 0.0);
    CHECK(aggregate.buckets.begin()->second.max >
          aggregate.buckets.rbegin()->second.max);
}

TEST_CASE("positiveness: strict threshold and relabel invariance") {
    // disjoint edges: every tie leaves two one-point sequences, delta 0
    Graph pairs(6);
    pairs.add_edge(0, 1);
    pairs.add_edge(2, 3);
    pairs.add_edge(4, 5);
    const PositivenessReport zero = positiveness(pairs);
    CHECK(zero.tau == 0.0);
    CHECK(zero.positive_count == 0);
    CHECK(zero.nonpositive_count == 3);

    std::mt19937_64 rng(8802);
    const Graph g = oracle::random_graph(rng, 40, 0.15);
    if (g.edge_count() > 0) {
        const PositivenessReport a = positiveness(g);
        const Graph h = oracle::permuted(g, oracle::random_permutation(rng, g.node_count()));
        const PositivenessReport b = positiveness(h);
        CHECK(a.tau == doctest::Approx(b.tau).epsilon(1e-15));
        CHECK(a.positive_count == b.positive_count);
        CHECK(a.positive_count + a.nonpositive_count == g.edge_count());
    }
    Graph empty(3);
    CHECK_THROWS_AS(positiveness(empty), std::invalid_argument);
}

TEST_CASE("small-world curve: sorted by clustering, consistent per point") {
    GenParams base;
    base.model = GenModel::sw;
    base.n = 500;
    base.k = 5;
    base.seed = 90;
    const std::vector<double> p_values{0.8, 0.05};
    const std::vector<CurvePoint> points = tau_vs_clustering_sw(base, p_values, 4);
    REQUIRE(points.size() == 2);
    CHECK(points[0].clustering < points[1].clustering);
    CHECK(points[0].knob == 0.8);  // heavier rewiring, lower clustering
    CHECK(points[1].knob == 0.05);

    // single-knob curve equals a direct evaluation with the same derived seed
    const std::vector<CurvePoint> single = tau_vs_clustering_sw(base, {0.3}, 4);
    REQUIRE(single.size() == 1);
    const Graph g = gen_sw(500, 5, 0.3, 90);
    const PositivenessReport rep = positiveness(g, 4);
    CHECK(single.front().tau == doctest::Approx(rep.tau).epsilon(1e-15));
    CHECK(single.front().clustering == doctest::Approx(rep.clustering).epsilon(1e-15));

    GenParams bad = base;
    bad.model = GenModel::ba;
    CHECK_THROWS_AS(tau_vs_clustering_sw(bad, p_values, 1), std::invalid_argument);
}

TEST_CASE("tuned curve: sorted points, each from a degree-preserving tune") {
    const Graph base = gen_ba(300, 3, 44);
    TuneParams tune;
    tune.tolerance = 0.02;
    tune.max_swaps = 60000;
    const std::vector<CurvePoint> points =
        tau_vs_clustering_tuned(base, {0.25, 0.1}, tune, 7, 4);
    REQUIRE(points.size() == 2);
    CHECK(points[0].clustering <= points[1].clustering);
    for (const CurvePoint& pt : points) {
        CHECK(pt.tau >= 0.0);
        CHECK(pt.tau <= 1.0);
    }
    // single target reproduces a manual tune with the same seed
    const std::vector<CurvePoint> single = tau_vs_clustering_tuned(base, {0.2}, tune, 7, 4);
    TuneParams manual = tune;
    manual.target_clustering = 0.2;
    const TuneResult expected = tune_clustering(base, manual, 7);
    const PositivenessReport rep = positiveness(expected.graph, 4);
    REQUIRE(single.size() == 1);
    CHECK(single.front().tau == doctest::Approx(rep.tau).epsilon(1e-15));
    CHECK(single.front().clustering == doctest::Approx(rep.clustering).epsilon(1e-15));
}

TEST_CASE("strength CDF: steps, bounds, degenerate shapes") {
    const StrengthCdf tri = strength_cdf(triangle());
    REQUIRE(tri.points.size() == 1);
    CHECK(tri.points.front().first == doctest::Approx(1.0));
    CHECK(tri.points.front().second == doctest::Approx(1.0));

    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    const StrengthCdf flat = strength_cdf(path);
    REQUIRE(flat.points.size() == 1);
    CHECK(flat.points.front().first == 0.0);
    CHECK(flat.points.front().second == doctest::Approx(1.0));

    // triangle with node 3 hanging off node 2
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    // strengths: (2,3) -> 0, (0,2) and (1,2) -> 0.5, (0,1) -> 1
    const StrengthCdf cdf = strength_cdf(g);
    REQUIRE(cdf.points.size() == 3);
    CHECK(cdf.points[0].first == 0.0);
    CHECK(cdf.points[0].second == doctest::Approx(0.25));
    CHECK(cdf.points[1].first == doctest::Approx(0.5));
    CHECK(cdf.points[1].second == doctest::Approx(0.75));
    CHECK(cdf.points[2].first == doctest::Approx(1.0));
    CHECK(cdf.points[2].second == doctest::Approx(1.0));
    CHECK(cdf_at(cdf, -0.5) == 0.0);
    CHECK(cdf_at(cdf, 0.0) == doctest::Approx(0.25));
    CHECK(cdf_at(cdf, 0.3) == doctest::Approx(0.25));
    CHECK(cdf_at(cdf, 0.5) == doctest::Approx(0.75));
    CHECK(cdf_at(cdf, 0.9) == doctest::Approx(0.75));
    CHECK(cdf_at(cdf, 9.0) == doctest::Approx(1.0));

    Graph empty(2);
    CHECK_THROWS_AS(strength_cdf(empty), std::invalid_argument);
}

TEST_CASE("strength CDF is monotone and ends at one") {
    std::mt19937_64 rng(8803);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_graph(rng, 30, 0.3);
        if (g.edge_count() == 0) {
            continue;
        }
        const StrengthCdf cdf = strength_cdf(g);
        REQUIRE(!cdf.points.empty());
        for (std::size_t idx = 1; idx < cdf.points.size(); ++idx) {
            CHECK(cdf.points[idx].first > cdf.points[idx - 1].first);
            CHECK(cdf.points[idx].second > cdf.points[idx - 1].second);
        }
        CHECK(cdf.points.back().second == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("lower clustering shifts the strength CDF toward weak ties") {
    const StrengthCdf low_c = strength_cdf(gen_sw(2000, 10, 0.8, 3));
    const StrengthCdf high_c = strength_cdf(gen_sw(2000, 10, 0.02, 3));
    CHECK(cdf_at(low_c, 0.1) > cdf_at(high_c, 0.1));
}

TEST_CASE("sampled sweep: subset semantics and determinism") {
    const Graph g = gen_sw(400, 4, 0.2, 55);
    const std::vector<SweepRecord> full = edge_sweep(g, 2);
    const std::vector<SweepRecord> all = edge_sweep_sampled(g, 1.0, 9, 2);
    REQUIRE(all.size() == full.size());
    for (std::size_t idx = 0; idx < full.size(); ++idx) {
        CHECK(all[idx].edge == full[idx].edge);
        CHECK(all[idx].delta_pair == full[idx].delta_pair);
    }
    const std::vector<SweepRecord> quarter = edge_sweep_sampled(g, 0.25, 9, 2);
    CHECK(quarter.size() == 400);  // quarter of 1600
    for (std::size_t idx = 1; idx < quarter.size(); ++idx) {
        CHECK(quarter[idx - 1].edge < quarter[idx].edge);
    }
    const std::vector<SweepRecord> again = edge_sweep_sampled(g, 0.25, 9, 8);
    REQUIRE(again.size() == quarter.size());
    for (std::size_t idx = 0; idx < quarter.size(); ++idx) {
        CHECK(again[idx].edge == quarter[idx].edge);
        CHECK(again[idx].delta_pair == quarter[idx].delta_pair);
    }
    CHECK_THROWS_AS(edge_sweep_sampled(g, 0.0, 9, 1), std::invalid_argument);
    CHECK_THROWS_AS(edge_sweep_sampled(g, 1.5, 9, 1), std::invalid_argument);
}
