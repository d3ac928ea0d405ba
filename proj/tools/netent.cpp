#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netent/dataset_io.hpp"
#include "netent/experiments.hpp"
#include "netent/generators.hpp"
#include "netent/graph.hpp"
#include "netent/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Exit codes: 0 success, 1 usage/validation, 2 I/O, 3 internal failure.
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

constexpr const char* kDataDirEnv = "NETENT_DATA_DIR";

std::string real_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void print_kv(const std::string& key, const std::string& value) {
    std::cout << key << '=' << value << '\n';
}

void print_kv(const std::string& key, double value) { print_kv(key, real_str(value)); }

void print_kv(const std::string& key, std::size_t value) { print_kv(key, std::to_string(value)); }

// Literal path first, then relative to $NETENT_DATA_DIR.
std::string resolve_input(const std::string& path) {
    if (fs::exists(path)) {
        return path;
    }
    if (const char* dir = std::getenv(kDataDirEnv); dir != nullptr && *dir != '\0') {
        const fs::path candidate = fs::path(dir) / path;
        if (fs::exists(candidate)) {
            return candidate.string();
        }
    }
    throw netent::io_error("cannot open " + path + " (also tried $" + std::string(kDataDirEnv) +
                           ")");
}

void write_json_file(const json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw netent::io_error("cannot write " + path);
    }
    out << doc.dump(2) << '\n';
    out.flush();
    if (!out) {
        throw netent::io_error("write failed for " + path);
    }
}

// Resolved-config echo: one log file per run, deterministic content.
void write_runlog(const json& config, const std::string& explicit_path,
                  const std::string& primary_output) {
    std::string path = explicit_path;
    if (path.empty()) {
        if (primary_output.empty()) {
            return;
        }
        path = primary_output + ".runlog.json";
    }
    write_json_file(config, path);
}

struct GenerateOpts {
    std::string model;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    double p = 0.0;
    double u = 0.0;
    double r = 0.0;
    std::uint64_t seed = 1;
    std::string out;
    std::string runlog;
};

netent::GenParams to_gen_params(const GenerateOpts& o) {
    netent::GenParams params;
    if (o.model == "ba") {
        params.model = netent::GenModel::ba;
    } else if (o.model == "sw") {
        params.model = netent::GenModel::sw;
    } else if (o.model == "cnnr") {
        params.model = netent::GenModel::cnnr;
    } else {
        throw std::invalid_argument("unknown model '" + o.model + "'");
    }
    params.n = o.n;
    params.m = o.m;
    params.k = o.k;
    params.p = o.p;
    params.u = o.u;
    params.r = o.r;
    params.seed = o.seed;
    return params;
}

json model_config(const GenerateOpts& o) {
    json config{{"model", o.model}, {"n", o.n}, {"seed", o.seed}};
    if (o.model == "ba") {
        config["m"] = o.m;
    } else if (o.model == "sw") {
        config["k"] = o.k;
        config["p"] = o.p;
    } else {
        config["u"] = o.u;
        config["r"] = o.r;
    }
    return config;
}

void run_generate(const GenerateOpts& o) {
    const netent::Graph g = netent::generate(to_gen_params(o));
    netent::save_edge_list(g, o.out);
    const double clustering = netent::avg_clustering(g);
    json meta = model_config(o);
    meta["nodes"] = g.node_count();
    meta["edges"] = g.edge_count();
    meta["clustering"] = clustering;
    write_json_file(meta, o.out + ".meta.json");
    json config = model_config(o);
    config["command"] = "generate";
    config["out"] = o.out;
    write_runlog(config, o.runlog, o.out);
    print_kv("nodes", g.node_count());
    print_kv("edges", g.edge_count());
    print_kv("clustering", clustering);
}

struct LoadCheckOpts {
    std::string input;
    std::int64_t expect_nodes = -1;
    std::int64_t expect_edges = -1;
    std::string runlog;
};

void run_load_check(const LoadCheckOpts& o) {
    const std::string path = resolve_input(o.input);
    const netent::LoadedGraph loaded = netent::load_edge_list(path);
    const netent::Graph& g = loaded.graph;
    write_runlog(json{{"command", "load-check"},
                      {"input", path},
                      {"expect_nodes", o.expect_nodes},
                      {"expect_edges", o.expect_edges}},
                 o.runlog, "");
    print_kv("nodes", g.node_count());
    print_kv("edges", g.edge_count());
    print_kv("clustering", netent::avg_clustering(g));
    print_kv("edge_sum_ratio", netent::edge_sum_clustering(g) /
                                   (netent::avg_clustering(g) > 0.0
                                        ? netent::avg_clustering(g)
                                        : 1.0));
    const bool nodes_ok =
        o.expect_nodes < 0 || static_cast<std::size_t>(o.expect_nodes) == g.node_count();
    const bool edges_ok =
        o.expect_edges < 0 || static_cast<std::size_t>(o.expect_edges) == g.edge_count();
    if (!nodes_ok || !edges_ok) {
        throw std::invalid_argument("count mismatch: loaded nodes=" +
                                    std::to_string(g.node_count()) +
                                    " edges=" + std::to_string(g.edge_count()));
    }
    print_kv("check", std::string("ok"));
}

struct SweepOpts {
    std::string input;
    std::string out_sweep;
    std::string out_aggregate;
    std::string out_positiveness;
    std::size_t workers = 1;
    double sample = 0.0;
    std::uint64_t seed = 1;
    std::string runlog;
};

void run_sweep(const SweepOpts& o) {
    const std::string path = resolve_input(o.input);
    const netent::LoadedGraph loaded = netent::load_edge_list(path);
    const netent::Graph& g = loaded.graph;
    const std::vector<netent::SweepRecord> records =
        o.sample > 0.0 ? netent::edge_sweep_sampled(g, o.sample, o.seed, o.workers)
                       : netent::edge_sweep(g, o.workers);
    const netent::SweepAggregate aggregate = netent::aggregate_sweep(records);
    const double clustering = netent::avg_clustering(g);
    const netent::PositivenessReport report = netent::positiveness(records, clustering);
    netent::write_sweep_csv(records, o.out_sweep);
    netent::write_aggregate_csv(aggregate, o.out_aggregate);
    if (!o.out_positiveness.empty()) {
        netent::write_positiveness_csv(report, o.out_positiveness);
    }
    write_runlog(json{{"command", "sweep"},
                      {"input", path},
                      {"out_sweep", o.out_sweep},
                      {"out_aggregate", o.out_aggregate},
                      {"out_positiveness", o.out_positiveness},
                      {"workers", o.workers},
                      {"sample", o.sample},
                      {"seed", o.seed}},
                 o.runlog, o.out_sweep);
    print_kv("edges", static_cast<std::size_t>(records.size()));
    print_kv("tau", report.tau);
    print_kv("positive", report.positive_count);
    print_kv("clustering", clustering);
    print_kv("mean_slope", netent::bucket_mean_slope(aggregate));
}

struct CurveOpts {
    bool tune = false;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<double> p_list;
    std::string input;
    std::vector<double> targets;
    double tolerance = 0.02;
    std::size_t max_swaps = 100000;
    std::uint64_t seed = 1;
    std::size_t workers = 1;
    std::string out;
    std::string runlog;
};

void run_curve(const CurveOpts& o) {
    std::vector<netent::CurvePoint> points;
    if (o.tune) {
        if (o.input.empty() || o.targets.empty()) {
            throw std::invalid_argument("tuned curve needs --input and --targets");
        }
        const std::string path = resolve_input(o.input);
        const netent::LoadedGraph loaded = netent::load_edge_list(path);
        netent::TuneParams tune;
        tune.tolerance = o.tolerance;
        tune.max_swaps = o.max_swaps;
        points = netent::tau_vs_clustering_tuned(loaded.graph, o.targets, tune, o.seed,
                                                 o.workers);
    } else {
        if (o.n == 0 || o.k == 0 || o.p_list.empty()) {
            throw std::invalid_argument("small-world curve needs --n, --k and --p-list");
        }
        netent::GenParams base;
        base.model = netent::GenModel::sw;
        base.n = o.n;
        base.k = o.k;
        base.seed = o.seed;
        points = netent::tau_vs_clustering_sw(base, o.p_list, o.workers);
    }
    netent::write_curve_csv(points, o.out);
    write_runlog(json{{"command", "curve"},
                      {"tune", o.tune},
                      {"n", o.n},
                      {"k", o.k},
                      {"p_list", o.p_list},
                      {"input", o.input},
                      {"targets", o.targets},
                      {"tolerance", o.tolerance},
                      {"max_swaps", o.max_swaps},
                      {"seed", o.seed},
                      {"workers", o.workers},
                      {"out", o.out}},
                 o.runlog, o.out);
    print_kv("points", points.size());
    std::string cs, taus;
    for (const netent::CurvePoint& pt : points) {
        if (!cs.empty()) {
            cs += ',';
            taus += ',';
        }
        cs += real_str(pt.clustering);
        taus += real_str(pt.tau);
    }
    print_kv("c_values", cs);
    print_kv("tau_values", taus);
}

struct CdfOpts {
    std::string input;
    std::string out;
    std::string runlog;
};

void run_cdf(const CdfOpts& o) {
    const std::string path = resolve_input(o.input);
    const netent::LoadedGraph loaded = netent::load_edge_list(path);
    const netent::StrengthCdf cdf = netent::strength_cdf(loaded.graph);
    netent::write_cdf_csv(cdf, o.out);
    write_runlog(json{{"command", "cdf"}, {"input", path}, {"out", o.out}}, o.runlog, o.out);
    print_kv("edges", loaded.graph.edge_count());
    print_kv("points", cdf.points.size());
}

struct TuneOpts {
    std::string input;
    double target = 0.0;
    double tolerance = 0.02;
    std::size_t max_swaps = 100000;
    std::uint64_t seed = 1;
    std::string out;
    std::string runlog;
};

void run_tune(const TuneOpts& o) {
    const std::string path = resolve_input(o.input);
    const netent::LoadedGraph loaded = netent::load_edge_list(path);
    netent::TuneParams params;
    params.target_clustering = o.target;
    params.tolerance = o.tolerance;
    params.max_swaps = o.max_swaps;
    const netent::TuneResult result = netent::tune_clustering(loaded.graph, params, o.seed);
    netent::save_edge_list(result.graph, o.out);
    write_runlog(json{{"command", "tune"},
                      {"input", path},
                      {"target", o.target},
                      {"tolerance", o.tolerance},
                      {"max_swaps", o.max_swaps},
                      {"seed", o.seed},
                      {"out", o.out}},
                 o.runlog, o.out);
    print_kv("achieved", result.achieved_clustering);
    print_kv("reached", std::string(result.reached_target ? "true" : "false"));
    print_kv("accepted", result.accepted_swaps);
    print_kv("attempted", result.attempted_swaps);
}

struct PlotOpts {
    std::string kind;
    std::vector<std::string> inputs;
    std::string out;
    std::string runlog;
};

void run_plot(const PlotOpts& o) {
    netent::ChartSpec spec;
    if (o.kind == "sweep") {
        if (o.inputs.size() != 1) {
            throw std::invalid_argument("sweep plots take exactly one aggregate CSV");
        }
        const netent::SweepAggregate aggregate =
            netent::read_aggregate_csv(resolve_input(o.inputs.front()));
        netent::Series lo{"min", {}}, mid{"mean", {}}, hi{"max", {}};
        for (const auto& [c, stats] : aggregate.buckets) {
            const double x = static_cast<double>(c);
            lo.points.emplace_back(x, stats.min);
            mid.points.emplace_back(x, stats.mean);
            hi.points.emplace_back(x, stats.max);
        }
        spec.title = "Entropy change by common-friend count";
        spec.x_label = "common friends";
        spec.y_label = "entropy change per tie";
        spec.series = {lo, mid, hi};
    } else if (o.kind == "curve") {
        if (o.inputs.size() != 1) {
            throw std::invalid_argument("curve plots take exactly one CSV");
        }
        netent::Series s{"tau", {}};
        for (const netent::CurvePoint& pt :
             netent::read_curve_csv(resolve_input(o.inputs.front()))) {
            s.points.emplace_back(pt.clustering, pt.tau);
        }
        spec.title = "Positiveness by clustering";
        spec.x_label = "clustering";
        spec.y_label = "tau";
        spec.series = {s};
    } else if (o.kind == "cdf") {
        if (o.inputs.empty()) {
            throw std::invalid_argument("cdf plots need at least one CSV");
        }
        for (const std::string& input : o.inputs) {
            const std::string path = resolve_input(input);
            netent::Series s{fs::path(input).stem().string(), {}};
            for (const auto& [w, frac] : netent::read_cdf_csv(path).points) {
                s.points.emplace_back(w, frac);
            }
            spec.series.push_back(std::move(s));
        }
        spec.title = "Tie-strength CDF";
        spec.x_label = "tie strength";
        spec.y_label = "cumulative fraction";
    } else {
        throw std::invalid_argument("unknown plot kind '" + o.kind + "'");
    }
    netent::write_line_chart(spec, o.out);
    write_runlog(json{{"command", "plot"}, {"kind", o.kind}, {"inputs", o.inputs}, {"out", o.out}},
                 o.runlog, o.out);
    print_kv("series", spec.series.size());
    print_kv("out", o.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Neighborhood information-entropy analysis of social ties"};
    app.require_subcommand(1);

    GenerateOpts gen_opts;
    CLI::App* gen = app.add_subcommand("generate", "Generate a synthetic network");
    gen->add_option("--model", gen_opts.model, "ba, sw, or cnnr")
        ->required()
        ->check(CLI::IsMember({"ba", "sw", "cnnr"}));
    gen->add_option("--n", gen_opts.n, "node count")->required();
    gen->add_option("--m", gen_opts.m, "ties per new node (ba)");
    gen->add_option("--k", gen_opts.k, "lattice neighbors per side (sw)");
    gen->add_option("--p", gen_opts.p, "rewiring probability (sw)");
    gen->add_option("--u", gen_opts.u, "edge-event probability (cnnr)");
    gen->add_option("--r", gen_opts.r, "rewire share of edge events (cnnr)");
    gen->add_option("--seed", gen_opts.seed, "RNG seed");
    gen->add_option("--out", gen_opts.out, "edge-list output path")->required();
    gen->add_option("--runlog", gen_opts.runlog, "config log path override");

    LoadCheckOpts load_opts;
    CLI::App* load = app.add_subcommand("load-check", "Load an edge list and report counts");
    load->add_option("--input", load_opts.input, "edge-list path")->required();
    load->add_option("--expect-nodes", load_opts.expect_nodes, "fail unless node count matches");
    load->add_option("--expect-edges", load_opts.expect_edges, "fail unless edge count matches");
    load->add_option("--runlog", load_opts.runlog, "config log path override");

    SweepOpts sweep_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "Per-tie entropy sweep of a network");
    sweep->add_option("--input", sweep_opts.input, "edge-list path")->required();
    sweep->add_option("--out-sweep", sweep_opts.out_sweep, "per-edge CSV path")->required();
    sweep->add_option("--out-aggregate", sweep_opts.out_aggregate, "per-bucket CSV path")
        ->required();
    sweep->add_option("--out-positiveness", sweep_opts.out_positiveness,
                      "optional positiveness CSV path");
    sweep->add_option("--workers", sweep_opts.workers, "worker thread count");
    sweep->add_option("--sample", sweep_opts.sample, "edge sample fraction in (0, 1]");
    sweep->add_option("--seed", sweep_opts.seed, "sampling seed");
    sweep->add_option("--runlog", sweep_opts.runlog, "config log path override");

    CurveOpts curve_opts;
    CLI::App* curve = app.add_subcommand("curve", "Positiveness versus clustering curve");
    curve->add_flag("--tune", curve_opts.tune, "tune an input graph instead of generating");
    curve->add_option("--n", curve_opts.n, "node count (small-world mode)");
    curve->add_option("--k", curve_opts.k, "lattice neighbors per side (small-world mode)");
    curve->add_option("--p-list", curve_opts.p_list, "rewiring probabilities (small-world mode)");
    curve->add_option("--input", curve_opts.input, "edge-list path (tuned mode)");
    curve->add_option("--targets", curve_opts.targets, "clustering targets (tuned mode)");
    curve->add_option("--tolerance", curve_opts.tolerance, "tuning tolerance");
    curve->add_option("--max-swaps", curve_opts.max_swaps, "tuning swap-attempt cap");
    curve->add_option("--seed", curve_opts.seed, "RNG seed");
    curve->add_option("--workers", curve_opts.workers, "worker thread count");
    curve->add_option("--out", curve_opts.out, "curve CSV path")->required();
    curve->add_option("--runlog", curve_opts.runlog, "config log path override");

    CdfOpts cdf_opts;
    CLI::App* cdf = app.add_subcommand("cdf", "Tie-strength CDF of a network");
    cdf->add_option("--input", cdf_opts.input, "edge-list path")->required();
    cdf->add_option("--out", cdf_opts.out, "CDF CSV path")->required();
    cdf->add_option("--runlog", cdf_opts.runlog, "config log path override");

    TuneOpts tune_opts;
    CLI::App* tune = app.add_subcommand("tune", "Tune clustering while preserving degrees");
    tune->add_option("--input", tune_opts.input, "edge-list path")->required();
    tune->add_option("--target", tune_opts.target, "clustering target")->required();
    tune->add_option("--tolerance", tune_opts.tolerance, "acceptance tolerance");
    tune->add_option("--max-swaps", tune_opts.max_swaps, "swap-attempt cap");
    tune->add_option("--seed", tune_opts.seed, "RNG seed");
    tune->add_option("--out", tune_opts.out, "edge-list output path")->required();
    tune->add_option("--runlog", tune_opts.runlog, "config log path override");

    PlotOpts plot_opts;
    CLI::App* plot = app.add_subcommand("plot", "Render a CSV as an SVG chart");
    plot->add_option("--kind", plot_opts.kind, "sweep, curve, or cdf")
        ->required()
        ->check(CLI::IsMember({"sweep", "curve", "cdf"}));
    plot->add_option("--input", plot_opts.inputs, "input CSV path (repeatable for cdf)")
        ->required();
    plot->add_option("--out", plot_opts.out, "SVG output path")->required();
    plot->add_option("--runlog", plot_opts.runlog, "config log path override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            run_generate(gen_opts);
        } else if (load->parsed()) {
            run_load_check(load_opts);
        } else if (sweep->parsed()) {
            run_sweep(sweep_opts);
        } else if (curve->parsed()) {
            run_curve(curve_opts);
        } else if (cdf->parsed()) {
            run_cdf(cdf_opts);
        } else if (tune->parsed()) {
            run_tune(tune_opts);
        } else if (plot->parsed()) {
            run_plot(plot_opts);
        }
    } catch (const netent::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
