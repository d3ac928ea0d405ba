#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "netent/experiments.hpp"
#include "netent/graph.hpp"

namespace netent {

/// File-level failure: unreadable path, malformed line, schema mismatch.
class io_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parsed edge list: dense graph plus the original node labels, indexed by
/// NodeId. Labels are assigned dense ids in sorted order (numeric when every
/// label parses as an integer, else lexicographic), so loading is idempotent
/// under save/load round trips.
struct LoadedGraph {
    Graph graph;
    std::vector<std::string> labels;
};

/// Reads a whitespace-separated edge list. Lines starting with '#' and blank
/// lines are skipped; extra columns beyond the first two are ignored;
/// self-loops are dropped (a node appearing only in self-loops is excluded);
/// duplicate and reciprocal pairs collapse into one undirected edge.
/// Throws io_error on an unreadable file, a line with a single token (with
/// its line number), or when no edge survives.
LoadedGraph load_edge_list(const std::string& path);

/// Writes "# nodes=N edges=E" followed by one "i<TAB>j" line per edge,
/// canonical order. Node ids are the dense ids, so load_edge_list returns an
/// identical graph for any graph without isolated nodes.
void save_edge_list(const Graph& g, const std::string& path);

/// CSV emitters. All write a header row and serialize reals with 12
/// significant digits; they throw io_error when the path cannot be written.
void write_sweep_csv(const std::vector<SweepRecord>& records, const std::string& path);
void write_aggregate_csv(const SweepAggregate& aggregate, const std::string& path);
void write_curve_csv(const std::vector<CurvePoint>& points, const std::string& path);
void write_cdf_csv(const StrengthCdf& cdf, const std::string& path);
void write_positiveness_csv(const PositivenessReport& report, const std::string& path);

/// CSV readers for the matching emitters. Throw io_error naming the offending
/// column on a header mismatch and the line number on a malformed row.
std::vector<SweepRecord> read_sweep_csv(const std::string& path);
SweepAggregate read_aggregate_csv(const std::string& path);
std::vector<CurvePoint> read_curve_csv(const std::string& path);
StrengthCdf read_cdf_csv(const std::string& path);

/// One downloadable dataset: where to get it and the node/edge counts the
/// normalized graph must have.
struct DatasetManifestEntry {
    std::string name;
    std::string url;
    std::size_t expected_nodes = 0;
    std::size_t expected_edges = 0;
    std::string checksum;  ///< optional, empty when unknown
};

/// Parses a JSON array of manifest entries. Throws io_error on unreadable or
/// malformed input.
std::vector<DatasetManifestEntry> load_manifest(const std::string& path);

}  // namespace netent
