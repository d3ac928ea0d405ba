#include "netent/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "json.hpp"

namespace netent {

namespace {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

bool parse_int(const std::string& token, long long& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open " + path);
    }
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write " + path);
    }
    return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) {
        throw io_error("write failed for " + path);
    }
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

void check_header(const std::string& path, const std::string& line,
                  const std::vector<std::string>& expected) {
    const std::vector<std::string> got = split_csv(line);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i >= got.size() || got[i] != expected[i]) {
            throw io_error(path + ": expected column '" + expected[i] + "', found '" +
                           (i < got.size() ? got[i] : "") + "'");
        }
    }
    if (got.size() > expected.size()) {
        throw io_error(path + ": unexpected extra column '" + got[expected.size()] + "'");
    }
}

std::uint64_t parse_count(const std::string& path, std::size_t lineno, const std::string& token) {
    long long value = 0;
    if (!parse_int(token, value) || value < 0) {
        throw io_error(path + " line " + std::to_string(lineno) + ": bad integer '" + token + "'");
    }
    return static_cast<std::uint64_t>(value);
}

double parse_real(const std::string& path, std::size_t lineno, const std::string& token) {
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || token.empty()) {
        throw io_error(path + " line " + std::to_string(lineno) + ": bad real '" + token + "'");
    }
    return value;
}

std::vector<std::string> expect_fields(const std::string& path, std::size_t lineno,
                                       const std::string& line, std::size_t count) {
    std::vector<std::string> fields = split_csv(line);
    if (fields.size() != count) {
        throw io_error(path + " line " + std::to_string(lineno) + ": expected " +
                       std::to_string(count) + " fields, found " + std::to_string(fields.size()));
    }
    return fields;
}

}  // namespace

LoadedGraph load_edge_list(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tokens(line);
        std::string a;
        if (!(tokens >> a) || a.front() == '#') {
            continue;
        }
        std::string b;
        if (!(tokens >> b)) {
            throw io_error(path + " line " + std::to_string(lineno) +
                           ": expected two node labels");
        }
        if (a == b) {
            continue;  // self-loop
        }
        pairs.emplace_back(std::move(a), std::move(b));
    }
    if (pairs.empty()) {
        throw io_error(path + ": no edges");
    }
    std::vector<std::string> labels;
    labels.reserve(2 * pairs.size());
    for (const auto& [a, b] : pairs) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    bool all_numeric = true;
    std::vector<long long> values(labels.size());
    for (std::size_t i = 0; i < labels.size() && all_numeric; ++i) {
        all_numeric = parse_int(labels[i], values[i]);
    }
    if (all_numeric) {
        std::vector<std::size_t> order(labels.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return values[x] != values[y] ? values[x] < values[y] : labels[x] < labels[y];
        });
        std::vector<std::string> sorted;
        sorted.reserve(labels.size());
        for (std::size_t idx : order) {
            sorted.push_back(std::move(labels[idx]));
        }
        labels = std::move(sorted);
    }
    std::unordered_map<std::string, NodeId> id_of;
    id_of.reserve(labels.size());
    for (NodeId i = 0; i < labels.size(); ++i) {
        id_of.emplace(labels[i], i);
    }
    Graph g(labels.size());
    for (const auto& [a, b] : pairs) {
        const NodeId i = id_of.at(a);
        const NodeId j = id_of.at(b);
        if (!g.has_edge(i, j)) {
            g.add_edge(i, j);
        }
    }
    return LoadedGraph{std::move(g), std::move(labels)};
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "# nodes=" << g.node_count() << " edges=" << g.edge_count() << "\n";
    for (const EdgeRef& e : g.edges()) {
        out << e.i << '\t' << e.j << '\n';
    }
    finish_output(out, path);
}

void write_sweep_csv(const std::vector<SweepRecord>& records, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "i,j,c_ij,delta_pair\n";
    for (const SweepRecord& rec : records) {
        out << rec.edge.i << ',' << rec.edge.j << ',' << rec.common_count << ','
            << format_real(rec.delta_pair) << '\n';
    }
    finish_output(out, path);
}

void write_aggregate_csv(const SweepAggregate& aggregate, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "c_ij,count,min,mean,max\n";
    for (const auto& [c, stats] : aggregate.buckets) {
        out << c << ',' << stats.count << ',' << format_real(stats.min) << ','
            << format_real(stats.mean) << ',' << format_real(stats.max) << '\n';
    }
    finish_output(out, path);
}

void write_curve_csv(const std::vector<CurvePoint>& points, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "c,tau\n";
    for (const CurvePoint& pt : points) {
        out << format_real(pt.clustering) << ',' << format_real(pt.tau) << '\n';
    }
    finish_output(out, path);
}

void write_cdf_csv(const StrengthCdf& cdf, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "w,cum_frac\n";
    for (const auto& [w, frac] : cdf.points) {
        out << format_real(w) << ',' << format_real(frac) << '\n';
    }
    finish_output(out, path);
}

void write_positiveness_csv(const PositivenessReport& report, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "tau,positive,total,clustering\n";
    out << format_real(report.tau) << ',' << report.positive_count << ','
        << report.positive_count + report.nonpositive_count << ','
        << format_real(report.clustering) << '\n';
    finish_output(out, path);
}

std::vector<SweepRecord> read_sweep_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line)) {
        throw io_error(path + ": empty file");
    }
    strip_cr(line);
    check_header(path, line, {"i", "j", "c_ij", "delta_pair"});
    std::vector<SweepRecord> records;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> f = expect_fields(path, lineno, line, 4);
        const auto i = static_cast<NodeId>(parse_count(path, lineno, f[0]));
        const auto j = static_cast<NodeId>(parse_count(path, lineno, f[1]));
        if (i == j) {
            throw io_error(path + " line " + std::to_string(lineno) + ": self-loop edge");
        }
        SweepRecord rec;
        rec.edge = make_edge(i, j);
        rec.common_count = static_cast<std::size_t>(parse_count(path, lineno, f[2]));
        rec.delta_pair = parse_real(path, lineno, f[3]);
        records.push_back(rec);
    }
    return records;
}

SweepAggregate read_aggregate_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line)) {
        throw io_error(path + ": empty file");
    }
    strip_cr(line);
    check_header(path, line, {"c_ij", "count", "min", "mean", "max"});
    SweepAggregate aggregate;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> f = expect_fields(path, lineno, line, 5);
        BucketStats stats;
        const auto c = static_cast<std::size_t>(parse_count(path, lineno, f[0]));
        stats.count = static_cast<std::size_t>(parse_count(path, lineno, f[1]));
        stats.min = parse_real(path, lineno, f[2]);
        stats.mean = parse_real(path, lineno, f[3]);
        stats.max = parse_real(path, lineno, f[4]);
        aggregate.buckets[c] = stats;
    }
    return aggregate;
}

std::vector<CurvePoint> read_curve_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line)) {
        throw io_error(path + ": empty file");
    }
    strip_cr(line);
    check_header(path, line, {"c", "tau"});
    std::vector<CurvePoint> points;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> f = expect_fields(path, lineno, line, 2);
        CurvePoint pt;
        pt.clustering = parse_real(path, lineno, f[0]);
        pt.knob = pt.clustering;
        pt.tau = parse_real(path, lineno, f[1]);
        points.push_back(pt);
    }
    return points;
}

StrengthCdf read_cdf_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line)) {
        throw io_error(path + ": empty file");
    }
    strip_cr(line);
    check_header(path, line, {"w", "cum_frac"});
    StrengthCdf cdf;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> f = expect_fields(path, lineno, line, 2);
        const double w = parse_real(path, lineno, f[0]);
        const double frac = parse_real(path, lineno, f[1]);
        cdf.points.emplace_back(w, frac);
    }
    return cdf;
}

std::vector<DatasetManifestEntry> load_manifest(const std::string& path) {
    std::ifstream in = open_input(path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw io_error(path + ": " + e.what());
    }
    if (!doc.is_array()) {
        throw io_error(path + ": expected a JSON array of datasets");
    }
    std::vector<DatasetManifestEntry> entries;
    entries.reserve(doc.size());
    for (const auto& item : doc) {
        try {
            DatasetManifestEntry entry;
            entry.name = item.at("name").get<std::string>();
            entry.url = item.at("url").get<std::string>();
            entry.expected_nodes = item.at("expected_nodes").get<std::size_t>();
            entry.expected_edges = item.at("expected_edges").get<std::size_t>();
            entry.checksum = item.value("checksum", std::string());
            entries.push_back(std::move(entry));
        } catch (const nlohmann::json::exception& e) {
            throw io_error(path + ": " + e.what());
        }
    }
    return entries;
}

}  // namespace netent
