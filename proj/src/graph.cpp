#include "bforge/graph.hpp"

#include "bforge/error.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace bforge {

namespace {

constexpr const char* kStage = "graph-core";

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

bool parse_int(const std::string& tok, long long& out) {
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<Edge> edge_list) {
    if (n < 0) throw Error(kStage, "NegativeId", "node count is negative");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || v < 0)
            throw Error(kStage, "NegativeId", "edge endpoint is negative");
        if (u == v)
            throw Error(kStage, "SelfLoop", "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u >= n || v >= n)
            throw Error(kStage, "NodeOutOfRange", "edge endpoint >= node count");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    for (std::size_t i = 1; i < edge_list.size(); ++i) {
        if (edge_list[i] == edge_list[i - 1]) {
            throw Error(kStage, "DuplicateEdge",
                        "(" + std::to_string(edge_list[i].first) + "," +
                            std::to_string(edge_list[i].second) + ") listed twice");
        }
    }
    Graph g;
    g.n = n;
    g.edges = std::move(edge_list);
    g.adjacency.assign(n, {});
    for (const auto& [u, v] : g.edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    const auto& nbrs = adjacency[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adjacency) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

PartitionSolution PartitionSolution::from_blocks(const std::vector<std::vector<int>>& blocks, int n) {
    PartitionSolution p;
    p.k = static_cast<int>(blocks.size());
    p.assignment.assign(n, -1);
    for (int b = 0; b < p.k; ++b) {
        for (int node : blocks[b]) {
            if (node < 0 || node >= n)
                throw Error(kStage, "NodeOutOfRange", "block node " + std::to_string(node));
            if (p.assignment[node] != -1)
                throw Error(kStage, "MalformedLine", "node " + std::to_string(node) + " in two blocks");
            p.assignment[node] = b;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (p.assignment[v] == -1)
            throw Error(kStage, "MissingNode", "node " + std::to_string(v) + " not covered");
    }
    return p;
}

std::vector<std::vector<int>> PartitionSolution::blocks() const {
    std::vector<std::vector<int>> out(k);
    for (int v = 0; v < n(); ++v) out[assignment[v]].push_back(v);
    return out;
}

std::vector<int> PartitionSolution::block_sizes() const {
    std::vector<int> sizes(k, 0);
    for (int b : assignment) ++sizes[b];
    return sizes;
}

Graph load_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long long declared_n = 0;
    long long max_id = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "%n") {
            long long v;
            if (toks.size() != 2 || !parse_int(toks[1], v) || v < 0)
                throw Error(kStage, "MalformedLine", "bad %n directive at line " + std::to_string(lineno));
            declared_n = std::max(declared_n, v);
            continue;
        }
        long long u, v;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
            throw Error(kStage, "MalformedLine", "line " + std::to_string(lineno) + ": expected \"<u> <v>\"");
        if (u < 0 || v < 0)
            throw Error(kStage, "NegativeId", "line " + std::to_string(lineno));
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long n = std::max(declared_n, max_id + 1);
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "%n " << g.n << "\n";
    for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

ValidityReport validate_partition(const Graph& g, const PartitionSolution& p,
                                  const BalanceSpec& spec, bool forbid_empty) {
    if (p.n() != g.n)
        throw Error(kStage, "LengthMismatch",
                    "assignment length " + std::to_string(p.n()) + " vs n=" + std::to_string(g.n));
    ValidityReport report;
    report.block_sizes = p.block_sizes();
    report.ok = true;
    if (p.k != spec.k) {
        report.ok = false;
        report.first_violation =
            "block count " + std::to_string(p.k) + " != k=" + std::to_string(spec.k);
        return report;
    }
    Rational cap = spec.tau * balanced_block_cap(g.n, spec.k);
    for (int b = 0; b < p.k; ++b) {
        if (Rational(report.block_sizes[b]) > cap) {
            report.ok = false;
            report.first_violation = "block " + std::to_string(b) + " has size " +
                                     std::to_string(report.block_sizes[b]) + " > " +
                                     rational_to_string(cap);
            return report;
        }
        if (forbid_empty && report.block_sizes[b] == 0) {
            report.ok = false;
            report.first_violation = "block " + std::to_string(b) + " is empty";
            return report;
        }
    }
    return report;
}

long long cut_cost(const Graph& g, const PartitionSolution& p) {
    if (p.n() != g.n)
        throw Error(kStage, "LengthMismatch",
                    "assignment length " + std::to_string(p.n()) + " vs n=" + std::to_string(g.n));
    long long cut = 0;
    for (const auto& [u, v] : g.edges)
        if (p.assignment[u] != p.assignment[v]) ++cut;
    return cut;
}

std::string write_partition(const PartitionSolution& p) {
    std::ostringstream out;
    out << "%k " << p.k << "\n";
    for (int v = 0; v < p.n(); ++v) out << v << " " << p.assignment[v] << "\n";
    return out.str();
}

PartitionSolution read_partition(const std::string& text, int n) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long k = -1;
    std::vector<int> assignment(n, -1);
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "%k") {
            long long v;
            if (toks.size() != 2 || !parse_int(toks[1], v) || v < 1)
                throw Error(kStage, "MalformedLine", "bad %k directive at line " + std::to_string(lineno));
            k = v;
            continue;
        }
        long long node, block;
        if (toks.size() != 2 || !parse_int(toks[0], node) || !parse_int(toks[1], block))
            throw Error(kStage, "MalformedLine", "line " + std::to_string(lineno) + ": expected \"<node> <block>\"");
        if (k < 1)
            throw Error(kStage, "MalformedLine", "data before %k header");
        if (node < 0 || node >= n)
            throw Error(kStage, "NodeOutOfRange", "node " + std::to_string(node));
        if (block < 0 || block >= k)
            throw Error(kStage, "NodeOutOfRange",
                        "block " + std::to_string(block) + " for declared k=" + std::to_string(k));
        if (assignment[node] != -1)
            throw Error(kStage, "MalformedLine", "node " + std::to_string(node) + " assigned twice");
        assignment[node] = static_cast<int>(block);
    }
    if (k < 1) throw Error(kStage, "MalformedLine", "missing %k header");
    for (int v = 0; v < n; ++v)
        if (assignment[v] == -1)
            throw Error(kStage, "MissingNode", "node " + std::to_string(v) + " absent");
    PartitionSolution p;
    p.assignment = std::move(assignment);
    p.k = static_cast<int>(k);
    return p;
}

}  // namespace bforge
