#pragma once

#include "bforge/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bforge {

using Edge = std::pair<int, int>;  // stored with first < second

// Undirected simple graph over dense node ids 0..n-1. Immutable after
// construction; adjacency lists are sorted and kept consistent with the
// edge set.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;                  // sorted lexicographically
    std::vector<std::vector<int>> adjacency;  // sorted neighbor lists

    // Validates: ids in range, no self-loops, no duplicates.
    static Graph from_edges(int n, std::vector<Edge> edge_list);

    bool has_edge(int u, int v) const;
    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int u) const { return static_cast<int>(adjacency[u].size()); }
    int max_degree() const;
};

// Node -> block assignment with a declared block count. Blocks may be empty;
// the array representation makes "disjoint cover" structural.
struct PartitionSolution {
    std::vector<int> assignment;
    int k = 1;

    static PartitionSolution from_blocks(const std::vector<std::vector<int>>& blocks, int n);

    int n() const { return static_cast<int>(assignment.size()); }
    std::vector<std::vector<int>> blocks() const;
    std::vector<int> block_sizes() const;
};

struct BalanceSpec {
    int k = 1;
    Rational tau = 1;
};

struct ValidityReport {
    bool ok = false;
    std::vector<int> block_sizes;
    std::string first_violation;  // empty when ok
};

// ceil(n / k) as plain integers.
inline int balanced_block_cap(int n, int k) { return (n + k - 1) / k; }

// Edge-list text format: '#' comments, optional "%n <count>" directive,
// data lines "<u> <v>". Duplicate edges (either orientation) are an error.
Graph load_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// ok iff every block size <= tau * ceil(n/k) and p.k == spec.k. With
// forbid_empty set, empty blocks are also flagged.
ValidityReport validate_partition(const Graph& g, const PartitionSolution& p,
                                  const BalanceSpec& spec, bool forbid_empty = false);

// Number of edges whose endpoints land in different blocks.
long long cut_cost(const Graph& g, const PartitionSolution& p);

// Partition text format: header "%k <k>", then lines "<node> <block>".
std::string write_partition(const PartitionSolution& p);
PartitionSolution read_partition(const std::string& text, int n);

}  // namespace bforge
