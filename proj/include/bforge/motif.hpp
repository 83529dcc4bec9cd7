#pragma once

#include "bforge/graph.hpp"

#include <string>
#include <vector>

namespace bforge {

// Connected pattern on c nodes, c <= 5. Enumeration is O(n^c), hence the cap.
struct Motif {
    Graph pattern;  // nodes 0..c-1

    int c() const { return pattern.n; }

    // Validates connectivity and the size cap.
    static Motif from_graph(const Graph& pattern);
    static Motif from_edge_list(const std::string& text);
    static Motif triangle();
    static Motif single_edge();
};

// One node subset realizing the motif, plus the edge image of one concrete
// embedding. For connected motifs the node set is split by a partition iff
// some embedding edge crosses it, so the links are what the relaxation needs.
struct MotifOccurrence {
    std::vector<int> nodes;   // strictly increasing, length c
    std::vector<Edge> edges;  // embedding image, normalized and sorted
};

struct MotifOccurrenceSet {
    int c = 0;
    std::vector<MotifOccurrence> occurrences;  // sorted by node tuple

    std::size_t size() const { return occurrences.size(); }
};

// All triples a<b<c with all three edges present, lexicographically sorted.
MotifOccurrenceSet enumerate_triangles(const Graph& g);

// All strictly increasing c-tuples whose induced subgraph contains m as a
// subgraph. For the triangle motif this matches enumerate_triangles.
MotifOccurrenceSet enumerate_motif(const Graph& g, const Motif& m);

// Occurrences whose nodes do not all share one block.
long long motif_cost(const MotifOccurrenceSet& occ, const PartitionSolution& p);

// Debug dump: one comma-separated tuple per line.
std::string write_occurrences(const MotifOccurrenceSet& occ);

}  // namespace bforge
