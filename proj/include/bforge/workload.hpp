#pragma once

#include "bforge/graph.hpp"
#include "bforge/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace bforge {

// A job visits edges of the bound graph with positive multiplicities and
// occurs with a positive frequency.
struct Job {
    long long freq = 1;
    std::vector<std::pair<Edge, long long>> visits;
};

struct Workload {
    std::vector<Job> jobs;
    BigInt total_freq = 0;  // sum of job frequencies, > 0
};

// Unordered edge -> aggregated weight; positive entries only.
struct EdgeWeightMap {
    std::map<Edge, Rational> weights;
};

// Workload text format: '#' comments; "job <freq>" opens a job; "edge <u>
// <v> <count>" lines attach visits to the open job. Visit edges are checked
// against g.
Workload parse_workload(const std::string& text, const Graph& g);

// Frequency-normalized expected number of cut edge visits, exact.
Rational workload_cost(const Graph& g, const Workload& w, const PartitionSolution& p);

// Collapses the per-job visit lists into one weight per edge; the weighted
// crossing sum then reproduces workload_cost exactly for every partition.
EdgeWeightMap aggregate_weights(const Workload& w);

}  // namespace bforge
