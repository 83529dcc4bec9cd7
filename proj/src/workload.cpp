#include "bforge/workload.hpp"

#include "bforge/error.hpp"

#include <charconv>
#include <sstream>

namespace bforge {

namespace {

constexpr const char* kStage = "workload-model";

bool parse_ll(const std::string& tok, long long& out) {
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace

Workload parse_workload(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    std::string line;
    Workload w;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream iss(line);
        std::vector<std::string> toks;
        std::string tok;
        while (iss >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        const std::string where = " at line " + std::to_string(lineno);
        if (toks[0] == "job") {
            long long freq;
            if (toks.size() != 2 || !parse_ll(toks[1], freq))
                throw Error(kStage, "MalformedLine", "expected \"job <freq>\"" + where);
            if (freq <= 0)
                throw Error(kStage, "NonPositiveCount", "job frequency " + std::to_string(freq) + where);
            w.jobs.push_back(Job{freq, {}});
        } else if (toks[0] == "edge") {
            long long u, v, c;
            if (toks.size() != 4 || !parse_ll(toks[1], u) || !parse_ll(toks[2], v) ||
                !parse_ll(toks[3], c))
                throw Error(kStage, "MalformedLine", "expected \"edge <u> <v> <count>\"" + where);
            if (w.jobs.empty())
                throw Error(kStage, "MalformedLine", "edge line before any job" + where);
            if (c <= 0)
                throw Error(kStage, "NonPositiveCount", "visit count " + std::to_string(c) + where);
            if (!g.has_edge(static_cast<int>(u), static_cast<int>(v)))
                throw Error(kStage, "UnknownEdge",
                            "(" + std::to_string(u) + "," + std::to_string(v) + ") not in graph" + where);
            Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
            w.jobs.back().visits.emplace_back(e, c);
        } else {
            throw Error(kStage, "MalformedLine", "unknown directive \"" + toks[0] + "\"" + where);
        }
    }
    if (w.jobs.empty()) throw Error(kStage, "EmptyWorkload", "no jobs");
    for (const Job& job : w.jobs) w.total_freq += job.freq;
    return w;
}

Rational workload_cost(const Graph& g, const Workload& w, const PartitionSolution& p) {
    if (p.n() != g.n)
        throw Error(kStage, "LengthMismatch",
                    "assignment length " + std::to_string(p.n()) + " vs n=" + std::to_string(g.n));
    BigInt crossing = 0;
    for (const Job& job : w.jobs) {
        BigInt job_cost = 0;
        for (const auto& [edge, count] : job.visits)
            if (p.assignment[edge.first] != p.assignment[edge.second]) job_cost += count;
        crossing += BigInt(job.freq) * job_cost;
    }
    return Rational(crossing, w.total_freq);
}

EdgeWeightMap aggregate_weights(const Workload& w) {
    EdgeWeightMap map;
    for (const Job& job : w.jobs) {
        for (const auto& [edge, count] : job.visits)
            map.weights[edge] += Rational(BigInt(job.freq) * count, w.total_freq);
    }
    return map;
}

}  // namespace bforge
