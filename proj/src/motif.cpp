#include "bforge/motif.hpp"

#include "bforge/error.hpp"
#include "bforge/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace bforge {

namespace {

constexpr const char* kStage = "motif-engine";
constexpr int kMaxMotifNodes = 5;

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<int> stack{0};
    std::vector<bool> seen(g.n, false);
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.adjacency[u]) {
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == g.n;
}

bool embed_from(const Graph& g, const Motif& m, const std::vector<int>& tuple, int depth,
                std::vector<int>& map, std::vector<bool>& used) {
    if (depth == m.c()) return true;
    for (int pos = 0; pos < m.c(); ++pos) {
        if (used[pos]) continue;
        bool ok = true;
        for (int nb : m.pattern.adjacency[depth]) {
            if (nb < depth && !g.has_edge(tuple[pos], tuple[map[nb]])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[depth] = pos;
        used[pos] = true;
        if (embed_from(g, m, tuple, depth + 1, map, used)) return true;
        used[pos] = false;
    }
    return false;
}

// First injective map of motif nodes onto tuple nodes that carries every
// motif edge to a graph edge; motif nodes are mapped in id order and
// positions tried ascending, so the result is canonical. Returns the sorted
// edge image, or nullopt if the tuple does not realize the motif.
std::optional<std::vector<Edge>> first_embedding(const Graph& g, const Motif& m,
                                                 const std::vector<int>& tuple) {
    const int c = m.c();
    std::vector<int> map(c, -1);
    std::vector<bool> used(c, false);
    if (!embed_from(g, m, tuple, 0, map, used)) return std::nullopt;
    std::vector<Edge> image;
    image.reserve(m.pattern.edges.size());
    for (const auto& [a, b] : m.pattern.edges) {
        int u = tuple[map[a]], v = tuple[map[b]];
        image.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(image.begin(), image.end());
    return image;
}

// Connected induced subgraph enumeration (grow-from-root with exclusive
// neighborhoods); each connected c-subset is visited exactly once.
void extend_subset(const Graph& g, int root, std::vector<int>& sub,
                   std::vector<int> ext, std::vector<bool>& in_or_near, int c,
                   const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(sub.size()) == c) {
        emit(sub);
        return;
    }
    while (!ext.empty()) {
        int w = ext.back();
        ext.pop_back();
        std::vector<int> next_ext = ext;
        std::vector<int> marked;
        for (int u : g.adjacency[w]) {
            if (u > root && !in_or_near[u]) {
                next_ext.push_back(u);
                in_or_near[u] = true;
                marked.push_back(u);
            }
        }
        sub.push_back(w);
        extend_subset(g, root, sub, std::move(next_ext), in_or_near, c, emit);
        sub.pop_back();
        for (int u : marked) in_or_near[u] = false;
    }
}

void for_each_connected_subset(const Graph& g, int root, int c,
                               const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> sub{root};
    if (c == 1) {
        emit(sub);
        return;
    }
    std::vector<bool> in_or_near(g.n, false);
    in_or_near[root] = true;
    std::vector<int> ext;
    for (int u : g.adjacency[root]) {
        if (u > root) {
            ext.push_back(u);
            in_or_near[u] = true;
        }
    }
    // Pop from the back; reversed so smaller ids are tried first.
    std::reverse(ext.begin(), ext.end());
    extend_subset(g, root, sub, std::move(ext), in_or_near, c, emit);
}

}  // namespace

Motif Motif::from_graph(const Graph& pattern) {
    if (pattern.n < 1 || pattern.n > kMaxMotifNodes)
        throw Error(kStage, "MotifTooLarge",
                    "motif has " + std::to_string(pattern.n) + " nodes, cap is " +
                        std::to_string(kMaxMotifNodes));
    if (!is_connected(pattern))
        throw Error(kStage, "MotifDisconnected", "motif must be connected");
    return Motif{pattern};
}

Motif Motif::from_edge_list(const std::string& text) {
    return from_graph(load_edge_list(text));
}

Motif Motif::triangle() {
    return from_graph(Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
}

Motif Motif::single_edge() {
    return from_graph(Graph::from_edges(2, {{0, 1}}));
}

MotifOccurrenceSet enumerate_triangles(const Graph& g) {
    MotifOccurrenceSet out;
    out.c = 3;
    // Edges are sorted (u < v); intersecting the two sorted neighbor lists
    // above v yields triples in lexicographic order directly.
    for (const auto& [u, v] : g.edges) {
        const auto& a = g.adjacency[u];
        const auto& b = g.adjacency[v];
        auto ia = std::lower_bound(a.begin(), a.end(), v + 1);
        auto ib = std::lower_bound(b.begin(), b.end(), v + 1);
        while (ia != a.end() && ib != b.end()) {
            if (*ia < *ib) {
                ++ia;
            } else if (*ib < *ia) {
                ++ib;
            } else {
                int w = *ia;
                MotifOccurrence occ;
                occ.nodes = {u, v, w};
                occ.edges = {{u, v}, {u, w}, {v, w}};
                out.occurrences.push_back(std::move(occ));
                ++ia;
                ++ib;
            }
        }
    }
    std::sort(out.occurrences.begin(), out.occurrences.end(),
              [](const MotifOccurrence& x, const MotifOccurrence& y) { return x.nodes < y.nodes; });
    return out;
}

MotifOccurrenceSet enumerate_motif(const Graph& g, const Motif& m) {
    const int c = m.c();
    if (c > kMaxMotifNodes)
        throw Error(kStage, "MotifTooLarge", "motif larger than the enumeration cap");
    if (!is_connected(m.pattern))
        throw Error(kStage, "MotifDisconnected", "motif must be connected");

    MotifOccurrenceSet out;
    out.c = c;
    // Tuple space is split by root node across workers; the final sort makes
    // the output order canonical regardless of schedule.
    std::vector<std::vector<MotifOccurrence>> per_worker(worker_count());
    parallel_ranges(static_cast<std::size_t>(g.n), [&](int worker, std::size_t begin, std::size_t end) {
        auto& sink = per_worker[worker];
        for (std::size_t root = begin; root < end; ++root) {
            for_each_connected_subset(g, static_cast<int>(root), c, [&](const std::vector<int>& sub) {
                std::vector<int> tuple = sub;
                std::sort(tuple.begin(), tuple.end());
                auto image = first_embedding(g, m, tuple);
                if (!image.empty() || m.pattern.edges.empty()) {
                    if (m.pattern.edges.empty() && static_cast<int>(tuple.size()) != c) return;
                    sink.push_back(MotifOccurrence{std::move(tuple), std::move(image)});
                }
            });
        }
    });
    for (auto& chunk : per_worker)
        out.occurrences.insert(out.occurrences.end(), std::make_move_iterator(chunk.begin()),
                               std::make_move_iterator(chunk.end()));
    std::sort(out.occurrences.begin(), out.occurrences.end(),
              [](const MotifOccurrence& x, const MotifOccurrence& y) { return x.nodes < y.nodes; });
    return out;
}

long long motif_cost(const MotifOccurrenceSet& occ, const PartitionSolution& p) {
    long long split = 0;
    for (const MotifOccurrence& o : occ.occurrences) {
        bool crossed = false;
        for (std::size_t i = 0; i < o.nodes.size(); ++i) {
            int v = o.nodes[i];
            if (v < 0 || v >= p.n())
                throw Error(kStage, "NodeOutOfRange", "occurrence node " + std::to_string(v));
            if (i > 0 && p.assignment[v] != p.assignment[o.nodes[0]]) crossed = true;
        }
        if (crossed) ++split;
    }
    return split;
}

std::string write_occurrences(const MotifOccurrenceSet& occ) {
    std::ostringstream out;
    for (const MotifOccurrence& o : occ.occurrences) {
        for (std::size_t i = 0; i < o.nodes.size(); ++i) {
            if (i) out << ",";
            out << o.nodes[i];
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace bforge
