#include "compdi/knotting.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace compdi {

namespace {

bool forces_at(const Digraph& d, Vertex x, Vertex y, Vertex z) {
    return direct_forces(d, Pair{x, y}, Pair{x, z});
}

}  // namespace

KnottingGraph knotting_graph(const Digraph& d) {
    const std::size_t n = d.size();
    KnottingGraph k;
    k.original_count = n;
    k.copy_table.assign(n * n, KnottingGraph::npos);
    k.first_node.assign(n + 1, 0);

    std::vector<Vertex> stack;
    for (Vertex x = 0; x < n; ++x) {
        k.first_node[x] = k.nodes.size();
        std::size_t parts = 0;
        // flood fill over pairs anchored at x, seeded by ascending neighbour
        for (Vertex seed : d.neighbors(x)) {
            if (k.copy_of(x, seed) != KnottingGraph::npos) continue;
            const std::size_t part = parts++;
            k.copy_table[std::size_t(x) * n + seed] = part;
            stack.assign(1, seed);
            while (!stack.empty()) {
                Vertex y = stack.back();
                stack.pop_back();
                for (Vertex z : d.neighbors(x)) {
                    if (k.copy_of(x, z) == KnottingGraph::npos && z != y && forces_at(d, x, y, z)) {
                        k.copy_table[std::size_t(x) * n + z] = part;
                        stack.push_back(z);
                    }
                }
            }
            k.nodes.push_back({x, part});
        }
    }
    k.first_node[n] = k.nodes.size();

    for (Vertex x = 0; x < n; ++x)
        for (Vertex y : d.neighbors(x))
            if (x < y) k.edges.emplace_back(k.node_of(x, k.copy_of(x, y)), k.node_of(y, k.copy_of(y, x)));
    return k;
}

BipartiteCheck is_bipartite(const KnottingGraph& k) {
    const std::size_t m = k.node_count();
    std::vector<std::vector<NodeId>> adj(m);
    for (auto [a, b] : k.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    constexpr NodeId none = static_cast<NodeId>(-1);
    std::vector<int> colour(m, -1);
    std::vector<NodeId> parent(m, none);
    std::vector<std::size_t> depth(m, 0);
    BipartiteCheck result;

    for (NodeId root = 0; root < m; ++root) {
        if (colour[root] != -1) continue;
        colour[root] = 0;
        std::deque<NodeId> queue{root};
        while (!queue.empty()) {
            NodeId u = queue.front();
            queue.pop_front();
            for (NodeId v : adj[u]) {
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (colour[v] == colour[u]) {
                    // u and v are at equal depth parity; join their tree paths
                    std::vector<NodeId> left{u}, right{v};
                    while (left.back() != right.back()) {
                        if (depth[left.back()] >= depth[right.back()])
                            left.push_back(parent[left.back()]);
                        else
                            right.push_back(parent[right.back()]);
                    }
                    right.pop_back();
                    std::reverse(left.begin(), left.end());
                    // cycle: lca .. u, v .. (child of lca on v's side)
                    result.odd_cycle = left;
                    result.odd_cycle.insert(result.odd_cycle.end(), right.begin(), right.end());
                    for (NodeId id : result.odd_cycle) result.odd_walk.vertices.push_back(k.nodes[id].original);
                    result.odd_walk.vertices.push_back(k.nodes[result.odd_cycle.front()].original);
                    return result;
                }
            }
        }
    }
    Bipartition b;
    b.side.reserve(m);
    for (int c : colour) b.side.push_back(c == 0 ? Side::X : Side::Y);
    result.bipartition = std::move(b);
    return result;
}

bool is_valid_bipartition(const KnottingGraph& k, const Bipartition& b) {
    if (b.side.size() != k.node_count()) return false;
    return std::all_of(k.edges.begin(), k.edges.end(),
                       [&](const auto& e) { return b.side[e.first] != b.side[e.second]; });
}

std::vector<std::size_t> knotting_components(const KnottingGraph& k, std::size_t* count) {
    const std::size_t m = k.node_count();
    std::vector<std::vector<NodeId>> adj(m);
    for (auto [a, b] : k.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(m, none);
    std::size_t next = 0;
    std::vector<NodeId> stack;
    for (NodeId root = 0; root < m; ++root) {
        if (comp[root] != none) continue;
        comp[root] = next;
        stack.assign(1, root);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v : adj[u])
                if (comp[v] == none) {
                    comp[v] = next;
                    stack.push_back(v);
                }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

bool is_knotting_walk(const KnottingGraph& k, const Digraph& d, const Walk& w, bool closed) {
    const auto& v = w.vertices;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] >= d.size() || v[i + 1] >= d.size() || !d.adjacent(v[i], v[i + 1])) return false;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (!k.knotted(v[i], v[i - 1], v[i + 1])) return false;
    if (closed) {
        if (v.size() < 3 || v.front() != v.back()) return false;
        if (!k.knotted(v.front(), v[1], v[v.size() - 2])) return false;
    }
    return true;
}

Walk knotting_walk(const Digraph& d, Pair p, Pair q) {
    // flatten a canonical chain: x0, y0, x1, y1, ..., xk, yk
    Chain chain = canonical_chain(d, p, q);
    Walk w;
    for (Pair s : chain.steps) {
        w.vertices.push_back(s.first);
        w.vertices.push_back(s.second);
    }
    return w;
}

Digraph transform_orientation(const Digraph& d, const KnottingGraph& k, const Bipartition& b) {
    if (!is_valid_bipartition(k, b)) throw std::invalid_argument("invalid bipartition");
    std::vector<Arc> arcs;
    arcs.reserve(k.edge_count());
    for (auto [a, c] : k.edges) {
        Vertex u = k.nodes[a].original, v = k.nodes[c].original;
        if (b.side[a] == Side::X)
            arcs.emplace_back(u, v);
        else
            arcs.emplace_back(v, u);
    }
    return Digraph(d.size(), arcs, d.labels());
}

GeneralCheck general_comparability_check(const Digraph& d, std::size_t component_limit) {
    GeneralCheck out;
    KnottingGraph k = knotting_graph(d);
    BipartiteCheck bip = is_bipartite(k);
    std::size_t c = 0;
    std::vector<std::size_t> comp = knotting_components(k, &c);
    out.components = c;
    if (!bip.bipartite()) {
        out.status = GeneralCheck::Status::Refuted;
        out.odd_walk = bip.odd_walk;
        out.reason = "knotting graph is not bipartite";
        return out;
    }
    if (c > component_limit || c >= 64) {
        out.status = GeneralCheck::Status::Inconclusive;
        out.reason = "inconclusive: limit exceeded (" + std::to_string(c) + " knotting components, limit " +
                     std::to_string(component_limit) + ")";
        return out;
    }
    const Bipartition& base = *bip.bipartition;
    Bipartition sides = base;
    const std::uint64_t total = std::uint64_t{1} << c;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (NodeId id = 0; id < k.node_count(); ++id) {
            bool flip = (mask >> comp[id]) & 1U;
            sides.side[id] = flip ? (base.side[id] == Side::X ? Side::Y : Side::X) : base.side[id];
        }
        if (auto order = topological_order(transform_orientation(d, k, sides))) {
            out.status = GeneralCheck::Status::Comparability;
            out.ordering = std::move(order);
            return out;
        }
    }
    out.status = GeneralCheck::Status::Refuted;
    out.reason = "no acyclic transform";
    return out;
}

std::string node_name(const Digraph& d, const KnottingGraph& k, NodeId id) {
    return d.label(k.nodes[id].original) + "^" + std::to_string(k.nodes[id].part + 1);
}

std::string knotting_to_dot(const Digraph& d, const KnottingGraph& k, const Bipartition* sides) {
    std::ostringstream out;
    out << "graph knotting {\n";
    for (NodeId id = 0; id < k.node_count(); ++id) {
        const KnotNode& node = k.nodes[id];
        out << "  v" << node.original << '_' << node.part + 1 << " [label=\"" << node_name(d, k, id) << '"';
        if (sides) out << ", side=" << (sides->side[id] == Side::X ? 'X' : 'Y');
        out << "];\n";
    }
    for (auto [a, b] : k.edges) {
        out << "  v" << k.nodes[a].original << '_' << k.nodes[a].part + 1 << " -- v" << k.nodes[b].original << '_'
            << k.nodes[b].part + 1 << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string format_walk(const Digraph& d, const Walk& w) {
    std::string s;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (i) s += " -> ";
        s += d.label(w.vertices[i]);
    }
    return s;
}

}  // namespace compdi
