#include "compdi/implication.hpp"

#include <algorithm>
#include <deque>

namespace compdi {

namespace {

// (x,y) vs (x,y2), y != y2
bool forces_shared_first(const Digraph& d, Vertex x, Vertex y, Vertex y2) {
    return (d.has_arc(y, x) && d.has_arc(x, y2) && !d.has_arc(y, y2)) ||
           (d.has_arc(y2, x) && d.has_arc(x, y) && !d.has_arc(y2, y));
}

// (x,y) vs (x2,y), x != x2
bool forces_shared_second(const Digraph& d, Vertex x, Vertex x2, Vertex y) {
    return (d.has_arc(x, y) && d.has_arc(y, x2) && !d.has_arc(x, x2)) ||
           (d.has_arc(x2, y) && d.has_arc(y, x) && !d.has_arc(x2, x));
}

bool has_directed_triangle(const Digraph& d, Vertex a, Vertex b, Vertex c) {
    return (d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a)) ||
           (d.has_arc(a, c) && d.has_arc(c, b) && d.has_arc(b, a));
}

// Visits every q != p with p Gamma q, in O(deg) time.
template <class Visit>
void for_each_gamma_neighbor(const Digraph& d, Pair p, Visit&& visit) {
    const auto [x, y] = p;
    for (Vertex z : d.neighbors(x))
        if (z != y && forces_shared_first(d, x, y, z)) visit(Pair{x, z});
    for (Vertex z : d.neighbors(y))
        if (z != x && forces_shared_second(d, x, z, y)) visit(Pair{z, y});
}

std::optional<Circuit> find_cycle(std::size_t n, const std::vector<std::vector<Vertex>>& out) {
    enum : std::uint8_t { White, Grey, Black };
    std::vector<std::uint8_t> colour(n, White);
    std::vector<Vertex> path;
    std::vector<std::size_t> next_edge;

    for (Vertex root = 0; root < n; ++root) {
        if (colour[root] != White) continue;
        path.assign(1, root);
        next_edge.assign(1, 0);
        colour[root] = Grey;
        while (!path.empty()) {
            Vertex u = path.back();
            std::size_t& i = next_edge.back();
            if (i == out[u].size()) {
                colour[u] = Black;
                path.pop_back();
                next_edge.pop_back();
                continue;
            }
            Vertex v = out[u][i++];
            if (colour[v] == Grey) {
                auto from = std::find(path.begin(), path.end(), v);
                return Circuit{std::vector<Vertex>(from, path.end())};
            }
            if (colour[v] == White) {
                colour[v] = Grey;
                path.push_back(v);
                next_edge.push_back(0);
            }
        }
    }
    return std::nullopt;
}

void check_class(const ClassPartition& part, ClassId c) {
    if (c >= part.class_count()) throw std::out_of_range("unknown class id " + std::to_string(c));
}

// Directed-cycle search in the auxiliary digraph x->y for (x,y) in the union.
std::optional<Circuit> circuit_in_union(const ClassPartition& part, std::span<const ClassId> classes, std::size_t n) {
    std::vector<std::vector<Vertex>> out(n);
    for (ClassId c : classes) {
        check_class(part, c);
        for (Pair p : part.members[c]) out[p.first].push_back(p.second);
    }
    for (auto& row : out) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return find_cycle(n, out);
}

}  // namespace

std::vector<Pair> pairs(const Digraph& d) {
    std::vector<Pair> out;
    for (Vertex x = 0; x < d.size(); ++x)
        for (Vertex y : d.neighbors(x)) out.push_back({x, y});
    return out;
}

bool direct_forces(const Digraph& d, Pair p, Pair q) {
    if (p == q) return true;
    if (p.first == q.first && p.second != q.second) return forces_shared_first(d, p.first, p.second, q.second);
    if (p.second == q.second && p.first != q.first) return forces_shared_second(d, p.first, q.first, p.second);
    return false;
}

bool direct_forces_semicomplete(const Digraph& d, Pair p, Pair q) {
    if (!is_semicomplete(d)) throw NotSemicomplete();
    if (p == q) return true;
    // Shared second coordinate reduces to the shared-first case on the
    // reversed pairs, since Gamma commutes with pair reversal.
    if (p.second == q.second && p.first != q.first) {
        p = p.reversed();
        q = q.reversed();
    }
    if (p.first != q.first || p.second == q.second) return false;
    const Vertex x = p.first, y = p.second, z = q.second;
    return !d.symmetric_arc(y, z) && has_directed_triangle(d, x, y, z);
}

ClassPartition implication_classes(const Digraph& d) {
    const std::size_t n = d.size();
    ClassPartition part;
    part.n = n;
    part.class_table.assign(n * n, ClassPartition::npos);

    std::deque<Pair> queue;
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y : d.neighbors(x)) {
            if (part.class_of({x, y}) != ClassPartition::npos) continue;
            const ClassId id = part.members.size();
            std::vector<Pair> members;
            part.class_table[std::size_t(x) * n + y] = id;
            queue.push_back({x, y});
            while (!queue.empty()) {
                Pair p = queue.front();
                queue.pop_front();
                members.push_back(p);
                for_each_gamma_neighbor(d, p, [&](Pair q) {
                    ClassId& slot = part.class_table[std::size_t(q.first) * n + q.second];
                    if (slot == ClassPartition::npos) {
                        slot = id;
                        queue.push_back(q);
                    }
                });
            }
            std::sort(members.begin(), members.end());
            part.members.push_back(std::move(members));
        }
    }
    part.inverse.resize(part.members.size());
    for (ClassId c = 0; c < part.members.size(); ++c) part.inverse[c] = part.class_of(part.members[c].front().reversed());
    return part;
}

Chain canonical_chain(const Digraph& d, Pair p, Pair q) {
    const std::size_t n = d.size();
    auto index = [n](Pair a) { return std::size_t(a.first) * n + a.second; };
    if (p.first >= n || p.second >= n || q.first >= n || q.second >= n || !d.adjacent(p.first, p.second) ||
        !d.adjacent(q.first, q.second))
        throw std::invalid_argument("pair not in Z_D");

    // shortest Gamma-chain by breadth-first search
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(n * n, unseen);
    std::deque<Pair> queue{p};
    parent[index(p)] = index(p);
    while (!queue.empty() && parent[index(q)] == unseen) {
        Pair a = queue.front();
        queue.pop_front();
        for_each_gamma_neighbor(d, a, [&](Pair b) {
            if (parent[index(b)] == unseen) {
                parent[index(b)] = index(a);
                queue.push_back(b);
            }
        });
    }
    if (parent[index(q)] == unseen) throw NotGammaRelated();

    std::vector<Pair> path;
    for (std::size_t i = index(q);; i = parent[i]) {
        path.push_back({static_cast<Vertex>(i / n), static_cast<Vertex>(i % n)});
        if (i == index(p)) break;
    }
    std::reverse(path.begin(), path.end());

    // between (x_i,y_i) and (x_{i+1},y_{i+1}) insert (x_{i+1},y_i)
    Chain chain;
    chain.steps.push_back(path.front());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        chain.steps.push_back({path[i + 1].first, path[i].second});
        chain.steps.push_back(path[i + 1]);
    }
    return chain;
}

bool is_canonical(const Chain& c) {
    for (std::size_t i = 1; i < c.steps.size(); i += 2) {
        if (i + 1 < c.steps.size() && c.steps[i].first != c.steps[i + 1].first) return false;
        if (c.steps[i].second != c.steps[i - 1].second) return false;
    }
    return true;
}

std::optional<Circuit> class_circuit(const ClassPartition& part, ClassId c) {
    const ClassId one[] = {c};
    return circuit_in_union(part, one, part.n);
}

bool is_self_inverse(const ClassPartition& part, ClassId c) {
    check_class(part, c);
    return part.inverse[c] == c;
}

std::optional<Circuit> union_has_circuit(const ClassPartition& part, std::span<const ClassId> classes, const Digraph& d) {
    return circuit_in_union(part, classes, std::max(part.n, d.size()));
}
std::string format_pair(const Digraph& d, Pair p) {
    return "(" + d.label(p.first) + "," + d.label(p.second) + ")";
}

std::string format_circuit(const Digraph& d, const Circuit& c) {
    std::string s;
    for (Vertex v : c.vertices) s += d.label(v) + " -> ";
    if (!c.vertices.empty()) s += d.label(c.vertices.front());
    return s;
}

std::string format_chain(const Digraph& d, const Chain& c) {
    std::string s;
    for (Pair p : c.steps) s += format_pair(d, p) + "\n";
    return s;
}

}  // namespace compdi
