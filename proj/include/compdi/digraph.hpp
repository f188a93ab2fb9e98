#ifndef COMPDI_DIGRAPH_HPP
#define COMPDI_DIGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace compdi {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

// Raised by load_digraph; line() is 1-based, 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Simple digraph on vertices 0..n-1 without loops. Arc membership is answered
// from an n*n table; out/in lists are kept sorted for neighbourhood scans.
// Immutable after construction.
class Digraph {
public:
    Digraph() = default;
    // Throws std::invalid_argument on loops or out-of-range endpoints.
    // Duplicate arcs collapse. Labels, when given, must have exactly n entries;
    // an empty string means "unnamed".
    Digraph(std::size_t n, const std::vector<Arc>& arcs, std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    bool has_arc(Vertex u, Vertex v) const noexcept { return table_[std::size_t(u) * n_ + v] != 0; }
    bool adjacent(Vertex u, Vertex v) const noexcept { return has_arc(u, v) || has_arc(v, u); }
    bool symmetric_arc(Vertex u, Vertex v) const noexcept { return has_arc(u, v) && has_arc(v, u); }

    const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v]; }
    const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }
    // N(v): vertices joined to v by an arc in either direction, ascending.
    const std::vector<Vertex>& neighbors(Vertex v) const { return nbr_[v]; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    // Bound label, or the decimal id when unnamed.
    std::string label(Vertex v) const;
    // Resolves a bound label first, then a decimal id.
    std::optional<Vertex> find_vertex(std::string_view token) const;

private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::uint8_t> table_;
    std::vector<std::vector<Vertex>> out_, in_, nbr_;
    std::vector<std::string> labels_;
};

// Undirected simple graph; edges stored once with first < second.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, const std::vector<Arc>& edges);

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Arc>& edges() const noexcept { return edges_; }
    bool has_edge(Vertex u, Vertex v) const noexcept { return table_[std::size_t(u) * n_ + v] != 0; }
    bool is_complete() const noexcept { return edges_.size() == n_ * (n_ == 0 ? 0 : n_ - 1) / 2; }

    // The symmetric digraph with both arcs for every edge.
    Digraph as_symmetric_digraph() const;

private:
    std::size_t n_ = 0;
    std::vector<Arc> edges_;
    std::vector<std::uint8_t> table_;
};

// A vertex ordering: perm[i] is the vertex at position i, so u precedes v iff
// position(u) < position(v).
class Ordering {
public:
    Ordering() = default;
    // Throws std::invalid_argument unless perm is a bijection on 0..n-1.
    explicit Ordering(std::vector<Vertex> perm);
    static Ordering identity(std::size_t n);

    std::size_t size() const noexcept { return perm_.size(); }
    const std::vector<Vertex>& perm() const noexcept { return perm_; }
    Vertex at(std::size_t i) const { return perm_[i]; }
    std::size_t position(Vertex v) const { return pos_[v]; }
    bool precedes(Vertex u, Vertex v) const { return pos_[u] < pos_[v]; }

    friend bool operator==(const Ordering& a, const Ordering& b) { return a.perm_ == b.perm_; }

private:
    std::vector<Vertex> perm_;
    std::vector<std::size_t> pos_;
};

// Edge-list format: optional "# name <id> <label>" lines, then "n m", then m
// lines "u v". Other lines starting with '#' and blank lines are ignored.
Digraph load_digraph(std::istream& in);
Digraph load_digraph_from_string(std::string_view text);
void write_digraph(std::ostream& out, const Digraph& d);
std::string to_edge_list(const Digraph& d);

bool is_semicomplete(const Digraph& d);
bool is_symmetric(const Digraph& d);
Graph underlying_graph(const Digraph& d);

// Kahn's algorithm, smallest ready vertex first; nullopt when g has a directed cycle.
std::optional<Ordering> topological_order(const Digraph& g);

std::string format_ordering(const Digraph& d, const Ordering& o);

}  // namespace compdi

#endif  // COMPDI_DIGRAPH_HPP
