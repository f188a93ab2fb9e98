#ifndef COMPDI_KNOTTING_HPP
#define COMPDI_KNOTTING_HPP

#include "compdi/digraph.hpp"
#include "compdi/implication.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace compdi {

using NodeId = std::size_t;

// A partial copy x^(part+1) of an original vertex x. Parts are 0-based here
// and printed 1-based.
struct KnotNode {
    Vertex original = 0;
    std::size_t part = 0;
};

// Knotting graph: the neighbourhood of every vertex x is split into parts by
// the knotted relation (Gamma-chains anchored at x), every part becomes a
// node, and every adjacent pair x,y becomes one edge x^a -- y^b with y in x^a
// and x in y^b. Parts of a vertex are numbered by ascending smallest neighbour.
struct KnottingGraph {
    std::size_t original_count = 0;
    std::vector<KnotNode> nodes;                 // sorted by (original, part)
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<NodeId> first_node;              // first_node[x] .. first_node[x+1]-1 are x's copies
    std::vector<std::size_t> copy_table;         // copy_table[x*n+y]: part of x containing y, or npos

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t node_count() const noexcept { return nodes.size(); }
    std::size_t edge_count() const noexcept { return edges.size(); }
    std::size_t part_count(Vertex x) const { return first_node[x + 1] - first_node[x]; }
    // Part index alpha with y in x^alpha.
    std::size_t copy_of(Vertex x, Vertex y) const { return copy_table[std::size_t(x) * original_count + y]; }
    NodeId node_of(Vertex x, std::size_t part) const { return first_node[x] + part; }
    // (x,a) and (x,b) are knotted.
    bool knotted(Vertex x, Vertex a, Vertex b) const {
        return copy_of(x, a) != npos && copy_of(x, a) == copy_of(x, b);
    }
};

enum class Side : std::uint8_t { X, Y };

struct Bipartition {
    std::vector<Side> side;  // per knotting node
};

// Sequence of original vertices; see is_knotting_walk.
struct Walk {
    std::vector<Vertex> vertices;
};

struct BipartiteCheck {
    std::optional<Bipartition> bipartition;
    // When not bipartite: an odd cycle of knotting nodes n0..n(k-1) (closing back to n0)
    // and the same cycle as a closed knotting walk of originals, first vertex repeated at the end.
    std::vector<NodeId> odd_cycle;
    Walk odd_walk;

    bool bipartite() const noexcept { return bipartition.has_value(); }
};

KnottingGraph knotting_graph(const Digraph& d);

// Only nodes and edges of k are consulted, so hand-built graphs are accepted.
BipartiteCheck is_bipartite(const KnottingGraph& k);
bool is_valid_bipartition(const KnottingGraph& k, const Bipartition& b);

// Connected components of the knotting graph; returns component id per node.
std::vector<std::size_t> knotting_components(const KnottingGraph& k, std::size_t* count = nullptr);

// Every interior vertex's two incident pairs are knotted. A walk whose first
// and last vertices coincide is checked cyclically when `closed` is set.
bool is_knotting_walk(const KnottingGraph& k, const Digraph& d, const Walk& w, bool closed = false);

// Throws NotGammaRelated when p and q are in different classes.
Walk knotting_walk(const Digraph& d, Pair p, Pair q);

// Orients every knotting edge from its X end to its Y end and identifies the
// partial copies. Throws std::invalid_argument for an invalid bipartition.
Digraph transform_orientation(const Digraph& d, const KnottingGraph& k, const Bipartition& b);

struct GeneralCheck {
    enum class Status { Comparability, Refuted, Inconclusive };
    Status status = Status::Inconclusive;
    std::optional<Ordering> ordering;
    std::optional<Walk> odd_walk;  // set when refuted by non-bipartiteness
    std::string reason;
    std::size_t components = 0;
};

constexpr std::size_t default_component_limit = 20;

// Exhaustive over the 2^c side choices of the c knotting components. The
// first acyclic choice in ascending mask order (bit i flips component i) is
// reported.
GeneralCheck general_comparability_check(const Digraph& d, std::size_t component_limit = default_component_limit);

// Graphviz export; side attributes are emitted when a bipartition is given.
std::string knotting_to_dot(const Digraph& d, const KnottingGraph& k, const Bipartition* sides = nullptr);
std::string node_name(const Digraph& d, const KnottingGraph& k, NodeId id);
std::string format_walk(const Digraph& d, const Walk& w);

}  // namespace compdi

#endif  // COMPDI_KNOTTING_HPP
