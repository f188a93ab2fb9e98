#ifndef COMPDI_IMPLICATION_HPP
#define COMPDI_IMPLICATION_HPP

#include "compdi/digraph.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace compdi {

// An ordered pair of adjacent vertices (an element of Z_D).
struct Pair {
    Vertex first = 0;
    Vertex second = 0;

    Pair reversed() const { return {second, first}; }
    friend auto operator<=>(const Pair&, const Pair&) = default;
};

using ClassId = std::size_t;

// Partition of Z_D into implication classes. Ids are assigned in
// lexicographic order of each class's smallest pair. Fields are public so
// audits can be run against hand-built (or deliberately broken) partitions.
struct ClassPartition {
    std::size_t n = 0;
    // class_table[x*n+y] is the class of (x,y), or npos when x,y are not adjacent.
    std::vector<ClassId> class_table;
    std::vector<std::vector<Pair>> members;  // each sorted ascending
    std::vector<ClassId> inverse;

    static constexpr ClassId npos = static_cast<ClassId>(-1);

    std::size_t class_count() const noexcept { return members.size(); }
    ClassId class_of(Pair p) const { return class_table[std::size_t(p.first) * n + p.second]; }
    bool contains(ClassId c, Pair p) const { return class_of(p) == c; }
    ClassId inverse_of(ClassId c) const { return inverse.at(c); }
    bool trivial(ClassId c) const { return members.at(c).size() == 1; }
};

// A Gamma-chain; consecutive steps directly force each other.
struct Chain {
    std::vector<Pair> steps;
};

// Cyclic vertex sequence x1..xk standing for the pairs (x1,x2),...,(xk,x1).
struct Circuit {
    std::vector<Vertex> vertices;
    std::size_t length() const noexcept { return vertices.size(); }
};

class NotGammaRelated : public std::invalid_argument {
public:
    NotGammaRelated() : std::invalid_argument("not Γ*-related") {}
};

class NotSemicomplete : public std::invalid_argument {
public:
    NotSemicomplete() : std::invalid_argument("not semicomplete") {}
};

std::vector<Pair> pairs(const Digraph& d);

bool direct_forces(const Digraph& d, Pair p, Pair q);
// Triangle criterion for semicomplete digraphs. Throws NotSemicomplete.
bool direct_forces_semicomplete(const Digraph& d, Pair p, Pair q);

ClassPartition implication_classes(const Digraph& d);

// Throws NotGammaRelated when p and q lie in different classes.
Chain canonical_chain(const Digraph& d, Pair p, Pair q);
bool is_canonical(const Chain& c);

// Throws std::out_of_range on unknown class ids.
std::optional<Circuit> class_circuit(const ClassPartition& part, ClassId c);
bool is_self_inverse(const ClassPartition& part, ClassId c);
std::optional<Circuit> union_has_circuit(const ClassPartition& part, std::span<const ClassId> classes, const Digraph& d);

// "x1 -> x2 -> ... -> xk -> x1"
std::string format_circuit(const Digraph& d, const Circuit& c);
// "(a,b)" one pair per line
std::string format_chain(const Digraph& d, const Chain& c);
std::string format_pair(const Digraph& d, Pair p);

}  // namespace compdi

#endif  // COMPDI_IMPLICATION_HPP
