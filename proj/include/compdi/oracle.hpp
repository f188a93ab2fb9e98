#ifndef COMPDI_ORACLE_HPP
#define COMPDI_ORACLE_HPP

// Ground-truth routines that work straight from the definitions. Nothing in
// here calls into the implication, knotting or recognize modules.

#include "compdi/digraph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace compdi {

class OracleTooLarge : public std::invalid_argument {
public:
    OracleTooLarge() : std::invalid_argument("instance too large for oracle") {}
};

// Adjacency matrix M(D), m[u][v] = 1 iff uv is an arc.
struct MatrixView {
    std::size_t n = 0;
    std::vector<std::uint8_t> m;

    explicit MatrixView(const Digraph& d);
    std::uint8_t at(std::size_t row, std::size_t col) const { return m[row * n + col]; }
    // Simultaneous row/column permutation: entry (i,j) becomes M[o(i)][o(j)].
    MatrixView permuted(const Ordering& o) const;

private:
    MatrixView() = default;
};

constexpr std::size_t default_oracle_max_n = 9;

// Lexicographically smallest comparability ordering, by pruned permutation
// search. Throws OracleTooLarge when n > max_n.
std::optional<Ordering> brute_force_ordering(const Digraph& d, std::size_t max_n = default_oracle_max_n);

// True iff the permuted adjacency matrix has no 2x2 submatrix equal to the
// identity with one of its zero entries on the main diagonal.
bool matrix_principal_I2_free(const Digraph& d, const Ordering& o);

// Exhaustive enumeration of labelled digraphs on n vertices. Unordered pairs
// {i<j} are taken in lexicographic order as little-endian digits of a
// counter; a digit is the adjacency state of its pair: (none,) i->j, j->i, both.
class DigraphEnumerator {
public:
    DigraphEnumerator(std::size_t n, bool semicomplete_only);
    std::optional<Digraph> next();
    std::uint64_t total() const noexcept { return total_; }

private:
    std::size_t n_;
    bool semicomplete_only_;
    std::vector<std::pair<Vertex, Vertex>> slots_;
    std::vector<std::uint8_t> digits_;
    std::uint64_t total_ = 1;
    std::uint64_t produced_ = 0;
};

std::vector<Digraph> enumerate_digraphs(std::size_t n, bool semicomplete_only);

// Uniform over adjacency states of every unordered pair.
Digraph random_digraph(std::size_t n, bool semicomplete_only, std::mt19937_64& rng);

// Semicomplete comparability digraph from a random partial order: vertices
// ranked by a random permutation, pairs comparable in the order become
// symmetric arcs, all other pairs point forward in rank. edge_probability
// drives the density of the order before transitive closure.
Digraph planted_semicomplete(std::size_t n, double edge_probability, std::mt19937_64& rng);

// Search for a closed knotting walk of odd length <= max_length, built from
// the forcing definition directly. Returns the vertex sequence with the first
// vertex repeated at the end.
std::optional<std::vector<Vertex>> find_odd_closed_knotting_walk(const Digraph& d, std::size_t max_length);

}  // namespace compdi

#endif  // COMPDI_ORACLE_HPP
