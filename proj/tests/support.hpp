#ifndef COMPDI_TESTS_SUPPORT_HPP
#define COMPDI_TESTS_SUPPORT_HPP

#include "compdi/digraph.hpp"
#include "compdi/implication.hpp"

#include <stdexcept>
#include <string_view>

namespace compdi::test {

inline Vertex vx(const Digraph& d, std::string_view label) {
    auto v = d.find_vertex(label);
    if (!v) throw std::invalid_argument("no vertex " + std::string(label));
    return *v;
}

inline Pair pr(const Digraph& d, std::string_view a, std::string_view b) { return {vx(d, a), vx(d, b)}; }

inline Digraph three_cycle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Digraph transitive_tournament(std::size_t n) {
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
    return Digraph(n, arcs);
}

inline Digraph single_arc() { return Digraph(2, {{0, 1}}); }

}  // namespace compdi::test

#endif
