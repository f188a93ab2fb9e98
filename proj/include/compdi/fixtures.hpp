#ifndef COMPDI_FIXTURES_HPP
#define COMPDI_FIXTURES_HPP

#include "compdi/digraph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace compdi::fixtures {

// fig1: acyclic non-comparability digraph whose classes are all distinct from
//       their inverses (12 vertices, 16 arcs; w, x, y, z labelled).
// fig3: non-comparability digraph with no circuit inside any single class
//       (12 vertices; w, v, u, z, y, x labelled).
// fig4: semicomplete comparability digraph with a non-transitive class
//       (x, m, y, z).
Digraph fig1();
Digraph fig3();
Digraph fig4();

std::vector<std::string> names();
std::optional<Digraph> by_name(std::string_view name);
// Edge-list text of a fixture, as embedded.
std::optional<std::string_view> source(std::string_view name);

// Structural checks on the embedded data; returns one message per failure.
std::vector<std::string> verify();

}  // namespace compdi::fixtures

#endif  // COMPDI_FIXTURES_HPP
