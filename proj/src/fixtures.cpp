#include "compdi/fixtures.hpp"

#include <algorithm>

namespace compdi::fixtures {

namespace {

// Vertex ids follow the drawing order of the figures, starting at 0.
constexpr std::string_view fig1_text = R"(# name 2 w
# name 5 x
# name 9 y
# name 6 z
12 16
0 1
1 2
2 3
3 4
1 5
2 5
2 6
6 3
5 8
9 5
9 6
10 6
11 10
10 9
9 8
8 7
)";

// The drawing lists the arc 1 -> 3 twice; the duplicate is kept on purpose.
constexpr std::string_view fig3_text = R"(# name 0 w
# name 1 v
# name 2 u
# name 8 z
# name 9 y
# name 10 x
12 28
0 10
1 0
2 0
5 0
7 0
9 0
1 2
1 3
1 7
1 10
6 1
9 1
2 3
5 2
6 2
7 2
3 4
1 3
6 3
6 4
5 6
6 7
7 8
9 8
7 10
9 7
9 10
10 11
)";

constexpr std::string_view fig4_text = R"(# name 0 x
# name 1 m
# name 2 y
# name 3 z
4 8
0 1
1 2
2 3
0 3
0 2
2 0
1 3
3 1
)";

struct Entry {
    std::string_view name;
    std::string_view text;
};

constexpr Entry entries[] = {{"fig1", fig1_text}, {"fig3", fig3_text}, {"fig4", fig4_text}};

std::size_t symmetric_pairs(const Digraph& d) {
    std::size_t count = 0;
    for (auto [u, v] : d.arcs())
        if (u < v && d.has_arc(v, u)) ++count;
    return count;
}

}  // namespace

Digraph fig1() { return load_digraph_from_string(fig1_text); }
Digraph fig3() { return load_digraph_from_string(fig3_text); }
Digraph fig4() { return load_digraph_from_string(fig4_text); }

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& e : entries) out.emplace_back(e.name);
    return out;
}

std::optional<std::string_view> source(std::string_view name) {
    for (const auto& e : entries)
        if (e.name == name) return e.text;
    return std::nullopt;
}

std::optional<Digraph> by_name(std::string_view name) {
    if (auto text = source(name)) return load_digraph_from_string(*text);
    return std::nullopt;
}

std::vector<std::string> verify() {
    std::vector<std::string> failures;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };
    const Digraph f1 = fig1();
    expect(f1.size() == 12, "fig1: expected 12 vertices");
    expect(f1.arc_count() == 16, "fig1: expected 16 arcs");
    expect(symmetric_pairs(f1) == 0, "fig1: expected no symmetric arcs");

    const Digraph f3 = fig3();
    expect(f3.size() == 12, "fig3: expected 12 vertices");
    for (std::string_view label : {"w", "v", "u", "z", "y", "x"})
        expect(f3.find_vertex(label).has_value() && f3.label(*f3.find_vertex(label)) == label,
               "fig3: missing label " + std::string(label));

    const Digraph f4 = fig4();
    expect(f4.size() == 4, "fig4: expected 4 vertices");
    expect(is_semicomplete(f4), "fig4: expected a semicomplete digraph");
    expect(symmetric_pairs(f4) == 2, "fig4: expected exactly 2 symmetric pairs");
    return failures;
}

}  // namespace compdi::fixtures
