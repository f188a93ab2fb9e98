#include "compdi/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace compdi {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<std::size_t> parse_count(std::string_view tok) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

std::string at_line(const std::string& what, std::size_t line) {
    return what + " at line " + std::to_string(line);
}

}  // namespace

Digraph::Digraph(std::size_t n, const std::vector<Arc>& arcs, std::vector<std::string> labels)
    : n_(n), table_(n * n, 0), out_(n), in_(n), nbr_(n), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != n)
        throw std::invalid_argument("label count does not match vertex count");
    for (auto [u, v] : arcs) {
        if (u >= n || v >= n) throw std::invalid_argument("arc endpoint out of range");
        if (u == v) throw std::invalid_argument("loop arc");
        table_[std::size_t(u) * n + v] = 1;
    }
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (has_arc(u, v)) {
                arcs_.emplace_back(u, v);
                out_[u].push_back(v);
                in_[v].push_back(u);
            }
            if (u != v && adjacent(u, v)) nbr_[u].push_back(v);
        }
    }
    if (std::all_of(labels_.begin(), labels_.end(), [](const std::string& s) { return s.empty(); }))
        labels_.clear();
}

std::string Digraph::label(Vertex v) const {
    if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
}

std::optional<Vertex> Digraph::find_vertex(std::string_view token) const {
    for (Vertex v = 0; v < labels_.size(); ++v)
        if (labels_[v] == token) return v;
    auto id = parse_count(token);
    if (id && *id < n_) return static_cast<Vertex>(*id);
    return std::nullopt;
}

Graph::Graph(std::size_t n, const std::vector<Arc>& edges) : n_(n), table_(n * n, 0) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge");
        table_[std::size_t(u) * n + v] = 1;
        table_[std::size_t(v) * n + u] = 1;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (has_edge(u, v)) edges_.emplace_back(u, v);
}

Digraph Graph::as_symmetric_digraph() const {
    std::vector<Arc> arcs;
    arcs.reserve(2 * edges_.size());
    for (auto [u, v] : edges_) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(n_, arcs);
}

Ordering::Ordering(std::vector<Vertex> perm) : perm_(std::move(perm)), pos_(perm_.size(), perm_.size()) {
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        Vertex v = perm_[i];
        if (v >= perm_.size() || pos_[v] != perm_.size())
            throw std::invalid_argument("ordering is not a permutation");
        pos_[v] = i;
    }
}

Ordering Ordering::identity(std::size_t n) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    return Ordering(std::move(perm));
}

Digraph load_digraph(std::istream& in) {
    struct NameBinding {
        std::size_t id;
        std::string label;
        std::size_t line;
    };
    std::vector<NameBinding> names;
    std::optional<std::size_t> n, m;
    std::vector<Arc> arcs;
    std::size_t arc_lines = 0;
    std::size_t lineno = 0;
    std::string raw;

    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = split_ws(raw);
        if (toks.empty()) continue;
        if (toks[0].front() == '#') {
            // "# name <id> <label>" or "#name ..." binds a label; anything else is a comment
            std::vector<std::string_view> rest(toks.begin() + 1, toks.end());
            if (toks[0].size() > 1) rest.insert(rest.begin(), toks[0].substr(1));
            if (!rest.empty() && rest[0] == "name") {
                if (rest.size() != 3) throw ParseError(at_line("malformed name line", lineno), lineno);
                auto id = parse_count(rest[1]);
                if (!id) throw ParseError(at_line("malformed name line", lineno), lineno);
                names.push_back({*id, std::string(rest[2]), lineno});
            }
            continue;
        }
        if (!n) {
            if (toks.size() != 2) throw ParseError(at_line("malformed header", lineno), lineno);
            n = parse_count(toks[0]);
            m = parse_count(toks[1]);
            if (!n || !m) throw ParseError(at_line("malformed header", lineno), lineno);
            continue;
        }
        if (toks.size() != 2) throw ParseError(at_line("malformed arc line", lineno), lineno);
        auto u = parse_count(toks[0]);
        auto v = parse_count(toks[1]);
        if (!u || !v) throw ParseError(at_line("malformed arc line", lineno), lineno);
        if (*u >= *n || *v >= *n)
            throw ParseError(at_line("vertex id " + std::to_string(std::max(*u, *v)) + " out of range", lineno),
                             lineno);
        if (*u == *v) throw ParseError(at_line("loop arc", lineno), lineno);
        if (++arc_lines > *m) throw ParseError(at_line("more arc lines than declared", lineno), lineno);
        arcs.emplace_back(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
    }
    if (!n) throw ParseError("missing header line", lineno);
    if (arc_lines != *m)
        throw ParseError("expected " + std::to_string(*m) + " arc lines, found " + std::to_string(arc_lines), lineno);

    std::vector<std::string> labels;
    if (!names.empty()) {
        labels.assign(*n, "");
        std::unordered_map<std::string, std::size_t> seen;
        for (const auto& b : names) {
            if (b.id >= *n)
                throw ParseError(at_line("vertex id " + std::to_string(b.id) + " out of range", b.line), b.line);
            if (auto it = seen.find(b.label); it != seen.end() && it->second != b.id)
                throw ParseError(at_line("duplicate label '" + b.label + "'", b.line), b.line);
            seen[b.label] = b.id;
            labels[b.id] = b.label;
        }
    }
    return Digraph(*n, arcs, std::move(labels));
}

Digraph load_digraph_from_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& d) {
    if (d.has_labels()) {
        for (Vertex v = 0; v < d.size(); ++v)
            if (!d.labels()[v].empty()) out << "# name " << v << ' ' << d.labels()[v] << '\n';
    }
    out << d.size() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Digraph& d) {
    std::ostringstream out;
    write_digraph(out, d);
    return out.str();
}

bool is_semicomplete(const Digraph& d) {
    for (Vertex u = 0; u < d.size(); ++u)
        if (d.neighbors(u).size() + 1 != d.size()) return false;
    return true;
}

bool is_symmetric(const Digraph& d) {
    return std::all_of(d.arcs().begin(), d.arcs().end(), [&](const Arc& a) { return d.has_arc(a.second, a.first); });
}

Graph underlying_graph(const Digraph& d) {
    std::vector<Arc> edges;
    for (auto [u, v] : d.arcs())
        if (u < v || !d.has_arc(v, u)) edges.emplace_back(std::min(u, v), std::max(u, v));
    return Graph(d.size(), edges);
}

std::optional<Ordering> topological_order(const Digraph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> indeg(n);
    for (Vertex v = 0; v < n; ++v) indeg[v] = g.in_neighbors(v).size();
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<Vertex> perm;
    perm.reserve(n);
    while (!ready.empty()) {
        Vertex u = ready.top();
        ready.pop();
        perm.push_back(u);
        for (Vertex v : g.out_neighbors(u))
            if (--indeg[v] == 0) ready.push(v);
    }
    if (perm.size() != n) return std::nullopt;
    return Ordering(std::move(perm));
}

std::string format_ordering(const Digraph& d, const Ordering& o) {
    std::string s;
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) s += ' ';
        s += d.label(o.at(i));
    }
    return s;
}

}  // namespace compdi
