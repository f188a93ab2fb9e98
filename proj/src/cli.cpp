#include "compdi/cli.hpp"

#include "compdi/digraph.hpp"
#include "compdi/fixtures.hpp"
#include "compdi/implication.hpp"
#include "compdi/knotting.hpp"
#include "compdi/oracle.hpp"
#include "compdi/recognize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

namespace compdi::cli {

namespace {

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "-" reads stdin; an existing path is read as a file; otherwise a fixture name.
Digraph load_input(const std::string& where) {
    try {
        if (where == "-") return load_digraph(std::cin);
        if (std::filesystem::exists(where)) {
            std::ifstream in(where);
            if (!in) throw BadInput("cannot open " + where);
            return load_digraph(in);
        }
        if (auto d = fixtures::by_name(where)) return *d;
    } catch (const ParseError& e) {
        throw BadInput(where + ": " + e.what());
    }
    throw BadInput("no such file or fixture: " + where);
}

int cmd_classes(const Digraph& d, std::ostream& out) {
    const ClassPartition part = implication_classes(d);
    std::size_t nontrivial = 0;
    for (ClassId c = 0; c < part.class_count(); ++c) nontrivial += part.trivial(c) ? 0 : 1;
    out << "classes " << part.class_count() << " nontrivial " << nontrivial << '\n';
    for (ClassId c = 0; c < part.class_count(); ++c) {
        auto circuit = class_circuit(part, c);
        out << "class " << c << " size " << part.members[c].size() << " inverse " << part.inverse_of(c) << ' '
            << (part.trivial(c) ? "trivial" : "nontrivial") << " self-inverse "
            << (is_self_inverse(part, c) ? "yes" : "no") << " circuit "
            << (circuit ? format_circuit(d, *circuit) : std::string("none")) << '\n';
        out << " ";
        for (Pair p : part.members[c]) out << ' ' << format_pair(d, p);
        out << '\n';
    }
    return Ok;
}

int cmd_recognize(const Digraph& d, bool general, std::size_t limit, std::ostream& out, std::ostream& err) {
    if (!general) {
        if (!is_semicomplete(d)) {
            err << "input is not semicomplete; use --general\n";
            return InputError;
        }
        RecognitionResult r = recognize_semicomplete(d);
        if (r.comparability()) {
            out << "comparability\nordering: " << format_ordering(d, *r.ordering) << '\n';
            return Ok;
        }
        out << "not comparability\nwitness: " << format_witness(d, *r.witness) << '\n';
        return Refuted;
    }
    GeneralCheck g = general_comparability_check(d, limit);
    switch (g.status) {
    case GeneralCheck::Status::Comparability:
        out << "comparability\nordering: " << format_ordering(d, *g.ordering) << '\n';
        return Ok;
    case GeneralCheck::Status::Refuted:
        out << "not comparability\nwitness: ";
        if (g.odd_walk)
            out << "odd closed knotting walk " << format_walk(d, *g.odd_walk) << '\n';
        else
            out << g.reason << " (" << g.components << " knotting components)\n";
        return Refuted;
    case GeneralCheck::Status::Inconclusive:
        out << g.reason << '\n';
        return Inconclusive;
    }
    return Inconclusive;
}

int cmd_knotting(const Digraph& d, bool dot, std::ostream& out, std::ostream& err) {
    const KnottingGraph k = knotting_graph(d);
    const BipartiteCheck bip = is_bipartite(k);
    if (dot) {
        out << knotting_to_dot(d, k, bip.bipartite() ? &*bip.bipartition : nullptr);
        if (!bip.bipartite()) {
            err << "not bipartite; odd closed knotting walk " << format_walk(d, bip.odd_walk) << '\n';
            return Refuted;
        }
        return Ok;
    }
    out << "knotting graph " << k.node_count() << " nodes " << k.edge_count() << " edges\n";
    for (NodeId id = 0; id < k.node_count(); ++id) {
        const KnotNode& node = k.nodes[id];
        out << "node " << node_name(d, k, id) << " {";
        bool first = true;
        for (Vertex y : d.neighbors(node.original)) {
            if (k.copy_of(node.original, y) != node.part) continue;
            out << (first ? "" : ",") << d.label(y);
            first = false;
        }
        out << "}";
        if (bip.bipartite()) out << " side " << (bip.bipartition->side[id] == Side::X ? 'X' : 'Y');
        out << '\n';
    }
    for (auto [a, b] : k.edges) out << "edge " << node_name(d, k, a) << " -- " << node_name(d, k, b) << '\n';
    if (bip.bipartite()) {
        out << "bipartite yes\n";
        return Ok;
    }
    out << "bipartite no\nodd closed knotting walk " << format_walk(d, bip.odd_walk) << '\n';
    return Refuted;
}

int cmd_check(const Digraph& d, const std::vector<std::string>& tokens, bool matrix, std::ostream& out,
              std::ostream& err) {
    std::vector<Vertex> perm;
    for (const auto& t : tokens) {
        auto v = d.find_vertex(t);
        if (!v) {
            err << "unknown vertex '" << t << "'\n";
            return InputError;
        }
        perm.push_back(*v);
    }
    if (perm.size() != d.size()) {
        err << "ordering must name all " << d.size() << " vertices exactly once\n";
        return InputError;
    }
    std::optional<Ordering> o;
    try {
        o.emplace(perm);
    } catch (const std::invalid_argument&) {
        err << "ordering must name all " << d.size() << " vertices exactly once\n";
        return InputError;
    }
    const auto violation = verify_ordering(d, *o);
    if (violation)
        out << format_witness(d, *violation) << '\n';
    else
        out << "valid\n";
    if (matrix) {
        const bool free = matrix_principal_I2_free(d, *o);
        out << "matrix " << (free ? "I2-free" : "contains principal I2") << '\n';
        if (free == violation.has_value()) throw std::logic_error("matrix check disagrees with ordering check");
    }
    return violation ? Refuted : Ok;
}

int cmd_oracle(const Digraph& d, std::size_t max_n, std::ostream& out, std::ostream& err) {
    try {
        auto o = brute_force_ordering(d, max_n);
        if (!o) {
            out << "no comparability ordering\n";
            return Refuted;
        }
        out << "ordering: " << format_ordering(d, *o) << '\n';
        return Ok;
    } catch (const OracleTooLarge& e) {
        err << e.what() << " (n = " << d.size() << ", --max-n " << max_n << ")\n";
        return InputError;
    }
}

int cmd_enumerate(std::size_t n, bool semicomplete, std::optional<std::size_t> count, std::uint64_t seed,
                  std::ostream& out) {
    std::size_t index = 0;
    auto emit = [&](const Digraph& d) {
        out << "# digraph " << index++ << '\n';
        write_digraph(out, d);
    };
    if (count) {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < *count; ++i) emit(random_digraph(n, semicomplete, rng));
        return Ok;
    }
    DigraphEnumerator e(n, semicomplete);
    while (auto d = e.next()) emit(*d);
    return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Comparability digraph analysis"};
    app.set_help_all_flag("--help-all");
    bool verify_fixtures = false;
    app.add_flag("--verify-fixtures", verify_fixtures, "Check the embedded figure fixtures and exit");

    std::string input;
    const std::string input_help = "Edge-list file, '-' for stdin, or a fixture name (fig1, fig3, fig4)";

    auto* classes = app.add_subcommand("classes", "List implication classes");
    classes->add_option("input", input, input_help)->required();

    bool general = false;
    std::size_t limit = default_component_limit;
    auto* recognize = app.add_subcommand("recognize", "Find a comparability ordering or a refutation");
    recognize->add_option("input", input, input_help)->required();
    recognize->add_flag("--general", general, "Use the knotting-graph search (any digraph)");
    recognize->add_option("--limit", limit, "Maximum number of knotting components for --general");

    bool dot = false;
    auto* knotting = app.add_subcommand("knotting", "Print the knotting graph");
    knotting->add_option("input", input, input_help)->required();
    knotting->add_flag("--dot", dot, "Graphviz output");

    std::vector<std::string> order_tokens;
    bool matrix = false;
    auto* check = app.add_subcommand("check", "Verify a vertex ordering");
    check->add_option("input", input, input_help)->required();
    check->add_option("ordering", order_tokens, "Vertex labels or ids in order")->required();
    check->add_flag("--matrix", matrix, "Also run the adjacency-matrix test");

    std::size_t max_n = default_oracle_max_n;
    auto* oracle = app.add_subcommand("oracle", "Brute-force comparability ordering search");
    oracle->add_option("input", input, input_help)->required();
    oracle->add_option("--max-n", max_n, "Refuse inputs with more vertices");

    std::size_t n = 0;
    bool semicomplete = false;
    std::optional<std::size_t> count;
    std::uint64_t seed = 0;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate or sample labelled digraphs");
    enumerate->add_option("-n,--n", n, "Vertex count")->required();
    enumerate->add_flag("--semicomplete", semicomplete, "Semicomplete digraphs only");
    enumerate->add_option("--count", count, "Draw this many random digraphs instead of enumerating");
    enumerate->add_option("--seed", seed, "Seed for --count");

    app.require_subcommand(0, 1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : InputError;
    }

    try {
        if (verify_fixtures) {
            auto failures = fixtures::verify();
            for (const auto& f : failures) err << f << '\n';
            if (failures.empty()) out << "fixtures ok\n";
            return failures.empty() ? Ok : Refuted;
        }
        if (*enumerate) return cmd_enumerate(n, semicomplete, count, seed, out);
        if (app.get_subcommands().empty()) {
            err << app.help();
            return InputError;
        }
        const Digraph d = load_input(input);
        if (*classes) return cmd_classes(d, out);
        if (*recognize) return cmd_recognize(d, general, limit, out, err);
        if (*knotting) return cmd_knotting(d, dot, out, err);
        if (*check) return cmd_check(d, order_tokens, matrix, out, err);
        if (*oracle) return cmd_oracle(d, max_n, out, err);
    } catch (const BadInput& e) {
        err << e.what() << '\n';
        return InputError;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return InputError;
    }
    return InputError;
}

}  // namespace compdi::cli
