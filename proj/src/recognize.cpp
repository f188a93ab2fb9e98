#include "compdi/recognize.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace compdi {

namespace {

std::vector<ClassId> candidate_order(const ClassPartition& part, const ChoicePolicy& policy) {
    std::vector<ClassId> order;
    for (ClassId c = 0; c < part.class_count(); ++c)
        if (!part.trivial(c)) order.push_back(c);
    switch (policy.kind) {
    case ChoicePolicy::Kind::SmallestId:
        break;
    case ChoicePolicy::Kind::LargestId:
        std::reverse(order.begin(), order.end());
        break;
    case ChoicePolicy::Kind::Shuffled: {
        std::mt19937_64 rng(policy.seed);
        std::shuffle(order.begin(), order.end(), rng);
        break;
    }
    }
    return order;
}

// Repeatedly orients one whole implication class of the remaining edge set
// and deletes it together with its inverse (implication-class decomposition).
// The union of the oriented classes is a transitive orientation of any
// comparability graph.
Digraph decomposition_orientation(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::uint8_t> live(n * n, 0);
    for (auto [u, v] : g.edges()) live[u * n + v] = live[v * n + u] = 1;
    auto edge = [&](Vertex a, Vertex b) { return live[std::size_t(a) * n + b] != 0; };

    std::vector<Arc> oriented;
    std::vector<std::uint8_t> seen(n * n, 0);
    std::deque<Pair> queue;
    for (auto [a, b] : g.edges()) {
        if (!edge(a, b)) continue;
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<Pair> cls;
        seen[a * n + b] = 1;
        queue.push_back({a, b});
        while (!queue.empty()) {
            Pair p = queue.front();
            queue.pop_front();
            cls.push_back(p);
            for (Vertex z = 0; z < n; ++z) {
                // (x,y) forces (x,z) and (z,y) when the far ends are non-adjacent
                if (z != p.first && z != p.second && edge(p.first, z) && !edge(p.second, z) &&
                    !seen[p.first * n + z]) {
                    seen[p.first * n + z] = 1;
                    queue.push_back({p.first, z});
                }
                if (z != p.first && z != p.second && edge(z, p.second) && !edge(z, p.first) &&
                    !seen[z * n + p.second]) {
                    seen[z * n + p.second] = 1;
                    queue.push_back({z, p.second});
                }
            }
        }
        for (Pair p : cls) {
            oriented.emplace_back(p.first, p.second);
            live[p.first * n + p.second] = live[p.second * n + p.first] = 0;
        }
    }
    return Digraph(n, oriented);
}

}  // namespace

RecognitionResult recognize_semicomplete(const Digraph& d, ChoicePolicy policy) {
    return recognize_semicomplete(d, policy, nullptr);
}

RecognitionResult recognize_semicomplete(const Digraph& d, ChoicePolicy policy, ForcingSet* trace) {
    if (!is_semicomplete(d)) throw NotSemicomplete();
    const std::size_t n = d.size();
    const ClassPartition part = implication_classes(d);
    RecognitionResult result;

    for (ClassId c = 0; c < part.class_count(); ++c) {
        if (part.inverse_of(c) == c) {
            Pair p = part.members[c].front();
            result.verdict = RecognitionResult::Verdict::NotComparability;
            result.witness = SelfInverseClass{c, Circuit{{p.first, p.second}}};
            return result;
        }
    }

    // alive: nontrivial classes still in the working set
    std::vector<std::uint8_t> alive(part.class_count(), 0);
    std::size_t remaining = 0;
    for (ClassId c = 0; c < part.class_count(); ++c)
        if (!part.trivial(c)) alive[c] = 1, ++remaining;

    const std::vector<ClassId> fallback = candidate_order(part, policy);
    std::size_t cursor = 0;
    std::deque<ClassId> pending;
    std::vector<std::uint8_t> in_t(n * n, 0);
    auto t_has = [&](Vertex a, Vertex b) { return in_t[std::size_t(a) * n + b] != 0; };
    auto enqueue = [&](Vertex a, Vertex b) {
        ClassId c = part.class_of({a, b});
        if (c != ClassPartition::npos && alive[c]) pending.push_back(c);
    };
    std::vector<ClassId> chosen;

    while (remaining > 0) {
        ClassId pick = ClassPartition::npos;
        // a class containing some (x,z) with (x,y),(y,z) already in T
        while (!pending.empty() && pick == ClassPartition::npos) {
            ClassId c = pending.front();
            pending.pop_front();
            if (alive[c]) pick = c;
        }
        if (pick == ClassPartition::npos) {
            while (!alive[fallback[cursor]]) ++cursor;
            pick = fallback[cursor];
        }
        const ClassId inv = part.inverse_of(pick);
        alive[pick] = alive[inv] = 0;
        remaining -= 2;
        chosen.push_back(pick);

        const auto& members = part.members[pick];
        for (Pair p : members) in_t[std::size_t(p.first) * n + p.second] = 1;
        for (Pair p : members) {
            const auto [x, y] = p;
            for (Vertex z = 0; z < n; ++z) {
                if (z != x && t_has(y, z)) enqueue(x, z);  // (x,y),(y,z) -> (x,z)
                if (z != y && t_has(z, x)) enqueue(z, y);  // (z,x),(x,y) -> (z,y)
            }
        }
    }

    std::vector<Arc> t_arcs;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
            if (t_has(x, y)) t_arcs.emplace_back(x, y);
    auto order = topological_order(Digraph(n, t_arcs));
    if (!order) throw std::logic_error("forcing set contains a circuit");

    if (trace) {
        trace->chosen = std::move(chosen);
        trace->pair_member = std::move(in_t);
    }
    result.verdict = RecognitionResult::Verdict::Comparability;
    result.ordering = std::move(order);
    return result;
}

std::optional<Triple> verify_ordering(const Digraph& d, const Ordering& o) {
    const std::size_t n = d.size();
    if (o.size() != n) throw std::invalid_argument("ordering size does not match digraph");
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex x = o.at(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vertex y = o.at(j);
            const bool xy = d.has_arc(x, y), yx = d.has_arc(y, x);
            if (!xy && !yx) continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vertex z = o.at(k);
                if ((xy && d.has_arc(y, z) && !d.has_arc(x, z)) || (d.has_arc(z, y) && yx && !d.has_arc(z, x)))
                    return Triple{x, y, z};
            }
        }
    }
    return std::nullopt;
}

RecognitionResult graph_comparability(const Graph& g, std::size_t component_limit) {
    const Digraph d = g.as_symmetric_digraph();
    RecognitionResult result;
    BipartiteCheck bip = is_bipartite(knotting_graph(d));
    if (!bip.bipartite()) {
        result.verdict = RecognitionResult::Verdict::NotComparability;
        result.witness = bip.odd_walk;
        return result;
    }
    GeneralCheck general = general_comparability_check(d, component_limit);
    if (general.status == GeneralCheck::Status::Comparability) {
        result.ordering = std::move(general.ordering);
    } else if (general.status == GeneralCheck::Status::Inconclusive) {
        result.ordering = topological_order(decomposition_orientation(g));
    }
    // a bipartite knotting graph always admits a transitive orientation
    if (!result.ordering || verify_ordering(d, *result.ordering))
        throw std::logic_error("bipartite knotting graph without a transitive orientation");
    result.verdict = RecognitionResult::Verdict::Comparability;
    return result;
}

std::vector<ForceViolation> audit_prop_force(const Digraph& d, const Ordering& o, const ClassPartition& part) {
    if (o.size() != d.size()) throw std::invalid_argument("ordering size does not match digraph");
    std::vector<ForceViolation> out;
    for (ClassId c = 0; c < part.class_count(); ++c) {
        const auto& members = part.members[c];
        std::optional<Pair> agree, disagree;
        for (Pair p : members) {
            auto& slot = o.precedes(p.first, p.second) ? agree : disagree;
            if (!slot) slot = p;
        }
        if (agree && disagree) out.push_back({c, *agree, *disagree});
    }
    return out;
}

std::string format_witness(const Digraph& d, const Witness& w) {
    if (auto* s = std::get_if<SelfInverseClass>(&w))
        return "self-inverse class " + std::to_string(s->id) + ", circuit " + format_circuit(d, s->circuit);
    if (auto* t = std::get_if<Triple>(&w))
        return "violating triple (" + d.label(t->x) + "," + d.label(t->y) + "," + d.label(t->z) + ")";
    return "odd closed knotting walk " + format_walk(d, std::get<Walk>(w));
}

}  // namespace compdi
