#include "compdi/implication.hpp"
#include "compdi/knotting.hpp"
#include "compdi/oracle.hpp"
#include "compdi/recognize.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace compdi;

namespace {

bool any_self_inverse(const ClassPartition& part) {
    for (ClassId c = 0; c < part.class_count(); ++c)
        if (is_self_inverse(part, c)) return true;
    return false;
}

template <class F>
void for_each_small(std::size_t max_n, bool semicomplete, F&& f) {
    for (std::size_t n = 1; n <= max_n; ++n) {
        DigraphEnumerator e(n, semicomplete);
        while (auto d = e.next()) f(*d);
    }
}

}  // namespace

TEST_CASE("bipartite knotting graph, no odd closed knotting walk and no self-inverse class coincide") {
    auto check = [](const Digraph& d) {
        const bool bip = is_bipartite(knotting_graph(d)).bipartite();
        const bool no_walk = !find_odd_closed_knotting_walk(d, 2 * d.size() + 1).has_value();
        const bool no_self = !any_self_inverse(implication_classes(d));
        CHECK(bip == no_walk);
        CHECK(bip == no_self);
    };
    for_each_small(4, false, check);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 1500; ++i) check(random_digraph(5 + i % 3, false, rng));
}

TEST_CASE("general check agrees with the brute-force oracle") {
    auto check = [](const Digraph& d) {
        GeneralCheck g = general_comparability_check(d);
        REQUIRE(g.status != GeneralCheck::Status::Inconclusive);
        const bool oracle = brute_force_ordering(d).has_value();
        CHECK((g.status == GeneralCheck::Status::Comparability) == oracle);
        if (g.ordering) CHECK_FALSE(verify_ordering(d, *g.ordering).has_value());
    };
    for_each_small(4, false, check);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 1000; ++i) check(random_digraph(5 + i % 2, false, rng));
}

TEST_CASE("a circuit inside one class means the class is self-inverse") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 600; ++i) {
        Digraph d = random_digraph(3 + i % 5, false, rng);
        ClassPartition part = implication_classes(d);
        for (ClassId c = 0; c < part.class_count(); ++c) {
            // a length-2 circuit is exactly self-inverse
            bool two = false;
            for (Pair p : part.members[c]) two = two || part.contains(c, p.reversed());
            CHECK(two == is_self_inverse(part, c));
            if (is_self_inverse(part, c)) CHECK(class_circuit(part, c).has_value());
        }
    }
}

TEST_CASE("semicomplete: self-inverse iff the class has a circuit") {
    auto check = [](const Digraph& d) {
        ClassPartition part = implication_classes(d);
        for (ClassId c = 0; c < part.class_count(); ++c)
            CHECK(is_self_inverse(part, c) == class_circuit(part, c).has_value());
    };
    for_each_small(5, true, check);
}

TEST_CASE("matrix test agrees with the ordering check") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 2000; ++i) {
        const std::size_t n = 2 + i % 6;
        Digraph d = random_digraph(n, i % 2 == 0, rng);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        Ordering o(perm);
        CHECK(matrix_principal_I2_free(d, o) == !verify_ordering(d, o).has_value());
    }
}

TEST_CASE("a comparability ordering never splits a class") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        Digraph d = random_digraph(3 + i % 4, i % 2 == 0, rng);
        auto o = brute_force_ordering(d);
        if (!o) continue;
        CHECK(audit_prop_force(d, *o, implication_classes(d)).empty());
    }
}

TEST_CASE("two consecutive pairs of a non-self-inverse class close up or hit a trivial class") {
    auto check = [](const Digraph& d) {
        ClassPartition part = implication_classes(d);
        const std::size_t n = d.size();
        for (ClassId c = 0; c < part.class_count(); ++c) {
            if (is_self_inverse(part, c)) continue;
            for (Pair p : part.members[c]) {
                const Vertex x = p.first, y = p.second;
                for (Vertex z = 0; z < n; ++z) {
                    if (z == x || z == y || !d.adjacent(y, z) || !part.contains(c, {y, z})) continue;
                    const bool ok = part.contains(c, {x, z}) || part.contains(c, {z, x}) ||
                                    part.trivial(part.class_of({x, z}));
                    CHECK(ok);
                }
            }
        }
    };
    for_each_small(5, true, check);
}

TEST_CASE("recognizer agrees with the oracle on planted and perturbed inputs") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 800; ++i) {
        const std::size_t n = 3 + i % 6;
        Digraph d = planted_semicomplete(n, 0.35, rng);
        if (i % 2) {
            // flip one symmetric arc to a single direction
            std::vector<Arc> arcs = d.arcs();
            std::uniform_int_distribution<std::size_t> pick(0, arcs.size() - 1);
            Arc a = arcs[pick(rng)];
            if (d.has_arc(a.second, a.first)) arcs.erase(std::find(arcs.begin(), arcs.end(), a));
            d = Digraph(n, arcs);
        }
        RecognitionResult r = recognize_semicomplete(d);
        CHECK(r.comparability() == brute_force_ordering(d).has_value());
        if (r.comparability()) CHECK_FALSE(verify_ordering(d, *r.ordering).has_value());
    }
}
