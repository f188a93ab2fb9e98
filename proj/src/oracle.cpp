#include "compdi/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace compdi {

namespace {

bool arc(const std::vector<std::uint8_t>& m, std::size_t n, Vertex u, Vertex v) { return m[std::size_t(u) * n + v] != 0; }

// The two implications a comparability ordering must satisfy for x < y < z.
bool triple_ok(const Digraph& d, Vertex x, Vertex y, Vertex z) {
    if (d.has_arc(x, y) && d.has_arc(y, z) && !d.has_arc(x, z)) return false;
    if (d.has_arc(z, y) && d.has_arc(y, x) && !d.has_arc(z, x)) return false;
    return true;
}

Digraph from_states(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& slots,
                    const std::vector<std::uint8_t>& digits, bool semicomplete_only) {
    std::vector<Arc> arcs;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        const auto [i, j] = slots[s];
        const int state = digits[s] + (semicomplete_only ? 1 : 0);  // 0 none, 1 i->j, 2 j->i, 3 both
        if (state & 1) arcs.emplace_back(i, j);
        if (state & 2) arcs.emplace_back(j, i);
    }
    return Digraph(n, arcs);
}

std::vector<std::pair<Vertex, Vertex>> pair_slots(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    return slots;
}

}  // namespace

MatrixView::MatrixView(const Digraph& d) : n(d.size()), m(d.size() * d.size(), 0) {
    for (auto [u, v] : d.arcs()) m[std::size_t(u) * n + v] = 1;
}

MatrixView MatrixView::permuted(const Ordering& o) const {
    MatrixView out;
    out.n = n;
    out.m.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.m[i * n + j] = at(o.at(i), o.at(j));
    return out;
}

std::optional<Ordering> brute_force_ordering(const Digraph& d, std::size_t max_n) {
    const std::size_t n = d.size();
    if (n > max_n) throw OracleTooLarge();
    std::vector<Vertex> placed;
    std::vector<std::uint8_t> used(n, 0);

    // extends the prefix only while every placed triple is consistent
    std::function<bool()> extend = [&]() {
        if (placed.size() == n) return true;
        for (Vertex z = 0; z < n; ++z) {
            if (used[z]) continue;
            bool ok = true;
            for (std::size_t i = 0; ok && i < placed.size(); ++i)
                for (std::size_t j = i + 1; ok && j < placed.size(); ++j) ok = triple_ok(d, placed[i], placed[j], z);
            if (!ok) continue;
            used[z] = 1;
            placed.push_back(z);
            if (extend()) return true;
            placed.pop_back();
            used[z] = 0;
        }
        return false;
    };
    if (!extend()) return std::nullopt;
    return Ordering(placed);
}

bool matrix_principal_I2_free(const Digraph& d, const Ordering& o) {
    if (o.size() != d.size()) throw std::invalid_argument("ordering size does not match digraph");
    const MatrixView p = MatrixView(d).permuted(o);
    const std::size_t n = p.n;
    auto is_identity = [&](std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) {
        return p.at(r1, c1) == 1 && p.at(r1, c2) == 0 && p.at(r2, c1) == 0 && p.at(r2, c2) == 1;
    };
    for (std::size_t r1 = 0; r1 < n; ++r1) {
        for (std::size_t r2 = r1 + 1; r2 < n; ++r2) {
            // zero entry (r1,c2) on the diagonal: c2 = r1, c1 < c2
            for (std::size_t c1 = 0; c1 < r1; ++c1)
                if (is_identity(r1, r2, c1, r1)) return false;
            // zero entry (r2,c1) on the diagonal: c1 = r2, c2 > c1
            for (std::size_t c2 = r2 + 1; c2 < n; ++c2)
                if (is_identity(r1, r2, r2, c2)) return false;
        }
    }
    return true;
}

DigraphEnumerator::DigraphEnumerator(std::size_t n, bool semicomplete_only)
    : n_(n), semicomplete_only_(semicomplete_only), slots_(pair_slots(n)), digits_(slots_.size(), 0) {
    if (n > 6) throw std::invalid_argument("exhaustive enumeration is limited to n <= 6");
    const std::uint64_t base = semicomplete_only ? 3 : 4;
    for (std::size_t i = 0; i < slots_.size(); ++i) total_ *= base;
}

std::optional<Digraph> DigraphEnumerator::next() {
    if (produced_ == total_) return std::nullopt;
    Digraph d = from_states(n_, slots_, digits_, semicomplete_only_);
    ++produced_;
    const std::uint8_t base = semicomplete_only_ ? 3 : 4;
    for (auto& digit : digits_) {
        if (++digit < base) break;
        digit = 0;
    }
    return d;
}

std::vector<Digraph> enumerate_digraphs(std::size_t n, bool semicomplete_only) {
    DigraphEnumerator e(n, semicomplete_only);
    std::vector<Digraph> out;
    out.reserve(e.total());
    while (auto d = e.next()) out.push_back(std::move(*d));
    return out;
}

Digraph random_digraph(std::size_t n, bool semicomplete_only, std::mt19937_64& rng) {
    const auto slots = pair_slots(n);
    std::uniform_int_distribution<int> state(0, semicomplete_only ? 2 : 3);
    std::vector<std::uint8_t> digits(slots.size());
    for (auto& digit : digits) digit = static_cast<std::uint8_t>(state(rng));
    return from_states(n, slots, digits, semicomplete_only);
}

Digraph planted_semicomplete(std::size_t n, double edge_probability, std::mt19937_64& rng) {
    std::vector<Vertex> rank(n);
    std::iota(rank.begin(), rank.end(), Vertex{0});
    std::shuffle(rank.begin(), rank.end(), rng);

    // reach[i] holds the ranks above i that are comparable with it, as bit words
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> reach(n, std::vector<std::uint64_t>(words, 0));
    std::bernoulli_distribution coin(edge_probability);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) reach[i][j / 64] |= std::uint64_t{1} << (j % 64);
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((reach[i][j / 64] >> (j % 64)) & 1U)
                for (std::size_t w = 0; w < words; ++w) reach[i][w] |= reach[j][w];

    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            arcs.emplace_back(rank[i], rank[j]);
            if ((reach[i][j / 64] >> (j % 64)) & 1U) arcs.emplace_back(rank[j], rank[i]);
        }
    }
    return Digraph(n, arcs);
}

std::optional<std::vector<Vertex>> find_odd_closed_knotting_walk(const Digraph& d, std::size_t max_length) {
    const std::size_t n = d.size();
    std::vector<std::uint8_t> m(n * n, 0);
    for (auto [u, v] : d.arcs()) m[std::size_t(u) * n + v] = 1;
    auto adjacent = [&](Vertex a, Vertex b) { return arc(m, n, a, b) || arc(m, n, b, a); };

    // knot[x][a*n+b]: (x,a) and (x,b) joined by direct forcing steps anchored at x
    std::vector<std::vector<std::uint8_t>> knot(n, std::vector<std::uint8_t>(n * n, 0));
    for (Vertex x = 0; x < n; ++x) {
        auto& k = knot[x];
        for (Vertex a = 0; a < n; ++a) {
            if (a == x || !adjacent(x, a)) continue;
            k[a * n + a] = 1;
            for (Vertex b = 0; b < n; ++b) {
                if (b == x || b == a || !adjacent(x, b)) continue;
                if ((arc(m, n, a, x) && arc(m, n, x, b) && !arc(m, n, a, b)) ||
                    (arc(m, n, b, x) && arc(m, n, x, a) && !arc(m, n, b, a)))
                    k[a * n + b] = 1;
            }
        }
        // Warshall closure
        for (Vertex c = 0; c < n; ++c)
            for (Vertex a = 0; a < n; ++a)
                if (k[a * n + c])
                    for (Vertex b = 0; b < n; ++b)
                        if (k[c * n + b]) k[a * n + b] = 1;
    }
    auto knotted = [&](Vertex x, Vertex a, Vertex b) { return knot[x][std::size_t(a) * n + b] != 0; };

    // breadth-first over (last edge, parity of length) from every start edge
    const std::size_t states = n * n * 2;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(states);
    std::vector<std::size_t> dist(states);
    auto id = [n](Vertex a, Vertex b, std::size_t parity) { return (std::size_t(a) * n + b) * 2 + parity; };

    for (Vertex x0 = 0; x0 < n; ++x0) {
        for (Vertex x1 = 0; x1 < n; ++x1) {
            if (x1 == x0 || !adjacent(x0, x1)) continue;
            std::fill(dist.begin(), dist.end(), none);
            std::deque<std::size_t> queue;
            const std::size_t start = id(x0, x1, 1);
            dist[start] = 1;
            parent[start] = none;
            queue.push_back(start);
            while (!queue.empty()) {
                const std::size_t s = queue.front();
                queue.pop_front();
                const Vertex a = static_cast<Vertex>(s / 2 / n), b = static_cast<Vertex>(s / 2 % n);
                const std::size_t len = dist[s];
                if (b == x0 && len % 2 == 1 && len >= 3 && knotted(x0, x1, a)) {
                    std::vector<Vertex> walk;
                    for (std::size_t t = s; t != none; t = parent[t]) walk.push_back(static_cast<Vertex>(t / 2 % n));
                    walk.push_back(x0);
                    std::reverse(walk.begin(), walk.end());
                    return walk;
                }
                if (len >= max_length) continue;
                for (Vertex c = 0; c < n; ++c) {
                    if (c == b || !adjacent(b, c) || !knotted(b, a, c)) continue;
                    const std::size_t t = id(b, c, (len + 1) % 2);
                    if (dist[t] != none) continue;
                    dist[t] = len + 1;
                    parent[t] = s;
                    queue.push_back(t);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace compdi
