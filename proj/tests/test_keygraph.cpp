#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "leaper/error.hpp"
#include "leaper/keygraph.hpp"
#include "oracles.hpp"

using namespace leaper;

namespace {

std::vector<std::pair<int, int>> free_pairs(int max_sum) {
    std::vector<std::pair<int, int>> out;
    for (int s = 3; s <= max_sum; ++s)
        for (int p = 1; 2 * p < s; ++p)
            if (std::gcd(s - 2 * p, s) == 1) out.emplace_back(p, s - p);
    return out;
}

}  // namespace

TEST_CASE("cores of the (2,5)-leaper") {
    const Cores cores = build_cores(Leaper(2, 5));
    CHECK(cores.forward[0] == Subboard{2, 5, 2, 5});
    CHECK(cores.backward[2] == Subboard{7, 10, 7, 10});

    // Cells lying in both C'1 and C''1, by enumeration.
    std::vector<Cell> both;
    for (int x = 0; x < 14; ++x)
        for (int y = 0; y < 14; ++y)
            if (cores.forward[0].contains({x, y}) && cores.backward[0].contains({x, y})) both.push_back({x, y});
    CHECK(both == std::vector<Cell>{{4, 4}});
    CHECK(cores.forward[0].intersect(cores.backward[0]) == Subboard{4, 5, 4, 5});
}

TEST_CASE("core overlap pattern follows the 2p >= q test") {
    for (auto [p, q] : free_pairs(21)) {
        const Cores cores = build_cores(Leaper(p, q));
        std::vector<Subboard> all(cores.forward.begin(), cores.forward.end());
        all.insert(all.end(), cores.backward.begin(), cores.backward.end());
        for (const auto& s : all) {
            CHECK(s.width() == q - p);
            CHECK(s.height() == q - p);
        }
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = i + 1; j < 8; ++j) {
                const bool overlap = !all[i].intersect(all[j]).empty();
                const bool paired = j == i + 4;
                CHECK(overlap == (paired && 2 * p < q));
            }
        }
    }
}

TEST_CASE("inner graph matches a brute-force rhombus count") {
    for (auto [p, q] : free_pairs(15)) {
        const InnerGraph inner = build_inner(Leaper(p, q));
        const std::size_t brute = oracle::count_rhombi(p, q, oracle::forward_cores(p, q)) +
                                  oracle::count_rhombi(p, q, oracle::backward_cores(p, q));
        CHECK(inner.rhombi.size() == brute);
        CHECK(inner.rhombi.size() == static_cast<std::size_t>(2 * (q - p) * (q - p)));
        CHECK(inner.edges.size() == 4 * inner.rhombi.size());
    }
    const auto inner = build_inner(Leaper(2, 5));
    CHECK(inner.rhombi.size() == 18);
    CHECK(inner.rhombi.front().cells == std::array<Cell, 4>{{{2, 2}, {7, 4}, {9, 9}, {4, 7}}});
}

TEST_CASE("rhombus moves are legal and sum to zero") {
    const Leaper l(3, 8);
    for (const Rhombus& r : build_inner(l).rhombi) {
        Vec sum{};
        for (int k = 0; k < 4; ++k) {
            const Vec step = r.cells[(k + 1) % 4] - r.cells[k];
            CHECK(l.is_move(step));
            sum = {sum.dx + step.dx, sum.dy + step.dy};
        }
        CHECK(sum == Vec{0, 0});
    }
}

TEST_CASE("outer graph agrees with a raw enumeration") {
    for (auto [p, q] : free_pairs(17)) {
        const EdgeSet outer = build_outer(Leaper(p, q));
        std::set<oracle::Pair> got;
        for (const Edge& e : outer) got.insert({e.a, e.b});
        CHECK(got == oracle::outer_edges(p, q));
        // 4 (pq + pq + p^2 + p^2 + p(q-p) + p(q-p)) after dedup.
        CHECK(outer.size() == static_cast<std::size_t>(16 * p * q));
    }
}

TEST_CASE("outer graph is invariant under all four reflections") {
    for (auto [p, q] : free_pairs(13)) {
        const Leaper l(p, q);
        const EdgeSet outer = build_outer(l);
        for (Symmetry s : kAllSymmetries) CHECK(reflect(outer, s, l) == outer);
    }
}

TEST_CASE("key graph degree rule and counts") {
    for (auto [p, q] : free_pairs(19)) {
        const Leaper l(p, q);
        const KeyGraph key = build_key(l);
        std::vector<int> deg_i(l.cell_count()), deg_o(l.cell_count());
        for (const Edge& e : key.inner_edges) {
            ++deg_i[l.index(e.a)];
            ++deg_i[l.index(e.b)];
        }
        for (const Edge& e : key.outer_edges) {
            ++deg_o[l.index(e.a)];
            ++deg_o[l.index(e.b)];
        }
        for (std::size_t i = 0; i < l.cell_count(); ++i) {
            const int e = key.core_membership[i];
            REQUIRE(deg_i[i] == 2 * e);
            REQUIRE(deg_o[i] == 2 - e);
        }
        for (const Edge& e : key.inner_edges) CHECK(key.outer_edges.count(e) == 0);
        CHECK(is_connected(key));
    }
}

TEST_CASE("key graph of the (2,5)-leaper") {
    const KeyGraph key = build_key(Leaper(2, 5));
    CHECK(key.core_membership.size() == 196);
    CHECK(key.membership({0, 0}) == 0);
    CHECK(key.membership({4, 4}) == 2);
    std::size_t deg00 = 0;
    for (const Edge& e : key.outer_edges) deg00 += e.touches({0, 0}) ? 1 : 0;
    CHECK(deg00 == 2);
    std::size_t deg44 = 0;
    for (const Edge& e : key.outer_edges) deg44 += e.touches({4, 4}) ? 1 : 0;
    CHECK(deg44 == 0);
    CHECK(build_key(Leaper(1, 2)).core_membership.size() == 36);
}

TEST_CASE("outer graph is a union of paths between single-core cells") {
    for (auto [p, q] : free_pairs(23)) {
        const KeyGraph key = build_key(Leaper(p, q));
        const OuterDecomposition outer = decompose_outer(key);
        CHECK(outer.acyclic());
        std::set<Cell> endpoints;
        std::size_t edges = 0;
        for (const Path& path : outer.paths) {
            endpoints.insert(path.front());
            endpoints.insert(path.back());
            edges += path.size() - 1;
        }
        std::set<Cell> symmetric_difference;
        for (std::size_t i = 0; i < key.core_membership.size(); ++i) {
            if (key.core_membership[i] == 1) symmetric_difference.insert(key.leaper.cell_at(i));
        }
        CHECK(endpoints == symmetric_difference);
        CHECK(edges == key.outer_edges.size());
    }
}

TEST_CASE("halving yields two-factors") {
    const KeyGraph key = build_key(Leaper(2, 5));
    const TwoFactor zero = halve(key, Halving::zeros(key.rhombi.size()));
    CHECK(zero.edges().size() == 196);

    SUBCASE("flipping one bit changes exactly four edges") {
        Halving h = Halving::zeros(key.rhombi.size());
        h.bits[3] = 1;
        const TwoFactor other = halve(key, h);
        std::size_t differ = 0;
        for (const Edge& e : zero.edges()) differ += other.contains(e) ? 0 : 1;
        for (const Edge& e : other.edges()) differ += zero.contains(e) ? 0 : 1;
        CHECK(differ == 4);
    }
    SUBCASE("wrong halving length is rejected") {
        CHECK_THROWS_AS(halve(key, Halving::zeros(3)), std::invalid_argument);
    }
}

TEST_CASE("random halvings over small leapers are two-factors") {
    for (auto [p, q] : free_pairs(15)) {
        const KeyGraph key = build_key(Leaper(p, q));
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const TwoFactor f = halve(key, Halving::random(key.rhombi.size(), seed));
            REQUIRE(f.edges().size() == key.leaper.cell_count());
            std::size_t cells = 0;
            for (const Path& c : f.cycles()) cells += c.size();
            REQUIRE(cells == key.leaper.cell_count());
        }
    }
}

TEST_CASE("two-factor rejects bad degrees and canonicalises cycles") {
    CHECK_THROWS_AS(TwoFactor(2, 2, EdgeSet{Edge::make({0, 0}, {1, 0})}), ConstructionError);
    // Two disjoint 4-cycles on a 4x2 board.
    EdgeSet edges;
    for (int x0 : {0, 2}) {
        const Cell a{x0, 0}, b{x0 + 1, 0}, c{x0 + 1, 1}, d{x0, 1};
        edges.insert({Edge::make(a, b), Edge::make(b, c), Edge::make(c, d), Edge::make(d, a)});
    }
    const TwoFactor f(4, 2, edges);
    CHECK(f.cycle_count() == 2);
    const auto cycles = f.cycles();
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0] == Path{{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(cycles[1].front() == Cell{2, 0});
}
