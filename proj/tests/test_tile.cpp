#include <doctest.h>

#include <algorithm>
#include <set>

#include "leaper/error.hpp"
#include "leaper/splice.hpp"
#include "leaper/tile.hpp"
#include "leaper/verify.hpp"

using namespace leaper;

namespace {

Tour base_tour(const Leaper& l) {
    const KeyGraph key = build_key(l);
    return splice(key, Halving::zeros(key.rhombi.size()));
}

}  // namespace

TEST_CASE("checkerboard layout alternates orientations") {
    const TiledLayout layout{4, 3};
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 4; ++i) {
            if (i + 1 < 4) CHECK(layout.at(i, j) != layout.at(i + 1, j));
            if (j + 1 < 3) CHECK(layout.at(i, j) != layout.at(i, j + 1));
        }
    }
    CHECK(layout.at(0, 0) == Orientation::translation);
}

TEST_CASE("rotation is a counterclockwise quarter turn") {
    CHECK(rotate_ccw({0, 0}, 6) == Cell{5, 0});
    CHECK(rotate_ccw({5, 0}, 6) == Cell{5, 5});
    Cell c{1, 4};
    for (int k = 0; k < 4; ++k) c = rotate_ccw(c, 6);
    CHECK(c == Cell{1, 4});
}

TEST_CASE("rotated copy carries the rotated edge set") {
    const Leaper l(2, 5);
    const Tour base = base_tour(l);
    const PlacedTour copy = place(base, 14, 1, 0, Orientation::rotated90);
    EdgeSet expected;
    for (const Edge& e : tour_edges(base)) {
        const Cell a = rotate_ccw(e.a, 14), b = rotate_ccw(e.b, 14);
        expected.insert(Edge::make({a.x + 14, a.y}, {b.x + 14, b.y}));
    }
    CHECK(tour_edges(copy.tour) == expected);
}

TEST_CASE("the knight switch between a translation copy and a rotated copy") {
    const Leaper l(1, 2);
    const Tour base = base_tour(l);
    const PlacedTour left = place(base, 6, 0, 0, Orientation::translation);
    const PlacedTour right = place(base, 6, 1, 0, Orientation::rotated90);
    const auto switches = find_switches(l, left, right);
    // a = (2p+q, 0), b = (3p+q, q) in the left copy; c = (p, p+q), d = (0, p) in the right.
    const Switch expected{{4, 0}, {5, 2}, {6 + 1, 3}, {6 + 0, 1}};
    CHECK(std::find(switches.begin(), switches.end(), expected) != switches.end());
    for (const Switch& s : switches) {
        CHECK(left.region.contains(s.a));
        CHECK(left.region.contains(s.b));
        CHECK(right.region.contains(s.c));
        CHECK(right.region.contains(s.d));
        CHECK(l.is_move(s.c - s.b));
        CHECK(l.is_move(s.a - s.d));
    }
}

TEST_CASE("switches exist for all four adjacency orientations") {
    for (auto [p, q] : {std::pair{1, 2}, {2, 5}, {3, 4}}) {
        const Leaper l(p, q);
        const int side = l.side();
        const Tour base = base_tour(l);
        const auto t00 = place(base, side, 0, 0, Orientation::translation);
        const auto r10 = place(base, side, 1, 0, Orientation::rotated90);
        const auto r01 = place(base, side, 0, 1, Orientation::rotated90);
        const auto t11 = place(base, side, 1, 1, Orientation::translation);
        CHECK_FALSE(find_switches(l, t00, r10).empty());  // translation left of rotation
        CHECK_FALSE(find_switches(l, r01, t11).empty());  // rotation left of translation
        CHECK_FALSE(find_switches(l, t00, r01).empty());  // translation below rotation
        CHECK_FALSE(find_switches(l, r10, t11).empty());  // rotation below translation
        CHECK_THROWS_AS(find_switches(l, t00, t11), std::invalid_argument);
    }
}

TEST_CASE("find_switch skips taken edges") {
    const Leaper l(1, 2);
    const Tour base = base_tour(l);
    const auto left = place(base, 6, 0, 0, Orientation::translation);
    const auto right = place(base, 6, 1, 0, Orientation::rotated90);
    const Switch first = find_switch(l, left, right);
    const Switch second = find_switch(l, left, right, EdgeSet{first.ab()});
    CHECK(second.ab() != first.ab());
    EdgeSet everything = tour_edges(left.tour);
    CHECK_THROWS_AS(find_switch(l, left, right, everything), ConstructionError);
}

TEST_CASE("tiled tours") {
    SUBCASE("1x1 leaves the base unchanged") {
        const Leaper l(1, 2);
        const Tour base = base_tour(l);
        CHECK(tile(l, 1, 1, base) == base);
    }
    SUBCASE("knight 2x3 is a 216-cell tour on 12x18") {
        const Leaper l(1, 2);
        const Tour t = tile(l, 2, 3, base_tour(l));
        CHECK(t.size() == 216);
        CHECK(verify_tour(t, l, 12, 18).valid());
    }
    SUBCASE("(2,5) 2x2 is a 784-cell tour") {
        const Leaper l(2, 5);
        const Tour t = tile(l, 2, 2, base_tour(l));
        CHECK(t.size() == 784);
        CHECK(verify_tour(t, l, 28, 28).valid());
    }
    SUBCASE("bad inputs") {
        const Leaper l(1, 2);
        CHECK_THROWS_AS(tile(l, 0, 2, base_tour(l)), std::invalid_argument);
        Tour broken = base_tour(l);
        std::swap(broken.cells[0], broken.cells[1]);
        CHECK_THROWS_AS(tile(l, 2, 2, broken), std::invalid_argument);
    }
}

TEST_CASE("tiling invariants") {
    for (auto [p, q, k, l] : {std::tuple{1, 2, 3, 3}, {2, 5, 2, 3}, {1, 4, 4, 2}}) {
        const Leaper leaper(p, q);
        const TiledTour tiled = tile_with_switches(leaper, k, l, base_tour(leaper));
        CHECK(tiled.switches.size() == static_cast<std::size_t>(k * l - 1));

        std::set<Edge> switch_edges;
        for (const Switch& s : tiled.switches) {
            CHECK(switch_edges.insert(s.ab()).second);
            CHECK(switch_edges.insert(s.cd()).second);
        }

        const EdgeSet result = tour_edges(tiled.tour);
        for (const PlacedTour& copy : tiled.copies) {
            for (const Edge& e : tour_edges(copy.tour)) {
                if (!result.count(e)) CHECK(switch_edges.count(e) == 1);
            }
        }
        for (const Edge& e : result) {
            bool inside_a_copy = false;
            for (const PlacedTour& copy : tiled.copies) {
                inside_a_copy |= copy.region.contains(e.a) && copy.region.contains(e.b);
            }
            if (!inside_a_copy) {
                const bool is_added = std::any_of(tiled.switches.begin(), tiled.switches.end(),
                                                  [&](const Switch& s) { return s.bc() == e || s.da() == e; });
                CHECK(is_added);
            }
        }
    }
}
