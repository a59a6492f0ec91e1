#pragma once

#include <vector>

#include "leaper/geom.hpp"
#include "leaper/tour.hpp"

namespace leaper {

enum class Orientation { translation, rotated90 };

/// k x l grid of square subboards, k along x and l along y. Copy (i, j) is a
/// translation when i + j is even and a rotation otherwise, so side-adjacent
/// copies always differ.
struct TiledLayout {
    int k = 1;
    int l = 1;

    Orientation at(int i, int j) const {
        return (i + j) % 2 == 0 ? Orientation::translation : Orientation::rotated90;
    }
};

/// Quarter turn counterclockwise about the centre of a side x side board.
Cell rotate_ccw(Cell c, int side);

/// A copy of a tour placed in a subboard, in whole-board coordinates.
struct PlacedTour {
    Subboard region;
    Orientation orientation = Orientation::translation;
    Tour tour;
};

PlacedTour place(const Tour& base, int side, int i, int j, Orientation orientation);

/// Edges ab in one copy and cd in the other such that bc and da are moves.
/// Flipping replaces ab, cd by bc, da.
struct Switch {
    Cell a;
    Cell b;
    Cell c;
    Cell d;

    auto operator<=>(const Switch&) const = default;
    Edge ab() const { return Edge::make(a, b); }
    Edge cd() const { return Edge::make(c, d); }
    Edge bc() const { return Edge::make(b, c); }
    Edge da() const { return Edge::make(d, a); }
};

/// All switches between two side-adjacent copies, each written with a < b,
/// sorted lexicographically. Throws std::invalid_argument when the copies are
/// not side-adjacent.
std::vector<Switch> find_switches(const Leaper& leaper, const PlacedTour& first, const PlacedTour& second);

/// First switch in scan order that uses none of the `taken` edges.
/// Throws ConstructionError when there is none.
Switch find_switch(const Leaper& leaper, const PlacedTour& first, const PlacedTour& second,
                   const EdgeSet& taken = {});

struct TiledTour {
    int width = 0;
    int height = 0;
    Tour tour;
    std::vector<PlacedTour> copies;  // row-major in (j, i)
    std::vector<Switch> switches;    // in spanning-tree order
};

/// Places checkerboarded copies of `base` and flips one switch per edge of a
/// comb spanning tree (each row left to right, rows joined along column 0).
/// Throws std::invalid_argument on a bad base tour or k, l < 1 and
/// ConstructionError if the result fails verification.
TiledTour tile_with_switches(const Leaper& leaper, int k, int l, const Tour& base);
Tour tile(const Leaper& leaper, int k, int l, const Tour& base);

}  // namespace leaper
