#include "leaper/tile.hpp"

#include <array>
#include <set>

#include "leaper/error.hpp"
#include "leaper/splice.hpp"
#include "leaper/two_factor.hpp"
#include "leaper/verify.hpp"

namespace leaper {

Cell rotate_ccw(Cell c, int side) { return {side - 1 - c.y, c.x}; }

PlacedTour place(const Tour& base, int side, int i, int j, Orientation orientation) {
    PlacedTour placed{{i * side, (i + 1) * side, j * side, (j + 1) * side}, orientation, {}};
    placed.tour.cells.reserve(base.size());
    for (Cell c : base.cells) {
        const Cell local = orientation == Orientation::rotated90 ? rotate_ccw(c, side) : c;
        placed.tour.cells.push_back(placed.region.at(local.x, local.y));
    }
    return placed;
}

namespace {

/// Tour neighbours of every cell of a placed copy, indexed by local position.
class NeighbourMap {
public:
    explicit NeighbourMap(const PlacedTour& placed) : region_(placed.region) {
        slots_.resize(region_.area());
        const auto& cells = placed.tour.cells;
        const std::size_t n = cells.size();
        for (std::size_t i = 0; i < n; ++i) {
            slots_[local(cells[i])] = {cells[(i + n - 1) % n], cells[(i + 1) % n]};
        }
    }

    const std::array<Cell, 2>& operator[](Cell c) const { return slots_[local(c)]; }

private:
    std::size_t local(Cell c) const {
        const Vec pos = region_.position(c);
        return static_cast<std::size_t>(pos.dy) * region_.width() + pos.dx;
    }

    Subboard region_;
    std::vector<std::array<Cell, 2>> slots_;
};

bool side_adjacent(const Subboard& s, const Subboard& t) {
    const bool horizontal = (s.x2 == t.x1 || t.x2 == s.x1) && s.y1 == t.y1 && s.y2 == t.y2;
    const bool vertical = (s.y2 == t.y1 || t.y2 == s.y1) && s.x1 == t.x1 && s.x2 == t.x2;
    return horizontal || vertical;
}

}  // namespace

std::vector<Switch> find_switches(const Leaper& leaper, const PlacedTour& first, const PlacedTour& second) {
    if (!side_adjacent(first.region, second.region)) {
        throw std::invalid_argument("copies " + to_string(first.region) + " and " +
                                    to_string(second.region) + " are not side-adjacent");
    }
    const NeighbourMap first_nbrs(first);
    const NeighbourMap second_nbrs(second);
    std::set<Switch> found;
    for (Cell b : first.region.cells()) {
        for (Direction v : directions(leaper)) {
            const Cell c = b + v;
            if (!second.region.contains(c)) continue;
            for (Cell a : first_nbrs[b]) {
                for (Cell d : second_nbrs[c]) {
                    if (!leaper.is_move(a - d)) continue;
                    found.insert(a < b ? Switch{a, b, c, d} : Switch{b, a, d, c});
                }
            }
        }
    }
    return {found.begin(), found.end()};
}

Switch find_switch(const Leaper& leaper, const PlacedTour& first, const PlacedTour& second, const EdgeSet& taken) {
    for (const Switch& s : find_switches(leaper, first, second)) {
        if (!taken.count(s.ab()) && !taken.count(s.cd())) return s;
    }
    throw ConstructionError("no free switch between " + to_string(first.region) + " and " +
                            to_string(second.region));
}

TiledTour tile_with_switches(const Leaper& leaper, int k, int l, const Tour& base) {
    const int side = leaper.side();
    if (k < 1 || l < 1) throw std::invalid_argument("tile dimensions must be at least 1");
    if (!verify_tour(base, leaper, side, side).valid()) {
        throw std::invalid_argument("base tour is not a valid tour of the " + std::to_string(side) +
                                    "-board");
    }

    TiledTour out;
    out.width = side * k;
    out.height = side * l;
    const TiledLayout layout{k, l};
    EdgeSet all;
    for (int j = 0; j < l; ++j) {
        for (int i = 0; i < k; ++i) {
            out.copies.push_back(place(base, side, i, j, layout.at(i, j)));
            const EdgeSet edges = tour_edges(out.copies.back().tour);
            all.insert(edges.begin(), edges.end());
        }
    }
    if (k == 1 && l == 1) {
        out.tour = base;
        return out;
    }

    TwoFactor factor(out.width, out.height, std::move(all));
    CycleTracker tracker(factor);
    if (tracker.count() != static_cast<std::size_t>(k) * l) throw ConstructionError("copies are not single cycles");

    auto copy = [&](int i, int j) -> const PlacedTour& { return out.copies[static_cast<std::size_t>(j) * k + i]; };
    std::vector<std::pair<const PlacedTour*, const PlacedTour*>> tree;
    for (int j = 0; j < l; ++j) {
        for (int i = 0; i + 1 < k; ++i) tree.emplace_back(&copy(i, j), &copy(i + 1, j));
    }
    for (int j = 0; j + 1 < l; ++j) tree.emplace_back(&copy(0, j), &copy(0, j + 1));

    EdgeSet taken;
    for (const auto& [first, second] : tree) {
        const Switch s = find_switch(leaper, *first, *second, taken);
        if (tracker.same(s.a, s.c)) throw ConstructionError("switch joins a cycle to itself");
        const std::array<Edge, 2> removed{s.ab(), s.cd()};
        const std::array<Edge, 2> added{s.bc(), s.da()};
        factor.exchange(removed, added);
        const std::size_t before = tracker.count();
        tracker.merge(s.a, s.c);
        if (tracker.count() + 1 != before) throw ConstructionError("switch did not merge two cycles");
        taken.insert(removed.begin(), removed.end());
        out.switches.push_back(s);
    }

    out.tour = tour_from_factor(factor);
    const TourReport report = verify_tour(out.tour, leaper, out.width, out.height);
    if (!report.valid()) {
        throw ConstructionError("tiled tour failed verification: " + report.first_failure.value_or("?"));
    }
    return out;
}

Tour tile(const Leaper& leaper, int k, int l, const Tour& base) {
    return tile_with_switches(leaper, k, l, base).tour;
}

}  // namespace leaper
