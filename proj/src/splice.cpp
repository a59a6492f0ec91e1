#include "leaper/splice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "leaper/error.hpp"

namespace leaper {

CycleTracker::CycleTracker(const TwoFactor& factor) : width_(factor.width()) {
    const auto ids = factor.cycle_ids();
    std::vector<std::size_t> root_of_cycle;
    parent_.resize(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto id = static_cast<std::size_t>(ids[i]);
        if (id == root_of_cycle.size()) root_of_cycle.push_back(i);
        parent_[i] = root_of_cycle[id];
    }
    count_ = root_of_cycle.size();
}

std::size_t CycleTracker::find(std::size_t cell) {
    while (parent_[cell] != cell) {
        parent_[cell] = parent_[parent_[cell]];
        cell = parent_[cell];
    }
    return cell;
}

bool CycleTracker::merge(Cell a, Cell b) {
    const std::size_t ra = find(index(a));
    const std::size_t rb = find(index(b));
    if (ra == rb) return false;
    parent_[std::max(ra, rb)] = std::min(ra, rb);
    --count_;
    return true;
}

void flip_in_place(TwoFactor& factor, const Rhombus& r) {
    const auto m0 = r.matching(0);
    const auto m1 = r.matching(1);
    const int in0 = static_cast<int>(factor.contains(m0[0])) + static_cast<int>(factor.contains(m0[1]));
    const int in1 = static_cast<int>(factor.contains(m1[0])) + static_cast<int>(factor.contains(m1[1]));
    if (in0 == 2 && in1 == 0) {
        factor.exchange(m0, m1);
    } else if (in0 == 0 && in1 == 2) {
        factor.exchange(m1, m0);
    } else {
        throw ConstructionError("rhombus at " + to_string(r.cells[0]) +
                                " is not halved in the two-factor");
    }
}

TwoFactor flip(TwoFactor factor, const Rhombus& r) {
    flip_in_place(factor, r);
    return factor;
}

SpliceResult splice_factor(const KeyGraph& key, const Halving& initial, const SpliceOptions& options) {
    if (!is_connected(key)) throw ConstructionError("key graph is not connected");
    TwoFactor factor = halve(key, initial);
    Halving halving = initial;
    CycleTracker tracker(factor);

    std::vector<std::size_t> order(key.rhombi.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (options.shuffle_seed) {
        std::mt19937_64 rng(*options.shuffle_seed);
        std::shuffle(order.begin(), order.end(), rng);
    }

    std::size_t flips = 0;
    for (std::size_t i : order) {
        const Rhombus& r = key.rhombi[i];
        const auto current = r.matching(halving.bits[i]);
        if (tracker.same(current[0].a, current[1].a)) continue;
        flip_in_place(factor, r);
        halving.bits[i] ^= 1U;
        const std::size_t before = tracker.count();
        tracker.merge(current[0].a, current[1].a);
        if (tracker.count() + 1 != before) throw ConstructionError("flip did not merge two cycles");
        ++flips;
    }
    if (tracker.count() != 1 || factor.cycle_count() != 1) {
        throw ConstructionError("splice left " + std::to_string(factor.cycle_count()) + " cycles");
    }
    return {std::move(factor), std::move(halving), flips};
}

Tour splice(const KeyGraph& key, const Halving& initial, const SpliceOptions& options) {
    return tour_from_factor(splice_factor(key, initial, options).factor);
}

namespace {

std::array<Cell, 4> sorted_cells(std::array<Cell, 4> cells) {
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::array<Edge, 2> sorted_pair(std::array<Edge, 2> edges) {
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::array<Edge, 2> reflect_center(const std::array<Edge, 2>& edges, const Leaper& leaper) {
    return sorted_pair({reflect(edges[0], Symmetry::center, leaper),
                        reflect(edges[1], Symmetry::center, leaper)});
}

}  // namespace

std::vector<std::size_t> central_partners(const KeyGraph& key) {
    std::map<std::array<Cell, 4>, std::size_t> by_cells;
    for (std::size_t i = 0; i < key.rhombi.size(); ++i) by_cells.emplace(sorted_cells(key.rhombi[i].cells), i);

    std::vector<std::size_t> partners(key.rhombi.size());
    for (std::size_t i = 0; i < key.rhombi.size(); ++i) {
        std::array<Cell, 4> image;
        for (int k = 0; k < 4; ++k) image[k] = reflect(key.rhombi[i].cells[k], Symmetry::center, key.leaper);
        const auto it = by_cells.find(sorted_cells(image));
        if (it == by_cells.end()) throw ConstructionError("rhombus has no central reflection");
        partners[i] = it->second;
    }
    return partners;
}

std::size_t self_symmetric_rhombus(const KeyGraph& key) {
    const auto partners = central_partners(key);
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < partners.size(); ++i) {
        if (partners[i] != i || key.rhombi[i].kind != RhombusKind::forward) continue;
        if (found) throw ConstructionError("more than one self-symmetric forward rhombus");
        found = i;
    }
    if (!found) throw ConstructionError("no self-symmetric forward rhombus");
    return *found;
}

Halving symmetric_halving(const KeyGraph& key, std::optional<std::uint64_t> seed) {
    const auto partners = central_partners(key);
    std::optional<std::mt19937_64> rng;
    if (seed) rng.emplace(*seed);

    const std::size_t unset = 2;
    std::vector<std::size_t> bits(key.rhombi.size(), unset);
    for (std::size_t i = 0; i < key.rhombi.size(); ++i) {
        if (bits[i] != unset) continue;
        const std::size_t j = partners[i];
        if (j == i) {
            // Central reflection maps a<->c and b<->d, so each matching is fixed.
            for (int which = 0; which < 2; ++which) {
                const auto m = sorted_pair(key.rhombi[i].matching(which));
                if (reflect_center(m, key.leaper) != m) {
                    throw ConstructionError("self-symmetric rhombus has an asymmetric matching");
                }
            }
            const bool forward = key.rhombi[i].kind == RhombusKind::forward;
            bits[i] = rng && !forward ? static_cast<std::size_t>((*rng)() & 1U) : 0;
            continue;
        }
        bits[i] = rng ? static_cast<std::size_t>((*rng)() & 1U) : 0;
        const auto image = reflect_center(key.rhombi[i].matching(static_cast<int>(bits[i])), key.leaper);
        if (image == sorted_pair(key.rhombi[j].matching(0))) {
            bits[j] = 0;
        } else if (image == sorted_pair(key.rhombi[j].matching(1))) {
            bits[j] = 1;
        } else {
            throw ConstructionError("reflected matching is not a matching of the partner rhombus");
        }
    }
    Halving halving;
    halving.bits.reserve(bits.size());
    for (std::size_t b : bits) halving.bits.push_back(static_cast<std::uint8_t>(b));
    return halving;
}

Tour symmetric_splice(const KeyGraph& key, std::optional<std::uint64_t> seed, SymmetricSpliceStats* stats) {
    const Leaper& leaper = key.leaper;
    for (const Edge& e : key.edges()) {
        if (reflect(e.a, Symmetry::center, leaper) == e.b) {
            throw ConstructionError("edge " + to_string(e) + " is its own central reflection");
        }
    }
    if (!is_connected(key)) throw ConstructionError("key graph is not connected");

    const auto partners = central_partners(key);
    const std::size_t r1 = self_symmetric_rhombus(key);
    Halving halving = symmetric_halving(key, seed);
    TwoFactor factor = halve(key, halving);
    const std::size_t total = leaper.cell_count();

    auto toggle = [&](std::size_t i) {
        flip_in_place(factor, key.rhombi[i]);
        halving.bits[i] ^= 1U;
    };

    std::vector<int> ids = factor.cycle_ids();
    auto label = [&](const Edge& e) { return ids[factor.index(e.a)]; };
    auto cycle_count = [&] { return static_cast<std::size_t>(*std::max_element(ids.begin(), ids.end()) + 1); };

    {
        const auto m = key.rhombi[r1].matching(halving.bits[r1]);
        if (label(m[0]) != label(m[1])) {
            toggle(r1);
            ids = factor.cycle_ids();
        }
    }

    SymmetricSpliceStats local;
    std::size_t grown = 0;
    while (true) {
        const int c = ids[factor.index(key.rhombi[r1].cells[0])];
        const auto size = static_cast<std::size_t>(std::count(ids.begin(), ids.end(), c));
        if (size <= grown) throw ConstructionError("symmetric cycle stopped growing");
        grown = size;
        for (std::size_t k = 0; k < total; ++k) {
            if (ids[k] != c) continue;
            const Cell image = reflect(leaper.cell_at(k), Symmetry::center, leaper);
            if (ids[leaper.index(image)] != c) throw ConstructionError("growing cycle lost central symmetry");
        }
        if (size == total) break;

        // A rhombus with exactly one current edge on C.
        std::optional<std::size_t> pick;
        Edge outside_i{};
        for (std::size_t i = 0; i < key.rhombi.size() && !pick; ++i) {
            const auto m = key.rhombi[i].matching(halving.bits[i]);
            const bool in0 = label(m[0]) == c;
            const bool in1 = label(m[1]) == c;
            if (in0 != in1) {
                pick = i;
                outside_i = in0 ? m[1] : m[0];
            }
        }
        if (!pick) throw ConstructionError("no rhombus straddles the symmetric cycle before it is complete");
        const std::size_t i = *pick;
        const std::size_t j = partners[i];
        if (j == i) throw ConstructionError("straddling rhombus is self-symmetric");
        const auto mj = key.rhombi[j].matching(halving.bits[j]);
        if ((label(mj[0]) == c) == (label(mj[1]) == c)) {
            throw ConstructionError("partner rhombus does not straddle the symmetric cycle");
        }
        const Edge outside_j = label(mj[0]) == c ? mj[1] : mj[0];

        const std::size_t before = cycle_count();
        std::size_t expected = 0;
        if (label(outside_i) != label(outside_j)) {
            toggle(i);
            toggle(j);
            expected = before - 2;
            ++local.paired_flips;
        } else {
            toggle(r1);
            toggle(i);
            toggle(j);
            expected = before - 1;
            ++local.triple_flips;
        }
        ids = factor.cycle_ids();
        if (cycle_count() != expected) {
            throw ConstructionError("flip group produced " + std::to_string(cycle_count()) +
                                    " cycles, expected " + std::to_string(expected));
        }
        const auto& r1_cells = key.rhombi[r1].cells;
        const int c_after = ids[factor.index(r1_cells[0])];
        for (Cell cell : r1_cells) {
            if (ids[factor.index(cell)] != c_after) throw ConstructionError("self-symmetric rhombus split");
        }
    }
    if (stats) *stats = local;
    return tour_from_factor(factor);
}

Tour canonicalize(Tour tour) {
    auto& cells = tour.cells;
    if (cells.size() < 3) return tour;
    const auto it = std::min_element(cells.begin(), cells.end());
    std::rotate(cells.begin(), it, cells.end());
    if (cells.back() < cells[1]) std::reverse(cells.begin() + 1, cells.end());
    return tour;
}

Tour tour_from_factor(const TwoFactor& factor) {
    auto cycles = factor.cycles();
    if (cycles.size() != 1) {
        throw ConstructionError("two-factor has " + std::to_string(cycles.size()) + " cycles");
    }
    return Tour{std::move(cycles.front())};
}

}  // namespace leaper
