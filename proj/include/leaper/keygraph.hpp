#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "leaper/geom.hpp"
#include "leaper/two_factor.hpp"

namespace leaper {

/// The four forward and four backward cores, squares of side q - p.
struct Cores {
    std::array<Subboard, 4> forward;
    std::array<Subboard, 4> backward;

    /// Number of cores containing `c` (0, 1 or 2).
    int membership(Cell c) const;
};

Cores build_cores(const Leaper& leaper);

enum class RhombusKind { forward, backward };

/// A 4-cycle a-b-c-d joining corresponding cells of the four like-kind cores.
struct Rhombus {
    std::array<Cell, 4> cells;
    RhombusKind kind = RhombusKind::forward;

    bool operator==(const Rhombus&) const = default;

    std::array<Edge, 4> edges() const;
    /// Matching 0 is {ab, cd}; matching 1 is {bc, da}.
    std::array<Edge, 2> matching(int which) const;
};

struct InnerGraph {
    std::vector<Rhombus> rhombi;
    EdgeSet edges;
};

/// Forward rhombi first, then backward, each in row-major order of the base cell.
InnerGraph build_inner(const Leaper& leaper);

/// The six boundary pencils before reflection.
std::vector<PencilSpec> outer_pencils(const Leaper& leaper);

/// The six pencils together with all their reflections, deduplicated.
EdgeSet build_outer(const Leaper& leaper);

struct KeyGraph {
    Leaper leaper;
    Cores cores;
    std::vector<Rhombus> rhombi;
    EdgeSet inner_edges;
    EdgeSet outer_edges;
    /// Row-major per-cell core count.
    std::vector<int> core_membership;

    int side() const { return leaper.side(); }
    int membership(Cell c) const { return core_membership[leaper.index(c)]; }
    EdgeSet edges() const;
};

/// Builds and validates the key graph. Throws ConstructionError when an
/// invariant (degree rule, counts, legality, disjointness) fails.
KeyGraph build_key(const Leaper& leaper);

/// Choice of matching per rhombus (0 or 1), indexed like KeyGraph::rhombi.
struct Halving {
    std::vector<std::uint8_t> bits;

    bool operator==(const Halving&) const = default;

    static Halving zeros(std::size_t count) { return {std::vector<std::uint8_t>(count, 0)}; }
    static Halving random(std::size_t count, std::uint64_t seed);
};

/// Outer edges plus the chosen matching of every rhombus.
TwoFactor halve(const KeyGraph& key, const Halving& halving);

struct OuterDecomposition {
    /// Maximal paths of O, each starting at its endpoint that comes first in
    /// row-major order.
    std::vector<Path> paths;
    /// Cells of O lying on cycles; zero when O is acyclic.
    std::size_t cyclic_cells = 0;

    bool acyclic() const { return cyclic_cells == 0; }
};

/// Splits O into maximal paths by walking from degree-one cells.
OuterDecomposition decompose_outer(const KeyGraph& key);

/// Breadth-first connectivity of H = I + O over all board cells.
bool is_connected(const KeyGraph& key);

}  // namespace leaper
