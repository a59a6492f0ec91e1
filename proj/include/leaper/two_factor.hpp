#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leaper/geom.hpp"

namespace leaper {

/// Spanning subgraph of a width x height board in which every cell has
/// degree exactly two.
class TwoFactor {
public:
    /// Throws ConstructionError if some cell does not have degree two.
    TwoFactor(int width, int height, EdgeSet edges);

    int width() const { return width_; }
    int height() const { return height_; }
    const EdgeSet& edges() const { return edges_; }
    bool contains(const Edge& e) const { return edges_.count(e) != 0; }

    /// Removes `removed` and inserts `added`. Each removed edge must be
    /// present, each added edge absent, and every degree must stay two.
    void exchange(std::span<const Edge> removed, std::span<const Edge> added);

    /// Per-cell cycle id (row-major cell index), ids numbered 0.. in order of
    /// the first cell met in row-major order.
    std::vector<int> cycle_ids() const;
    std::size_t cycle_count() const;

    /// Cycles as cell sequences. Each starts at its lexicographically
    /// smallest cell and proceeds toward the smaller of its two neighbours;
    /// cycles are sorted by starting cell.
    std::vector<Path> cycles() const;

    std::size_t index(Cell c) const { return static_cast<std::size_t>(c.y) * width_ + c.x; }

    bool operator==(const TwoFactor&) const = default;

private:
    std::vector<std::array<Cell, 2>> neighbours() const;

    int width_;
    int height_;
    EdgeSet edges_;
};

/// Walks a cycle from `start`, first stepping to `next`.
Path trace_cycle(const std::vector<std::array<Cell, 2>>& nbrs, int width, Cell start, Cell next);

}  // namespace leaper
