#pragma once

#include <vector>

#include "leaper/geom.hpp"

namespace leaper {

/// Closed tour as a cyclic cell sequence; the last cell joins the first.
struct Tour {
    std::vector<Cell> cells;

    bool operator==(const Tour&) const = default;
    std::size_t size() const { return cells.size(); }
};

/// Cyclic edges of the tour, including the closing one.
EdgeSet tour_edges(const Tour& tour);

}  // namespace leaper
