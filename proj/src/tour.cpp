#include "leaper/tour.hpp"

namespace leaper {

EdgeSet tour_edges(const Tour& tour) {
    EdgeSet edges;
    const std::size_t n = tour.cells.size();
    for (std::size_t i = 0; i < n; ++i) edges.insert(Edge::make(tour.cells[i], tour.cells[(i + 1) % n]));
    return edges;
}

}  // namespace leaper
