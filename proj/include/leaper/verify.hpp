#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "leaper/geom.hpp"
#include "leaper/tour.hpp"

// Independent checks. Nothing here depends on the key graph or splicing code;
// only the move definition is shared with the generator.

namespace leaper {

struct TourReport {
    bool cell_count_ok = false;
    bool all_moves_legal = false;
    bool all_cells_once = false;
    bool closed = false;
    bool centrally_symmetric = false;
    /// First problem found, with the tour index and cells involved.
    std::optional<std::string> first_failure;

    bool valid() const { return cell_count_ok && all_moves_legal && all_cells_once && closed; }
};

TourReport verify_tour(const Tour& tour, const Leaper& leaper, int width, int height);

/// True iff the tour's edge set is invariant under (x, y) -> (w-1-x, h-1-y).
bool verify_central_symmetry(const Tour& tour, int width, int height);

bool is_free(int p, int q);

enum class OracleStatus { found, impossible_by_parity, not_found_within_budget };

struct OracleResult {
    OracleStatus status = OracleStatus::not_found_within_budget;
    std::optional<Tour> tour;
    std::uint64_t nodes = 0;
};

/// Backtracking search for a closed tour from (0, 0), trying moves in order of
/// fewest onward moves. Never reports nonexistence except by the colouring
/// argument (a free leaper alternates cell colours, so an odd board has no
/// closed tour).
OracleResult oracle_tour_search(const Leaper& leaper, int width, int height, std::uint64_t budget);

std::string to_string(const TourReport& report);

}  // namespace leaper
