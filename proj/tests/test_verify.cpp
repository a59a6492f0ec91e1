#include <doctest.h>

#include <algorithm>

#include "leaper/splice.hpp"
#include "leaper/verify.hpp"

using namespace leaper;

TEST_CASE("verify_tour accepts generated tours and flags perturbations") {
    const Leaper l(2, 5);
    const KeyGraph key = build_key(l);
    const Tour good = splice(key, Halving::zeros(key.rhombi.size()));
    const TourReport ok = verify_tour(good, l, 14, 14);
    CHECK(ok.valid());
    CHECK_FALSE(ok.first_failure.has_value());

    SUBCASE("two swapped cells") {
        Tour t = good;
        std::swap(t.cells[10], t.cells[50]);
        const TourReport r = verify_tour(t, l, 14, 14);
        CHECK_FALSE(r.all_moves_legal);
        CHECK(r.all_cells_once);
        CHECK_FALSE(r.valid());
        CHECK(r.first_failure.has_value());
    }
    SUBCASE("a repeated cell") {
        Tour t = good;
        t.cells[20] = t.cells[40];
        CHECK_FALSE(verify_tour(t, l, 14, 14).all_cells_once);
    }
    SUBCASE("a missing cell") {
        Tour t = good;
        t.cells.pop_back();
        const TourReport r = verify_tour(t, l, 14, 14);
        CHECK_FALSE(r.cell_count_ok);
        CHECK_FALSE(r.all_cells_once);
    }
    SUBCASE("wrong board size") {
        CHECK_FALSE(verify_tour(good, l, 14, 15).valid());
    }
    SUBCASE("wrong leaper") {
        CHECK_FALSE(verify_tour(good, Leaper(2, 7), 14, 14).all_moves_legal);
    }
    SUBCASE("an open path") {
        // Cut the closing move by rotating so the break falls at the seam.
        Tour t = good;
        std::reverse(t.cells.begin() + 1, t.cells.begin() + 3);
        CHECK_FALSE(verify_tour(t, l, 14, 14).valid());
    }
}

TEST_CASE("central symmetry check") {
    // A (1,2) 4-cycle on a 3x4 board, symmetric about the centre:
    // (0,0) -> (1,2) -> (2,3) -> (1,1) -> (0,0).
    const Tour square{{{0, 0}, {1, 2}, {2, 3}, {1, 1}}};
    CHECK(verify_central_symmetry(square, 3, 4));
    Tour reversed = square;
    std::reverse(reversed.cells.begin(), reversed.cells.end());
    CHECK(verify_central_symmetry(reversed, 3, 4));

    const Tour lopsided{{{0, 0}, {1, 2}, {2, 0}, {1, 1}}};
    CHECK_FALSE(verify_central_symmetry(lopsided, 3, 4));

    const Leaper l(2, 5);
    const Tour sym = symmetric_splice(build_key(l));
    CHECK(verify_central_symmetry(sym, 14, 14));
    Tour rotated = sym;
    std::rotate(rotated.cells.begin(), rotated.cells.begin() + 33, rotated.cells.end());
    CHECK(verify_central_symmetry(rotated, 14, 14));
}

TEST_CASE("freeness") {
    CHECK(is_free(1, 2));
    CHECK_FALSE(is_free(1, 3));
    CHECK(is_free(3, 4));
    CHECK(is_free(1, 4));
    CHECK(is_free(2, 3));
    CHECK_FALSE(is_free(2, 4));
}

TEST_CASE("backtracking oracle") {
    const Leaper knight(1, 2);
    SUBCASE("closed knight tour on 6x6") {
        const OracleResult r = oracle_tour_search(knight, 6, 6, 10'000'000);
        REQUIRE(r.status == OracleStatus::found);
        REQUIRE(r.tour.has_value());
        CHECK(verify_tour(*r.tour, knight, 6, 6).valid());
    }
    SUBCASE("no closed tour on 5x5") {
        const OracleResult r = oracle_tour_search(knight, 5, 5, 10'000'000);
        CHECK(r.status == OracleStatus::impossible_by_parity);
        CHECK_FALSE(r.tour.has_value());
    }
    SUBCASE("a tiny budget never claims nonexistence") {
        const OracleResult r = oracle_tour_search(knight, 6, 6, 5);
        CHECK(r.status == OracleStatus::not_found_within_budget);
        CHECK_FALSE(r.tour.has_value());
    }
    SUBCASE("4x4 has no closed knight tour, reported as not found") {
        const OracleResult r = oracle_tour_search(knight, 4, 4, 10'000'000);
        CHECK(r.status == OracleStatus::not_found_within_budget);
    }
}
