#include <doctest.h>

#include <random>
#include <sstream>

#include "leaper/splice.hpp"
#include "leaper/tour_io.hpp"

using namespace leaper;

namespace {

TourFile sample(int p, int q, std::uint64_t seed) {
    const Leaper l(p, q);
    const KeyGraph key = build_key(l);
    return {p, q, l.side(), l.side(), splice(key, Halving::random(key.rhombi.size(), seed))};
}

}  // namespace

TEST_CASE("round trips preserve the tour") {
    for (auto [p, q] : {std::pair{1, 2}, {2, 5}, {1, 4}, {3, 4}}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const TourFile file = sample(p, q, seed);
            {
                std::istringstream in(write_structured(file));
                CHECK(read_structured(in) == file);
            }
            {
                std::istringstream in(write_json(file));
                CHECK(read_json(in) == file);
            }
            {
                std::istringstream in(write_grid(file.tour, file.width, file.height));
                int w = 0, h = 0;
                const Tour back = read_grid(in, w, h);
                CHECK(w == file.width);
                CHECK(h == file.height);
                CHECK(back == file.tour);
            }
        }
    }
}

TEST_CASE("structured format layout") {
    const TourFile file{1, 2, 2, 1, Tour{{{0, 0}, {1, 0}}}};
    CHECK(write_structured(file) == "1 2 2 1\n0 0\n1 0\n");
}

TEST_CASE("grid puts the highest row first") {
    const Tour t{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
    CHECK(write_grid(t, 2, 2) == "4 3\n1 2\n");
}

TEST_CASE("malformed input is rejected") {
    const TourFile file = sample(1, 2, 0);
    std::string text = write_structured(file);
    SUBCASE("truncated") {
        text.resize(text.size() / 2);
        text.erase(text.find_last_of('\n') + 1);
        std::istringstream in(text);
        CHECK_THROWS_AS(read_structured(in), ParseError);
    }
    SUBCASE("bad header") {
        std::istringstream in("1 two 6 6\n");
        CHECK_THROWS_AS(read_structured(in), ParseError);
    }
    SUBCASE("trailing garbage") {
        std::istringstream in(text + "3 3\n");
        CHECK_THROWS_AS(read_structured(in), ParseError);
    }
    SUBCASE("json missing a key") {
        std::istringstream in(R"({"p":1,"q":2,"width":6,"tour":[]})");
        CHECK_THROWS_AS(read_json(in), ParseError);
    }
    SUBCASE("grid with a repeated number") {
        std::istringstream in("1 1\n2 3\n");
        int w = 0, h = 0;
        CHECK_THROWS_AS(read_grid(in, w, h), ParseError);
    }
    SUBCASE("ragged grid") {
        std::istringstream in("1 2\n3\n");
        int w = 0, h = 0;
        CHECK_THROWS_AS(read_grid(in, w, h), ParseError);
    }
}

TEST_CASE("svg output") {
    const TourFile file = sample(1, 2, 0);
    const std::string svg = write_svg(file.tour, file.width, file.height);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}
