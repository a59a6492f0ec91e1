#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "leaper/tour.hpp"

namespace leaper {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A tour together with the leaper and board it was produced for.
struct TourFile {
    int p = 0;
    int q = 0;
    int width = 0;
    int height = 0;
    Tour tour;

    bool operator==(const TourFile&) const = default;
};

/// Header line `p q width height`, then one `x y` line per cell in tour order.
std::string write_structured(const TourFile& file);
/// Requires exactly width * height cell lines.
TourFile read_structured(std::istream& in);

/// {"p":..,"q":..,"width":..,"height":..,"tour":[[x,y],...]}
std::string write_json(const TourFile& file);
TourFile read_json(std::istream& in);

/// `height` rows of `width` right-aligned tour positions (1-based), highest y
/// first.
std::string write_grid(const Tour& tour, int width, int height);
/// Reconstructs the tour order from a grid; sets width and height.
Tour read_grid(std::istream& in, int& width, int& height);

/// Closed polyline through cell centres at unit spacing over a light grid.
std::string write_svg(const Tour& tour, int width, int height);

}  // namespace leaper
