#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace leaper {

struct Vec {
    int dx = 0;
    int dy = 0;

    auto operator<=>(const Vec&) const = default;
    Vec operator-() const { return {-dx, -dy}; }
};

/// One of the eight move vectors of a leaper.
using Direction = Vec;

/// A board cell, addressed by the coordinates of its lower-left corner.
/// Ordering is lexicographic on (x, y).
struct Cell {
    int x = 0;
    int y = 0;

    auto operator<=>(const Cell&) const = default;
};

inline Cell operator+(Cell c, Vec v) { return {c.x + v.dx, c.y + v.dy}; }
inline Vec operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }

std::string to_string(Cell c);
std::string to_string(Vec v);

/// A free (p, q)-leaper: 0 < p < q and gcd(q - p, q + p) = 1.
class Leaper {
public:
    /// Throws std::invalid_argument when (p, q) is not a free leaper.
    Leaper(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }

    /// Side of the square board this leaper's constructions live on.
    int side() const { return 2 * (p_ + q_); }

    bool is_move(Vec v) const;
    bool on_board(Cell c) const;
    std::size_t index(Cell c) const { return static_cast<std::size_t>(c.y) * side() + c.x; }
    Cell cell_at(std::size_t index) const;
    std::size_t cell_count() const { return static_cast<std::size_t>(side()) * side(); }

    bool operator==(const Leaper&) const = default;

private:
    int p_;
    int q_;
};

/// The eight vectors (+-p, +-q) and (+-q, +-p), in a fixed order.
std::array<Direction, 8> directions(const Leaper& leaper);

/// Half-open rectangle [x1, x2) x [y1, y2).
struct Subboard {
    int x1 = 0;
    int x2 = 0;
    int y1 = 0;
    int y2 = 0;

    bool operator==(const Subboard&) const = default;

    int width() const { return x2 - x1; }
    int height() const { return y2 - y1; }
    std::size_t area() const { return static_cast<std::size_t>(width()) * height(); }
    bool empty() const { return x1 >= x2 || y1 >= y2; }
    bool contains(Cell c) const { return x1 <= c.x && c.x < x2 && y1 <= c.y && c.y < y2; }

    Cell origin() const { return {x1, y1}; }
    /// Cell at position (x, y) relative to the lower-left corner.
    Cell at(int x, int y) const { return {x1 + x, y1 + y}; }
    Vec position(Cell c) const { return c - origin(); }

    Subboard translated(Vec v) const { return {x1 + v.dx, x2 + v.dx, y1 + v.dy, y2 + v.dy}; }
    Subboard intersect(const Subboard& other) const;

    /// Cells in row-major order (y outer, x inner).
    std::vector<Cell> cells() const;
};

std::string to_string(const Subboard& s);

/// Unordered edge, stored with the lexicographically smaller endpoint first.
struct Edge {
    Cell a;
    Cell b;

    static Edge make(Cell u, Cell v) { return u < v ? Edge{u, v} : Edge{v, u}; }

    auto operator<=>(const Edge&) const = default;
    bool touches(Cell c) const { return a == c || b == c; }
    Cell other(Cell c) const { return c == a ? b : a; }
};

using EdgeSet = std::set<Edge>;

std::string to_string(const Edge& e);

enum class Symmetry { identity, vertical_axis, center, horizontal_axis };

inline constexpr std::array<Symmetry, 4> kAllSymmetries{
    Symmetry::identity, Symmetry::vertical_axis, Symmetry::center, Symmetry::horizontal_axis};

/// Klein four-group product.
Symmetry compose(Symmetry a, Symmetry b);

Cell reflect(Cell c, Symmetry which, const Leaper& leaper);
Subboard reflect(const Subboard& s, Symmetry which, const Leaper& leaper);
Edge reflect(const Edge& e, Symmetry which, const Leaper& leaper);
EdgeSet reflect(const EdgeSet& edges, Symmetry which, const Leaper& leaper);

using Path = std::vector<Cell>;

/// The pencil `base -> d1 -> ... -> dk`: one path per cell of `base`.
struct PencilSpec {
    Subboard base;
    std::vector<Direction> dirs;
};

class OffBoardError : public std::out_of_range {
public:
    explicit OffBoardError(Cell cell);
    Cell cell() const { return cell_; }

private:
    Cell cell_;
};

/// Paths are returned in the row-major order of their base cells.
/// Throws OffBoardError naming the first cell that leaves the board.
std::vector<Path> expand_pencil(const PencilSpec& spec, const Leaper& leaper);

/// Edges of a path, canonicalized.
std::vector<Edge> path_edges(const Path& path);

}  // namespace leaper
