#include "leaper/geom.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace leaper {

std::string to_string(Cell c) {
    std::ostringstream out;
    out << '(' << c.x << ',' << c.y << ')';
    return out.str();
}

std::string to_string(Vec v) {
    std::ostringstream out;
    out << '(' << v.dx << ',' << v.dy << ')';
    return out.str();
}

std::string to_string(const Subboard& s) {
    std::ostringstream out;
    out << '[' << s.x1 << ',' << s.x2 << "]x[" << s.y1 << ',' << s.y2 << ']';
    return out.str();
}

std::string to_string(const Edge& e) { return to_string(e.a) + "-" + to_string(e.b); }

Leaper::Leaper(int p, int q) : p_(p), q_(q) {
    if (p < 1 || q <= p) {
        throw std::invalid_argument("leaper requires 0 < p < q, got (" + std::to_string(p) + "," +
                                    std::to_string(q) + ")");
    }
    if (const int g = std::gcd(q - p, q + p); g != 1) {
        throw std::invalid_argument("p - q and p + q are not relatively prime: gcd(" +
                                    std::to_string(q - p) + "," + std::to_string(q + p) +
                                    ") = " + std::to_string(g));
    }
}

bool Leaper::is_move(Vec v) const {
    const int ax = std::abs(v.dx);
    const int ay = std::abs(v.dy);
    return (ax == p_ && ay == q_) || (ax == q_ && ay == p_);
}

bool Leaper::on_board(Cell c) const {
    return 0 <= c.x && c.x < side() && 0 <= c.y && c.y < side();
}

Cell Leaper::cell_at(std::size_t index) const {
    const auto s = static_cast<std::size_t>(side());
    return {static_cast<int>(index % s), static_cast<int>(index / s)};
}

std::array<Direction, 8> directions(const Leaper& leaper) {
    const int p = leaper.p();
    const int q = leaper.q();
    return {{{p, q}, {p, -q}, {-p, q}, {-p, -q}, {q, p}, {q, -p}, {-q, p}, {-q, -p}}};
}

Subboard Subboard::intersect(const Subboard& other) const {
    Subboard r{std::max(x1, other.x1), std::min(x2, other.x2), std::max(y1, other.y1),
               std::min(y2, other.y2)};
    if (r.empty()) return {};
    return r;
}

std::vector<Cell> Subboard::cells() const {
    std::vector<Cell> out;
    if (empty()) return out;
    out.reserve(area());
    for (int y = y1; y < y2; ++y) {
        for (int x = x1; x < x2; ++x) out.push_back({x, y});
    }
    return out;
}

Symmetry compose(Symmetry a, Symmetry b) {
    // identity=0, vertical=1, center=2, horizontal=3; vertical*horizontal=center.
    auto bits = [](Symmetry s) {
        switch (s) {
            case Symmetry::identity: return 0;
            case Symmetry::vertical_axis: return 1;
            case Symmetry::horizontal_axis: return 2;
            case Symmetry::center: return 3;
        }
        return 0;
    };
    switch (bits(a) ^ bits(b)) {
        case 1: return Symmetry::vertical_axis;
        case 2: return Symmetry::horizontal_axis;
        case 3: return Symmetry::center;
        default: return Symmetry::identity;
    }
}

Cell reflect(Cell c, Symmetry which, const Leaper& leaper) {
    const int last = leaper.side() - 1;
    switch (which) {
        case Symmetry::identity: return c;
        case Symmetry::vertical_axis: return {last - c.x, c.y};
        case Symmetry::center: return {last - c.x, last - c.y};
        case Symmetry::horizontal_axis: return {c.x, last - c.y};
    }
    return c;
}

Subboard reflect(const Subboard& s, Symmetry which, const Leaper& leaper) {
    const int n = leaper.side();
    const bool flip_x = which == Symmetry::vertical_axis || which == Symmetry::center;
    const bool flip_y = which == Symmetry::horizontal_axis || which == Symmetry::center;
    Subboard r = s;
    if (flip_x) {
        r.x1 = n - s.x2;
        r.x2 = n - s.x1;
    }
    if (flip_y) {
        r.y1 = n - s.y2;
        r.y2 = n - s.y1;
    }
    return r;
}

Edge reflect(const Edge& e, Symmetry which, const Leaper& leaper) {
    return Edge::make(reflect(e.a, which, leaper), reflect(e.b, which, leaper));
}

EdgeSet reflect(const EdgeSet& edges, Symmetry which, const Leaper& leaper) {
    EdgeSet out;
    for (const Edge& e : edges) out.insert(reflect(e, which, leaper));
    return out;
}

OffBoardError::OffBoardError(Cell cell)
    : std::out_of_range("pencil leaves the board at " + to_string(cell)), cell_(cell) {}

std::vector<Path> expand_pencil(const PencilSpec& spec, const Leaper& leaper) {
    std::vector<Path> paths;
    paths.reserve(spec.base.area());
    for (Cell start : spec.base.cells()) {
        Path path{start};
        path.reserve(spec.dirs.size() + 1);
        if (!leaper.on_board(start)) throw OffBoardError(start);
        for (Direction d : spec.dirs) {
            Cell next = path.back() + d;
            if (!leaper.on_board(next)) throw OffBoardError(next);
            path.push_back(next);
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

std::vector<Edge> path_edges(const Path& path) {
    std::vector<Edge> out;
    for (std::size_t i = 1; i < path.size(); ++i) out.push_back(Edge::make(path[i - 1], path[i]));
    return out;
}

}  // namespace leaper
