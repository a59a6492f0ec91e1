#include "leaper/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

namespace leaper {

TourReport verify_tour(const Tour& tour, const Leaper& leaper, int width, int height) {
    TourReport report;
    const auto& cells = tour.cells;
    const std::size_t expected = static_cast<std::size_t>(width) * height;
    auto fail = [&](const std::string& message) {
        if (!report.first_failure) report.first_failure = message;
    };

    report.cell_count_ok = cells.size() == expected;
    if (!report.cell_count_ok) {
        fail("expected " + std::to_string(expected) + " cells, got " + std::to_string(cells.size()));
    }

    report.all_cells_once = true;
    std::vector<bool> seen(expected, false);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell c = cells[i];
        if (c.x < 0 || c.x >= width || c.y < 0 || c.y >= height) {
            report.all_cells_once = false;
            fail("index " + std::to_string(i) + ": cell " + to_string(c) + " is off the board");
            continue;
        }
        const auto k = static_cast<std::size_t>(c.y) * width + c.x;
        if (seen[k]) {
            report.all_cells_once = false;
            fail("index " + std::to_string(i) + ": cell " + to_string(c) + " visited twice");
        }
        seen[k] = true;
    }
    if (report.all_cells_once && std::find(seen.begin(), seen.end(), false) != seen.end()) {
        report.all_cells_once = false;
        fail("some board cells are never visited");
    }

    report.all_moves_legal = true;
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (!leaper.is_move(cells[i] - cells[i - 1])) {
            report.all_moves_legal = false;
            fail("index " + std::to_string(i) + ": " + to_string(cells[i - 1]) + " -> " +
                 to_string(cells[i]) + " is not a move");
            break;
        }
    }
    report.closed = cells.size() >= 2 && leaper.is_move(cells.front() - cells.back());
    if (!report.closed) fail("last cell does not return to the first");

    report.centrally_symmetric = verify_central_symmetry(tour, width, height);
    return report;
}

bool verify_central_symmetry(const Tour& tour, int width, int height) {
    EdgeSet edges = tour_edges(tour);
    for (const Edge& e : edges) {
        const Edge image = Edge::make({width - 1 - e.a.x, height - 1 - e.a.y},
                                      {width - 1 - e.b.x, height - 1 - e.b.y});
        if (!edges.count(image)) return false;
    }
    return true;
}

bool is_free(int p, int q) { return p >= 1 && q >= 1 && std::gcd(q - p, q + p) == 1; }

namespace {

class Backtracker {
public:
    Backtracker(const Leaper& leaper, int width, int height, std::uint64_t budget)
        : width_(width), height_(height), budget_(budget), visited_(static_cast<std::size_t>(width) * height, false) {
        for (Direction d : directions(leaper)) dirs_.push_back(d);
    }

    std::optional<Tour> run() {
        const Cell start{0, 0};
        path_.push_back(start);
        visited_[index(start)] = true;
        if (extend()) return Tour{path_};
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return nodes_ >= budget_; }

private:
    bool inside(Cell c) const { return 0 <= c.x && c.x < width_ && 0 <= c.y && c.y < height_; }
    std::size_t index(Cell c) const { return static_cast<std::size_t>(c.y) * width_ + c.x; }

    int onward(Cell c) const {
        int n = 0;
        for (Direction d : dirs_) {
            const Cell next = c + d;
            if (inside(next) && !visited_[index(next)]) ++n;
        }
        return n;
    }

    // On a closed tour every unvisited cell still needs two usable neighbours,
    // where the current head and the start count as usable. Moving the head off
    // `from` only affects cells adjacent to `from`.
    bool still_closable(Cell from, Cell head) const {
        const Cell start = path_.front();
        for (Direction d : dirs_) {
            const Cell u = from + d;
            if (!inside(u) || visited_[index(u)]) continue;
            int usable = 0;
            for (Direction e : dirs_) {
                const Cell w = u + e;
                if (!inside(w)) continue;
                if (!visited_[index(w)] || w == head || w == start) ++usable;
            }
            if (usable < 2) return false;
        }
        return true;
    }

    bool extend() {
        if (++nodes_ >= budget_) return false;
        const Cell at = path_.back();
        if (path_.size() == visited_.size()) {
            for (Direction d : dirs_) {
                if (at + d == path_.front()) return true;
            }
            return false;
        }
        std::vector<std::pair<int, Cell>> options;
        for (Direction d : dirs_) {
            const Cell next = at + d;
            if (inside(next) && !visited_[index(next)]) options.emplace_back(onward(next), next);
        }
        std::stable_sort(options.begin(), options.end(),
                         [](const auto& l, const auto& r) { return l.first < r.first; });
        for (const auto& [degree, next] : options) {
            visited_[index(next)] = true;
            path_.push_back(next);
            if (still_closable(at, next) && extend()) return true;
            path_.pop_back();
            visited_[index(next)] = false;
            if (exhausted()) return false;
        }
        return false;
    }

    int width_;
    int height_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Direction> dirs_;
    std::vector<bool> visited_;
    std::vector<Cell> path_;
};

}  // namespace

OracleResult oracle_tour_search(const Leaper& leaper, int width, int height, std::uint64_t budget) {
    OracleResult result;
    if ((static_cast<long long>(width) * height) % 2 == 1) {
        result.status = OracleStatus::impossible_by_parity;
        return result;
    }
    Backtracker search(leaper, width, height, budget);
    result.tour = search.run();
    result.nodes = search.nodes();
    result.status = result.tour ? OracleStatus::found : OracleStatus::not_found_within_budget;
    return result;
}

std::string to_string(const TourReport& report) {
    std::ostringstream out;
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    out << "cell_count_ok: " << flag(report.cell_count_ok) << '\n'
        << "all_moves_legal: " << flag(report.all_moves_legal) << '\n'
        << "all_cells_once: " << flag(report.all_cells_once) << '\n'
        << "closed: " << flag(report.closed) << '\n'
        << "centrally_symmetric: " << flag(report.centrally_symmetric) << '\n'
        << "valid: " << flag(report.valid()) << '\n';
    if (report.first_failure) out << "first_failure: " << *report.first_failure << '\n';
    return out.str();
}

}  // namespace leaper
