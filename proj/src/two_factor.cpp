#include "leaper/two_factor.hpp"

#include <algorithm>

#include "leaper/error.hpp"

namespace leaper {

namespace {

constexpr Cell kNone{-1, -1};

}  // namespace

TwoFactor::TwoFactor(int width, int height, EdgeSet edges)
    : width_(width), height_(height), edges_(std::move(edges)) {
    std::vector<int> degree(static_cast<std::size_t>(width_) * height_, 0);
    auto inside = [&](Cell c) { return 0 <= c.x && c.x < width_ && 0 <= c.y && c.y < height_; };
    for (const Edge& e : edges_) {
        if (!inside(e.a) || !inside(e.b)) {
            throw ConstructionError("two-factor edge off board: " + to_string(e));
        }
        ++degree[index(e.a)];
        ++degree[index(e.b)];
    }
    for (std::size_t i = 0; i < degree.size(); ++i) {
        if (degree[i] != 2) {
            Cell c{static_cast<int>(i % width_), static_cast<int>(i / width_)};
            throw ConstructionError("two-factor degree " + std::to_string(degree[i]) + " at " +
                                    to_string(c));
        }
    }
}

void TwoFactor::exchange(std::span<const Edge> removed, std::span<const Edge> added) {
    std::vector<int> delta(static_cast<std::size_t>(width_) * height_, 0);
    for (const Edge& e : removed) {
        if (!contains(e)) throw ConstructionError("exchange removes absent edge " + to_string(e));
    }
    for (const Edge& e : added) {
        if (contains(e) && std::find(removed.begin(), removed.end(), e) == removed.end()) {
            throw ConstructionError("exchange adds present edge " + to_string(e));
        }
    }
    for (const Edge& e : removed) {
        --delta[index(e.a)];
        --delta[index(e.b)];
    }
    for (const Edge& e : added) {
        ++delta[index(e.a)];
        ++delta[index(e.b)];
    }
    for (const Edge& e : removed) {
        if (delta[index(e.a)] != 0 || delta[index(e.b)] != 0) {
            throw ConstructionError("exchange changes a degree near " + to_string(e));
        }
    }
    for (const Edge& e : added) {
        if (delta[index(e.a)] != 0 || delta[index(e.b)] != 0) {
            throw ConstructionError("exchange changes a degree near " + to_string(e));
        }
    }
    for (const Edge& e : removed) edges_.erase(e);
    for (const Edge& e : added) edges_.insert(e);
}

std::vector<std::array<Cell, 2>> TwoFactor::neighbours() const {
    std::vector<std::array<Cell, 2>> nbrs(static_cast<std::size_t>(width_) * height_,
                                          {kNone, kNone});
    auto attach = [&](Cell at, Cell other) {
        auto& slot = nbrs[index(at)];
        (slot[0] == kNone ? slot[0] : slot[1]) = other;
    };
    for (const Edge& e : edges_) {
        attach(e.a, e.b);
        attach(e.b, e.a);
    }
    return nbrs;
}

std::vector<int> TwoFactor::cycle_ids() const {
    const auto nbrs = neighbours();
    std::vector<int> ids(nbrs.size(), -1);
    int next_id = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] >= 0) continue;
        Cell start{static_cast<int>(i % width_), static_cast<int>(i / width_)};
        Cell prev = start;
        Cell cur = nbrs[i][0];
        ids[i] = next_id;
        while (cur != start) {
            ids[index(cur)] = next_id;
            const auto& n = nbrs[index(cur)];
            Cell step = n[0] == prev ? n[1] : n[0];
            prev = cur;
            cur = step;
        }
        ++next_id;
    }
    return ids;
}

std::size_t TwoFactor::cycle_count() const {
    const auto ids = cycle_ids();
    return ids.empty() ? 0 : static_cast<std::size_t>(*std::max_element(ids.begin(), ids.end()) + 1);
}

Path trace_cycle(const std::vector<std::array<Cell, 2>>& nbrs, int width, Cell start, Cell next) {
    auto idx = [width](Cell c) { return static_cast<std::size_t>(c.y) * width + c.x; };
    Path path{start};
    Cell prev = start;
    Cell cur = next;
    while (cur != start) {
        path.push_back(cur);
        if (path.size() > nbrs.size()) throw ConstructionError("cycle walk does not close");
        const auto& n = nbrs[idx(cur)];
        Cell step = n[0] == prev ? n[1] : n[0];
        prev = cur;
        cur = step;
    }
    return path;
}

std::vector<Path> TwoFactor::cycles() const {
    const auto nbrs = neighbours();
    std::vector<bool> seen(nbrs.size(), false);
    std::vector<Path> out;
    // Row-major scan meets cells in (y, x) order; lexicographic minimum is by (x, y),
    // so scan column-major instead.
    for (int x = 0; x < width_; ++x) {
        for (int y = 0; y < height_; ++y) {
            Cell start{x, y};
            if (seen[index(start)]) continue;
            const auto& n = nbrs[index(start)];
            Path cycle = trace_cycle(nbrs, width_, start, std::min(n[0], n[1]));
            for (Cell c : cycle) seen[index(c)] = true;
            out.push_back(std::move(cycle));
        }
    }
    return out;
}

}  // namespace leaper
