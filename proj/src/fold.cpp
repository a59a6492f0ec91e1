#include "leaper/fold.hpp"

#include <numeric>
#include <queue>
#include <sstream>

#include "leaper/error.hpp"

namespace leaper {

std::string to_string(const FoldVertex& v) {
    std::ostringstream out;
    out << '(' << v.x << ',' << v.y << ',' << v.floor << ')';
    return out.str();
}

bool TwoFloorGraph::contains(const FoldVertex& v) const {
    return -half <= v.x && v.x <= half && -half <= v.y && v.y <= half &&
           (v.floor == 1 || v.floor == 2);
}

std::size_t TwoFloorGraph::index(const FoldVertex& v) const {
    const auto w = static_cast<std::size_t>(span());
    return (static_cast<std::size_t>(v.floor - 1) * w + (v.y + half)) * w + (v.x + half);
}

std::vector<FoldVertex> TwoFloorGraph::vertices() const {
    std::vector<FoldVertex> out;
    out.reserve(vertex_count());
    for (int f = 1; f <= 2; ++f) {
        for (int y = -half; y <= half; ++y) {
            for (int x = -half; x <= half; ++x) out.push_back({x, y, f});
        }
    }
    return out;
}

std::vector<FoldVertex> project(Cell cell, const Cores& cores, int half) {
    std::vector<FoldVertex> out;
    for (const auto& core : cores.forward) {
        if (core.contains(cell)) {
            const Vec pos = core.position(cell);
            out.push_back({pos.dx - half, pos.dy - half, 1});
        }
    }
    for (const auto& core : cores.backward) {
        if (core.contains(cell)) {
            const Vec pos = core.position(cell);
            out.push_back({pos.dx - half, pos.dy - half, 2});
        }
    }
    if (out.empty()) throw std::invalid_argument("cell " + to_string(cell) + " lies in no core");
    return out;
}

FoldingGraph build_folding(const KeyGraph& key) {
    const int half = (key.leaper.q() - key.leaper.p() - 1) / 2;
    FoldingGraph graph;
    graph.half = half;

    const OuterDecomposition outer = decompose_outer(key);
    if (!outer.acyclic()) {
        throw ConstructionError("outer graph has " + std::to_string(outer.cyclic_cells) +
                                " cells on cycles");
    }
    for (const Path& path : outer.paths) {
        const auto from = project(path.front(), key.cores, half);
        const auto to = project(path.back(), key.cores, half);
        if (from.size() != 1 || to.size() != 1) {
            throw ConstructionError("outer path endpoint lies in two cores: " +
                                    to_string(path.front()) + " " + to_string(path.back()));
        }
        if (from[0] == to[0]) throw ConstructionError("outer path folds to a loop");
        graph.edges.insert(FoldEdge::make(from[0], to[0]));
    }
    for (std::size_t i = 0; i < key.core_membership.size(); ++i) {
        if (key.core_membership[i] != 2) continue;
        const auto both = project(key.leaper.cell_at(i), key.cores, half);
        graph.edges.insert(FoldEdge::make(both[0], both[1]));
    }
    return graph;
}

bool is_valid_crisscross(int m, int n) {
    return m >= 0 && n >= 0 && (m + n) % 2 == 1 && std::gcd(m - n, m + n) == 1;
}

namespace {

Vec normalise_type(Vec v) {
    if (v.dx < 0 || (v.dx == 0 && v.dy < 0)) return -v;
    return v;
}

}  // namespace

CrisscrossGraph build_crisscross(int m, int n) {
    if (!is_valid_crisscross(m, n)) {
        throw std::invalid_argument("invalid crisscross parameters (" + std::to_string(m) + "," +
                                    std::to_string(n) + ")");
    }
    CrisscrossGraph out;
    out.m = m;
    out.n = n;
    out.graph.half = (m + n - 1) / 2;

    struct Family {
        int from_floor;
        int to_floor;
        std::vector<Vec> types;
    };
    const std::vector<Family> families{
        {1, 1, {{m, n}, {-n, m}}},
        {2, 2, {{n, m}, {-m, n}}},
        {1, 2, {{m, m}, {-m, m}, {n, n}, {-n, n}}},
    };
    for (const Family& family : families) {
        for (int y = -out.graph.half; y <= out.graph.half; ++y) {
            for (int x = -out.graph.half; x <= out.graph.half; ++x) {
                const FoldVertex u{x, y, family.from_floor};
                for (Vec t : family.types) {
                    for (Vec v : {t, -t}) {
                        const FoldVertex w{x + v.dx, y + v.dy, family.to_floor};
                        if (!out.graph.contains(w) || w == u) continue;
                        const FoldEdge e = FoldEdge::make(u, w);
                        out.graph.edges.insert(e);
                        out.type.emplace(e, normalise_type(t));
                    }
                }
            }
        }
    }
    return out;
}

TwoFloorGraph toggle_floors(const TwoFloorGraph& graph) {
    TwoFloorGraph out;
    out.half = graph.half;
    auto toggle = [](FoldVertex v) { return FoldVertex{v.x, v.y, 3 - v.floor}; };
    for (const FoldEdge& e : graph.edges) out.edges.insert(FoldEdge::make(toggle(e.u), toggle(e.v)));
    return out;
}

FoldParams fold_params(const Leaper& leaper) {
    FoldParams params;
    params.r = leaper.q() - leaper.p();
    params.m = leaper.p() % params.r;
    params.n = params.r - params.m;
    params.h = leaper.p() / params.r;
    if (params.h % 2 == 0) {
        params.expect_m = params.m;
        params.expect_n = params.n;
    } else {
        params.expect_m = params.n;
        params.expect_n = params.m;
    }
    return params;
}

FoldReport check_folding(const Leaper& leaper) { return check_folding(build_key(leaper)); }

FoldReport check_folding(const KeyGraph& key) {
    FoldReport report;
    report.params = fold_params(key.leaper);
    report.outer_acyclic = decompose_outer(key).acyclic();
    report.key_connected = is_connected(key);
    if (!report.outer_acyclic) return report;
    const FoldingGraph folding = build_folding(key);
    const CrisscrossGraph expected = build_crisscross(report.params.expect_m, report.params.expect_n);
    report.matches = folding == expected.graph;
    report.folding_connected = is_connected(folding);
    return report;
}

std::pair<int, int> crisscross_reduce(int m, int n) {
    if (!(0 < m && m < n) || !is_valid_crisscross(m, n)) {
        throw std::invalid_argument("crisscross_reduce needs valid 0 < m < n, got (" +
                                    std::to_string(m) + "," + std::to_string(n) + ")");
    }
    if (3 * m < n) return {m, n - 2 * m};
    if (2 * m <= n) return {n - 2 * m, m};
    return {2 * m - n, m};
}

std::vector<std::pair<int, int>> reduction_chain(int m, int n) {
    if (!is_valid_crisscross(m, n)) throw std::invalid_argument("invalid crisscross parameters");
    if (m > n) std::swap(m, n);
    std::vector<std::pair<int, int>> chain{{m, n}};
    while (m != 0) {
        std::tie(m, n) = crisscross_reduce(m, n);
        chain.emplace_back(m, n);
    }
    return chain;
}

bool is_connected(const TwoFloorGraph& graph) {
    const std::size_t count = graph.vertex_count();
    if (count <= 1) return true;
    std::vector<std::vector<std::size_t>> adj(count);
    for (const FoldEdge& e : graph.edges) {
        adj[graph.index(e.u)].push_back(graph.index(e.v));
        adj[graph.index(e.v)].push_back(graph.index(e.u));
    }
    std::vector<bool> seen(count, false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const std::size_t at = frontier.front();
        frontier.pop();
        for (std::size_t next : adj[at]) {
            if (!seen[next]) {
                seen[next] = true;
                ++reached;
                frontier.push(next);
            }
        }
    }
    return reached == count;
}

std::string format_edges(const TwoFloorGraph& graph) {
    std::ostringstream out;
    out << "half " << graph.half << " edges " << graph.edges.size() << '\n';
    for (const FoldEdge& e : graph.edges) {
        out << e.u.x << ' ' << e.u.y << ' ' << e.u.floor << ' ' << e.v.x << ' ' << e.v.y << ' '
            << e.v.floor << '\n';
    }
    return out.str();
}

}  // namespace leaper
