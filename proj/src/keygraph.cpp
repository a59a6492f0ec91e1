#include "leaper/keygraph.hpp"

#include <algorithm>
#include <queue>
#include <random>

#include "leaper/error.hpp"

namespace leaper {

int Cores::membership(Cell c) const {
    int count = 0;
    for (const auto& s : forward) count += s.contains(c) ? 1 : 0;
    for (const auto& s : backward) count += s.contains(c) ? 1 : 0;
    return count;
}

Cores build_cores(const Leaper& leaper) {
    const int p = leaper.p();
    const int q = leaper.q();
    Cores cores;
    cores.forward = {{
        {p, q, p, q},
        {p + q, 2 * q, 2 * p, p + q},
        {2 * p + q, p + 2 * q, 2 * p + q, p + 2 * q},
        {2 * p, p + q, p + q, 2 * q},
    }};
    cores.backward = {{
        {2 * p, p + q, 2 * p, p + q},
        {2 * p + q, p + 2 * q, p, q},
        {p + q, 2 * q, p + q, 2 * q},
        {p, q, 2 * p + q, p + 2 * q},
    }};
    return cores;
}

std::array<Edge, 4> Rhombus::edges() const {
    return {Edge::make(cells[0], cells[1]), Edge::make(cells[1], cells[2]),
            Edge::make(cells[2], cells[3]), Edge::make(cells[3], cells[0])};
}

std::array<Edge, 2> Rhombus::matching(int which) const {
    const auto e = edges();
    return which == 0 ? std::array<Edge, 2>{e[0], e[2]} : std::array<Edge, 2>{e[1], e[3]};
}

InnerGraph build_inner(const Leaper& leaper) {
    const int p = leaper.p();
    const int q = leaper.q();
    const Cores cores = build_cores(leaper);
    const PencilSpec forward{cores.forward[0], {{q, p}, {p, q}, {-q, -p}, {-p, -q}}};
    const PencilSpec backward{cores.backward[0], {{q, -p}, {-p, q}, {-q, p}, {p, -q}}};

    InnerGraph inner;
    auto add = [&](const PencilSpec& spec, RhombusKind kind) {
        for (const Path& path : expand_pencil(spec, leaper)) {
            if (path.front() != path.back()) throw ConstructionError("rhombus path does not close");
            Rhombus r{{path[0], path[1], path[2], path[3]}, kind};
            for (const Edge& e : r.edges()) {
                if (!inner.edges.insert(e).second) {
                    throw ConstructionError("rhombi share edge " + to_string(e));
                }
            }
            inner.rhombi.push_back(r);
        }
    };
    add(forward, RhombusKind::forward);
    add(backward, RhombusKind::backward);
    return inner;
}

std::vector<PencilSpec> outer_pencils(const Leaper& leaper) {
    const int p = leaper.p();
    const int q = leaper.q();
    return {
        {{0, p, 0, q}, {{q, p}}},
        {{p, p + q, 0, p}, {{-p, q}}},
        {{0, p, 0, p}, {{p, q}}},
        {{q, p + q, 0, p}, {{-q, p}}},
        {{p, q, 0, p}, {{q, p}}},
        {{p, 2 * p, p, q}, {{-p, q}}},
    };
}

EdgeSet build_outer(const Leaper& leaper) {
    EdgeSet base;
    for (const PencilSpec& spec : outer_pencils(leaper)) {
        try {
            for (const Path& path : expand_pencil(spec, leaper)) {
                for (const Edge& e : path_edges(path)) base.insert(e);
            }
        } catch (const OffBoardError& err) {
            throw ConstructionError(std::string("outer pencil off board: ") + err.what());
        }
    }
    EdgeSet outer;
    for (Symmetry s : kAllSymmetries) {
        for (const Edge& e : base) outer.insert(reflect(e, s, leaper));
    }
    return outer;
}

EdgeSet KeyGraph::edges() const {
    EdgeSet all = inner_edges;
    all.insert(outer_edges.begin(), outer_edges.end());
    return all;
}

KeyGraph build_key(const Leaper& leaper) {
    InnerGraph inner = build_inner(leaper);
    KeyGraph key{leaper, build_cores(leaper), std::move(inner.rhombi), std::move(inner.edges),
                 build_outer(leaper), {}};

    const std::size_t cells = leaper.cell_count();
    key.core_membership.resize(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        key.core_membership[i] = key.cores.membership(leaper.cell_at(i));
    }

    const auto r = static_cast<std::size_t>(leaper.q() - leaper.p());
    const auto pq = static_cast<std::size_t>(leaper.p() * leaper.q());
    if (key.rhombi.size() != 2 * r * r) throw ConstructionError("rhombus count mismatch");
    if (key.inner_edges.size() != 8 * r * r) throw ConstructionError("inner edge count mismatch");
    if (key.outer_edges.size() != 16 * pq) {
        throw ConstructionError("outer edge count " + std::to_string(key.outer_edges.size()) +
                                " != 16pq");
    }

    std::vector<int> deg_inner(cells, 0);
    std::vector<int> deg_outer(cells, 0);
    auto check_edge = [&](const Edge& e) {
        if (!leaper.on_board(e.a) || !leaper.on_board(e.b) || !leaper.is_move(e.b - e.a)) {
            throw ConstructionError("illegal key graph edge " + to_string(e));
        }
    };
    for (const Edge& e : key.inner_edges) {
        check_edge(e);
        if (key.outer_edges.count(e)) throw ConstructionError("I and O share " + to_string(e));
        ++deg_inner[leaper.index(e.a)];
        ++deg_inner[leaper.index(e.b)];
    }
    for (const Edge& e : key.outer_edges) {
        check_edge(e);
        ++deg_outer[leaper.index(e.a)];
        ++deg_outer[leaper.index(e.b)];
    }
    for (std::size_t i = 0; i < cells; ++i) {
        const int e = key.core_membership[i];
        if (deg_inner[i] != 2 * e || deg_outer[i] != 2 - e) {
            throw ConstructionError("degree rule fails at " + to_string(leaper.cell_at(i)));
        }
    }
    return key;
}

Halving Halving::random(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Halving h;
    h.bits.resize(count);
    for (auto& b : h.bits) b = static_cast<std::uint8_t>(rng() & 1U);
    return h;
}

TwoFactor halve(const KeyGraph& key, const Halving& halving) {
    if (halving.bits.size() != key.rhombi.size()) {
        throw std::invalid_argument("halving has " + std::to_string(halving.bits.size()) +
                                    " bits for " + std::to_string(key.rhombi.size()) + " rhombi");
    }
    EdgeSet edges = key.outer_edges;
    for (std::size_t i = 0; i < key.rhombi.size(); ++i) {
        for (const Edge& e : key.rhombi[i].matching(halving.bits[i] ? 1 : 0)) edges.insert(e);
    }
    return TwoFactor(key.side(), key.side(), std::move(edges));
}

namespace {

std::vector<std::vector<Cell>> adjacency(const Leaper& leaper, const EdgeSet& edges) {
    std::vector<std::vector<Cell>> adj(leaper.cell_count());
    for (const Edge& e : edges) {
        adj[leaper.index(e.a)].push_back(e.b);
        adj[leaper.index(e.b)].push_back(e.a);
    }
    return adj;
}

}  // namespace

OuterDecomposition decompose_outer(const KeyGraph& key) {
    const Leaper& leaper = key.leaper;
    const auto adj = adjacency(leaper, key.outer_edges);
    std::vector<bool> seen(adj.size(), false);
    OuterDecomposition out;

    for (std::size_t i = 0; i < adj.size(); ++i) {
        if (seen[i] || adj[i].size() != 1) continue;
        Cell start = leaper.cell_at(i);
        Path path{start};
        seen[i] = true;
        Cell prev = start;
        Cell cur = adj[i][0];
        while (true) {
            path.push_back(cur);
            const auto ci = leaper.index(cur);
            seen[ci] = true;
            if (adj[ci].size() == 1) break;
            if (adj[ci].size() != 2) throw ConstructionError("outer degree above two");
            Cell next = adj[ci][0] == prev ? adj[ci][1] : adj[ci][0];
            prev = cur;
            cur = next;
        }
        out.paths.push_back(std::move(path));
    }
    for (std::size_t i = 0; i < adj.size(); ++i) {
        if (!seen[i] && !adj[i].empty()) ++out.cyclic_cells;
    }
    return out;
}

bool is_connected(const KeyGraph& key) {
    const Leaper& leaper = key.leaper;
    const auto adj = adjacency(leaper, key.edges());
    std::vector<bool> seen(adj.size(), false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const std::size_t at = frontier.front();
        frontier.pop();
        for (Cell n : adj[at]) {
            const auto ni = leaper.index(n);
            if (!seen[ni]) {
                seen[ni] = true;
                ++reached;
                frontier.push(ni);
            }
        }
    }
    return reached == adj.size();
}

}  // namespace leaper
