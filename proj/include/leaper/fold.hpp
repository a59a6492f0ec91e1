#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leaper/keygraph.hpp"

namespace leaper {

/// Vertex (x, y, floor) of a two-floor graph; floor is 1 or 2.
struct FoldVertex {
    int x = 0;
    int y = 0;
    int floor = 1;

    auto operator<=>(const FoldVertex&) const = default;
};

std::string to_string(const FoldVertex& v);

struct FoldEdge {
    FoldVertex u;
    FoldVertex v;

    static FoldEdge make(FoldVertex a, FoldVertex b) { return a < b ? FoldEdge{a, b} : FoldEdge{b, a}; }
    auto operator<=>(const FoldEdge&) const = default;
};

/// Simple graph on {-half..half}^2 x {1, 2}.
struct TwoFloorGraph {
    int half = 0;
    std::set<FoldEdge> edges;

    bool operator==(const TwoFloorGraph&) const = default;

    int span() const { return 2 * half + 1; }
    std::size_t vertex_count() const { return 2 * static_cast<std::size_t>(span()) * span(); }
    bool contains(const FoldVertex& v) const;
    std::size_t index(const FoldVertex& v) const;
    std::vector<FoldVertex> vertices() const;
};

/// The folding graph F of a key graph; half = s where q - p = 2s + 1.
using FoldingGraph = TwoFloorGraph;

struct CrisscrossGraph {
    int m = 0;
    int n = 0;
    TwoFloorGraph graph;
    /// Type of each edge, normalised to the representative of +-v with
    /// positive dx, or dx = 0 and dy >= 0.
    std::map<FoldEdge, Vec> type;
};

/// Projections of `cell`: one per core containing it. Throws
/// std::invalid_argument when the cell lies in no core.
std::vector<FoldVertex> project(Cell cell, const Cores& cores, int half);

/// Contracts each maximal O-path to an edge between the projections of its
/// endpoints and adds a between-floor edge for each cell in two cores.
/// Throws ConstructionError when O has a cycle.
FoldingGraph build_folding(const KeyGraph& key);

bool is_valid_crisscross(int m, int n);

/// Throws std::invalid_argument unless m, n >= 0, m + n odd and
/// gcd(m - n, m + n) = 1.
CrisscrossGraph build_crisscross(int m, int n);

/// Swaps floors 1 and 2 on every vertex.
TwoFloorGraph toggle_floors(const TwoFloorGraph& graph);

struct FoldParams {
    int r = 0;
    int m = 0;
    int n = 0;
    int h = 0;
    /// Parameters of the crisscross graph the folding graph must equal.
    int expect_m = 0;
    int expect_n = 0;
};

FoldParams fold_params(const Leaper& leaper);

struct FoldReport {
    FoldParams params;
    bool outer_acyclic = false;
    bool matches = false;
    bool folding_connected = false;
    bool key_connected = false;

    bool ok() const { return outer_acyclic && matches; }
};

/// Compares the folding graph with the predicted crisscross graph by exact
/// edge-set equality. Mismatches are reported, not thrown.
FoldReport check_folding(const Leaper& leaper);
FoldReport check_folding(const KeyGraph& key);

/// One descent step on 0 < m < n. Throws std::invalid_argument otherwise.
std::pair<int, int> crisscross_reduce(int m, int n);

/// Full descent from (m, n) (swapped first if m > n) down to (0, 1).
std::vector<std::pair<int, int>> reduction_chain(int m, int n);

bool is_connected(const TwoFloorGraph& graph);

/// Edge list text: a header `half <s> edges <count>` then `x1 y1 f1 x2 y2 f2` per line.
std::string format_edges(const TwoFloorGraph& graph);

}  // namespace leaper
