#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "leaper/keygraph.hpp"
#include "leaper/tour.hpp"

namespace leaper {

/// Union-find over board cells, keyed to the cycles of a two-factor.
class CycleTracker {
public:
    explicit CycleTracker(const TwoFactor& factor);

    std::size_t find(std::size_t cell);
    bool same(Cell a, Cell b) { return find(index(a)) == find(index(b)); }
    /// Returns false when the two cells were already on one cycle.
    bool merge(Cell a, Cell b);
    std::size_t count() const { return count_; }

private:
    std::size_t index(Cell c) const { return static_cast<std::size_t>(c.y) * width_ + c.x; }

    int width_;
    std::vector<std::size_t> parent_;
    std::size_t count_ = 0;
};

/// Exchanges the matching of `r` present in the two-factor for the other one.
/// Throws ConstructionError unless exactly one matching of `r` is present.
void flip_in_place(TwoFactor& factor, const Rhombus& r);
TwoFactor flip(TwoFactor factor, const Rhombus& r);

struct SpliceOptions {
    /// When set, rhombi are visited in a seeded shuffled order instead of
    /// generation order.
    std::optional<std::uint64_t> shuffle_seed;
};

struct SpliceResult {
    TwoFactor factor;
    Halving halving;
    std::size_t flips = 0;
};

/// One pass over the rhombi, flipping each whose two current edges lie on
/// different cycles. Throws ConstructionError if H is disconnected or the
/// result is not a single cycle.
SpliceResult splice_factor(const KeyGraph& key, const Halving& initial, const SpliceOptions& options = {});
Tour splice(const KeyGraph& key, const Halving& initial, const SpliceOptions& options = {});

/// Index of the forward rhombus mapped to itself by central reflection.
/// (The backward pencil holds one more self-symmetric rhombus.)
std::size_t self_symmetric_rhombus(const KeyGraph& key);

/// For each rhombus, the index of its central reflection.
std::vector<std::size_t> central_partners(const KeyGraph& key);

/// A halving in which centrally reflected rhombi carry reflected matchings.
/// Without a seed every orbit representative takes matching 0; the
/// self-symmetric forward rhombus always does.
Halving symmetric_halving(const KeyGraph& key, std::optional<std::uint64_t> seed = std::nullopt);

struct SymmetricSpliceStats {
    std::size_t paired_flips = 0;   // subcase with partner edges on different cycles
    std::size_t triple_flips = 0;   // subcase with partner edges on one cycle
};

/// Grows a centrally symmetric cycle through the self-symmetric rhombus until
/// it covers the board. Throws ConstructionError when the cycle stops growing.
Tour symmetric_splice(const KeyGraph& key, std::optional<std::uint64_t> seed = std::nullopt,
                      SymmetricSpliceStats* stats = nullptr);

/// Rotates and orients the tour to start at its smallest cell and continue to
/// the smaller of that cell's two neighbours.
Tour canonicalize(Tour tour);

/// The tour traced by a single-cycle two-factor, canonicalised.
/// Throws ConstructionError when the factor has more than one cycle.
Tour tour_from_factor(const TwoFactor& factor);

}  // namespace leaper
