#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "leaper/geom.hpp"
#include "leaper/tour.hpp"
#include "leaper/verify.hpp"

namespace leaper {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailure = 1, kExitUsage = 2 };

enum class Mode { plain, symmetric };
enum class Format { tour, json, grid, svg };

struct RunConfig {
    int p = 1;
    int q = 2;
    Mode mode = Mode::plain;
    std::optional<int> tile_k;
    std::optional<int> tile_l;
    /// Randomises the initial halving only.
    std::optional<std::uint64_t> seed;
    Format format = Format::tour;
    /// Empty or "-" writes to standard output.
    std::string output;
};

struct GeneratedTour {
    Leaper leaper;
    int width;
    int height;
    Tour tour;
};

/// Builds, tiles and self-verifies a tour. Throws std::invalid_argument for a
/// bad configuration and ConstructionError if verification fails.
GeneratedTour generate(const RunConfig& config);

std::string render(const GeneratedTour& generated, Format format);

int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err);

enum class InputFormat { automatic, tour, json, grid };

struct VerifyConfig {
    std::string path;
    std::optional<int> p;
    std::optional<int> q;
    std::optional<int> width;
    std::optional<int> height;
    bool require_symmetry = false;
    InputFormat format = InputFormat::automatic;
};

int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err);

int cmd_fold(int p, int q, bool dump_edges, std::ostream& out, std::ostream& err);

struct InstanceReport {
    int p = 0;
    int q = 0;
    bool counts = false;      // rhombus / edge counts and the H degree rule
    bool halvings = false;    // random halvings give two-factors
    bool folding = false;     // folding graph equals the predicted crisscross graph, O acyclic
    bool crisscross = false;  // crisscross graph connected, reduction chain reaches (0,1)
    bool tour = false;        // generated tour verifies
    bool symmetric = false;   // symmetric tour verifies and is centrally symmetric
    double seconds = 0.0;
    std::string failure;

    bool ok() const { return counts && halvings && folding && crisscross && tour && symmetric; }
};

InstanceReport run_instance(const Leaper& leaper, int halvings);

/// Free leapers with p + q <= max_sum, ordered by (p + q, p).
std::vector<Leaper> free_leapers(int max_sum);

std::vector<InstanceReport> run_sweep(int max_sum, int halvings, unsigned jobs);

int cmd_sweep(int max_sum, int halvings, unsigned jobs, std::ostream& out, std::ostream& err);

}  // namespace leaper
