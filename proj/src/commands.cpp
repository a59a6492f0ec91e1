#include "leaper/commands.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "leaper/error.hpp"
#include "leaper/fold.hpp"
#include "leaper/splice.hpp"
#include "leaper/tile.hpp"
#include "leaper/tour_io.hpp"

namespace leaper {

GeneratedTour generate(const RunConfig& config) {
    const Leaper leaper(config.p, config.q);
    if (config.tile_k.has_value() != config.tile_l.has_value()) {
        throw std::invalid_argument("--tile-k and --tile-l must be given together");
    }
    const int k = config.tile_k.value_or(1);
    const int l = config.tile_l.value_or(1);
    if (k < 1 || l < 1) throw std::invalid_argument("tile dimensions must be at least 1");

    const KeyGraph key = build_key(leaper);
    Tour base;
    if (config.mode == Mode::symmetric) {
        base = symmetric_splice(key, config.seed);
    } else {
        const Halving initial =
            config.seed ? Halving::random(key.rhombi.size(), *config.seed) : Halving::zeros(key.rhombi.size());
        base = splice(key, initial);
    }

    GeneratedTour out{leaper, leaper.side() * k, leaper.side() * l, {}};
    out.tour = (k == 1 && l == 1) ? base : tile(leaper, k, l, base);

    const TourReport report = verify_tour(out.tour, leaper, out.width, out.height);
    if (!report.valid()) {
        throw ConstructionError("generated tour failed verification: " + report.first_failure.value_or("?"));
    }
    if (config.mode == Mode::symmetric && k == 1 && l == 1 && !report.centrally_symmetric) {
        throw ConstructionError("symmetric tour is not centrally symmetric");
    }
    return out;
}

std::string render(const GeneratedTour& generated, Format format) {
    const TourFile file{generated.leaper.p(), generated.leaper.q(), generated.width, generated.height,
                        generated.tour};
    switch (format) {
        case Format::tour: return write_structured(file);
        case Format::json: return write_json(file);
        case Format::grid: return write_grid(generated.tour, generated.width, generated.height);
        case Format::svg: return write_svg(generated.tour, generated.width, generated.height);
    }
    return {};
}

int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::optional<GeneratedTour> generated;
    try {
        generated = generate(config);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    const std::string text = render(*generated, config.format);
    if (config.output.empty() || config.output == "-") {
        out << text;
        return out ? kExitOk : kExitVerificationFailure;
    }
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << config.output << '\n';
        return kExitUsage;
    }
    file << text;
    return file ? kExitOk : kExitVerificationFailure;
}

namespace {

InputFormat sniff(const std::string& text) {
    std::istringstream in(text);
    std::string first;
    std::string second;
    std::getline(in, first);
    std::getline(in, second);
    const auto first_char = first.find_first_not_of(" \t\r");
    if (first_char != std::string::npos && first[first_char] == '{') return InputFormat::json;
    auto tokens = [](const std::string& line) {
        std::istringstream s(line);
        std::size_t n = 0;
        std::string t;
        while (s >> t) ++n;
        return n;
    };
    if (tokens(first) == 4 && tokens(second) == 2) return InputFormat::tour;
    return InputFormat::grid;
}

}  // namespace

int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err) {
    std::ifstream file(config.path, std::ios::binary);
    if (!file) {
        err << "error: cannot read " << config.path << '\n';
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string text = buffer.str();

    TourFile parsed;
    try {
        std::istringstream in(text);
        const InputFormat format = config.format == InputFormat::automatic ? sniff(text) : config.format;
        switch (format) {
            case InputFormat::json: parsed = read_json(in); break;
            case InputFormat::grid: {
                int width = 0;
                int height = 0;
                parsed.tour = read_grid(in, width, height);
                parsed.width = width;
                parsed.height = height;
                if (!config.p || !config.q) {
                    err << "error: grid input needs --p and --q\n";
                    return kExitUsage;
                }
                break;
            }
            default: parsed = read_structured(in); break;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }

    const int p = config.p.value_or(parsed.p);
    const int q = config.q.value_or(parsed.q);
    const int width = config.width.value_or(parsed.width);
    const int height = config.height.value_or(parsed.height);
    if (!is_free(p, q) || p >= q) {
        err << "error: (" << p << "," << q << ") is not a free leaper with p < q\n";
        return kExitUsage;
    }
    const TourReport report = verify_tour(parsed.tour, Leaper(p, q), width, height);
    out << "leaper: (" << p << "," << q << ") board: " << width << "x" << height << '\n' << to_string(report);
    const bool ok = report.valid() && (!config.require_symmetry || report.centrally_symmetric);
    return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_fold(int p, int q, bool dump_edges, std::ostream& out, std::ostream& err) {
    std::optional<Leaper> leaper;
    try {
        leaper.emplace(p, q);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const KeyGraph key = build_key(*leaper);
    const FoldReport report = check_folding(key);
    const auto& lp = report.params;
    out << "r=" << lp.r << " m=" << lp.m << " n=" << lp.n << " h=" << lp.h << " expect R(" << lp.expect_m << ","
        << lp.expect_n << "): " << (report.matches ? "MATCH" : "MISMATCH") << ", "
        << (report.outer_acyclic ? "O acyclic" : "O has cycles") << ", "
        << (report.folding_connected ? "F connected" : "F disconnected") << '\n';
    if (dump_edges && report.outer_acyclic) {
        out << "F\n" << format_edges(build_folding(key));
        out << "R(" << lp.expect_m << "," << lp.expect_n << ")\n"
            << format_edges(build_crisscross(lp.expect_m, lp.expect_n).graph);
    }
    return report.ok() && report.folding_connected ? kExitOk : kExitVerificationFailure;
}

InstanceReport run_instance(const Leaper& leaper, int halvings) {
    const auto started = std::chrono::steady_clock::now();
    InstanceReport report;
    report.p = leaper.p();
    report.q = leaper.q();
    auto note = [&](const std::string& what) {
        if (report.failure.empty()) report.failure = what;
    };

    try {
        const KeyGraph key = build_key(leaper);
        const auto r = static_cast<std::size_t>(leaper.q() - leaper.p());
        const auto pq = static_cast<std::size_t>(leaper.p() * leaper.q());
        report.counts = key.rhombi.size() == 2 * r * r && key.inner_edges.size() == 8 * r * r &&
                        key.outer_edges.size() == 16 * pq;
        std::vector<int> degree(leaper.cell_count(), 0);
        for (const Edge& e : key.edges()) {
            ++degree[leaper.index(e.a)];
            ++degree[leaper.index(e.b)];
        }
        for (std::size_t i = 0; i < degree.size(); ++i) {
            if (degree[i] != 2 + key.core_membership[i]) report.counts = false;
        }
        if (!report.counts) note("counts");

        report.halvings = true;
        for (int s = 0; s < halvings; ++s) {
            try {
                halve(key, Halving::random(key.rhombi.size(), static_cast<std::uint64_t>(s)));
            } catch (const ConstructionError&) {
                report.halvings = false;
            }
        }
        if (!report.halvings) note("halvings");

        const FoldReport fold = check_folding(key);
        // Connectivity transfer: F connected and O acyclic imply H connected.
        const bool transfer = !(fold.folding_connected && fold.outer_acyclic) || fold.key_connected;
        report.folding = fold.ok() && transfer;
        if (!report.folding) note("folding");

        const auto& lp = fold.params;
        const auto chain = reduction_chain(lp.expect_m, lp.expect_n);
        report.crisscross = is_connected(build_crisscross(lp.expect_m, lp.expect_n).graph) &&
                        chain.back() == std::pair{0, 1};
        if (!report.crisscross) note("crisscross");

        const int side = leaper.side();
        const Tour plain = splice(key, Halving::zeros(key.rhombi.size()));
        report.tour = verify_tour(plain, leaper, side, side).valid();
        if (!report.tour) note("tour");

        const Tour symmetric = symmetric_splice(key);
        const TourReport sym = verify_tour(symmetric, leaper, side, side);
        report.symmetric = sym.valid() && sym.centrally_symmetric;
        if (!report.symmetric) note("symmetric");
    } catch (const std::exception& e) {
        note(e.what());
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

std::vector<Leaper> free_leapers(int max_sum) {
    std::vector<Leaper> out;
    for (int sum = 3; sum <= max_sum; ++sum) {
        for (int p = 1; 2 * p < sum; ++p) {
            if (is_free(p, sum - p)) out.emplace_back(p, sum - p);
        }
    }
    return out;
}

std::vector<InstanceReport> run_sweep(int max_sum, int halvings, unsigned jobs) {
    const std::vector<Leaper> leapers = free_leapers(max_sum);
    std::vector<InstanceReport> reports(leapers.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < leapers.size(); i = next++) reports[i] = run_instance(leapers[i], halvings);
    };
    const unsigned count = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(leapers.size())));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < count; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    return reports;
}

int cmd_sweep(int max_sum, int halvings, unsigned jobs, std::ostream& out, std::ostream& err) {
    if (max_sum < 3) {
        err << "error: --max-sum must be at least 3\n";
        return kExitUsage;
    }
    const auto reports = run_sweep(max_sum, halvings, jobs);
    auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
    out << "  p   q side counts halves   fold  cross tour  sym      ms result\n";
    std::size_t failed = 0;
    for (const auto& r : reports) {
        out << std::setw(3) << r.p << ' ' << std::setw(3) << r.q << ' ' << std::setw(4) << 2 * (r.p + r.q) << ' '
            << std::setw(6) << mark(r.counts) << ' ' << std::setw(6) << mark(r.halvings) << ' ' << std::setw(6)
            << mark(r.folding) << ' ' << std::setw(6) << mark(r.crisscross) << ' ' << std::setw(4) << mark(r.tour)
            << ' ' << std::setw(4) << mark(r.symmetric) << ' ' << std::setw(7) << std::fixed << std::setprecision(1)
            << r.seconds * 1000.0 << ' ' << (r.ok() ? "PASS" : "FAIL " + r.failure) << '\n';
        if (!r.ok()) ++failed;
    }
    out << reports.size() << " instances, " << failed << " failed\n";
    return failed == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace leaper
