// Command-line front end: generate, verify, fold, sweep.

#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "leaper/commands.hpp"

int main(int argc, char** argv) {
    using namespace leaper;

    CLI::App app{"Hamiltonian tours of free (p,q)-leapers on 2(p+q) boards"};
    app.require_subcommand(1);

    RunConfig run;
    bool symmetric = false;
    const std::map<std::string, Format> formats{
        {"tour", Format::tour}, {"json", Format::json}, {"grid", Format::grid}, {"svg", Format::svg}};
    auto* generate = app.add_subcommand("generate", "build, self-verify and write a tour");
    generate->add_option("--p", run.p, "shorter leg of the leaper move")->required();
    generate->add_option("--q", run.q, "longer leg of the leaper move")->required();
    generate->add_flag("--symmetric", symmetric, "centrally symmetric tour");
    generate->add_option("--seed", run.seed, "seed for the initial halving");
    generate->add_option("--tile-k", run.tile_k, "copies along x")->check(CLI::PositiveNumber);
    generate->add_option("--tile-l", run.tile_l, "copies along y")->check(CLI::PositiveNumber);
    generate->add_option("--format", run.format, "output format (default tour)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
        ->option_text("tour|json|grid|svg");
    generate->add_option("-o,--output", run.output, "output file (default stdout)");

    VerifyConfig check;
    const std::map<std::string, InputFormat> inputs{{"auto", InputFormat::automatic},
                                                    {"tour", InputFormat::tour},
                                                    {"json", InputFormat::json},
                                                    {"grid", InputFormat::grid}};
    auto* verify = app.add_subcommand("verify", "check a tour file");
    verify->add_option("path", check.path, "tour file")->required();
    verify->add_option("--p", check.p, "override the file's p");
    verify->add_option("--q", check.q, "override the file's q");
    verify->add_option("--width", check.width, "override the file's width");
    verify->add_option("--height", check.height, "override the file's height");
    verify->add_flag("--require-symmetry", check.require_symmetry, "also require central symmetry");
    verify->add_option("--input-format", check.format, "input format (default auto)")
        ->transform(CLI::CheckedTransformer(inputs, CLI::ignore_case).description(""))
        ->option_text("auto|tour|json|grid");

    int fold_p = 0;
    int fold_q = 0;
    bool dump = false;
    auto* fold = app.add_subcommand("fold", "compare the folding graph with its crisscross graph");
    fold->add_option("--p", fold_p)->required();
    fold->add_option("--q", fold_q)->required();
    fold->add_flag("--dump", dump, "print both edge lists");

    int max_sum = 15;
    int halvings = 100;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    auto* sweep = app.add_subcommand("sweep", "run every check for all free leapers up to a size");
    sweep->add_option("--max-sum", max_sum, "largest p + q");
    sweep->add_option("--halvings", halvings, "random halvings per leaper");
    sweep->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*generate) {
        run.mode = symmetric ? Mode::symmetric : Mode::plain;
        return cmd_generate(run, std::cout, std::cerr);
    }
    if (*verify) return cmd_verify(check, std::cout, std::cerr);
    if (*fold) return cmd_fold(fold_p, fold_q, dump, std::cout, std::cerr);
    return cmd_sweep(max_sum, halvings, jobs, std::cout, std::cerr);
}
