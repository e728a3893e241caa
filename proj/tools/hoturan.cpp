#include "hoturan/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <unistd.h>

using namespace hoturan;

int main(int argc, char** argv)
{
    CLI::App app{"Finite-range verification of Turan-type inequalities for p(n)"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    app.add_option("--precision", cfg.precision_bits, "starting precision in bits (8..4096)")->default_val(128);
    app.add_option("--max-bits", cfg.max_bits, "precision cap for adaptive sign decisions")->default_val(4096);
    app.add_option("--cache", cfg.cache_path, "partition cache file")->default_val("./pcache.txt");
    app.add_option("--format", format, "json, csv or text")->default_val("text");
    app.add_option("-j,--jobs", cfg.parallelism, "worker threads")->default_val(1);
    app.add_flag("--full-validate", cfg.full_validate, "re-check the recurrence at every cached index");

    auto* partition = app.add_subcommand("partition", "print p(n)");
    partition->add_option("n", cfg.n)->required();

    auto* build = app.add_subcommand("build-cache", "write p(0..N) to the cache file");
    build->add_option("--to", cfg.to)->required();

    auto* verify = app.add_subcommand("verify", "run a named check over a range of n");
    verify->add_option("name", cfg.name, "one of: " + verification_names())->required();
    verify->add_option("--from", cfg.from)->required();
    verify->add_option("--to", cfg.to)->required();

    auto* thresholds = app.add_subcommand("thresholds", "smallest n from which a check holds up to --to");
    thresholds->add_option("name", cfg.name)->required();
    thresholds->add_option("--to", cfg.to)->required();

    auto* jensen = app.add_subcommand("jensen", "empirical N(m) for real-rootedness of Jensen polynomials");
    jensen->add_option("--m", cfg.m)->required();
    jensen->add_option("--to", cfg.to)->required();

    auto* coeffs = app.add_subcommand("coeffs", "export expanded coefficients (sec3, sec4-lemma, sec4-gamma)");
    coeffs->add_option("which", cfg.name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code::kUsage;
    }

    auto f = parse_format(format);
    if (!f) {
        std::cerr << "error: --format must be json, csv or text\n";
        return exit_code::kUsage;
    }
    cfg.output_format = *f;
    cfg.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);

    if (*partition)
        cfg.command = Command::Partition;
    else if (*build)
        cfg.command = Command::BuildCache;
    else if (*verify)
        cfg.command = Command::Verify;
    else if (*thresholds)
        cfg.command = Command::Thresholds;
    else if (*jensen)
        cfg.command = Command::Jensen;
    else
        cfg.command = Command::Coeffs;

    return run(cfg, std::cout, std::cerr);
}
