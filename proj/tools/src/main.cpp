#include <cstdlib>
#include <exception>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bipart/cli/commands.hpp"

namespace {

using bipart::cli::Command;
using bipart::cli::OutputFormat;
using bipart::cli::RunConfig;

const std::map<std::string, OutputFormat> kFormats{
    {"csv", OutputFormat::kCsv}, {"json", OutputFormat::kJson}, {"text", OutputFormat::kText}};

void add_common(CLI::App* sub, RunConfig& config) {
    sub->add_option("--format", config.format, "Output format: csv, json or text")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    sub->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig config;
    CLI::App app{"Exact counts and asymptotics for partitions of bipartite numbers into steadily "
                 "decreasing parts"};
    app.require_subcommand(1);

    auto* table1 = app.add_subcommand("table1", "pi(L^2,L^2) and pi(L^2,L^2+L) against A(m,n)");
    table1->add_option("--L", config.levels, "Comma-separated values of L")->delimiter(',');
    add_common(table1, config);

    auto* compute = app.add_subcommand("compute", "Exact pi(m,n), D(m,n) and their asymptotics");
    compute->add_option("--m", config.m)->required();
    compute->add_option("--n", config.n)->required();
    compute->add_flag("--d-by-difference", config.d_by_difference,
                      "Also compute D(m,n) as pi(m,n) - pi(m-1,n) and compare");
    add_common(compute, config);

    auto* verify = app.add_subcommand("verify", "Cross-check every exact path against its oracles");
    verify->add_flag("--deep", config.deep, "Run larger sweeps");
    verify->add_option("--box", config.verify_box, "Box bound for the three-way pi check");
    verify->add_option("--enumeration-cap", config.enumeration_cap,
                       "Largest m + n allowed for brute-force enumeration");
    verify->add_option("--inject-fault-c", config.fault, "Test only: add one to c(k) before checking")
        ->group("");
    add_common(verify, config);

    auto* crank_row = app.add_subcommand("crank-row", "Crank generating-function row M(m,n), -n <= m <= n");
    crank_row->add_option("--n", config.n)->required();
    add_common(crank_row, config);

    auto* asym = app.add_subcommand("asym", "Asymptotic approximations A(m,n) and D(m,n)");
    asym->add_option("--m", config.m)->required();
    asym->add_option("--n", config.n)->required();
    add_common(asym, config);

    CLI11_PARSE(app, argc, argv);

    if (*table1) config.command = Command::kTable1;
    if (*compute) config.command = Command::kCompute;
    if (*verify) config.command = Command::kVerify;
    if (*crank_row) config.command = Command::kCrankRow;
    if (*asym) config.command = Command::kAsym;

    try {
        config.guard = bipart::cli::ResourceGuard::from_env();
        return bipart::cli::run(config, std::cout);
    } catch (const bipart::cli::ResourceLimitExceeded& e) {
        std::cerr << "bipart: resource guard: " << e.what() << '\n';
        return bipart::cli::kExitResourceGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bipart: " << e.what() << '\n';
        return bipart::cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "bipart: error: " << e.what() << '\n';
        return EXIT_FAILURE;
    }
}
