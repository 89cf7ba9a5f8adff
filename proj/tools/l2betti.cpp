// Command-line front end: analyze presentation files, verify the built
// resolutions symbolically and against the finite-quotient oracle, export
// complexes, and batch-process directories with deterministic JSON output.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "l2betti/cli.hpp"

namespace {

void add_common_options(CLI::App* cmd, l2betti::RunConfig& config) {
    cmd->add_option("--out", config.out, "write output to a file instead of stdout");
    cmd->add_option("--oracle-bound", config.oracle_bound,
                    "largest group order cross-validated by the oracle (default 12)")
        ->check(CLI::PositiveNumber);
    std::map<std::string, l2betti::RunConfig::Format> formats{
        {"json", l2betti::RunConfig::Format::Json}, {"text", l2betti::RunConfig::Format::Text}};
    cmd->add_option("--format", config.format, "output format: json (default) or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation of L2-Betti numbers for one-relator and "
                 "surface-plus-one-relation groups"};
    app.require_subcommand(1);

    l2betti::RunConfig config;

    auto* analyze = app.add_subcommand("analyze", "compute the invariant report for a presentation file");
    analyze->add_option("input", config.input, "presentation file")->required();
    add_common_options(analyze, config);
    analyze->callback([&] { config.command = l2betti::RunConfig::Command::Analyze; });

    auto* verify = app.add_subcommand(
        "verify", "run the symbolic identities and, for finite quotients, the dimension oracle");
    verify->add_option("input", config.input, "presentation file or exported complex JSON")->required();
    add_common_options(verify, config);
    verify->callback([&] { config.command = l2betti::RunConfig::Command::Verify; });

    auto* exportc = app.add_subcommand("export-complex", "build the resolution and write it as JSON");
    exportc->add_option("input", config.input, "presentation file")->required();
    add_common_options(exportc, config);
    exportc->callback([&] { config.command = l2betti::RunConfig::Command::ExportComplex; });

    auto* oracle = app.add_subcommand(
        "oracle", "expand the resolution through the regular representation of the finite quotient");
    oracle->add_option("input", config.input, "presentation file (finite quotient)")->required();
    add_common_options(oracle, config);
    oracle->callback([&] { config.command = l2betti::RunConfig::Command::Oracle; });

    auto* lmod = app.add_subcommand(
        "lmod-demo", "extract and verify the kernel basis of an A (Xx2), B (2xY) pair with AB = 0");
    lmod->add_option("input", config.input, "JSON file with matrices A and B")->required();
    add_common_options(lmod, config);
    lmod->callback([&] { config.command = l2betti::RunConfig::Command::LmodDemo; });

    auto* batch = app.add_subcommand("batch", "analyze every file of a directory, ordered by filename");
    batch->add_option("input", config.input, "directory of presentation files")->required();
    add_common_options(batch, config);
    batch->callback([&] { config.command = l2betti::RunConfig::Command::Batch; });

    CLI11_PARSE(app, argc, argv);

    return l2betti::run(config, std::cout, std::cerr);
}
