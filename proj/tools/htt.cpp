// SPDX-License-Identifier: MIT
//
// htt: homotopy transfer of A-infinity structures with exact arithmetic.

#include "htt/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Homotopy transfer of A-infinity structures with exact arithmetic"};
    app.require_subcommand(1);

    std::string check_path;
    auto* check = app.add_subcommand("check", "Validate every object in a document");
    check->add_option("file", check_path, "Input document")->required();

    htt::TransferOptions t;
    auto* transfer = app.add_subcommand("transfer", "Transfer a structure along a deformation retract");
    transfer->add_option("file", t.path, "Input document")->required();
    transfer->add_option("--method", t.method, "kernels, hpl or both")
        ->check(CLI::IsMember({"kernels", "hpl", "both"}))
        ->capture_default_str();
    transfer->add_option("--arity", t.arity, "Largest arity computed")->required()->check(CLI::PositiveNumber);
    transfer->add_option("--retract", t.retract, "auto, or file to use the document's retract")
        ->check(CLI::IsMember({"auto", "file"}));
    transfer->add_option("--structure", t.structure, "Structure to transfer");
    transfer->add_option("-o,--output", t.output, "Write the transferred data as a document");

    htt::SelftestOptions s;
    int instance = -1;
    bool skip_mutants = false;
    auto* selftest = app.add_subcommand("selftest", "Run the verification battery on a seeded random corpus");
    selftest->add_option("--corpus-size", s.corpus_size, "Number of random instances")->required();
    selftest->add_option("--seed", s.seed, "Corpus seed")->required();
    selftest->add_option("--arity", s.arity, "Largest arity checked")->required();
    selftest->add_option("--instance", instance, "Rerun a single corpus member");
    selftest->add_flag("--skip-mutants", skip_mutants, "Skip the sign mutation suite");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return htt::kExitInput;
    }

    htt::CommandResult r;
    if (*check)
        r = htt::cmd_check(check_path);
    else if (*transfer)
        r = htt::cmd_transfer(t);
    else
    {
        if (instance >= 0) s.instance = instance;
        s.mutants = !skip_mutants;
        r = htt::cmd_selftest(s);
    }
    std::cout << r.report;
    return r.exit_code;
}
