// SPDX-License-Identifier: MIT

#include "helpers.hpp"
#include "htt/commands.hpp"
#include "htt/sign_hooks.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace htt;
using htt::test::source_path;

namespace
{

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool has_line(const std::string& report, const std::string& line)
{
    return ("\n" + report).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_SUITE("commands")
{
    TEST_CASE("check")
    {
        const CommandResult ok = cmd_check(source_path("data/massey.json"));
        CHECK(ok.exit_code == kExitOk);
        CHECK(has_line(ok.report, "retract=valid"));
        CHECK(has_line(ok.report, "status=ok"));
        CHECK(has_line(ok.report, "verified_up_to_arity=3"));
        const CommandResult bad = cmd_check(source_path("tests/data/forms_corrupted_sign.json"));
        CHECK(bad.exit_code == kExitMath);
        CHECK(has_line(bad.report, "status=failure"));
        const CommandResult missing = cmd_check(source_path("tests/data/absent.json"));
        CHECK(missing.exit_code == kExitInput);
    }

    TEST_CASE("transfer writes a valid, deterministic document")
    {
        const auto dir = std::filesystem::temp_directory_path() / "htt_unit_commands";
        std::filesystem::create_directories(dir);
        TransferOptions o;
        o.path = source_path("data/massey.json");
        o.arity = 4;
        o.retract = "auto";
        o.output = (dir / "a.json").string();
        const CommandResult a = cmd_transfer(o);
        o.output = (dir / "b.json").string();
        const CommandResult b = cmd_transfer(o);
        CHECK(a.exit_code == kExitOk);
        const auto strip = [](std::string r) { return r.substr(0, r.find("output=")) + r.substr(r.find("status=")); };
        CHECK(strip(a.report) == strip(b.report));
        CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
        CHECK(has_line(a.report, "hpl_vs_kernels=exact"));
        CHECK(has_line(a.report, "nu3_nonzero=yes"));
        CHECK(cmd_check((dir / "a.json").string()).exit_code == kExitOk);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("transfer input errors")
    {
        TransferOptions o;
        o.path = source_path("data/forms.json");
        o.arity = 3;
        o.method = "nope";
        CHECK(cmd_transfer(o).exit_code == kExitInput);
        o.method = "both";
        o.structure = "missing";
        CHECK(cmd_transfer(o).exit_code == kExitInput);
    }

    TEST_CASE("selftest of an empty corpus")
    {
        const CommandResult r = cmd_selftest({0, 1, 5, std::nullopt, true});
        CHECK(r.exit_code == kExitOk);
        CHECK(has_line(r.report, "status=ok"));
    }

    TEST_CASE("a sign fault makes selftest fail with a reproduction line")
    {
        SignMutantScope s(SignMutant::koszul_trivial);
        const CommandResult r = cmd_selftest({1, 1, 4, std::nullopt, false});
        CHECK(r.exit_code == kExitMath);
        CHECK(r.report.find("reproduce: htt selftest") != std::string::npos);
    }
}
