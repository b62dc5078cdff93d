// SPDX-License-Identifier: MIT
//
// acceptance.cpp
//
// Prints one PASS/FAIL line per acceptance criterion and exits nonzero when
// any criterion fails. Criteria 1 and 2 go through the command layer; the
// rest are recomputed directly on the desk instances and the seeded corpus.

#include "htt/battery.hpp"
#include "htt/commands.hpp"
#include "htt/perturbation.hpp"
#include "htt/retract.hpp"
#include "htt/suspension.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace htt;

namespace
{

constexpr int kArity = 5;
constexpr std::uint64_t kSeed = 1;
constexpr int kCorpusSize = 25;

struct Outcome
{
    bool pass = false;
    std::string detail;
};

// key=value lines of a report's machine section.
std::map<std::string, std::string> machine(const std::string& report)
{
    std::map<std::string, std::string> out;
    std::istringstream in(report);
    std::string line;
    while (std::getline(in, line))
    {
        if (line == "# detail") break;
        const auto eq = line.find('=');
        if (eq != std::string::npos) out[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return out;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f s", s);
    return buf;
}

// Desk instances followed by the selftest corpus.
std::vector<Instance> instances()
{
    std::vector<Instance> all = {instance_massey(kArity), instance_forms(kArity)};
    for (auto& in : corpus(kSeed, kCorpusSize, kArity)) all.push_back(std::move(in));
    return all;
}

Outcome massey_transfer()
{
    TransferOptions o;
    o.path = std::string(HTT_SOURCE_DIR) + "/data/massey.json";
    o.method = "both";
    o.arity = kArity;
    o.retract = "auto";
    const auto t0 = std::chrono::steady_clock::now();
    const CommandResult r = cmd_transfer(o);
    const double t = seconds_since(t0);
    const auto m = machine(r.report);
    std::size_t residuals = 0, nonzero = 0;
    for (const auto& [k, v] : m)
        if (starts_with(k, "kernels.") || starts_with(k, "agreement."))
        {
            ++residuals;
            nonzero += v != "0";
        }
    int exact = 0;
    for (const char* obj : {"delta_nu", "psi", "phi", "H"})
        exact += m.count(std::string("hpl_vs_kernels.") + obj) && m.at(std::string("hpl_vs_kernels.") + obj) == "exact";
    bool hpl_ok = true;
    for (const auto& [k, v] : m)
        if (starts_with(k, "hpl.") && k != "hpl.extraction") hpl_ok = hpl_ok && v == "pass";
    const bool pass = r.exit_code == kExitOk && residuals > 0 && nonzero == 0 && exact == 4 && hpl_ok &&
                      m.count("nu3_nonzero") && m.at("nu3_nonzero") == "yes" && t < 10.0;
    return {pass, std::to_string(nonzero) + " nonzero of " + std::to_string(residuals) + " residuals, " +
                      std::to_string(exact) + "/4 objects exact, nu3_nonzero=" +
                      (m.count("nu3_nonzero") ? m.at("nu3_nonzero") : "?") + ", " + fmt_seconds(t)};
}

Outcome selftest(std::map<std::string, std::string>& report)
{
    const auto t0 = std::chrono::steady_clock::now();
    const CommandResult r = cmd_selftest({kCorpusSize, kSeed, kArity, std::nullopt, true});
    const double t = seconds_since(t0);
    report = machine(r.report);
    const bool pass = r.exit_code == kExitOk && t < 300.0;
    return {pass, "exit " + std::to_string(r.exit_code) + ", instances passed " + report["instances.passed"] + "/" +
                      report["instances.run"] + ", " + fmt_seconds(t)};
}

Outcome equivalence(const std::map<std::string, std::string>& report)
{
    // Desk instances directly; corpus totals from the selftest report.
    EquivalenceTally tally;
    for (const Instance& in : {instance_massey(kArity), instance_forms(kArity)})
        tally.add(equivalence_battery(transfer(harmonious_retract(in.complex()), in.mu, kArity), kSeed));
    std::size_t corpus_discrepancies = 0;
    int corpus_directions = 0;
    for (const auto& [k, v] : report)
        if (starts_with(k, "equivalence.") && v.find(" tested, ") != std::string::npos)
        {
            ++corpus_directions;
            const auto tested = std::stoul(v.substr(0, v.find(' ')));
            const auto disc = std::stoul(v.substr(v.find(", ") + 2));
            corpus_discrepancies += disc;
            if (tested == 0) ++corpus_discrepancies;
        }
    std::size_t desk_tested_min = SIZE_MAX;
    for (auto t : tally.tested) desk_tested_min = std::min(desk_tested_min, t);
    const std::size_t extra = tally.residual_mismatches + tally.comultiplication_defects;
    const std::size_t corpus_extra = std::stoul(report.count("equivalence.residual_mismatches")
                                                    ? report.at("equivalence.residual_mismatches")
                                                    : "1") +
                                     std::stoul(report.count("equivalence.comultiplication_defects")
                                                    ? report.at("equivalence.comultiplication_defects")
                                                    : "1");
    const bool pass = tally.total_discrepancies() == 0 && desk_tested_min > 0 && extra == 0 &&
                      corpus_directions == 6 && corpus_discrepancies == 0 && corpus_extra == 0;
    return {pass, "6 directions, " + std::to_string(tally.total_discrepancies() + corpus_discrepancies) +
                      " discrepancies, " + std::to_string(extra + corpus_extra) +
                      " block or coproduct mismatches"};
}

Outcome sign_cross_validation(const std::vector<Instance>& all)
{
    std::size_t disagreements = 0, checked = 0;
    for (const Instance& in : all)
    {
        const DeformationRetract h = harmonious_retract(in.complex());
        for (const DeformationRetract& r : {h, scrambled_retract(h, kSeed)})
        {
            const TransferPackage pkg = transfer(r, in.mu, kArity);
            for (const auto& a : pkg.agreement)
            {
                ++checked;
                disagreements += a.all_zero() ? 0 : 1;
            }
        }
    }
    // s^n o w^n against the closed-form sign, computed here from scratch.
    const ModulePtr V = make_module({{0, 1}, {1, 1}, {2, 1}});
    const ModulePtr sV = suspend_module(V);
    const MultiMap s = suspension_map(V, sV);
    const MultiMap w = desuspension_map(sV, V);
    int identity_failures = 0;
    for (int n = 1; n <= 8; ++n)
    {
        const Scalar sign((n * (n - 1) / 2) % 2 == 0 ? 1 : -1);
        if (!(compose(tensor_power(s, n), tensor_power(w, n)) == sign * tensor_power(MultiMap::identity(sV), n)))
            ++identity_failures;
    }
    const Check lib = suspension_sign_identity(8);
    const bool pass = checked > 0 && disagreements == 0 && identity_failures == 0 && lib.pass;
    return {pass, std::to_string(disagreements) + " of " + std::to_string(checked) +
                      " kernel agreement reports nonzero, sign identity n<=8 " +
                      (identity_failures == 0 && lib.pass ? "holds" : "fails")};
}

Outcome degenerations(const std::vector<Instance>& all)
{
    std::size_t failed = 0, total = 0;
    std::string first;
    for (const Instance& in : all)
        for (const Check& c : degeneration_checks(in, kArity))
        {
            ++total;
            if (!c.pass)
            {
                ++failed;
                if (first.empty()) first = ", first: " + in.name + " " + c.name;
            }
        }
    return {total > 0 && failed == 0, std::to_string(total - failed) + "/" + std::to_string(total) + " checks" + first};
}

Outcome nilpotency(const std::vector<Instance>& all)
{
    std::size_t bad = 0, runs = 0;
    for (const Instance& in : all)
    {
        const DeformationRetract h = harmonious_retract(in.complex());
        for (const DeformationRetract& r : {h, scrambled_retract(h, kSeed)})
        {
            const PerturbationData d = build_perturbation(r, *in.mu, kArity);
            ++runs;
            if (!nilpotency_failures(d.X, kArity).empty() || !inversion_failures(d.X, kArity).empty()) ++bad;
        }
    }
    return {runs > 0 && bad == 0, std::to_string(runs - bad) + "/" + std::to_string(runs) +
                                      " retracts nilpotent with inverting series"};
}

Outcome lemmas(const std::vector<Instance>& all)
{
    std::size_t bad = 0, reports = 0;
    for (const Instance& in : all)
    {
        const DeformationRetract r = harmonious_retract(in.complex());
        if (!r.side_conditions().all())
        {
            ++bad;
            continue;
        }
        for (const auto& rep : check_annihilation_lemmas(transfer(r, in.mu, kArity), kArity))
        {
            ++reports;
            bad += rep.all_zero() ? 0 : 1;
        }
    }
    return {reports > 0 && bad == 0, std::to_string(reports - bad) + "/" + std::to_string(reports) +
                                         " lemma reports vanish for n<=" + std::to_string(kArity)};
}

Outcome mutants(const std::map<std::string, std::string>& report)
{
    const auto it = report.find("mutants.killed");
    if (it == report.end()) return {false, "no mutation results"};
    const auto slash = it->second.find('/');
    const int killed = std::stoi(it->second.substr(0, slash));
    const int total = std::stoi(it->second.substr(slash + 1));
    return {total >= 10 && killed == total, it->second + " sign mutants killed"};
}

}  // namespace

int main()
{
    int failures = 0;
    auto report = [&](const char* name, const std::function<Outcome()>& run) {
        Outcome o;
        try
        {
            o = run();
        }
        catch (const std::exception& e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
    };

    std::map<std::string, std::string> selftest_report;
    const std::vector<Instance> all = instances();
    report("massey transfer", massey_transfer);
    report("selftest", [&] { return selftest(selftest_report); });
    report("equivalence battery", [&] { return equivalence(selftest_report); });
    report("sign cross-validation", [&] { return sign_cross_validation(all); });
    report("degenerations", [&] { return degenerations(all); });
    report("nilpotency and inversion", [&] { return nilpotency(all); });
    report("annihilation lemmas", [&] { return lemmas(all); });
    report("mutation suite", [&] { return mutants(selftest_report); });
    return failures == 0 ? 0 : 1;
}
