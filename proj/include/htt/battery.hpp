// SPDX-License-Identifier: MIT
//
// battery.hpp
//
// The verification battery run by `selftest` and the acceptance binary.
// Every checker returns named pass/fail outcomes with a one-line detail.

#ifndef HTT_BATTERY_HPP
#define HTT_BATTERY_HPP

#include "htt/perturbation.hpp"
#include "htt/retract.hpp"
#include "htt/sign_hooks.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace htt
{

struct Check
{
    std::string name;
    bool pass = false;
    std::string detail;
};

// Residuals of the kernel transfer: structure, morphisms, homotopy, the
// kernel identities and the agreement of the two recursions.
std::vector<Check> transfer_checks(const TransferPackage& pkg, int n_max);

// Perturbation route on a retract: nilpotency, inversion, the four
// conclusions, and when the side conditions hold, extraction, the
// comparison with the kernels and the annihilation lemmas. When they fail
// the comparison must report itself skipped.
std::vector<Check> hpl_checks(const TransferPackage& pkg, int N);

// Componentwise versus operator-level characterizations. Directions are
// (codifferential, morphism, homotopy) x (componentwise => operator,
// operator => componentwise).
struct EquivalenceTally
{
    static constexpr std::array<const char*, 6> kDirections = {
        "codifferential componentwise => operator", "codifferential operator => componentwise",
        "morphism componentwise => operator",       "morphism operator => componentwise",
        "homotopy componentwise => operator",       "homotopy operator => componentwise",
    };
    std::array<std::size_t, 6> tested{};
    std::array<std::size_t, 6> discrepancies{};
    // (n,1) blocks of the operator defect that differ from the
    // componentwise residual.
    std::size_t residual_mismatches = 0;
    // Lifted operators failing the coproduct compatibility.
    std::size_t comultiplication_defects = 0;

    void add(const EquivalenceTally& o);
    std::size_t total_discrepancies() const;
};

// Runs on the valid transferred objects and on seeded corruptions of each.
EquivalenceTally equivalence_battery(const TransferPackage& pkg, std::uint64_t seed);

// s^n o w^n = (-1)^{n(n-1)/2} on a small test module for 1 <= n <= n_max.
Check suspension_sign_identity(int n_max);

// Suspending and desuspending the structure and the transferred morphisms
// returns the originals.
Check suspension_round_trip(const TransferPackage& pkg);

// h = 0 on the identity retract, and the HPL with vanishing perturbation.
std::vector<Check> degeneration_checks(const Instance& in, int N);

struct BatteryResult
{
    std::string instance;
    std::vector<Check> checks;
    bool nu3_nonzero = false;
    EquivalenceTally equivalence;

    bool pass() const;
};

// The full per-instance battery: structure, harmonious retract, kernels,
// HPL, the scrambled (non-harmonious) retract, equivalence, signs and
// degenerations. Exceptions become failed checks.
BatteryResult run_battery(const Instance& in, std::uint64_t seed, int N);

struct MutantOutcome
{
    SignMutant mutant;
    bool killed = false;
    std::string instance;  // where it was killed
    std::string checker;   // which checker noticed
};

// Each sign mutant is run against the instances in order, each with its
// harmonious and scrambled retract, until some checker fails. Retracts are
// built before the mutant is activated.
std::vector<MutantOutcome> mutation_suite(const std::vector<Instance>& instances, std::uint64_t seed, int N);

// The seeded corpus used by `selftest`.
std::vector<Instance> corpus(std::uint64_t seed, int size, int N);

}  // namespace htt

#endif
