// SPDX-License-Identifier: MIT
//
// perturbation.hpp
//
// The homological perturbation lemma on the truncated suspended tensor
// coalgebra: lifted retract data, the nilpotent geometric series, the four
// transferred operators, and their comparison with the kernel formulas.

#ifndef HTT_PERTURBATION_HPP
#define HTT_PERTURBATION_HPP

#include "htt/coalgebra.hpp"
#include "htt/kernels.hpp"

#include <optional>
#include <string>
#include <vector>

namespace htt
{

struct PerturbationData
{
    int truncation;
    SuspendedRetract retract;
    SuspendedAInfinity delta;
    CoalgebraOperator dV;  // lift of delta_1
    CoalgebraOperator dW;  // lift of s dW w
    CoalgebraOperator F;   // lift of the strict morphism f^
    CoalgebraOperator G;   // lift of the strict morphism g^
    CoalgebraOperator H;   // h^ between g^f^ on the left and 1 on the right
    CoalgebraOperator delta_mu;  // coderivation with components {0, delta_2, ...}
    CoalgebraOperator X;         // delta_mu H
    // Least i with X^i zero on homogeneity n, per n.
    std::map<int, int> nilpotency;
};

PerturbationData build_perturbation(const DeformationRetract& r, const AInfinity& mu, int N);

// Homogeneities n <= N on which X^n does not vanish; empty when nilpotent.
std::vector<int> nilpotency_failures(const CoalgebraOperator& X, int N);

// 1 + X + ... + X^{terms-1} by Horner accumulation.
CoalgebraOperator geometric_series(const CoalgebraOperator& X, int terms);

// Homogeneities where (1 - X) S or S (1 - X) differs from the identity,
// with S the finite series of N terms.
std::vector<int> inversion_failures(const CoalgebraOperator& X, int N);

// An operator identity checked block by block; `defect` is zero iff it holds.
struct OperatorIdentity
{
    std::string name;
    CoalgebraOperator defect;
    std::vector<int> failing;  // nonzero homogeneities of the defect

    bool holds() const { return failing.empty(); }
};

struct HplOutput
{
    int truncation;
    CoalgebraOperator D_W;       // delta_W + delta_nu
    CoalgebraOperator delta_nu;
    CoalgebraOperator psi;
    CoalgebraOperator phi;
    CoalgebraOperator H;
    // Square-zero, both intertwinings, homotopy identity.
    std::vector<OperatorIdentity> conclusions;
    // Component extraction is licensed only under the side conditions.
    bool canonical;

    bool conclusions_hold() const;
};

HplOutput hpl_transfer(const PerturbationData& d);

SideConditions check_side_conditions(const SuspendedRetract& r);

// Per object: op - lift(extract(op)), nonzero when the operator is not of
// coderivation, morphism or homotopy shape.
std::vector<OperatorIdentity> extraction_defects(const HplOutput& out);

struct Comparison
{
    // "exact", "mismatch" or "skipped: side conditions not met".
    std::string status;
    // delta_nu, psi, phi, H compared with the lifts of the kernel formulas.
    std::vector<OperatorIdentity> objects;
};

Comparison compare_hpl_vs_kernels(const HplOutput& hpl, const TransferPackage& pkg, int n_max);

// Vanishing of q^_n g^n, of q^_{i+1+j}((g^f^)^i h^ 1^j), and the residuals
// of the p^, (psi phi) and q^ expansions through delta_i and H|_n. Each
// report is keyed by arity n.
std::vector<ResidualReport> check_annihilation_lemmas(const TransferPackage& pkg, int n_max);

}  // namespace htt

#endif
