// SPDX-License-Identifier: MIT
//
// kernels.hpp
//
// Deformation retracts, the recursive p- and q-kernels, and the transferred
// A-infinity structure, morphisms and homotopy built from them. The
// suspended (sign-free) recursion is authoritative; the unsuspended
// theta-signed recursion is kept as an independent cross-check.

#ifndef HTT_KERNELS_HPP
#define HTT_KERNELS_HPP

#include "htt/ainfty.hpp"
#include "htt/index_sets.hpp"
#include "htt/suspension.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace htt
{

struct SideConditions
{
    bool fg_identity = false;
    bool fh_zero = false;
    bool hg_zero = false;
    bool hh_zero = false;

    bool all() const { return fg_identity && fh_zero && hg_zero && hh_zero; }
};

// (V, dV) and (W, dW) with chain maps f : V -> W, g : W -> V and a homotopy
// h of degree +1 satisfying g f - 1 = dV h + h dV.
struct DeformationRetract
{
    ModulePtr V;
    ModulePtr W;
    MultiMap dV;
    MultiMap dW;
    MultiMap f;
    MultiMap g;
    MultiMap h;

    // Names of violated invariants; empty when the retract is valid.
    std::vector<std::string> violations() const;
    SideConditions side_conditions() const;
};

// The retract data after suspension: f^, g^ of degree 0 and h^ of degree +1.
struct SuspendedRetract
{
    ModulePtr sV;
    ModulePtr sW;
    MultiMap dV;  // s dV w
    MultiMap dW;  // s dW w
    MultiMap f;
    MultiMap g;
    MultiMap h;
    MultiMap gf;
};

SuspendedRetract suspend_retract(const DeformationRetract& r);

struct KernelFamily
{
    // p_n for 2 <= n <= N, q_n and composites (psi phi)_m for 1 <= n <= N.
    std::map<int, MultiMap> p;
    std::map<int, MultiMap> q;
    std::map<int, MultiMap> composite;
};

// Unsuspended recursion: p_n = sum_B (-1)^theta mu_k(h p_r1 .. h p_rk), h p_1 = 1.
KernelFamily p_kernels(const DeformationRetract& r, const AInfinity& mu, int N);

// Unsuspended recursion for q_n and (psi phi)_m, extending a family that
// already holds the p-kernels.
KernelFamily q_kernels(const DeformationRetract& r, const AInfinity& mu, KernelFamily pk, int N);

struct SuspendedKernels
{
    SuspendedRetract retract;
    SuspendedAInfinity delta;
    std::map<int, MultiMap> p;          // p^_n, degree -1, 2 <= n <= N
    std::map<int, MultiMap> q;          // q^_n, degree 0, 1 <= n <= N
    std::map<int, MultiMap> composite;  // [[psi phi]]_m, degree 0
};

// p^_n = sum_B delta_k(h^p^_r1 .. h^p^_rk) and
// q^_n = sum_C delta_k([[psi phi]]_r1 .. [[psi phi]]_r{i-1} h^q^_ri 1..1).
SuspendedKernels suspended_kernels(const DeformationRetract& r, const AInfinity& mu, int N);

// Unsuspended kernels recovered from the suspended ones.
KernelFamily desuspend_kernels(const SuspendedKernels& s, const ModulePtr& V, int N);

struct TransferPackage
{
    int truncation;
    DeformationRetract retract;
    AInfinityPtr mu;
    AInfinityPtr nu;
    MorphismPtr phi;
    MorphismPtr psi;
    MorphismPtr psi_phi;   // compose_morphisms(psi, phi)
    MorphismPtr identity;  // identity of mu
    std::shared_ptr<const AInftyHomotopy> H;
    KernelFamily kernels;        // from the suspended recursion
    KernelFamily kernels_theta;  // from the theta-signed recursion
    SuspendedKernels suspended;

    // Relation checks, named by object.
    std::vector<ResidualReport> reports;
    // Differences between the two recursions and between the cached and
    // composed (psi phi); all zero when the sign bookkeeping is consistent.
    std::vector<ResidualReport> agreement;

    bool all_zero() const;
};

// Throws std::invalid_argument when the retract is invalid or the modules
// do not match.
TransferPackage transfer(const DeformationRetract& r, const AInfinityPtr& mu, int N);

// Full-map identity, 2 <= n <= n_max:
//   dV p_n - sum_i (-1)^n p_n(1..d..1) - sum_A (-1)^{i(l+1)+n} p_k(1..gf p_l..1).
ResidualReport check_p_identity(const KernelFamily& k, const DeformationRetract& r, const AInfinity& mu, int n_max);
// The same residual precomposed with g^n.
ResidualReport check_p_identity_on_g(const KernelFamily& k, const DeformationRetract& r, const AInfinity& mu, int n_max);
// 2 <= n <= n_max:
//   dV q_n + sum_i (-1)^n q_n(1..d..1) + sum_B (-1)^theta p_k(gf q_r1 .. gf q_rk)
//   + sum_A (-1)^{i(l+1)+n} q_k(1..mu_l..1) - q_1 mu_n.
ResidualReport check_q_identity(const KernelFamily& k, const DeformationRetract& r, const AInfinity& mu, int n_max);

// Suspended forms:
//   delta_1 p^_n + sum_i p^_n(..delta_1..) + sum_A p^_k(..g^f^p^_l..)
//   delta_1 q^_n + sum_B p^_k(g^f^q^..) - sum_i q^_n(..delta_1..) - sum_A q^_k(..delta_l..) - q^_1 delta_n
ResidualReport check_p_identity_suspended(const SuspendedKernels& s, int n_max);
ResidualReport check_q_identity_suspended(const SuspendedKernels& s, int n_max);

}  // namespace htt

#endif
