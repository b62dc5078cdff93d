// SPDX-License-Identifier: MIT
//
// ainfty.hpp
//
// A-infinity algebras, morphisms and homotopies in the unsuspended
// convention (differential of degree -1, mu_n of degree n-2) together with
// residual-returning checkers for their defining relations.

#ifndef HTT_AINFTY_HPP
#define HTT_AINFTY_HPP

#include "htt/graded.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace htt
{

// Per-arity residual maps of one relation; all zero means the relation holds
// up to the largest arity checked.
struct ResidualReport
{
    std::string relation;
    std::map<int, MultiMap> residuals;

    bool all_zero() const;
    // Sum of nnz over all arities.
    std::size_t total_nnz() const;
    // Smallest arity with a nonzero residual.
    std::optional<int> first_failing_arity() const;
    // "arity n, input [..] -> output [..] coefficient c" for the first failure.
    std::string first_offender() const;
};

class AInfinity
{
public:
    AInfinity(ModulePtr carrier, MultiMap differential, int truncation);

    // Throws std::invalid_argument on a wrong arity, degree or module.
    void set_product(int n, MultiMap mu);

    const ModulePtr& carrier() const { return carrier_; }
    const MultiMap& differential() const { return differential_; }
    int truncation() const { return truncation_; }
    // mu_n for 2 <= n <= truncation; the zero map when unset.
    const MultiMap& product(int n) const;
    const std::map<int, MultiMap>& products() const { return products_; }

private:
    ModulePtr carrier_;
    MultiMap differential_;
    int truncation_;
    std::map<int, MultiMap> products_;
    std::map<int, MultiMap> zeros_;
};

using AInfinityPtr = std::shared_ptr<const AInfinity>;

class AInftyMorphism
{
public:
    AInftyMorphism(AInfinityPtr source, AInfinityPtr target, int truncation);

    static AInftyMorphism identity(const AInfinityPtr& a);

    // Component of arity n and degree n-1.
    void set_component(int n, MultiMap f);
    const MultiMap& component(int n) const;

    const AInfinityPtr& source() const { return source_; }
    const AInfinityPtr& target() const { return target_; }
    int truncation() const { return truncation_; }

private:
    AInfinityPtr source_;
    AInfinityPtr target_;
    int truncation_;
    std::map<int, MultiMap> components_;
    std::map<int, MultiMap> zeros_;
};

using MorphismPtr = std::shared_ptr<const AInftyMorphism>;

class AInftyHomotopy
{
public:
    // Homotopy from `from` to `to`; both share source and target.
    AInftyHomotopy(MorphismPtr from, MorphismPtr to, int truncation);

    // Component of arity n and degree n.
    void set_component(int n, MultiMap h);
    const MultiMap& component(int n) const;

    const MorphismPtr& from() const { return from_; }
    const MorphismPtr& to() const { return to_; }
    int truncation() const { return truncation_; }

private:
    MorphismPtr from_;
    MorphismPtr to_;
    int truncation_;
    std::map<int, MultiMap> components_;
    std::map<int, MultiMap> zeros_;
};

// The A-infinity relation for 2 <= n <= n_max, as "left side minus right side":
//   d mu_n - sum_i (-1)^n mu_n(1..d..1) - sum_A (-1)^{i(l+1)+n} mu_k(1..mu_l..1).
// Arity 1 holds d o d.
ResidualReport check_structure(const AInfinity& a, int n_max);

// The morphism relation for 1 <= n <= n_max:
//   d_W f_n + sum_B (-1)^theta nu_k(f_r1 .. f_rk)
//     - f_1 mu_n + sum_i (-1)^n f_n(1..d..1) + sum_A (-1)^{i(l+1)+n} f_k(1..mu_l..1).
ResidualReport check_morphism(const AInftyMorphism& f, int n_max);

// (g f)_n = g_1 f_n + sum_B (-1)^theta g_k(f_r1 .. f_rk).
AInftyMorphism compose_morphisms(const AInftyMorphism& g, const AInftyMorphism& f);

// Sign convention for the mixed terms nu_k(f..f (x) h (x) g..g) of the
// homotopy relation.
enum class HomotopySign
{
    // (-1)^{theta(r) + (k - i) + r_1 + ... + r_{i-1}}, the sign forced by the
    // suspension dictionary; reduces to (-1)^{n + r_i + theta(r_1..r_i)} when
    // the right flank is the identity.
    koszul,
    // (-1)^{theta(r)} alone, as the defining relation is sometimes printed.
    theta_only,
};

// The homotopy relation for 1 <= n <= n_max, residual
//   f_n - g_n - [h_1 mu_n - sum_i (-1)^n h_n(1..d..1) - sum_A (-1)^{i(l+1)+n} h_k(1..mu_l..1)
//               + d_W h_n + sum_B sum_i (+-) nu_k(f..f (x) h_ri (x) g..g)].
ResidualReport check_homotopy(const AInftyHomotopy& h, int n_max, HomotopySign sign = HomotopySign::koszul);

}  // namespace htt

#endif
