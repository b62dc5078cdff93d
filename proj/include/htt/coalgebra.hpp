// SPDX-License-Identifier: MIT
//
// coalgebra.hpp
//
// The reduced tensor coalgebra truncated at homogeneity N: operators stored
// per input homogeneity, lifts of component families to coderivations,
// coalgebra morphisms and (E,G)-homotopies, and the componentwise versus
// operator-level characterizations of each.

#ifndef HTT_COALGEBRA_HPP
#define HTT_COALGEBRA_HPP

#include "htt/ainfty.hpp"
#include "htt/graded.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace htt
{

enum class FamilyKind
{
    coderivation,
    morphism,
    homotopy,
};

// Components {x_n : V^n -> W} of one fixed degree, 1 <= n <= truncation.
// A homotopy family also carries its left (E) and right (G) flanks.
struct ComponentFamily
{
    FamilyKind kind;
    ModulePtr source;
    ModulePtr target;
    int degree;
    int truncation;
    std::map<int, MultiMap> components;
    std::shared_ptr<const ComponentFamily> left;
    std::shared_ptr<const ComponentFamily> right;

    ComponentFamily(FamilyKind kind, ModulePtr source, ModulePtr target, int degree, int truncation);

    // Component of arity n; every arity 1..truncation is present.
    const MultiMap& component(int n) const { return components.at(n); }
    void set(int n, MultiMap m);

    static ComponentFamily identity(const ModulePtr& m, int truncation);
};

using FamilyPtr = std::shared_ptr<const ComponentFamily>;

// Linear map T(V) -> T(W) on words of homogeneity 1..N. Block m is a
// MultiMap of arity m whose outputs may be words of any length.
class CoalgebraOperator
{
public:
    CoalgebraOperator(ModulePtr source, ModulePtr target, int degree, int truncation);

    static CoalgebraOperator identity(const ModulePtr& m, int truncation);

    const ModulePtr& source() const { return source_; }
    const ModulePtr& target() const { return target_; }
    int degree() const { return degree_; }
    int truncation() const { return truncation_; }

    // Restriction to V^m, all output homogeneities.
    const MultiMap& on(int m) const { return blocks_.at(static_cast<std::size_t>(m - 1)); }
    void add_on(int m, const MultiMap& part, const Scalar& c = Scalar(1));
    // The (m, j) block: restriction to V^m, projected to W^j.
    MultiMap block(int m, int j) const;

    // Zero on all homogeneities <= n_max.
    bool is_zero_upto(int n_max) const;
    bool equal_upto(const CoalgebraOperator& other, int n_max) const;
    // Homogeneities <= n_max on which this operator is nonzero.
    std::vector<int> nonzero_homogeneities(int n_max) const;

    friend CoalgebraOperator operator+(const CoalgebraOperator& a, const CoalgebraOperator& b);
    friend CoalgebraOperator operator-(const CoalgebraOperator& a, const CoalgebraOperator& b);
    friend CoalgebraOperator operator*(const Scalar& c, const CoalgebraOperator& a);

private:
    ModulePtr source_;
    ModulePtr target_;
    int degree_;
    int truncation_;
    std::vector<MultiMap> blocks_;
};

// a o b on homogeneities 1..N.
CoalgebraOperator compose(const CoalgebraOperator& a, const CoalgebraOperator& b);

// The coproduct of a word: all splits (v_1..v_i) (x) (v_{i+1}..v_n), 1 <= i < n.
std::vector<std::pair<Word, Word>> comultiply(const Word& w);

CoalgebraOperator lift_coderivation(const ComponentFamily& family);
CoalgebraOperator lift_morphism(const ComponentFamily& family);
// Uses family.left and family.right as E and G.
CoalgebraOperator lift_homotopy(const ComponentFamily& family);

// Projection of every block onto homogeneity-one outputs.
ComponentFamily extract_components(const CoalgebraOperator& op, FamilyKind kind);

// Componentwise square-zero relation, arity 1..n_max:
//   sum_{l} sum_i d_{n-l+1}(1..d_l..1).
ResidualReport check_codifferential(const ComponentFamily& d, int n_max);

// Componentwise intertwining, arity 1..n_max:
//   sum_{compositions r} dW_k(f_r1..f_rk) - sum_{l,i} f_{n-l+1}(1..dV_l..1).
ResidualReport check_morphism_components(const ComponentFamily& f, const ComponentFamily& dV,
                                         const ComponentFamily& dW, int n_max);

// Componentwise homotopy identity, arity 1..n_max:
//   e_n - g_n - sum_{l,i} f_{n-l+1}(1..dV_l..1) - sum_{r,i} dW_k(e..e f_ri g..g).
ResidualReport check_homotopy_components(const ComponentFamily& f, const ComponentFamily& dV,
                                         const ComponentFamily& dW, int n_max);

// Operator-level defects; zero operators mean the identity holds.
CoalgebraOperator square_defect(const CoalgebraOperator& d);
CoalgebraOperator intertwining_defect(const CoalgebraOperator& F, const CoalgebraOperator& dV,
                                      const CoalgebraOperator& dW);
CoalgebraOperator homotopy_defect(const CoalgebraOperator& E, const CoalgebraOperator& G,
                                  const CoalgebraOperator& F, const CoalgebraOperator& dV,
                                  const CoalgebraOperator& dW);

// Residual report made of the (n, 1) blocks of an operator defect.
ResidualReport component_blocks(const CoalgebraOperator& defect, int n_max, const std::string& relation);

// Number of input words w (homogeneity <= n_max) where
//   C(X(w)) != sum over pairs (A, B) of (A (x) B)(C(w)).
// Morphisms use {(F, F)}, coderivations {(d, 1), (1, d)}, homotopies {(E, H), (H, G)}.
std::size_t comultiplication_defect(const CoalgebraOperator& X,
                                    const std::vector<std::pair<const CoalgebraOperator*,
                                                                const CoalgebraOperator*>>& pairs,
                                    int n_max);

}  // namespace htt

#endif
