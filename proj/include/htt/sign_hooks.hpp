// SPDX-License-Identifier: MIT
//
// sign_hooks.hpp
//
// Fault injection for the three sign sources of the library: the Koszul
// rule, the theta exponent and the suspension sign. Production code always
// runs with SignMutant::none; the mutation suite flips one rule at a time
// and expects some checker to notice.

#ifndef HTT_SIGN_HOOKS_HPP
#define HTT_SIGN_HOOKS_HPP

#include <string_view>
#include <vector>

namespace htt
{

enum class SignMutant
{
    none,
    theta_no_shift,           // sum u_i u_j
    theta_transposed,         // sum u_j (u_i + 1)
    theta_offset,             // theta + 1
    theta_drop_last_pair,     // omits the pair (k-1, k)
    koszul_trivial,           // always +1
    koszul_negated,           // always the opposite sign
    koszul_shifted,           // map_degree * (sum + 1)
    koszul_ignore_map_degree, // sum only
    suspension_no_global,     // (-1)^{n(n-1)/2} replaced by +1
    suspension_shifted,       // (-1)^{n(n+1)/2}
    suspension_signed_omega,  // omega(sv) = (-1)^{|v|} v
    qkernel_exclusive_theta,  // q-kernel sign uses theta(r_1..r_{i-1})
};

SignMutant active_sign_mutant();
void set_sign_mutant(SignMutant m);
std::string_view mutant_name(SignMutant m);
std::vector<SignMutant> all_sign_mutants();

// Activates a mutant for the lifetime of the guard.
class SignMutantScope
{
public:
    explicit SignMutantScope(SignMutant m) : previous_(active_sign_mutant()) { set_sign_mutant(m); }
    ~SignMutantScope() { set_sign_mutant(previous_); }
    SignMutantScope(const SignMutantScope&) = delete;
    SignMutantScope& operator=(const SignMutantScope&) = delete;

private:
    SignMutant previous_;
};

}  // namespace htt

#endif
