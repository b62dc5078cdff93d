// SPDX-License-Identifier: MIT

#include "htt/sign_hooks.hpp"

namespace htt
{

namespace
{
SignMutant g_mutant = SignMutant::none;
}

SignMutant active_sign_mutant() { return g_mutant; }

void set_sign_mutant(SignMutant m) { g_mutant = m; }

std::string_view mutant_name(SignMutant m)
{
    switch (m)
    {
    case SignMutant::none: return "none";
    case SignMutant::theta_no_shift: return "theta_no_shift";
    case SignMutant::theta_transposed: return "theta_transposed";
    case SignMutant::theta_offset: return "theta_offset";
    case SignMutant::theta_drop_last_pair: return "theta_drop_last_pair";
    case SignMutant::koszul_trivial: return "koszul_trivial";
    case SignMutant::koszul_negated: return "koszul_negated";
    case SignMutant::koszul_shifted: return "koszul_shifted";
    case SignMutant::koszul_ignore_map_degree: return "koszul_ignore_map_degree";
    case SignMutant::suspension_no_global: return "suspension_no_global";
    case SignMutant::suspension_shifted: return "suspension_shifted";
    case SignMutant::suspension_signed_omega: return "suspension_signed_omega";
    case SignMutant::qkernel_exclusive_theta: return "qkernel_exclusive_theta";
    }
    return "unknown";
}

std::vector<SignMutant> all_sign_mutants()
{
    return {SignMutant::theta_no_shift,        SignMutant::theta_transposed,
            SignMutant::theta_offset,          SignMutant::theta_drop_last_pair,
            SignMutant::koszul_trivial,        SignMutant::koszul_negated,
            SignMutant::koszul_shifted,        SignMutant::koszul_ignore_map_degree,
            SignMutant::suspension_no_global,  SignMutant::suspension_shifted,
            SignMutant::suspension_signed_omega, SignMutant::qkernel_exclusive_theta};
}

}  // namespace htt
