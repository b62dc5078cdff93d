// SPDX-License-Identifier: MIT
//
// suspension.hpp
//
// Dictionary between the mu-convention on V and the delta-convention on sV.
// The maps s : V -> sV and w : sV -> V are identity-on-basis maps of degree
// +1 and -1, so every induced sign comes out of apply_block.

#ifndef HTT_SUSPENSION_HPP
#define HTT_SUSPENSION_HPP

#include "htt/ainfty.hpp"
#include "htt/coalgebra.hpp"

namespace htt
{

// (sV)_i = V_{i-1}; basis ids are preserved.
ModulePtr suspend_module(const ModulePtr& v);
ModulePtr desuspend_module(const ModulePtr& sv);

// s : V -> sV of degree +1.
MultiMap suspension_map(const ModulePtr& v, const ModulePtr& sv);
// w : sV -> V of degree -1.
MultiMap desuspension_map(const ModulePtr& sv, const ModulePtr& v);

// Parity of the global sign in s^n o w^n = (-1)^{n(n-1)/2}.
long suspension_sign_exponent(int n);

// s_W o a o w_V^n for a : V^n -> W.
MultiMap suspend_map(const MultiMap& a, const ModulePtr& sv, const ModulePtr& sw);
// (-1)^{n(n-1)/2} w_W o b o s_V^n for b : (sV)^n -> sW; inverse of suspend_map.
MultiMap desuspend_map(const MultiMap& b, const ModulePtr& v, const ModulePtr& w);

struct SuspendedAInfinity
{
    ModulePtr carrier;
    int truncation;
    // delta_1 = s d w and delta_n = s mu_n w^n, all of degree -1.
    std::map<int, MultiMap> deltas;

    ComponentFamily family() const;
};

SuspendedAInfinity suspend_structure(const AInfinity& a);
// Inverse of suspend_structure onto the given unsuspended carrier.
AInfinity desuspend_structure(const SuspendedAInfinity& s, const ModulePtr& v);

// Degree-0 components s_W f_n w_V^n.
ComponentFamily suspend_morphism(const AInftyMorphism& f, const ModulePtr& sv, const ModulePtr& sw);
// Degree-+1 components with suspended flanks.
ComponentFamily suspend_homotopy(const AInftyHomotopy& h, const ModulePtr& sv, const ModulePtr& sw);

}  // namespace htt

#endif
