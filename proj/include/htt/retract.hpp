// SPDX-License-Identifier: MIT
//
// retract.hpp
//
// Deformation retracts onto homology by exact linear algebra, plus the
// shipped desk instances and the seeded random DGA generator.

#ifndef HTT_RETRACT_HPP
#define HTT_RETRACT_HPP

#include "htt/kernels.hpp"
#include "htt/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace htt
{

struct ChainComplex
{
    ModulePtr V;
    MultiMap d;  // arity 1, degree -1
};

// V_i = B_i + H_i + C_i with B the boundaries, H a complement of B in the
// cycles and C a complement of the cycles. Vectors are coordinates in the
// standard basis of V_i; B_i[j] is the boundary of C_{i+1}[j].
struct DegreeSplitting
{
    std::vector<Column> B;
    std::vector<Column> H;
    std::vector<Column> C;
};

struct Splitting
{
    std::map<int, DegreeSplitting> degrees;
};

// Throws std::invalid_argument unless d is a degree -1 square-zero map V -> V.
Splitting split(const ChainComplex& c);

// dim H_i = dim ker d_i - dim im d_{i+1}; degrees of dimension zero omitted.
ModulePtr homology(const ChainComplex& c);

// f projects onto H along B + C, g includes H, h = -(d|_C)^{-1} on B and
// zero on H + C, so that g f - 1 = d h + h d. All side conditions hold.
DeformationRetract harmonious_retract(const ChainComplex& c);

// A named DG algebra with one label per basis id.
struct Instance
{
    std::string name;
    AInfinityPtr mu;
    std::vector<std::string> labels;

    ChainComplex complex() const { return {mu->carrier(), mu->differential()}; }
};

// x,y,z (1), p,q (2), u,w (3), m,m' (4); du = p, dw = q;
// xy = p, yz = q, uz = m, xw = m'.
Instance instance_massey(int truncation);

// Polynomial forms on an interval modulo (t^3, t^2 dt): 1, t, t^2 in degree
// 0 and dt, t dt in degree -1; dt = d t and 2 t dt = d t^2.
Instance instance_forms(int truncation);

// Seeded random DGA j of a corpus: total dimension at most 6, degrees in
// [-3, 3]. Basis elements carry a weight in {1, 2, 3} and products add
// weights, so the weight filtration makes the algebra nilpotent. The
// product coefficients are drawn from the solution space of the Leibniz
// and associativity relations, layer by layer.
Instance random_dga(std::uint64_t seed, int j, int truncation);

// A valid retract that generally violates the side conditions, obtained
// from r (with dW = 0) by random t : V -> W, r' : W -> V, s : V -> V:
//   f' = f + t d,  g' = g + d r',  h' = h + g t + r' f + r' t d + d s - s d.
DeformationRetract scrambled_retract(const DeformationRetract& r, std::uint64_t seed);

}  // namespace htt

#endif
