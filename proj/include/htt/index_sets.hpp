// SPDX-License-Identifier: MIT
//
// index_sets.hpp
//
// The summation ranges A(n), B(n), C(n) and the theta sign exponent shared
// by the A-infinity relations and the kernel recursions.

#ifndef HTT_INDEX_SETS_HPP
#define HTT_INDEX_SETS_HPP

#include <vector>

namespace htt
{

// (k, l, i) with k + l = n + 1, k, l >= 2, 1 <= i <= k.
struct IndexA
{
    int k;
    int l;
    int i;
    friend bool operator==(const IndexA&, const IndexA&) = default;
};

// Ordered by k ascending, then i ascending.
std::vector<IndexA> enum_A(int n);

// Compositions of n into k >= 2 positive parts, k ascending, then
// lexicographic in the parts.
std::vector<std::vector<int>> enum_B(int n);

// All compositions of n (k >= 1), same order as enum_B with (n) first.
std::vector<std::vector<int>> compositions(int n);

// (k, i; r_1..r_i) with 2 <= k <= n, 1 <= i <= k, r_j >= 1 and
// r_1 + ... + r_i + k - i = n.
struct IndexC
{
    int k;
    int i;
    std::vector<int> r;
    friend bool operator==(const IndexC&, const IndexC&) = default;
};

// Ordered by k, then i, then lexicographic in r.
std::vector<IndexC> enum_C(int n);

// sum_{i<j} u_i (u_j + 1).
long theta(const std::vector<int>& u);

}  // namespace htt

#endif
