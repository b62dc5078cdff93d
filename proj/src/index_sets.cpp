// SPDX-License-Identifier: MIT

#include "htt/index_sets.hpp"

#include "htt/sign_hooks.hpp"

#include <stdexcept>

namespace htt
{

namespace
{

// Compositions of n into exactly k positive parts, lexicographic.
void parts(int n, int k, std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
    if (k == 1)
    {
        prefix.push_back(n);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = 1; first <= n - (k - 1); ++first)
    {
        prefix.push_back(first);
        parts(n - first, k - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<IndexA> enum_A(int n)
{
    if (n < 1) throw std::invalid_argument("enum_A needs n >= 1");
    std::vector<IndexA> out;
    for (int k = 2; k <= n - 1; ++k)
    {
        const int l = n + 1 - k;
        for (int i = 1; i <= k; ++i) out.push_back({k, l, i});
    }
    return out;
}

std::vector<std::vector<int>> compositions(int n)
{
    if (n < 1) throw std::invalid_argument("compositions needs n >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    for (int k = 1; k <= n; ++k) parts(n, k, prefix, out);
    return out;
}

std::vector<std::vector<int>> enum_B(int n)
{
    auto all = compositions(n);
    all.erase(all.begin());
    return all;
}

std::vector<IndexC> enum_C(int n)
{
    if (n < 2) throw std::invalid_argument("enum_C needs n >= 2");
    std::vector<IndexC> out;
    for (int k = 2; k <= n; ++k)
        for (int i = 1; i <= k; ++i)
        {
            const int total = n - (k - i);
            if (total < i) continue;
            std::vector<std::vector<int>> rs;
            std::vector<int> prefix;
            parts(total, i, prefix, rs);
            for (auto& r : rs) out.push_back({k, i, std::move(r)});
        }
    return out;
}

long theta(const std::vector<int>& u)
{
    const SignMutant m = active_sign_mutant();
    const std::size_t k = u.size();
    long sum = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
        {
            if (m == SignMutant::theta_drop_last_pair && i + 2 == k && j + 1 == k) continue;
            const long a = u[i];
            const long b = u[j];
            switch (m)
            {
            case SignMutant::theta_no_shift: sum += a * b; break;
            case SignMutant::theta_transposed: sum += b * (a + 1); break;
            default: sum += a * (b + 1); break;
            }
        }
    if (m == SignMutant::theta_offset) sum += 1;
    return sum;
}

}  // namespace htt
