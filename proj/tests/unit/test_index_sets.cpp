// SPDX-License-Identifier: MIT

#include "htt/index_sets.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace htt;

namespace
{

// Brute-force oracle: every (k, i; r) in a bounding box filtered by the constraint.
std::size_t count_C(int n)
{
    std::size_t count = 0;
    for (int k = 2; k <= n; ++k)
        for (int i = 1; i <= k; ++i)
        {
            const int total = n - k + i;  // r_1 + ... + r_i
            if (total < i) continue;
            // Compositions of total into i positive parts.
            std::size_t c = 1;
            for (int t = 1; t < i; ++t) c = c * static_cast<std::size_t>(total - t) / static_cast<std::size_t>(t);
            count += c;
        }
    return count;
}

}  // namespace

TEST_SUITE("index_sets")
{
    TEST_CASE("A ranges")
    {
        CHECK(enum_A(1).empty());
        CHECK(enum_A(2).empty());
        CHECK(enum_A(3) == std::vector<IndexA>{{2, 2, 1}, {2, 2, 2}});
        const auto a4 = enum_A(4);
        CHECK(a4.size() == 5);
        CHECK(a4 == std::vector<IndexA>{{2, 3, 1}, {2, 3, 2}, {3, 2, 1}, {3, 2, 2}, {3, 2, 3}});
        for (int n = 2; n <= 8; ++n)
            for (const auto& t : enum_A(n)) CHECK(t.k + t.l == n + 1);
    }

    TEST_CASE("B ranges are compositions with at least two parts")
    {
        CHECK(enum_B(1).empty());
        CHECK(enum_B(2) == std::vector<std::vector<int>>{{1, 1}});
        CHECK(enum_B(3) == std::vector<std::vector<int>>{{1, 2}, {2, 1}, {1, 1, 1}});
        for (int n = 1; n <= 9; ++n)
        {
            CHECK(enum_B(n).size() == (std::size_t{1} << (n - 1)) - 1);
            CHECK(compositions(n).size() == std::size_t{1} << (n - 1));
            CHECK(compositions(n).front() == std::vector<int>{n});
        }
    }

    TEST_CASE("C ranges")
    {
        CHECK_THROWS_AS(enum_C(1), std::invalid_argument);
        CHECK(enum_C(2) == std::vector<IndexC>{{2, 1, {1}}, {2, 2, {1, 1}}});
        CHECK(enum_C(3).size() == 6);
        for (int n = 2; n <= 7; ++n)
        {
            const auto c = enum_C(n);
            CHECK(c.size() == count_C(n));
            for (const auto& t : c)
            {
                int sum = 0;
                for (int r : t.r) sum += r;
                CHECK(sum + t.k - t.i == n);
                CHECK(static_cast<int>(t.r.size()) == t.i);
            }
        }
    }

    TEST_CASE("theta exponent")
    {
        CHECK(theta({1, 1}) == 2);
        CHECK(theta({2, 1}) == 4);
        CHECK(theta({1, 2}) == 3);
        CHECK(theta({1, 1, 1}) == 6);
        CHECK(theta({5}) == 0);
    }
}
