// SPDX-License-Identifier: MIT

#include "htt/linalg.hpp"

#include <doctest.h>

using namespace htt;

namespace
{

Matrix mat(int r, int c, std::initializer_list<long> entries)
{
    Matrix m(r, c);
    int k = 0;
    for (long e : entries)
    {
        m.at(k / c, k % c) = Scalar(e);
        ++k;
    }
    return m;
}

}  // namespace

TEST_SUITE("linalg")
{
    TEST_CASE("rank and kernel")
    {
        const Matrix m = mat(2, 3, {1, 2, 3, 2, 4, 6});
        CHECK(rank(m) == 1);
        const auto ker = kernel_basis(m);
        CHECK(ker.size() == 2);
        for (const auto& v : ker)
            for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    }

    TEST_CASE("solve and inverse")
    {
        const Matrix m = mat(2, 2, {2, 1, 1, 1});
        const auto x = solve(m, {Scalar(3), Scalar(2)});
        REQUIRE(x);
        CHECK((*x)[0] == Scalar(1));
        CHECK((*x)[1] == Scalar(1));
        const Matrix inv = inverse(m);
        CHECK(inv.at(0, 0) == Scalar(1));
        CHECK(inv.at(0, 1) == Scalar(-1));
        CHECK(inv.at(1, 1) == Scalar(2));
        CHECK_THROWS_AS(inverse(mat(2, 2, {1, 2, 2, 4})), std::domain_error);
        CHECK_FALSE(solve(mat(2, 1, {1, 1}), {Scalar(1), Scalar(2)}));
    }

    TEST_CASE("basis extension keeps order")
    {
        std::vector<Column> basis = {{Scalar(1), Scalar(1)}};
        const auto taken = extend_basis(basis, {{Scalar(2), Scalar(2)}, {Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}, 2);
        CHECK(taken == std::vector<int>{1});
        CHECK(basis.size() == 2);
    }
}
