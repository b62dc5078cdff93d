// SPDX-License-Identifier: MIT

#include "helpers.hpp"

#include <doctest.h>

using namespace htt;
using htt::test::image;

TEST_SUITE("graded")
{
    TEST_CASE("module ids follow degree then index")
    {
        const ModulePtr m = make_module({{2, 1}, {-1, 2}}, "M");
        CHECK(m->total_dim() == 3);
        CHECK(m->id({-1, 0}) == 0);
        CHECK(m->id({-1, 1}) == 1);
        CHECK(m->id({2, 0}) == 2);
        CHECK(m->degree_of(2) == 2);
        CHECK(m->dim(5) == 0);
        CHECK(word_degree(*m, {0, 2, 1}) == 0);
        CHECK_THROWS_AS((void)m->id({0, 0}), std::out_of_range);
    }

    TEST_CASE("vector arithmetic drops zeros")
    {
        Vector v({0, 1}, Scalar(2));
        v.add({0, 1}, Scalar(-2));
        CHECK(v.is_zero());
        const Vector a = htt::test::vec({{{0}, 1}, {{1}, 2}});
        const Vector b = htt::test::vec({{{2}, 3}});
        const Vector t = tensor(a, b);
        CHECK(t.size() == 2);
        CHECK(t.coefficient({1, 2}) == Scalar(6));
    }

    TEST_CASE("koszul sign")
    {
        CHECK(koszul_sign(std::vector<int>{1}, 1) == Scalar(-1));
        CHECK(koszul_sign(std::vector<int>{2, 3}, 0) == Scalar(1));
        CHECK(koszul_sign(std::vector<int>{1, 1}, -1) == Scalar(1));
        CHECK(koszul_sign(std::vector<int>{1, 2}, -1) == Scalar(-1));
        CHECK(koszul_sign(std::vector<int>{}, 1) == Scalar(1));
    }

    TEST_CASE("a map passing an odd element picks up a sign")
    {
        // v in degree 1, w in degree 2, d(w) = e in degree 1.
        const ModulePtr m = make_module({{1, 2}, {2, 1}});
        const int v = 0, e = 1, w = 2;
        MultiMap d(m, m, 1, -1);
        d.add_term({w}, {e}, Scalar(1));
        const MultiMap id = MultiMap::identity(m);
        CHECK(apply_block({&id, &d}, {v, w}) == Vector({v, e}, Scalar(-1)));
        CHECK(apply_block({&d, &id}, {w, v}) == Vector({e, v}, Scalar(1)));
        CHECK_THROWS_AS(apply_block({&id, &d}, {v}), std::invalid_argument);

        MultiMap mu(m, m, 2, 0);
        mu.add_term({v, e}, {w}, Scalar(1));
        const MultiMap ins = insert(mu, 2, d);
        CHECK(image(ins, {v, w}) == Vector({w}, Scalar(-1)));
        const MultiMap tp = tensor_product({&id, &d});
        CHECK(image(tp, {v, w}) == Vector({v, e}, Scalar(-1)));
    }

    TEST_CASE("multimap algebra")
    {
        const ModulePtr m = make_module({{0, 2}});
        MultiMap a(m, m, 1, 0);
        a.add_term({0}, {1}, Scalar(3));
        const MultiMap zero(m, m, 1, 0);
        CHECK(a + zero == a);
        CHECK((a - a).is_zero());
        CHECK(Scalar(1) * a == a);
        CHECK(compose(MultiMap::identity(m), a) == a);
        CHECK(tensor_power(a, 2).nnz() == 1);
        CHECK(image(tensor_power(a, 2), {0, 0}) == Vector({1, 1}, Scalar(9)));
        MultiMap wrong(m, m, 1, 1);
        CHECK_THROWS_AS(wrong.add_term({0}, {1}, Scalar(1)), std::invalid_argument);
        CHECK_THROWS_AS(a.add_term({0, 0}, {1}, Scalar(1)), std::invalid_argument);
    }
}
