// SPDX-License-Identifier: MIT

#include "helpers.hpp"
#include "htt/retract.hpp"

#include <doctest.h>

using namespace htt;
using htt::test::image;

TEST_SUITE("retract")
{
    TEST_CASE("Massey homology")
    {
        const Instance in = instance_massey(3);
        CHECK(homology(in.complex())->dims() == std::map<int, int>{{1, 3}, {4, 2}});
        const DeformationRetract r = harmonious_retract(in.complex());
        CHECK(r.violations().empty());
        CHECK(r.side_conditions().all());
        enum : int { x, y, z, p, q, u, w, m, mp };
        CHECK(image(r.h, {p}) == Vector({u}, Scalar(-1)));
        CHECK(image(r.h, {q}) == Vector({w}, Scalar(-1)));
        CHECK(image(r.h, {x}).is_zero());
        CHECK(image(r.h, {u}).is_zero());
        CHECK(compose(r.f, r.g) == MultiMap::identity(r.W));
    }

    TEST_CASE("forms homology and homotopy")
    {
        const Instance in = instance_forms(3);
        CHECK(homology(in.complex())->dims() == std::map<int, int>{{0, 1}});
        const DeformationRetract r = harmonious_retract(in.complex());
        enum : int { dt, tdt, one, t, t2 };
        CHECK(image(r.h, {dt}) == Vector({t}, Scalar(-1)));
        CHECK(image(r.h, {tdt}) == Vector({t2}, Scalar::parse("-1/2")));
        CHECK(image(r.g, {0}) == Vector({one}, Scalar(1)));
        CHECK(r.side_conditions().all());
    }

    TEST_CASE("zero differential gives the identity retract")
    {
        const ModulePtr V = make_module({{0, 2}, {3, 1}});
        const DeformationRetract r = harmonious_retract({V, MultiMap(V, V, 1, -1)});
        CHECK(r.W->same_shape(*V));
        CHECK(r.h.is_zero());
        CHECK(r.f.nnz() == 3);
        CHECK(compose(r.g, r.f) == MultiMap::identity(V));
    }

    TEST_CASE("splitting rejects a non-differential")
    {
        const ModulePtr V = make_module({{0, 1}, {1, 1}});
        MultiMap bad(V, V, 1, -1);
        bad.add_term({1}, {0}, Scalar(1));
        CHECK_NOTHROW(split({V, bad}));
        MultiMap d(V, V, 1, 0);
        CHECK_THROWS_AS(split({V, d}), std::invalid_argument);
    }

    TEST_CASE("random algebras are deterministic and valid")
    {
        for (int j = 0; j < 8; ++j)
        {
            const Instance a = random_dga(7, j, 4);
            const Instance b = random_dga(7, j, 4);
            CHECK(a.labels == b.labels);
            CHECK(a.mu->carrier()->dims() == b.mu->carrier()->dims());
            CHECK(a.mu->differential() == b.mu->differential());
            CHECK(a.mu->product(2) == b.mu->product(2));
            CHECK(a.mu->carrier()->total_dim() <= 6);
            CHECK(check_structure(*a.mu, 4).all_zero());
        }
    }

    TEST_CASE("scrambled retracts stay valid")
    {
        for (const Instance& in : {instance_massey(3), instance_forms(3), random_dga(1, 5, 3)})
        {
            const DeformationRetract r = scrambled_retract(harmonious_retract(in.complex()), 11);
            CHECK(r.violations().empty());
        }
        const DeformationRetract s = scrambled_retract(harmonious_retract(instance_massey(3).complex()), 11);
        CHECK_FALSE(s.side_conditions().all());
    }
}
