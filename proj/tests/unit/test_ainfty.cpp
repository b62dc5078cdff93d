// SPDX-License-Identifier: MIT

#include "htt/ainfty.hpp"
#include "htt/retract.hpp"

#include <doctest.h>

using namespace htt;

TEST_SUITE("ainfty")
{
    TEST_CASE("desk algebras satisfy the relations")
    {
        CHECK(check_structure(*instance_massey(6).mu, 6).all_zero());
        CHECK(check_structure(*instance_forms(6).mu, 6).all_zero());
        for (int j = 0; j < 5; ++j) CHECK(check_structure(*random_dga(1, j, 5).mu, 5).all_zero());
    }

    TEST_CASE("a product violating the Leibniz rule fails at arity two")
    {
        // b in degree -1, a in degree 0, d a = b, a a = a.
        const ModulePtr V = make_module({{-1, 1}, {0, 1}});
        const int b = 0, a = 1;
        MultiMap d(V, V, 1, -1);
        d.add_term({a}, {b}, Scalar(1));
        auto alg = std::make_shared<AInfinity>(V, d, 3);
        MultiMap m2(V, V, 2, 0);
        m2.add_term({a, a}, {a}, Scalar(1));
        alg->set_product(2, m2);
        const ResidualReport r = check_structure(*alg, 3);
        CHECK_FALSE(r.all_zero());
        CHECK(r.first_failing_arity() == 2);
        CHECK(r.residuals.at(1).is_zero());
        CHECK_FALSE(r.first_offender().empty());
    }

    TEST_CASE("a non-multiplicative chain map fails at arity two")
    {
        const ModulePtr V = make_module({{0, 1}});
        MultiMap m2(V, V, 2, 0);
        m2.add_term({0, 0}, {0}, Scalar(1));
        auto alg = std::make_shared<AInfinity>(V, MultiMap(V, V, 1, -1), 3);
        alg->set_product(2, m2);
        AInftyMorphism f(alg, alg, 3);
        f.set_component(1, Scalar(2) * MultiMap::identity(V));
        const ResidualReport r = check_morphism(f, 3);
        CHECK(r.residuals.at(1).is_zero());
        CHECK(r.first_failing_arity() == 2);
        CHECK(check_morphism(AInftyMorphism::identity(alg), 3).all_zero());
    }

    TEST_CASE("composition with the identity")
    {
        const AInfinityPtr a = instance_massey(4).mu;
        AInftyMorphism f(a, a, 4);
        MultiMap f2(a->carrier(), a->carrier(), 2, 1);
        f2.add_term({0, 1}, {5}, Scalar(1));  // x y -> u
        f.set_component(1, MultiMap::identity(a->carrier()));
        f.set_component(2, f2);
        const AInftyMorphism id = AInftyMorphism::identity(a);
        for (const AInftyMorphism& c : {compose_morphisms(id, f), compose_morphisms(f, id)})
            for (int n = 1; n <= 4; ++n) CHECK(c.component(n) == f.component(n));
    }

    TEST_CASE("composition is associative up to truncation")
    {
        const AInfinityPtr a = instance_massey(4).mu;
        const ModulePtr V = a->carrier();
        // Strict part c * id plus one arity-2 correction each; the
        // composition formula does not need the morphism relation.
        auto make = [&](long c, int in1, int in2, int out) {
            AInftyMorphism f(a, a, 4);
            f.set_component(1, Scalar(c) * MultiMap::identity(V));
            MultiMap f2(V, V, 2, 1);
            f2.add_term({in1, in2}, {out}, Scalar(1));
            f.set_component(2, f2);
            return f;
        };
        const AInftyMorphism f = make(2, 0, 1, 5);  // x y -> u
        const AInftyMorphism g = make(-1, 1, 2, 6);  // y z -> w
        const AInftyMorphism h = make(3, 0, 2, 5);  // x z -> u
        const AInftyMorphism left = compose_morphisms(compose_morphisms(h, g), f);
        const AInftyMorphism right = compose_morphisms(h, compose_morphisms(g, f));
        for (int n = 1; n <= 4; ++n) CHECK(left.component(n) == right.component(n));
        CHECK_FALSE(left.component(2).is_zero());
    }

    TEST_CASE("a homotopy between identical morphisms with zero components")
    {
        const AInfinityPtr a = instance_forms(4).mu;
        auto id = std::make_shared<AInftyMorphism>(AInftyMorphism::identity(a));
        const AInftyHomotopy h(id, id, 4);
        CHECK(check_homotopy(h, 4).all_zero());
        CHECK(check_homotopy(h, 4, HomotopySign::theta_only).all_zero());
    }

    TEST_CASE("setters validate shape")
    {
        const AInfinityPtr a = instance_forms(3).mu;
        AInfinity b = *a;
        CHECK_THROWS_AS(b.set_product(4, MultiMap(a->carrier(), a->carrier(), 4, 2)), std::invalid_argument);
        CHECK_THROWS_AS(b.set_product(2, MultiMap(a->carrier(), a->carrier(), 2, 1)), std::invalid_argument);
        CHECK(b.product(3).is_zero());
    }
}
