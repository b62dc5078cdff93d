// SPDX-License-Identifier: MIT

#include "htt/retract.hpp"
#include "htt/suspension.hpp"

#include <doctest.h>

using namespace htt;

TEST_SUITE("suspension")
{
    TEST_CASE("global sign parity")
    {
        CHECK(suspension_sign_exponent(1) % 2 == 0);
        CHECK(suspension_sign_exponent(2) % 2 == 1);
        CHECK(suspension_sign_exponent(3) % 2 == 1);
        CHECK(suspension_sign_exponent(4) % 2 == 0);
        CHECK(suspension_sign_exponent(5) % 2 == 0);
    }

    TEST_CASE("suspension shifts degrees by one")
    {
        const ModulePtr V = instance_massey(3).mu->carrier();
        const ModulePtr sV = suspend_module(V);
        CHECK(sV->dims() == std::map<int, int>{{2, 3}, {3, 2}, {4, 2}, {5, 2}});
        CHECK(desuspend_module(sV)->same_shape(*V));
    }

    TEST_CASE("s^n composed with w^n is the global sign")
    {
        const ModulePtr V = make_module({{0, 1}, {1, 1}, {2, 1}});
        const ModulePtr sV = suspend_module(V);
        const MultiMap s = suspension_map(V, sV);
        const MultiMap w = desuspension_map(sV, V);
        for (int n = 1; n <= 6; ++n)
        {
            const MultiMap lhs = compose(tensor_power(s, n), tensor_power(w, n));
            const long e = static_cast<long>(n) * (n - 1) / 2;
            CHECK(lhs == sign_of(e) * tensor_power(MultiMap::identity(sV), n));
        }
    }

    TEST_CASE("structure round trip")
    {
        for (const Instance& in : {instance_massey(6), instance_forms(6), random_dga(1, 2, 6)})
        {
            const SuspendedAInfinity s = suspend_structure(*in.mu);
            for (const auto& [n, dn] : s.deltas) CHECK(dn.degree() == -1);
            const AInfinity back = desuspend_structure(s, in.mu->carrier());
            CHECK(back.differential() == in.mu->differential());
            for (int n = 2; n <= 6; ++n) CHECK(back.product(n) == in.mu->product(n));
        }
    }

    TEST_CASE("map round trip")
    {
        const Instance in = instance_massey(3);
        const ModulePtr V = in.mu->carrier();
        const ModulePtr sV = suspend_module(V);
        const MultiMap& m2 = in.mu->product(2);
        const MultiMap d2 = suspend_map(m2, sV, sV);
        CHECK(d2.find({0, 1}) != nullptr);
        CHECK(desuspend_map(d2, V, V) == m2);
    }
}
