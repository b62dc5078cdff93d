// SPDX-License-Identifier: MIT

#include "helpers.hpp"
#include "htt/kernels.hpp"
#include "htt/retract.hpp"

#include <doctest.h>

using namespace htt;
using htt::test::image;

namespace
{

enum : int { x, y, z, p, q, u, w, m, mp };

TransferPackage massey_package(int N)
{
    const Instance in = instance_massey(N);
    return transfer(harmonious_retract(in.complex()), in.mu, N);
}

}  // namespace

TEST_SUITE("kernels")
{
    TEST_CASE("p_2 is the product")
    {
        const TransferPackage pkg = massey_package(4);
        CHECK(pkg.kernels.p.at(2) == pkg.mu->product(2));
        CHECK(pkg.kernels_theta.p.at(2) == pkg.mu->product(2));
    }

    TEST_CASE("the Massey triple product")
    {
        const TransferPackage pkg = massey_package(5);
        // p_3(x,y,z) = mu_2(h p_2(x,y), z) - mu_2(x, h p_2(y,z)) with h p = -u, h q = -w.
        Vector p3;
        p3.add({m}, Scalar(-1));
        p3.add({mp}, Scalar(-1));
        CHECK(image(pkg.kernels.p.at(3), {x, y, z}) == p3);
        CHECK(image(pkg.kernels_theta.p.at(3), {x, y, z}) == p3);

        // The small module has x,y,z in degree 1 and [m],[m'] in degree 4.
        const ModulePtr W = pkg.retract.W;
        REQUIRE(W->dims() == std::map<int, int>{{1, 3}, {4, 2}});
        Vector nu3;
        nu3.add({W->id({4, 0})}, Scalar(-1));
        nu3.add({W->id({4, 1})}, Scalar(-1));
        CHECK(image(pkg.nu->product(3), {0, 1, 2}) == nu3);
        CHECK(pkg.nu->product(2).is_zero());
        CHECK(pkg.all_zero());
    }

    TEST_CASE("forms transfer to a strict algebra")
    {
        const Instance in = instance_forms(5);
        const TransferPackage pkg = transfer(harmonious_retract(in.complex()), in.mu, 5);
        CHECK(pkg.all_zero());
        CHECK_FALSE(pkg.nu->product(2).is_zero());
        for (int n = 3; n <= 5; ++n) CHECK(pkg.nu->product(n).is_zero());
    }

    TEST_CASE("a vanishing homotopy leaves the structure untouched")
    {
        // Zero differential: the retract onto homology is the identity with h = 0.
        const Instance in = random_dga(1, 0, 4);
        const ChainComplex flat{in.mu->carrier(), MultiMap(in.mu->carrier(), in.mu->carrier(), 1, -1)};
        auto mu = std::make_shared<AInfinity>(in.mu->carrier(), flat.d, 4);
        for (int n = 2; n <= 4; ++n) mu->set_product(n, in.mu->product(n));
        const DeformationRetract r = harmonious_retract(flat);
        REQUIRE(r.h.is_zero());
        const TransferPackage pkg = transfer(r, mu, 4);
        for (int n = 2; n <= 4; ++n)
        {
            CHECK(pkg.kernels.p.at(n) == mu->product(n));
            CHECK(pkg.kernels.q.at(n).is_zero());
        }
    }

    TEST_CASE("the composite starts with g f")
    {
        const TransferPackage pkg = massey_package(4);
        CHECK(pkg.kernels.composite.at(1) == compose(pkg.retract.g, pkg.retract.f));
        CHECK(pkg.psi_phi->component(1) == compose(pkg.retract.g, pkg.retract.f));
    }

    TEST_CASE("kernel identities")
    {
        for (const Instance& in : {instance_massey(5), instance_forms(5), random_dga(1, 4, 5)})
        {
            const DeformationRetract r = harmonious_retract(in.complex());
            const TransferPackage pkg = transfer(r, in.mu, 5);
            CHECK(check_p_identity(pkg.kernels, r, *in.mu, 5).all_zero());
            CHECK(check_p_identity_on_g(pkg.kernels, r, *in.mu, 5).all_zero());
            CHECK(check_q_identity(pkg.kernels, r, *in.mu, 5).all_zero());
            CHECK(check_p_identity_suspended(pkg.suspended, 5).all_zero());
            CHECK(check_q_identity_suspended(pkg.suspended, 5).all_zero());
            const KernelFamily back = desuspend_kernels(pkg.suspended, r.V, 5);
            for (int n = 2; n <= 5; ++n) CHECK(back.p.at(n) == pkg.kernels_theta.p.at(n));
            for (int n = 1; n <= 5; ++n) CHECK(back.q.at(n) == pkg.kernels_theta.q.at(n));
        }
    }

    TEST_CASE("an invalid retract is rejected")
    {
        const Instance in = instance_massey(3);
        DeformationRetract r = harmonious_retract(in.complex());
        r.h = MultiMap(r.V, r.V, 1, 1);
        CHECK_FALSE(r.violations().empty());
        CHECK_THROWS_AS(transfer(r, in.mu, 3), std::invalid_argument);
    }
}
