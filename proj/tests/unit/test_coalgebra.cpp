// SPDX-License-Identifier: MIT

#include "helpers.hpp"
#include "htt/coalgebra.hpp"
#include "htt/retract.hpp"
#include "htt/sign_hooks.hpp"
#include "htt/suspension.hpp"

#include <doctest.h>

using namespace htt;
using htt::test::image;

namespace
{

// Massey ids.
enum : int { x, y, z, p, q, u, w, m, mp };

ComponentFamily differential_family(const AInfinity& a, int N)
{
    ComponentFamily fam(FamilyKind::coderivation, a.carrier(), a.carrier(), -1, N);
    fam.set(1, a.differential());
    return fam;
}

}  // namespace

TEST_SUITE("coalgebra")
{
    TEST_CASE("comultiplication splits a word at every interior point")
    {
        const auto c = comultiply({1, 2, 3});
        REQUIRE(c.size() == 2);
        CHECK(c[0] == std::make_pair(Word{1}, Word{2, 3}));
        CHECK(c[1] == std::make_pair(Word{1, 2}, Word{3}));
        CHECK(comultiply({7}).empty());
        CHECK(comultiply({1, 2, 3, 4, 5}).size() == 4);
    }

    TEST_CASE("lift of a differential matches the Leibniz expansion")
    {
        const Instance in = instance_massey(3);
        const CoalgebraOperator D = lift_coderivation(differential_family(*in.mu, 3));
        // d(u w) = (d u) w + (-1)^{|u|} u (d w) with |u| = 3.
        Vector expect;
        expect.add({p, w}, Scalar(1));
        expect.add({u, q}, Scalar(-1));
        CHECK(image(D.on(2), {u, w}) == expect);
        // A word of cycles is annihilated.
        CHECK(image(D.on(3), {x, y, z}).is_zero());
        // Explicit loop over positions with the degree sum to the left.
        const Word word = {u, x, w};
        Vector loop;
        int left = 0;
        for (std::size_t i = 0; i < word.size(); ++i)
        {
            if (const Vector* dv = in.mu->differential().find({word[i]}))
                for (const auto& [out, c] : dv->terms())
                {
                    Word nw = word;
                    nw[i] = out.front();
                    loop.add(nw, c * sign_of(left));
                }
            left += in.mu->carrier()->degree_of(word[i]);
        }
        CHECK(image(D.on(3), word) == loop);
    }

    TEST_CASE("extraction inverts lifting")
    {
        const Instance in = instance_massey(4);
        const ComponentFamily fam = suspend_structure(*in.mu).family();
        const ComponentFamily back = extract_components(lift_coderivation(fam), FamilyKind::coderivation);
        for (int n = 1; n <= 4; ++n) CHECK(back.component(n) == fam.component(n));
    }

    TEST_CASE("lifted suspended structures square to zero")
    {
        for (const Instance& in : {instance_massey(5), instance_forms(5)})
        {
            const CoalgebraOperator D = lift_coderivation(suspend_structure(*in.mu).family());
            CHECK(square_defect(D).is_zero_upto(5));
            CHECK(check_codifferential(suspend_structure(*in.mu).family(), 5).all_zero());
            const CoalgebraOperator one = CoalgebraOperator::identity(D.source(), 5);
            CHECK(comultiplication_defect(D, {{&D, &one}, {&one, &D}}, 5) == 0);
        }
    }

    TEST_CASE("a strict morphism lifts to its tensor powers")
    {
        const ModulePtr V = instance_massey(4).mu->carrier();
        const MultiMap f = Scalar(2) * MultiMap::identity(V);
        ComponentFamily fam(FamilyKind::morphism, V, V, 0, 4);
        fam.set(1, f);
        const CoalgebraOperator F = lift_morphism(fam);
        for (int n = 1; n <= 4; ++n) CHECK(F.on(n) == tensor_power(f, n));
        CHECK(comultiplication_defect(F, {{&F, &F}}, 4) == 0);
    }

    TEST_CASE("a linear homotopy lifts with identity flanks")
    {
        const ModulePtr V = instance_massey(3).mu->carrier();
        MultiMap h(V, V, 1, 1);
        h.add_term({p}, {u}, Scalar(-1));
        ComponentFamily fam(FamilyKind::homotopy, V, V, 1, 3);
        fam.set(1, h);
        const auto one = std::make_shared<const ComponentFamily>(ComponentFamily::identity(V, 3));
        fam.left = one;
        fam.right = one;
        const CoalgebraOperator H = lift_homotopy(fam);
        // h (x p) = (-1)^{|x|} x h(p) = x u.
        CHECK(image(H.on(2), {x, p}) == Vector({x, u}, Scalar(1)));
        CHECK(image(H.on(2), {p, x}) == Vector({u, x}, Scalar(-1)));
        const CoalgebraOperator E = CoalgebraOperator::identity(V, 3);
        CHECK(comultiplication_defect(H, {{&E, &H}, {&H, &E}}, 3) == 0);
    }

    TEST_CASE("a lift built with the wrong sign rule is flagged")
    {
        const Instance in = instance_massey(3);
        const ComponentFamily fam = differential_family(*in.mu, 3);
        std::optional<CoalgebraOperator> broken;
        {
            SignMutantScope s(SignMutant::koszul_trivial);
            broken = lift_coderivation(fam);
        }
        const CoalgebraOperator one = CoalgebraOperator::identity(in.mu->carrier(), 3);
        CHECK(comultiplication_defect(*broken, {{&*broken, &one}, {&one, &*broken}}, 3) > 0);
        CHECK_FALSE(broken->equal_upto(lift_coderivation(fam), 3));
    }

    TEST_CASE("operator and componentwise defects agree on a strict morphism")
    {
        const Instance in = instance_massey(4);
        const ComponentFamily d = suspend_structure(*in.mu).family();
        const ComponentFamily id = ComponentFamily::identity(d.source, 4);
        const CoalgebraOperator D = lift_coderivation(d);
        CHECK(check_morphism_components(id, d, d, 4).all_zero());
        CHECK(intertwining_defect(lift_morphism(id), D, D).is_zero_upto(4));
        // Doubling one structure map breaks intertwining identically on both sides.
        ComponentFamily d2 = d;
        d2.set(2, Scalar(2) * d.component(2));
        const CoalgebraOperator def = intertwining_defect(lift_morphism(id), D, lift_coderivation(d2));
        const ResidualReport blocks = component_blocks(def, 4, "intertwining");
        const ResidualReport comp = check_morphism_components(id, d, d2, 4);
        CHECK_FALSE(comp.all_zero());
        for (int n = 1; n <= 4; ++n) CHECK(blocks.residuals.at(n) == comp.residuals.at(n));
    }
}
