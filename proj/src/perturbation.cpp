// SPDX-License-Identifier: MIT

#include "htt/perturbation.hpp"

#include <stdexcept>

namespace htt
{

namespace
{

ComponentFamily strict_family(const MultiMap& m, int N)
{
    ComponentFamily out(FamilyKind::morphism, m.source(), m.target(), m.degree(), N);
    out.set(1, m);
    return out;
}

CoalgebraOperator lifted_homotopy(const SuspendedRetract& r, int N)
{
    ComponentFamily fam(FamilyKind::homotopy, r.sV, r.sV, 1, N);
    fam.set(1, r.h);
    fam.left = std::make_shared<const ComponentFamily>(strict_family(r.gf, N));
    fam.right = std::make_shared<const ComponentFamily>(ComponentFamily::identity(r.sV, N));
    return lift_homotopy(fam);
}

CoalgebraOperator lifted_differential(const MultiMap& d, int N)
{
    ComponentFamily fam(FamilyKind::coderivation, d.source(), d.target(), -1, N);
    fam.set(1, d);
    return lift_coderivation(fam);
}

OperatorIdentity identity_check(std::string name, CoalgebraOperator defect)
{
    std::vector<int> failing = defect.nonzero_homogeneities(defect.truncation());
    return {std::move(name), std::move(defect), std::move(failing)};
}

}  // namespace

PerturbationData build_perturbation(const DeformationRetract& r, const AInfinity& mu, int N)
{
    if (N > mu.truncation()) throw std::invalid_argument("perturbation truncation exceeds structure truncation");
    SuspendedRetract sr = suspend_retract(r);
    SuspendedAInfinity delta = suspend_structure(mu);
    ComponentFamily dmu(FamilyKind::coderivation, sr.sV, sr.sV, -1, N);
    for (int n = 2; n <= N; ++n) dmu.set(n, delta.deltas.at(n));
    CoalgebraOperator dV = lifted_differential(sr.dV, N);
    CoalgebraOperator dW = lifted_differential(sr.dW, N);
    CoalgebraOperator F = lift_morphism(strict_family(sr.f, N));
    CoalgebraOperator G = lift_morphism(strict_family(sr.g, N));
    CoalgebraOperator H = lifted_homotopy(sr, N);
    CoalgebraOperator delta_mu = lift_coderivation(dmu);
    CoalgebraOperator X = compose(delta_mu, H);

    std::map<int, int> nil;
    CoalgebraOperator power = X;
    for (int i = 1; i <= N + 1 && static_cast<int>(nil.size()) < N; ++i)
    {
        for (int n = 1; n <= N; ++n)
            if (!nil.count(n) && power.on(n).is_zero()) nil[n] = i;
        power = compose(X, power);
    }
    return {N,
            std::move(sr),
            std::move(delta),
            std::move(dV),
            std::move(dW),
            std::move(F),
            std::move(G),
            std::move(H),
            std::move(delta_mu),
            std::move(X),
            std::move(nil)};
}

std::vector<int> nilpotency_failures(const CoalgebraOperator& X, int N)
{
    std::vector<int> out;
    CoalgebraOperator power = X;
    for (int n = 1; n <= N; ++n)
    {
        if (!power.on(n).is_zero()) out.push_back(n);
        if (n < N) power = compose(X, power);
    }
    return out;
}

CoalgebraOperator geometric_series(const CoalgebraOperator& X, int terms)
{
    const CoalgebraOperator one = CoalgebraOperator::identity(X.source(), X.truncation());
    CoalgebraOperator S = one;
    for (int i = 1; i < terms; ++i) S = one + compose(X, S);
    return S;
}

std::vector<int> inversion_failures(const CoalgebraOperator& X, int N)
{
    const CoalgebraOperator one = CoalgebraOperator::identity(X.source(), X.truncation());
    const CoalgebraOperator S = geometric_series(X, N);
    const CoalgebraOperator left = S - compose(X, S) - one;
    const CoalgebraOperator right = S - compose(S, X) - one;
    std::vector<int> out;
    for (int n = 1; n <= N; ++n)
        if (!left.on(n).is_zero() || !right.on(n).is_zero()) out.push_back(n);
    return out;
}

bool HplOutput::conclusions_hold() const
{
    for (const auto& c : conclusions)
        if (!c.holds()) return false;
    return true;
}

SideConditions check_side_conditions(const SuspendedRetract& r)
{
    SideConditions s;
    s.fg_identity = compose(r.f, r.g) == MultiMap::identity(r.sW);
    s.fh_zero = compose(r.f, r.h).is_zero();
    s.hg_zero = compose(r.h, r.g).is_zero();
    s.hh_zero = compose(r.h, r.h).is_zero();
    return s;
}

HplOutput hpl_transfer(const PerturbationData& d)
{
    const int N = d.truncation;
    if (!nilpotency_failures(d.X, N).empty()) throw std::domain_error("perturbation is not nilpotent");

    // T = S delta_mu G, phi = F S and H_out = H S with S = sum_{i<N} X^i.
    const CoalgebraOperator muG = compose(d.delta_mu, d.G);
    CoalgebraOperator T = muG;
    CoalgebraOperator phi = d.F;
    CoalgebraOperator H = d.H;
    for (int i = 1; i < N; ++i)
    {
        T = muG + compose(d.X, T);
        phi = d.F + compose(phi, d.X);
        H = d.H + compose(H, d.X);
    }
    CoalgebraOperator delta_nu = compose(d.F, T);
    CoalgebraOperator D_W = d.dW + delta_nu;
    CoalgebraOperator psi = d.G + compose(d.H, T);

    const CoalgebraOperator D_V = d.dV + d.delta_mu;
    std::vector<OperatorIdentity> conclusions;
    conclusions.push_back(identity_check("transferred codifferential squares to zero", square_defect(D_W)));
    conclusions.push_back(identity_check("phi intertwines", intertwining_defect(phi, D_V, D_W)));
    conclusions.push_back(identity_check("psi intertwines", intertwining_defect(psi, D_W, D_V)));
    conclusions.push_back(identity_check(
        "psi phi - 1 = D H + H D",
        homotopy_defect(compose(psi, phi), CoalgebraOperator::identity(d.retract.sV, N), H, D_V, D_V)));

    return {N,
            std::move(D_W),
            std::move(delta_nu),
            std::move(psi),
            std::move(phi),
            std::move(H),
            std::move(conclusions),
            check_side_conditions(d.retract).all()};
}

std::vector<OperatorIdentity> extraction_defects(const HplOutput& out)
{
    const int N = out.truncation;
    std::vector<OperatorIdentity> res;
    res.push_back(identity_check("delta_nu is a coderivation",
                                 out.delta_nu - lift_coderivation(extract_components(out.delta_nu, FamilyKind::coderivation))));
    res.push_back(identity_check("phi is a coalgebra morphism",
                                 out.phi - lift_morphism(extract_components(out.phi, FamilyKind::morphism))));
    res.push_back(identity_check("psi is a coalgebra morphism",
                                 out.psi - lift_morphism(extract_components(out.psi, FamilyKind::morphism))));
    ComponentFamily h = extract_components(out.H, FamilyKind::homotopy);
    h.left = std::make_shared<const ComponentFamily>(
        extract_components(compose(out.psi, out.phi), FamilyKind::morphism));
    h.right = std::make_shared<const ComponentFamily>(ComponentFamily::identity(out.H.source(), N));
    res.push_back(identity_check("H is a homotopy of coalgebra morphisms", out.H - lift_homotopy(h)));
    return res;
}

Comparison compare_hpl_vs_kernels(const HplOutput& hpl, const TransferPackage& pkg, int n_max)
{
    Comparison out;
    if (!hpl.canonical || !pkg.retract.side_conditions().all())
    {
        out.status = "skipped: side conditions not met";
        return out;
    }
    if (n_max > hpl.truncation || n_max > pkg.truncation) throw std::invalid_argument("comparison beyond truncation");
    const SuspendedKernels& s = pkg.suspended;
    const SuspendedRetract& r = s.retract;
    const int N = hpl.truncation;

    ComponentFamily nu(FamilyKind::coderivation, r.sW, r.sW, -1, N);
    ComponentFamily psi(FamilyKind::morphism, r.sW, r.sV, 0, N);
    ComponentFamily phi(FamilyKind::morphism, r.sV, r.sW, 0, N);
    ComponentFamily H(FamilyKind::homotopy, r.sV, r.sV, 1, N);
    ComponentFamily left(FamilyKind::morphism, r.sV, r.sV, 0, N);
    psi.set(1, r.g);
    phi.set(1, r.f);
    H.set(1, r.h);
    left.set(1, s.composite.at(1));
    for (int n = 2; n <= N; ++n)
    {
        const MultiMap pg = compose(s.p.at(n), tensor_power(r.g, n));
        nu.set(n, compose(r.f, pg));
        psi.set(n, compose(r.h, pg));
        phi.set(n, compose(r.f, s.q.at(n)));
        H.set(n, compose(r.h, s.q.at(n)));
        left.set(n, s.composite.at(n));
    }
    H.left = std::make_shared<const ComponentFamily>(std::move(left));
    H.right = std::make_shared<const ComponentFamily>(ComponentFamily::identity(r.sV, N));

    auto upto = [&](std::string name, const CoalgebraOperator& a, const CoalgebraOperator& b) {
        OperatorIdentity id = identity_check(std::move(name), a - b);
        std::erase_if(id.failing, [&](int n) { return n > n_max; });
        return id;
    };
    out.objects.push_back(upto("delta_nu", hpl.delta_nu, lift_coderivation(nu)));
    out.objects.push_back(upto("psi", hpl.psi, lift_morphism(psi)));
    out.objects.push_back(upto("phi", hpl.phi, lift_morphism(phi)));
    out.objects.push_back(upto("H", hpl.H, lift_homotopy(H)));
    out.status = "exact";
    for (const auto& o : out.objects)
        if (!o.holds()) out.status = "mismatch";
    return out;
}

namespace
{

// sum_{i=2}^{n-1} sum_u outer_{n-i+1}(1^u (x) delta_i (x) 1^{n-i-u}) o inner,
// with inner a map of arity n and output length n.
template <class Outer>
MultiMap insertion_tail(Outer outer, const SuspendedAInfinity& delta, const MultiMap& inner, int n)
{
    MultiMap acc(inner.source(), outer(1).target(), n, inner.degree() + delta.deltas.at(1).degree() + outer(1).degree());
    for (int i = 2; i < n; ++i)
    {
        const MultiMap& o = outer(n - i + 1);
        const MultiMap& d = delta.deltas.at(i);
        if (o.is_zero() || d.is_zero()) continue;
        for (int u = 0; u <= n - i; ++u) acc.add(compose(insert(o, u + 1, d), inner));
    }
    return acc;
}

}  // namespace

std::vector<ResidualReport> check_annihilation_lemmas(const TransferPackage& pkg, int n_max)
{
    const SuspendedKernels& s = pkg.suspended;
    const SuspendedRetract& r = s.retract;
    const int N = pkg.truncation;
    if (n_max > N) throw std::invalid_argument("lemma check beyond truncation");
    const CoalgebraOperator Hlift = lifted_homotopy(r, N);
    const MultiMap id = MultiMap::identity(r.sV);

    std::vector<ResidualReport> out;
    ResidualReport qg{"q^_n g^n = 0", {}};
    for (int n = 2; n <= n_max; ++n) qg.residuals.emplace(n, compose(s.q.at(n), tensor_power(r.g, n)));
    out.push_back(std::move(qg));

    for (int i = 0; i + 1 < n_max; ++i)
    {
        ResidualReport rep{"q^ ((g^f^)^" + std::to_string(i) + " h^ 1^j) = 0", {}};
        for (int j = 0; i + 1 + j <= n_max; ++j)
        {
            const int n = i + 1 + j;
            if (n < 2) continue;
            std::vector<const MultiMap*> maps(static_cast<std::size_t>(i), &r.gf);
            maps.push_back(&r.h);
            for (int k = 0; k < j; ++k) maps.push_back(&id);
            rep.residuals.emplace(n, compose(s.q.at(n), tensor_product(maps)));
        }
        out.push_back(std::move(rep));
    }

    auto q = [&](int k) -> const MultiMap& { return s.q.at(k); };
    auto comp = [&](int k) -> const MultiMap& { return s.composite.at(k); };

    ResidualReport t27{"p^ expansion on g^", {}};
    ResidualReport l28{"(psi phi) expansion through H", {}};
    ResidualReport t29{"q^ expansion through H", {}};
    for (int n = 2; n <= n_max; ++n)
    {
        const MultiMap gn = tensor_power(r.g, n);
        const MultiMap& Hn = Hlift.on(n);
        const MultiMap& dn = s.delta.deltas.at(n);

        MultiMap a = compose(s.p.at(n), gn) - compose(dn, gn);
        a.add(insertion_tail(q, s.delta, gn, n), Scalar(-1));
        t27.residuals.emplace(n, std::move(a));

        MultiMap b = comp(n) - compose(compose(r.h, s.p.at(n)), tensor_power(r.gf, n)) -
                     compose(compose(comp(1), dn), Hn);
        b.add(insertion_tail(comp, s.delta, Hn, n), Scalar(-1));
        l28.residuals.emplace(n, std::move(b));

        MultiMap c = q(n) - compose(dn, Hn);
        c.add(insertion_tail(q, s.delta, Hn, n), Scalar(-1));
        t29.residuals.emplace(n, std::move(c));
    }
    out.push_back(std::move(t27));
    out.push_back(std::move(l28));
    out.push_back(std::move(t29));
    return out;
}

}  // namespace htt
