// SPDX-License-Identifier: MIT

#include "htt/kernels.hpp"

#include "htt/sign_hooks.hpp"

#include <stdexcept>

namespace htt
{

namespace
{

bool any_zero(const std::vector<const MultiMap*>& maps)
{
    for (const MultiMap* m : maps)
        if (m->is_zero()) return true;
    return false;
}

// outer o (x_1 (x) ... (x) x_k), or nothing when a factor vanishes.
void add_composite(MultiMap& acc, const MultiMap& outer, const std::vector<const MultiMap*>& maps,
                   const Scalar& c)
{
    if (outer.is_zero() || any_zero(maps)) return;
    acc.add(compose(outer, tensor_product(maps)), c);
}

bool shape_ok(const MultiMap& m, const ModulePtr& src, const ModulePtr& tgt, int degree)
{
    return m.arity() == 1 && m.degree() == degree && m.source()->same_shape(*src) && m.target()->same_shape(*tgt);
}

}  // namespace

std::vector<std::string> DeformationRetract::violations() const
{
    std::vector<std::string> out;
    if (!shape_ok(dV, V, V, -1)) out.push_back("dV must be a degree -1 map V -> V");
    if (!shape_ok(dW, W, W, -1)) out.push_back("dW must be a degree -1 map W -> W");
    if (!shape_ok(f, V, W, 0)) out.push_back("f must be a degree 0 map V -> W");
    if (!shape_ok(g, W, V, 0)) out.push_back("g must be a degree 0 map W -> V");
    if (!shape_ok(h, V, V, 1)) out.push_back("h must be a degree +1 map V -> V");
    if (!out.empty()) return out;
    if (!compose(dV, dV).is_zero()) out.push_back("dV o dV = 0");
    if (!compose(dW, dW).is_zero()) out.push_back("dW o dW = 0");
    if (!(compose(f, dV) == compose(dW, f))) out.push_back("f dV = dW f");
    if (!(compose(g, dW) == compose(dV, g))) out.push_back("g dW = dV g");
    if (!(compose(g, f) - MultiMap::identity(V) == compose(dV, h) + compose(h, dV)))
        out.push_back("g f - 1 = dV h + h dV");
    return out;
}

SideConditions DeformationRetract::side_conditions() const
{
    SideConditions s;
    s.fg_identity = compose(f, g) == MultiMap::identity(W);
    s.fh_zero = compose(f, h).is_zero();
    s.hg_zero = compose(h, g).is_zero();
    s.hh_zero = compose(h, h).is_zero();
    return s;
}

SuspendedRetract suspend_retract(const DeformationRetract& r)
{
    const ModulePtr sV = suspend_module(r.V);
    const ModulePtr sW = suspend_module(r.W);
    MultiMap f = suspend_map(r.f, sV, sW);
    MultiMap g = suspend_map(r.g, sW, sV);
    MultiMap gf = compose(g, f);
    return {sV,
            sW,
            suspend_map(r.dV, sV, sV),
            suspend_map(r.dW, sW, sW),
            std::move(f),
            std::move(g),
            suspend_map(r.h, sV, sV),
            std::move(gf)};
}

KernelFamily p_kernels(const DeformationRetract& r, const AInfinity& mu, int N)
{
    KernelFamily out;
    std::map<int, MultiMap> hp;
    hp.emplace(1, MultiMap::identity(r.V));
    for (int n = 2; n <= N; ++n)
    {
        MultiMap p(r.V, r.V, n, n - 2);
        for (const auto& parts : enum_B(n))
        {
            std::vector<const MultiMap*> maps;
            for (int x : parts) maps.push_back(&hp.at(x));
            add_composite(p, mu.product(static_cast<int>(parts.size())), maps, sign_of(theta(parts)));
        }
        hp.emplace(n, compose(r.h, p));
        out.p.emplace(n, std::move(p));
    }
    return out;
}

KernelFamily q_kernels(const DeformationRetract& r, const AInfinity& mu, KernelFamily pk, int N)
{
    const MultiMap id = MultiMap::identity(r.V);
    const MultiMap gf = compose(r.g, r.f);
    std::map<int, MultiMap> hp;
    for (const auto& [n, p] : pk.p) hp.emplace(n, compose(r.h, p));
    std::map<int, MultiMap> hq;
    std::map<int, MultiMap> gfq;
    pk.q.insert_or_assign(1, id);
    pk.composite.insert_or_assign(1, gf);
    hq.emplace(1, r.h);
    gfq.emplace(1, gf);
    for (int n = 2; n <= N; ++n)
    {
        MultiMap q(r.V, r.V, n, n - 1);
        for (const IndexC& c : enum_C(n))
        {
            std::vector<const MultiMap*> maps;
            for (int j = 0; j + 1 < c.i; ++j) maps.push_back(&pk.composite.at(c.r[static_cast<std::size_t>(j)]));
            const int ri = c.r.back();
            maps.push_back(&hq.at(ri));
            for (int j = c.i; j < c.k; ++j) maps.push_back(&id);
            std::vector<int> prefix = c.r;
            if (active_sign_mutant() == SignMutant::qkernel_exclusive_theta) prefix.pop_back();
            add_composite(q, mu.product(c.k), maps, sign_of(n + ri + theta(prefix)));
        }
        hq.emplace(n, compose(r.h, q));
        gfq.emplace(n, compose(gf, q));
        MultiMap comp = gfq.at(n);
        for (const auto& parts : enum_B(n))
        {
            std::vector<const MultiMap*> maps;
            for (int x : parts) maps.push_back(&gfq.at(x));
            add_composite(comp, hp.at(static_cast<int>(parts.size())), maps, sign_of(theta(parts)));
        }
        pk.q.emplace(n, std::move(q));
        pk.composite.emplace(n, std::move(comp));
    }
    return pk;
}

SuspendedKernels suspended_kernels(const DeformationRetract& r, const AInfinity& mu, int N)
{
    SuspendedKernels out{suspend_retract(r), suspend_structure(mu), {}, {}, {}};
    const SuspendedRetract& sr = out.retract;
    const ModulePtr& sV = sr.sV;
    const MultiMap id = MultiMap::identity(sV);
    auto delta = [&](int k) -> const MultiMap& { return out.delta.deltas.at(k); };

    std::map<int, MultiMap> hp;
    hp.emplace(1, id);
    for (int n = 2; n <= N; ++n)
    {
        MultiMap p(sV, sV, n, -1);
        for (const auto& parts : enum_B(n))
        {
            std::vector<const MultiMap*> maps;
            for (int x : parts) maps.push_back(&hp.at(x));
            add_composite(p, delta(static_cast<int>(parts.size())), maps, Scalar(1));
        }
        hp.emplace(n, compose(sr.h, p));
        out.p.emplace(n, std::move(p));
    }

    std::map<int, MultiMap> hq;
    std::map<int, MultiMap> gfq;
    out.q.emplace(1, id);
    out.composite.emplace(1, sr.gf);
    hq.emplace(1, sr.h);
    gfq.emplace(1, sr.gf);
    for (int n = 2; n <= N; ++n)
    {
        MultiMap q(sV, sV, n, 0);
        for (const IndexC& c : enum_C(n))
        {
            std::vector<const MultiMap*> maps;
            for (int j = 0; j + 1 < c.i; ++j) maps.push_back(&out.composite.at(c.r[static_cast<std::size_t>(j)]));
            maps.push_back(&hq.at(c.r.back()));
            for (int j = c.i; j < c.k; ++j) maps.push_back(&id);
            add_composite(q, delta(c.k), maps, Scalar(1));
        }
        hq.emplace(n, compose(sr.h, q));
        gfq.emplace(n, compose(sr.gf, q));
        MultiMap comp = gfq.at(n);
        for (const auto& parts : enum_B(n))
        {
            std::vector<const MultiMap*> maps;
            for (int x : parts) maps.push_back(&gfq.at(x));
            add_composite(comp, hp.at(static_cast<int>(parts.size())), maps, Scalar(1));
        }
        out.q.emplace(n, std::move(q));
        out.composite.emplace(n, std::move(comp));
    }
    return out;
}

KernelFamily desuspend_kernels(const SuspendedKernels& s, const ModulePtr& V, int N)
{
    KernelFamily out;
    for (int n = 1; n <= N; ++n)
    {
        if (n >= 2) out.p.emplace(n, desuspend_map(s.p.at(n), V, V));
        out.q.emplace(n, desuspend_map(s.q.at(n), V, V));
        out.composite.emplace(n, desuspend_map(s.composite.at(n), V, V));
    }
    return out;
}

bool TransferPackage::all_zero() const
{
    for (const auto& r : reports)
        if (!r.all_zero()) return false;
    for (const auto& r : agreement)
        if (!r.all_zero()) return false;
    return true;
}

namespace
{

ResidualReport difference(const std::string& relation, const std::map<int, MultiMap>& a,
                          const std::map<int, MultiMap>& b)
{
    ResidualReport out{relation, {}};
    for (const auto& [n, x] : a) out.residuals.emplace(n, x - b.at(n));
    return out;
}

ResidualReport renamed(ResidualReport r, const std::string& name)
{
    r.relation = name + ": " + r.relation;
    return r;
}

}  // namespace

TransferPackage transfer(const DeformationRetract& r, const AInfinityPtr& mu, int N)
{
    const auto bad = r.violations();
    if (!bad.empty()) throw std::invalid_argument("retract invariant violated: " + bad.front());
    if (!mu->carrier()->same_shape(*r.V)) throw std::invalid_argument("structure carrier differs from retract V");
    if (N > mu->truncation()) throw std::invalid_argument("transfer arity exceeds structure truncation");
    if (!(mu->differential() == r.dV)) throw std::invalid_argument("structure differential differs from retract dV");

    SuspendedKernels sk = suspended_kernels(r, *mu, N);
    KernelFamily kernels = desuspend_kernels(sk, r.V, N);
    KernelFamily theta_path = q_kernels(r, *mu, p_kernels(r, *mu, N), N);

    auto nu = std::make_shared<AInfinity>(r.W, r.dW, N);
    for (int n = 2; n <= N; ++n)
        nu->set_product(n, compose(r.f, compose(kernels.p.at(n), tensor_power(r.g, n))));
    AInfinityPtr nu_c = nu;

    auto phi = std::make_shared<AInftyMorphism>(mu, nu_c, N);
    auto psi = std::make_shared<AInftyMorphism>(nu_c, mu, N);
    phi->set_component(1, r.f);
    psi->set_component(1, r.g);
    for (int n = 2; n <= N; ++n)
    {
        phi->set_component(n, compose(r.f, kernels.q.at(n)));
        psi->set_component(n, compose(r.h, compose(kernels.p.at(n), tensor_power(r.g, n))));
    }
    MorphismPtr phi_c = phi;
    MorphismPtr psi_c = psi;
    auto psi_phi = std::make_shared<const AInftyMorphism>(compose_morphisms(*psi_c, *phi_c));
    auto identity = std::make_shared<const AInftyMorphism>(AInftyMorphism::identity(mu));

    auto H = std::make_shared<AInftyHomotopy>(psi_phi, identity, N);
    H->set_component(1, r.h);
    for (int n = 2; n <= N; ++n) H->set_component(n, compose(r.h, kernels.q.at(n)));

    TransferPackage pkg{N, r, mu, nu_c, phi_c, psi_c, psi_phi, identity, H, std::move(kernels),
                        std::move(theta_path), std::move(sk), {}, {}};
    pkg.reports.push_back(renamed(check_structure(*mu, N), "mu"));
    pkg.reports.push_back(renamed(check_structure(*pkg.nu, N), "nu"));
    pkg.reports.push_back(renamed(check_morphism(*pkg.phi, N), "phi"));
    pkg.reports.push_back(renamed(check_morphism(*pkg.psi, N), "psi"));
    pkg.reports.push_back(renamed(check_morphism(*pkg.psi_phi, N), "psi o phi"));
    pkg.reports.push_back(renamed(check_homotopy(*pkg.H, N), "H"));
    pkg.reports.push_back(renamed(check_p_identity(pkg.kernels, r, *mu, N), "p-kernels"));
    pkg.reports.push_back(renamed(check_p_identity_on_g(pkg.kernels, r, *mu, N), "p-kernels on g"));
    pkg.reports.push_back(renamed(check_q_identity(pkg.kernels, r, *mu, N), "q-kernels"));
    pkg.reports.push_back(renamed(check_p_identity_suspended(pkg.suspended, N), "suspended p-kernels"));
    pkg.reports.push_back(renamed(check_q_identity_suspended(pkg.suspended, N), "suspended q-kernels"));

    pkg.agreement.push_back(difference("p suspended vs theta-signed", pkg.kernels.p, pkg.kernels_theta.p));
    pkg.agreement.push_back(difference("q suspended vs theta-signed", pkg.kernels.q, pkg.kernels_theta.q));
    pkg.agreement.push_back(
        difference("(psi phi) suspended vs theta-signed", pkg.kernels.composite, pkg.kernels_theta.composite));
    std::map<int, MultiMap> composed;
    for (int n = 1; n <= N; ++n) composed.emplace(n, pkg.psi_phi->component(n));
    pkg.agreement.push_back(difference("(psi phi) kernel formula vs composition", pkg.kernels.composite, composed));
    return pkg;
}

namespace
{

// sum_i s * outer(1..d..1) for all positions.
void add_all_positions(MultiMap& acc, const MultiMap& outer, const MultiMap& inner, const Scalar& s)
{
    if (outer.is_zero() || inner.is_zero()) return;
    for (int i = 1; i <= outer.arity(); ++i) acc.add(insert(outer, i, inner), s);
}

MultiMap t16_residual(const KernelFamily& k, const DeformationRetract& r, int n)
{
    const MultiMap gf = compose(r.g, r.f);
    MultiMap res = compose(r.dV, k.p.at(n));
    add_all_positions(res, k.p.at(n), r.dV, -sign_of(n));
    for (const IndexA& a : enum_A(n))
    {
        const MultiMap inner = compose(gf, k.p.at(a.l));
        if (inner.is_zero()) continue;
        res.add(insert(k.p.at(a.k), a.i, inner), -sign_of(static_cast<long>(a.i) * (a.l + 1) + n));
    }
    return res;
}

}  // namespace

ResidualReport check_p_identity(const KernelFamily& k, const DeformationRetract& r, const AInfinity&, int n_max)
{
    ResidualReport out{"p-kernel identity", {}};
    for (int n = 2; n <= n_max; ++n) out.residuals.emplace(n, t16_residual(k, r, n));
    return out;
}

ResidualReport check_p_identity_on_g(const KernelFamily& k, const DeformationRetract& r, const AInfinity&, int n_max)
{
    ResidualReport out{"p-kernel identity on g", {}};
    for (int n = 2; n <= n_max; ++n)
        out.residuals.emplace(n, compose(t16_residual(k, r, n), tensor_power(r.g, n)));
    return out;
}

ResidualReport check_q_identity(const KernelFamily& k, const DeformationRetract& r, const AInfinity& mu, int n_max)
{
    const MultiMap gf = compose(r.g, r.f);
    std::map<int, MultiMap> gfq;
    for (const auto& [n, q] : k.q) gfq.emplace(n, compose(gf, q));
    ResidualReport out{"q-kernel identity", {}};
    for (int n = 2; n <= n_max; ++n)
    {
        MultiMap res = compose(r.dV, k.q.at(n));
        add_all_positions(res, k.q.at(n), r.dV, sign_of(n));
        for (const auto& parts : enum_B(n))
        {
            std::vector<const MultiMap*> maps;
            for (int x : parts) maps.push_back(&gfq.at(x));
            add_composite(res, k.p.at(static_cast<int>(parts.size())), maps, sign_of(theta(parts)));
        }
        for (const IndexA& a : enum_A(n))
        {
            const MultiMap& inner = mu.product(a.l);
            if (inner.is_zero()) continue;
            res.add(insert(k.q.at(a.k), a.i, inner), sign_of(static_cast<long>(a.i) * (a.l + 1) + n));
        }
        res.add(compose(k.q.at(1), mu.product(n)), Scalar(-1));
        out.residuals.emplace(n, std::move(res));
    }
    return out;
}

ResidualReport check_p_identity_suspended(const SuspendedKernels& s, int n_max)
{
    const MultiMap& d1 = s.delta.deltas.at(1);
    ResidualReport out{"suspended p-kernel identity", {}};
    for (int n = 2; n <= n_max; ++n)
    {
        MultiMap res = compose(d1, s.p.at(n));
        add_all_positions(res, s.p.at(n), d1, Scalar(1));
        for (const IndexA& a : enum_A(n))
        {
            const MultiMap inner = compose(s.retract.gf, s.p.at(a.l));
            if (inner.is_zero()) continue;
            res.add(insert(s.p.at(a.k), a.i, inner));
        }
        out.residuals.emplace(n, std::move(res));
    }
    return out;
}

ResidualReport check_q_identity_suspended(const SuspendedKernels& s, int n_max)
{
    const MultiMap& d1 = s.delta.deltas.at(1);
    std::map<int, MultiMap> gfq;
    for (const auto& [n, q] : s.q) gfq.emplace(n, compose(s.retract.gf, q));
    ResidualReport out{"suspended q-kernel identity", {}};
    for (int n = 2; n <= n_max; ++n)
    {
        MultiMap res = compose(d1, s.q.at(n));
        for (const auto& parts : enum_B(n))
        {
            std::vector<const MultiMap*> maps;
            for (int x : parts) maps.push_back(&gfq.at(x));
            add_composite(res, s.p.at(static_cast<int>(parts.size())), maps, Scalar(1));
        }
        add_all_positions(res, s.q.at(n), d1, Scalar(-1));
        for (const IndexA& a : enum_A(n))
        {
            const MultiMap& inner = s.delta.deltas.at(a.l);
            if (inner.is_zero()) continue;
            res.add(insert(s.q.at(a.k), a.i, inner), Scalar(-1));
        }
        res.add(compose(s.q.at(1), s.delta.deltas.at(n)), Scalar(-1));
        out.residuals.emplace(n, std::move(res));
    }
    return out;
}

}  // namespace htt
