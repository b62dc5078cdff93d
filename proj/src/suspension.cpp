// SPDX-License-Identifier: MIT

#include "htt/suspension.hpp"

#include "htt/sign_hooks.hpp"

#include <stdexcept>

namespace htt
{

namespace
{

ModulePtr shifted(const ModulePtr& m, int by, const std::string& name)
{
    std::map<int, int> dims;
    for (const auto& [d, n] : m->dims()) dims[d + by] = n;
    return make_module(std::move(dims), name);
}

}  // namespace

ModulePtr suspend_module(const ModulePtr& v) { return shifted(v, 1, "s" + v->name()); }

ModulePtr desuspend_module(const ModulePtr& sv)
{
    const std::string& n = sv->name();
    return shifted(sv, -1, n.size() > 1 && n.front() == 's' ? n.substr(1) : n);
}

MultiMap suspension_map(const ModulePtr& v, const ModulePtr& sv) { return MultiMap::shift(v, sv, 1); }

MultiMap desuspension_map(const ModulePtr& sv, const ModulePtr& v)
{
    if (active_sign_mutant() != SignMutant::suspension_signed_omega) return MultiMap::shift(sv, v, -1);
    MultiMap out(sv, v, 1, -1);
    for (int id = 0; id < v->total_dim(); ++id) out.add_term({id}, {id}, sign_of(v->degree_of(id) & 1));
    return out;
}

long suspension_sign_exponent(int n)
{
    switch (active_sign_mutant())
    {
    case SignMutant::suspension_no_global: return 0;
    case SignMutant::suspension_shifted: return static_cast<long>(n) * (n + 1) / 2;
    default: return static_cast<long>(n) * (n - 1) / 2;
    }
}

MultiMap suspend_map(const MultiMap& a, const ModulePtr& sv, const ModulePtr& sw)
{
    const MultiMap s = suspension_map(a.target(), sw);
    const MultiMap w = desuspension_map(sv, a.source());
    return compose(s, compose(a, tensor_power(w, a.arity())));
}

MultiMap desuspend_map(const MultiMap& b, const ModulePtr& v, const ModulePtr& w)
{
    const MultiMap om = desuspension_map(b.target(), w);
    const MultiMap s = suspension_map(v, b.source());
    const int n = b.arity();
    return sign_of(suspension_sign_exponent(n)) * compose(om, compose(b, tensor_power(s, n)));
}

ComponentFamily SuspendedAInfinity::family() const
{
    ComponentFamily out(FamilyKind::coderivation, carrier, carrier, -1, truncation);
    for (const auto& [n, d] : deltas) out.set(n, d);
    return out;
}

SuspendedAInfinity suspend_structure(const AInfinity& a)
{
    SuspendedAInfinity out{suspend_module(a.carrier()), a.truncation(), {}};
    out.deltas.emplace(1, suspend_map(a.differential(), out.carrier, out.carrier));
    for (int n = 2; n <= a.truncation(); ++n)
        out.deltas.emplace(n, suspend_map(a.product(n), out.carrier, out.carrier));
    return out;
}

AInfinity desuspend_structure(const SuspendedAInfinity& s, const ModulePtr& v)
{
    AInfinity out(v, desuspend_map(s.deltas.at(1), v, v), s.truncation);
    for (int n = 2; n <= s.truncation; ++n)
    {
        auto it = s.deltas.find(n);
        if (it != s.deltas.end() && !it->second.is_zero()) out.set_product(n, desuspend_map(it->second, v, v));
    }
    return out;
}

ComponentFamily suspend_morphism(const AInftyMorphism& f, const ModulePtr& sv, const ModulePtr& sw)
{
    ComponentFamily out(FamilyKind::morphism, sv, sw, 0, f.truncation());
    for (int n = 1; n <= f.truncation(); ++n) out.set(n, suspend_map(f.component(n), sv, sw));
    return out;
}

ComponentFamily suspend_homotopy(const AInftyHomotopy& h, const ModulePtr& sv, const ModulePtr& sw)
{
    ComponentFamily out(FamilyKind::homotopy, sv, sw, 1, h.truncation());
    for (int n = 1; n <= h.truncation(); ++n) out.set(n, suspend_map(h.component(n), sv, sw));
    out.left = std::make_shared<const ComponentFamily>(suspend_morphism(*h.from(), sv, sw));
    out.right = std::make_shared<const ComponentFamily>(suspend_morphism(*h.to(), sv, sw));
    return out;
}

}  // namespace htt
