// SPDX-License-Identifier: MIT

#include "htt/ainfty.hpp"

#include "htt/index_sets.hpp"

#include <sstream>
#include <stdexcept>

namespace htt
{

bool ResidualReport::all_zero() const
{
    for (const auto& [n, r] : residuals)
        if (!r.is_zero()) return false;
    return true;
}

std::size_t ResidualReport::total_nnz() const
{
    std::size_t total = 0;
    for (const auto& [n, r] : residuals) total += r.nnz();
    return total;
}

std::optional<int> ResidualReport::first_failing_arity() const
{
    for (const auto& [n, r] : residuals)
        if (!r.is_zero()) return n;
    return std::nullopt;
}

std::string ResidualReport::first_offender() const
{
    const auto n = first_failing_arity();
    if (!n) return "none";
    const MultiMap& r = residuals.at(*n);
    const auto& [in, out] = *r.table().begin();
    const auto& [w, c] = *out.terms().begin();
    std::ostringstream os;
    os << "arity " << *n << ", input " << describe_word(*r.source(), in) << " -> output "
       << describe_word(*r.target(), w) << " coefficient " << c.str();
    return os.str();
}

namespace
{

void require_arity_map(const MultiMap& m, const ModulePtr& src, const ModulePtr& tgt, int arity, int degree,
                       const char* what)
{
    if (m.arity() != arity || m.degree() != degree || !m.source()->same_shape(*src) ||
        !m.target()->same_shape(*tgt))
        throw std::invalid_argument(std::string(what) + ": expected arity " + std::to_string(arity) +
                                    " and degree " + std::to_string(degree) + ", got arity " +
                                    std::to_string(m.arity()) + " and degree " + std::to_string(m.degree()));
}

// Tensor product of the listed components, skipping work when one is zero.
std::optional<MultiMap> block_of(const std::vector<const MultiMap*>& maps)
{
    for (const MultiMap* m : maps)
        if (m->is_zero()) return std::nullopt;
    return tensor_product(maps);
}

}  // namespace

AInfinity::AInfinity(ModulePtr carrier, MultiMap differential, int truncation)
    : carrier_(std::move(carrier)), differential_(std::move(differential)), truncation_(truncation)
{
    if (truncation_ < 1) throw std::invalid_argument("truncation must be at least 1");
    require_arity_map(differential_, carrier_, carrier_, 1, -1, "differential");
    for (int n = 2; n <= truncation_; ++n) zeros_.emplace(n, MultiMap(carrier_, carrier_, n, n - 2));
}

void AInfinity::set_product(int n, MultiMap mu)
{
    if (n < 2 || n > truncation_) throw std::invalid_argument("product arity outside 2..truncation");
    require_arity_map(mu, carrier_, carrier_, n, n - 2, "product");
    products_.insert_or_assign(n, std::move(mu));
}

const MultiMap& AInfinity::product(int n) const
{
    auto it = products_.find(n);
    if (it != products_.end()) return it->second;
    auto z = zeros_.find(n);
    if (z == zeros_.end()) throw std::out_of_range("product arity outside 2..truncation");
    return z->second;
}

AInftyMorphism::AInftyMorphism(AInfinityPtr source, AInfinityPtr target, int truncation)
    : source_(std::move(source)), target_(std::move(target)), truncation_(truncation)
{
    if (truncation_ > source_->truncation() || truncation_ > target_->truncation())
        throw std::invalid_argument("morphism truncation exceeds structure truncation");
    for (int n = 1; n <= truncation_; ++n)
        zeros_.emplace(n, MultiMap(source_->carrier(), target_->carrier(), n, n - 1));
}

AInftyMorphism AInftyMorphism::identity(const AInfinityPtr& a)
{
    AInftyMorphism out(a, a, a->truncation());
    out.set_component(1, MultiMap::identity(a->carrier()));
    return out;
}

void AInftyMorphism::set_component(int n, MultiMap f)
{
    if (n < 1 || n > truncation_) throw std::invalid_argument("component arity outside 1..truncation");
    require_arity_map(f, source_->carrier(), target_->carrier(), n, n - 1, "morphism component");
    components_.insert_or_assign(n, std::move(f));
}

const MultiMap& AInftyMorphism::component(int n) const
{
    auto it = components_.find(n);
    if (it != components_.end()) return it->second;
    auto z = zeros_.find(n);
    if (z == zeros_.end()) throw std::out_of_range("component arity outside 1..truncation");
    return z->second;
}

AInftyHomotopy::AInftyHomotopy(MorphismPtr from, MorphismPtr to, int truncation)
    : from_(std::move(from)), to_(std::move(to)), truncation_(truncation)
{
    if (!from_->source()->carrier()->same_shape(*to_->source()->carrier()) ||
        !from_->target()->carrier()->same_shape(*to_->target()->carrier()))
        throw std::invalid_argument("homotopy flanks must share source and target");
    if (truncation_ > from_->truncation() || truncation_ > to_->truncation())
        throw std::invalid_argument("homotopy truncation exceeds flank truncation");
    for (int n = 1; n <= truncation_; ++n)
        zeros_.emplace(n, MultiMap(from_->source()->carrier(), from_->target()->carrier(), n, n));
}

void AInftyHomotopy::set_component(int n, MultiMap h)
{
    if (n < 1 || n > truncation_) throw std::invalid_argument("component arity outside 1..truncation");
    require_arity_map(h, from_->source()->carrier(), from_->target()->carrier(), n, n, "homotopy component");
    components_.insert_or_assign(n, std::move(h));
}

const MultiMap& AInftyHomotopy::component(int n) const
{
    auto it = components_.find(n);
    if (it != components_.end()) return it->second;
    auto z = zeros_.find(n);
    if (z == zeros_.end()) throw std::out_of_range("component arity outside 1..truncation");
    return z->second;
}

namespace
{

// sum_i (-1)^n m(1..d..1) + sum_A (-1)^{i(l+1)+n} m_k(1..mu_l..1), the
// "precomposition" part shared by all three relations, for maps m_k given
// by `comp`. Result has arity n.
template <class Comp>
MultiMap precomposition_terms(const AInfinity& src, int n, const ModulePtr& target, int degree, Comp comp)
{
    MultiMap out(src.carrier(), target, n, degree);
    const MultiMap& mn = comp(n);
    if (!mn.is_zero())
        for (int i = 1; i <= n; ++i) out.add(insert(mn, i, src.differential()), sign_of(n));
    for (const IndexA& a : enum_A(n))
    {
        const MultiMap& outer = comp(a.k);
        const MultiMap& inner = src.product(a.l);
        if (outer.is_zero() || inner.is_zero()) continue;
        out.add(insert(outer, a.i, inner), sign_of(static_cast<long>(a.i) * (a.l + 1) + n));
    }
    return out;
}

}  // namespace

ResidualReport check_structure(const AInfinity& a, int n_max)
{
    if (n_max > a.truncation()) throw std::invalid_argument("n_max exceeds truncation");
    ResidualReport report{"A-infinity relation", {}};
    const MultiMap& d = a.differential();
    report.residuals.emplace(1, compose(d, d));
    for (int n = 2; n <= n_max; ++n)
    {
        const MultiMap& mu = a.product(n);
        MultiMap r = compose(d, mu);
        r.add(precomposition_terms(a, n, a.carrier(), n - 3, [&](int k) -> const MultiMap& {
                  return k == 1 ? d : a.product(k);
              }),
              Scalar(-1));
        report.residuals.emplace(n, std::move(r));
    }
    return report;
}

ResidualReport check_morphism(const AInftyMorphism& f, int n_max)
{
    if (n_max > f.truncation()) throw std::invalid_argument("n_max exceeds truncation");
    const AInfinity& src = *f.source();
    const AInfinity& tgt = *f.target();
    ResidualReport report{"A-infinity morphism relation", {}};
    for (int n = 1; n <= n_max; ++n)
    {
        MultiMap r = compose(tgt.differential(), f.component(n));
        for (const auto& parts : enum_B(n))
        {
            const MultiMap& nu = tgt.product(static_cast<int>(parts.size()));
            if (nu.is_zero()) continue;
            std::vector<const MultiMap*> maps;
            for (int p : parts) maps.push_back(&f.component(p));
            if (auto blk = block_of(maps)) r.add(compose(nu, *blk), sign_of(theta(parts)));
        }
        if (n >= 2) r.add(compose(f.component(1), src.product(n)), Scalar(-1));
        // f_n(..d..) enters with -(-1)^n on the right, hence (-1)^n after moving.
        MultiMap pre = precomposition_terms(src, n, tgt.carrier(), n - 2,
                                            [&](int k) -> const MultiMap& { return f.component(k); });
        r.add(pre);
        report.residuals.emplace(n, std::move(r));
    }
    return report;
}

AInftyMorphism compose_morphisms(const AInftyMorphism& g, const AInftyMorphism& f)
{
    if (!f.target()->carrier()->same_shape(*g.source()->carrier()))
        throw std::invalid_argument("compose_morphisms: target of f differs from source of g");
    if (f.truncation() != g.truncation()) throw std::invalid_argument("compose_morphisms: truncation mismatch");
    AInftyMorphism out(f.source(), g.target(), f.truncation());
    for (int n = 1; n <= f.truncation(); ++n)
    {
        MultiMap c = compose(g.component(1), f.component(n));
        for (const auto& parts : enum_B(n))
        {
            const MultiMap& gk = g.component(static_cast<int>(parts.size()));
            if (gk.is_zero()) continue;
            std::vector<const MultiMap*> maps;
            for (int p : parts) maps.push_back(&f.component(p));
            if (auto blk = block_of(maps)) c.add(compose(gk, *blk), sign_of(theta(parts)));
        }
        out.set_component(n, std::move(c));
    }
    return out;
}

ResidualReport check_homotopy(const AInftyHomotopy& h, int n_max, HomotopySign sign)
{
    if (n_max > h.truncation()) throw std::invalid_argument("n_max exceeds truncation");
    const AInftyMorphism& f = *h.from();
    const AInftyMorphism& g = *h.to();
    const AInfinity& src = *f.source();
    const AInfinity& tgt = *f.target();
    ResidualReport report{"A-infinity homotopy relation", {}};
    for (int n = 1; n <= n_max; ++n)
    {
        MultiMap r = f.component(n) - g.component(n);
        if (n >= 2) r.add(compose(h.component(1), src.product(n)), Scalar(-1));
        r.add(precomposition_terms(src, n, tgt.carrier(), n - 1,
                                   [&](int k) -> const MultiMap& { return h.component(k); }));
        r.add(compose(tgt.differential(), h.component(n)), Scalar(-1));
        for (const auto& parts : enum_B(n))
        {
            const int k = static_cast<int>(parts.size());
            const MultiMap& nu = tgt.product(k);
            if (nu.is_zero()) continue;
            long prefix = 0;
            for (int i = 1; i <= k; ++i)
            {
                std::vector<const MultiMap*> maps;
                for (int j = 1; j <= k; ++j)
                {
                    const int rj = parts[static_cast<std::size_t>(j - 1)];
                    maps.push_back(j < i ? &f.component(rj) : j == i ? &h.component(rj) : &g.component(rj));
                }
                long e = theta(parts);
                if (sign == HomotopySign::koszul) e += (k - i) + prefix;
                prefix += parts[static_cast<std::size_t>(i - 1)];
                if (auto blk = block_of(maps)) r.add(compose(nu, *blk), -sign_of(e));
            }
        }
        report.residuals.emplace(n, std::move(r));
    }
    return report;
}

}  // namespace htt
