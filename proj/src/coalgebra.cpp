// SPDX-License-Identifier: MIT

#include "htt/coalgebra.hpp"

#include "htt/index_sets.hpp"

#include <stdexcept>

namespace htt
{

ComponentFamily::ComponentFamily(FamilyKind kind_, ModulePtr source_, ModulePtr target_, int degree_,
                                 int truncation_)
    : kind(kind_), source(std::move(source_)), target(std::move(target_)), degree(degree_),
      truncation(truncation_)
{
    if (truncation < 1) throw std::invalid_argument("family truncation must be at least 1");
    for (int n = 1; n <= truncation; ++n) components.emplace(n, MultiMap(source, target, n, degree));
}

void ComponentFamily::set(int n, MultiMap m)
{
    if (n < 1 || n > truncation) throw std::invalid_argument("family arity outside 1..truncation");
    if (!m.same_shape(components.at(n)))
        throw std::invalid_argument("family component of wrong shape at arity " + std::to_string(n));
    components.insert_or_assign(n, std::move(m));
}

ComponentFamily ComponentFamily::identity(const ModulePtr& m, int truncation)
{
    ComponentFamily out(FamilyKind::morphism, m, m, 0, truncation);
    out.set(1, MultiMap::identity(m));
    return out;
}

CoalgebraOperator::CoalgebraOperator(ModulePtr source, ModulePtr target, int degree, int truncation)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree), truncation_(truncation)
{
    if (truncation_ < 1) throw std::invalid_argument("operator truncation must be at least 1");
    for (int m = 1; m <= truncation_; ++m) blocks_.emplace_back(source_, target_, m, degree_);
}

CoalgebraOperator CoalgebraOperator::identity(const ModulePtr& m, int truncation)
{
    CoalgebraOperator out(m, m, 0, truncation);
    const MultiMap id = MultiMap::identity(m);
    for (int h = 1; h <= truncation; ++h) out.add_on(h, tensor_power(id, h));
    return out;
}

void CoalgebraOperator::add_on(int m, const MultiMap& part, const Scalar& c)
{
    blocks_.at(static_cast<std::size_t>(m - 1)).add(part, c);
}

MultiMap CoalgebraOperator::block(int m, int j) const
{
    MultiMap out(source_, target_, m, degree_);
    for (const auto& [in, value] : on(m).table())
        for (const auto& [w, c] : value.terms())
            if (static_cast<int>(w.size()) == j) out.add_term(in, w, c);
    return out;
}

bool CoalgebraOperator::is_zero_upto(int n_max) const
{
    for (int m = 1; m <= n_max && m <= truncation_; ++m)
        if (!on(m).is_zero()) return false;
    return true;
}

bool CoalgebraOperator::equal_upto(const CoalgebraOperator& other, int n_max) const
{
    for (int m = 1; m <= n_max && m <= truncation_; ++m)
        if (!(on(m) == other.on(m))) return false;
    return true;
}

std::vector<int> CoalgebraOperator::nonzero_homogeneities(int n_max) const
{
    std::vector<int> out;
    for (int m = 1; m <= n_max && m <= truncation_; ++m)
        if (!on(m).is_zero()) out.push_back(m);
    return out;
}

namespace
{

void require_same(const CoalgebraOperator& a, const CoalgebraOperator& b)
{
    if (a.degree() != b.degree() || a.truncation() != b.truncation() ||
        !a.source()->same_shape(*b.source()) || !a.target()->same_shape(*b.target()))
        throw std::invalid_argument("coalgebra operator shape mismatch");
}

}  // namespace

CoalgebraOperator operator+(const CoalgebraOperator& a, const CoalgebraOperator& b)
{
    require_same(a, b);
    CoalgebraOperator out = a;
    for (int m = 1; m <= a.truncation_; ++m) out.add_on(m, b.on(m));
    return out;
}

CoalgebraOperator operator-(const CoalgebraOperator& a, const CoalgebraOperator& b)
{
    require_same(a, b);
    CoalgebraOperator out = a;
    for (int m = 1; m <= a.truncation_; ++m) out.add_on(m, b.on(m), Scalar(-1));
    return out;
}

CoalgebraOperator operator*(const Scalar& c, const CoalgebraOperator& a)
{
    CoalgebraOperator out(a.source_, a.target_, a.degree_, a.truncation_);
    for (int m = 1; m <= a.truncation_; ++m) out.add_on(m, a.on(m), c);
    return out;
}

CoalgebraOperator compose(const CoalgebraOperator& a, const CoalgebraOperator& b)
{
    if (!b.target()->same_shape(*a.source())) throw std::invalid_argument("compose: module mismatch");
    if (a.truncation() != b.truncation()) throw std::invalid_argument("compose: truncation mismatch");
    CoalgebraOperator out(b.source(), a.target(), a.degree() + b.degree(), b.truncation());
    for (int m = 1; m <= b.truncation(); ++m)
    {
        MultiMap blk(b.source(), a.target(), m, out.degree());
        for (const auto& [in, mid] : b.on(m).table())
        {
            Vector acc;
            for (const auto& [w, c] : mid.terms())
                if (const Vector* v = a.on(static_cast<int>(w.size())).find(w)) acc.add(*v, c);
            blk.add_entry(in, acc);
        }
        out.add_on(m, blk);
    }
    return out;
}

std::vector<std::pair<Word, Word>> comultiply(const Word& w)
{
    std::vector<std::pair<Word, Word>> out;
    for (std::size_t i = 1; i < w.size(); ++i)
        out.emplace_back(Word(w.begin(), w.begin() + static_cast<long>(i)),
                         Word(w.begin() + static_cast<long>(i), w.end()));
    return out;
}

namespace
{

// 1^a (x) x (x) 1^b with identities on the source of x.
MultiMap padded(const MultiMap& x, int a, int b)
{
    if (a == 0 && b == 0) return x;
    const MultiMap id = MultiMap::identity(x.source());
    std::vector<const MultiMap*> maps;
    for (int j = 0; j < a; ++j) maps.push_back(&id);
    maps.push_back(&x);
    for (int j = 0; j < b; ++j) maps.push_back(&id);
    return tensor_product(maps);
}

bool any_zero(const std::vector<const MultiMap*>& maps)
{
    for (const MultiMap* m : maps)
        if (m->is_zero()) return true;
    return false;
}

const ComponentFamily& flank(const std::shared_ptr<const ComponentFamily>& f, const char* which)
{
    if (!f) throw std::invalid_argument(std::string("homotopy family lacks its ") + which + " flank");
    return *f;
}

}  // namespace

CoalgebraOperator lift_coderivation(const ComponentFamily& family)
{
    if (!family.source->same_shape(*family.target))
        throw std::invalid_argument("coderivation source and target differ");
    CoalgebraOperator out(family.source, family.target, family.degree, family.truncation);
    for (int m = 1; m <= family.truncation; ++m)
        for (int l = 1; l <= m; ++l)
        {
            const MultiMap& d = family.component(l);
            if (d.is_zero()) continue;
            for (int a = 0; a <= m - l; ++a) out.add_on(m, padded(d, a, m - l - a));
        }
    return out;
}

CoalgebraOperator lift_morphism(const ComponentFamily& family)
{
    CoalgebraOperator out(family.source, family.target, family.degree, family.truncation);
    for (int m = 1; m <= family.truncation; ++m)
        for (const auto& parts : compositions(m))
        {
            std::vector<const MultiMap*> maps;
            for (int r : parts) maps.push_back(&family.component(r));
            if (!any_zero(maps)) out.add_on(m, tensor_product(maps));
        }
    return out;
}

CoalgebraOperator lift_homotopy(const ComponentFamily& family)
{
    const ComponentFamily& e = flank(family.left, "left");
    const ComponentFamily& g = flank(family.right, "right");
    CoalgebraOperator out(family.source, family.target, family.degree, family.truncation);
    for (int m = 1; m <= family.truncation; ++m)
        for (const auto& parts : compositions(m))
        {
            const std::size_t k = parts.size();
            for (std::size_t i = 0; i < k; ++i)
            {
                std::vector<const MultiMap*> maps;
                for (std::size_t j = 0; j < k; ++j)
                    maps.push_back(j < i    ? &e.component(parts[j])
                                   : j == i ? &family.component(parts[j])
                                            : &g.component(parts[j]));
                if (!any_zero(maps)) out.add_on(m, tensor_product(maps));
            }
        }
    return out;
}

ComponentFamily extract_components(const CoalgebraOperator& op, FamilyKind kind)
{
    ComponentFamily out(kind, op.source(), op.target(), op.degree(), op.truncation());
    for (int m = 1; m <= op.truncation(); ++m) out.set(m, op.block(m, 1));
    return out;
}

namespace
{

// sum_{l=1..n} sum_{i} outer_{n-l+1}(1^{i-1} (x) inner_l (x) 1^{n-l-i+1}).
MultiMap inner_insertions(const ComponentFamily& outer, const ComponentFamily& inner, int n)
{
    MultiMap out(inner.source, outer.target, n, outer.degree + inner.degree);
    for (int l = 1; l <= n; ++l)
    {
        const int k = n - l + 1;
        const MultiMap& o = outer.component(k);
        const MultiMap& x = inner.component(l);
        if (o.is_zero() || x.is_zero()) continue;
        for (int i = 1; i <= k; ++i) out.add(insert(o, i, x));
    }
    return out;
}

}  // namespace

ResidualReport check_codifferential(const ComponentFamily& d, int n_max)
{
    ResidualReport report{"codifferential components", {}};
    for (int n = 1; n <= n_max; ++n) report.residuals.emplace(n, inner_insertions(d, d, n));
    return report;
}

ResidualReport check_morphism_components(const ComponentFamily& f, const ComponentFamily& dV,
                                         const ComponentFamily& dW, int n_max)
{
    ResidualReport report{"coalgebra morphism components", {}};
    for (int n = 1; n <= n_max; ++n)
    {
        MultiMap r(f.source, f.target, n, f.degree + dW.degree);
        for (const auto& parts : compositions(n))
        {
            const MultiMap& outer = dW.component(static_cast<int>(parts.size()));
            if (outer.is_zero()) continue;
            std::vector<const MultiMap*> maps;
            for (int p : parts) maps.push_back(&f.component(p));
            if (!any_zero(maps)) r.add(compose(outer, tensor_product(maps)));
        }
        r.add(inner_insertions(f, dV, n), Scalar(-1));
        report.residuals.emplace(n, std::move(r));
    }
    return report;
}

ResidualReport check_homotopy_components(const ComponentFamily& f, const ComponentFamily& dV,
                                         const ComponentFamily& dW, int n_max)
{
    const ComponentFamily& e = flank(f.left, "left");
    const ComponentFamily& g = flank(f.right, "right");
    ResidualReport report{"coalgebra homotopy components", {}};
    for (int n = 1; n <= n_max; ++n)
    {
        MultiMap r = e.component(n) - g.component(n);
        r.add(inner_insertions(f, dV, n), Scalar(-1));
        for (const auto& parts : compositions(n))
        {
            const MultiMap& outer = dW.component(static_cast<int>(parts.size()));
            if (outer.is_zero()) continue;
            const std::size_t k = parts.size();
            for (std::size_t i = 0; i < k; ++i)
            {
                std::vector<const MultiMap*> maps;
                for (std::size_t j = 0; j < k; ++j)
                    maps.push_back(j < i    ? &e.component(parts[j])
                                   : j == i ? &f.component(parts[j])
                                            : &g.component(parts[j]));
                if (!any_zero(maps)) r.add(compose(outer, tensor_product(maps)), Scalar(-1));
            }
        }
        report.residuals.emplace(n, std::move(r));
    }
    return report;
}

CoalgebraOperator square_defect(const CoalgebraOperator& d) { return compose(d, d); }

CoalgebraOperator intertwining_defect(const CoalgebraOperator& F, const CoalgebraOperator& dV,
                                      const CoalgebraOperator& dW)
{
    return compose(dW, F) - compose(F, dV);
}

CoalgebraOperator homotopy_defect(const CoalgebraOperator& E, const CoalgebraOperator& G,
                                  const CoalgebraOperator& F, const CoalgebraOperator& dV,
                                  const CoalgebraOperator& dW)
{
    return E - G - compose(F, dV) - compose(dW, F);
}

ResidualReport component_blocks(const CoalgebraOperator& defect, int n_max, const std::string& relation)
{
    ResidualReport report{relation, {}};
    for (int n = 1; n <= n_max && n <= defect.truncation(); ++n) report.residuals.emplace(n, defect.block(n, 1));
    return report;
}

namespace
{

using SplitTerms = std::map<std::pair<Word, Word>, Scalar>;

void add_split(SplitTerms& acc, const Word& a, const Word& b, const Scalar& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace({a, b}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

const Vector* lookup(const CoalgebraOperator& op, const Word& w)
{
    if (static_cast<int>(w.size()) > op.truncation()) return nullptr;
    return op.on(static_cast<int>(w.size())).find(w);
}

bool next_word(Word& w, int dim)
{
    for (std::size_t j = w.size(); j-- > 0;)
    {
        if (++w[j] < dim) return true;
        w[j] = 0;
    }
    return false;
}

}  // namespace

std::size_t comultiplication_defect(
    const CoalgebraOperator& X,
    const std::vector<std::pair<const CoalgebraOperator*, const CoalgebraOperator*>>& pairs, int n_max)
{
    const int dim = X.source()->total_dim();
    std::size_t bad = 0;
    if (dim == 0) return 0;
    for (int m = 1; m <= n_max && m <= X.truncation(); ++m)
    {
        Word w(static_cast<std::size_t>(m), 0);
        do
        {
            SplitTerms lhs;
            if (const Vector* xw = lookup(X, w))
                for (const auto& [t, c] : xw->terms())
                    for (const auto& [a, b] : comultiply(t)) add_split(lhs, a, b, c);
            SplitTerms rhs;
            for (const auto& [u, v] : comultiply(w))
            {
                const int left = word_degree(*X.source(), u);
                for (const auto& [A, B] : pairs)
                {
                    const Vector* au = lookup(*A, u);
                    const Vector* bv = lookup(*B, v);
                    if (!au || !bv) continue;
                    const Scalar sign = koszul_sign(std::span<const int>(&left, 1), B->degree());
                    for (const auto& [ta, ca] : au->terms())
                        for (const auto& [tb, cb] : bv->terms()) add_split(rhs, ta, tb, sign * ca * cb);
                }
            }
            if (lhs != rhs) ++bad;
        } while (next_word(w, dim));
    }
    return bad;
}

}  // namespace htt
