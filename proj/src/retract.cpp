// SPDX-License-Identifier: MIT

#include "htt/retract.hpp"

#include <stdexcept>

namespace htt
{

namespace
{

// Matrix of d : V_deg -> V_{deg-1} in the standard bases.
Matrix degree_matrix(const ChainComplex& c, int deg)
{
    const GradedModule& V = *c.V;
    Matrix m(V.dim(deg - 1), V.dim(deg));
    for (int j = 0; j < V.dim(deg); ++j)
    {
        const Vector* out = c.d.find({V.id({deg, j})});
        if (!out) continue;
        for (const auto& [w, coef] : out->terms()) m.at(V.ref(w.front()).index, j) = coef;
    }
    return m;
}

Column unit(int dim, int j)
{
    Column e(static_cast<std::size_t>(dim));
    e[static_cast<std::size_t>(j)] = Scalar(1);
    return e;
}

void check_complex(const ChainComplex& c)
{
    if (c.d.arity() != 1 || c.d.degree() != -1 || !c.d.source()->same_shape(*c.V) ||
        !c.d.target()->same_shape(*c.V))
        throw std::invalid_argument("differential must be a degree -1 map V -> V");
    if (!compose(c.d, c.d).is_zero()) throw std::invalid_argument("differential does not square to zero");
}

}  // namespace

Splitting split(const ChainComplex& c)
{
    check_complex(c);
    const GradedModule& V = *c.V;
    Splitting s;
    std::map<int, std::vector<Column>> cycles;
    for (const auto& [deg, dim] : V.dims())
    {
        cycles[deg] = kernel_basis(degree_matrix(c, deg));
        std::vector<Column> basis = cycles[deg];
        std::vector<Column> units;
        for (int j = 0; j < dim; ++j) units.push_back(unit(dim, j));
        for (int j : extend_basis(basis, units, dim)) s.degrees[deg].C.push_back(units[static_cast<std::size_t>(j)]);
    }
    for (const auto& [deg, dim] : V.dims())
    {
        DegreeSplitting& ds = s.degrees[deg];
        auto up = s.degrees.find(deg + 1);
        if (up != s.degrees.end())
        {
            const Matrix m = degree_matrix(c, deg + 1);
            for (const Column& x : up->second.C) ds.B.push_back(m.apply(x));
        }
        std::vector<Column> basis = ds.B;
        const auto& z = cycles[deg];
        for (int j : extend_basis(basis, z, dim)) ds.H.push_back(z[static_cast<std::size_t>(j)]);
    }
    return s;
}

ModulePtr homology(const ChainComplex& c)
{
    std::map<int, int> dims;
    for (const auto& [deg, ds] : split(c).degrees)
        if (!ds.H.empty()) dims[deg] = static_cast<int>(ds.H.size());
    return make_module(std::move(dims), "H");
}

DeformationRetract harmonious_retract(const ChainComplex& c)
{
    const Splitting s = split(c);
    const ModulePtr& V = c.V;
    std::map<int, int> wdims;
    for (const auto& [deg, ds] : s.degrees)
        if (!ds.H.empty()) wdims[deg] = static_cast<int>(ds.H.size());
    const ModulePtr W = make_module(std::move(wdims), "H");

    MultiMap f(V, W, 1, 0);
    MultiMap g(W, V, 1, 0);
    MultiMap h(V, V, 1, 1);
    for (const auto& [deg, ds] : s.degrees)
    {
        const int dim = V->dim(deg);
        std::vector<Column> cols = ds.B;
        cols.insert(cols.end(), ds.H.begin(), ds.H.end());
        cols.insert(cols.end(), ds.C.begin(), ds.C.end());
        const Matrix coords = inverse(Matrix::from_columns(dim, cols));
        const std::size_t nb = ds.B.size();
        const std::size_t nh = ds.H.size();
        const auto up = s.degrees.find(deg + 1);
        for (int j = 0; j < dim; ++j)
        {
            const int vid = V->id({deg, j});
            for (std::size_t k = 0; k < nh; ++k)
            {
                const Scalar& x = coords.at(static_cast<int>(nb + k), j);
                if (!x.is_zero()) f.add_term({vid}, {W->id({deg, static_cast<int>(k)})}, x);
            }
            for (std::size_t k = 0; k < nb; ++k)
            {
                const Scalar& x = coords.at(static_cast<int>(k), j);
                if (x.is_zero()) continue;
                const Column& pre = up->second.C[k];
                for (int i = 0; i < V->dim(deg + 1); ++i)
                    if (!pre[static_cast<std::size_t>(i)].is_zero())
                        h.add_term({vid}, {V->id({deg + 1, i})}, -x * pre[static_cast<std::size_t>(i)]);
            }
        }
        for (std::size_t k = 0; k < nh; ++k)
            for (int i = 0; i < dim; ++i)
                if (!ds.H[k][static_cast<std::size_t>(i)].is_zero())
                    g.add_term({W->id({deg, static_cast<int>(k)})}, {V->id({deg, i})}, ds.H[k][static_cast<std::size_t>(i)]);
    }

    DeformationRetract r{V, W, c.d, MultiMap(W, W, 1, -1), std::move(f), std::move(g), std::move(h)};
    const auto bad = r.violations();
    if (!bad.empty()) throw std::logic_error("harmonious retract violates " + bad.front());
    if (!r.side_conditions().all()) throw std::logic_error("harmonious retract violates a side condition");
    return r;
}

Instance instance_massey(int truncation)
{
    const ModulePtr V = make_module({{1, 3}, {2, 2}, {3, 2}, {4, 2}}, "V");
    enum : int { x, y, z, p, q, u, w, m, mp };
    MultiMap d(V, V, 1, -1);
    d.add_term({u}, {p}, Scalar(1));
    d.add_term({w}, {q}, Scalar(1));
    auto a = std::make_shared<AInfinity>(V, d, truncation);
    if (truncation >= 2)
    {
        MultiMap m2(V, V, 2, 0);
        m2.add_term({x, y}, {p}, Scalar(1));
        m2.add_term({y, z}, {q}, Scalar(1));
        m2.add_term({u, z}, {m}, Scalar(1));
        m2.add_term({x, w}, {mp}, Scalar(1));
        a->set_product(2, std::move(m2));
    }
    return {"massey", a, {"x", "y", "z", "p", "q", "u", "w", "m", "m'"}};
}

Instance instance_forms(int truncation)
{
    const ModulePtr V = make_module({{-1, 2}, {0, 3}}, "V");
    enum : int { dt, tdt, one, t, t2 };
    MultiMap d(V, V, 1, -1);
    d.add_term({t}, {dt}, Scalar(1));
    d.add_term({t2}, {tdt}, Scalar(2));
    auto a = std::make_shared<AInfinity>(V, d, truncation);
    if (truncation >= 2)
    {
        MultiMap m2(V, V, 2, 0);
        for (int e : {dt, tdt, one, t, t2})
        {
            m2.add_term({one, e}, {e}, Scalar(1));
            if (e != one) m2.add_term({e, one}, {e}, Scalar(1));
        }
        m2.add_term({t, t}, {t2}, Scalar(1));
        m2.add_term({t, dt}, {tdt}, Scalar(1));
        m2.add_term({dt, t}, {tdt}, Scalar(1));
        a->set_product(2, std::move(m2));
    }
    return {"forms", a, {"dt", "t dt", "1", "t", "t^2"}};
}

}  // namespace htt
