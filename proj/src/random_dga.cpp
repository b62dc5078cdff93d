// SPDX-License-Identifier: MIT

#include "htt/retract.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

namespace htt
{

namespace
{

// Bounded draws by rejection so that results do not depend on the standard
// library's distribution implementations.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int between(int lo, int hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return lo + static_cast<int>(x % span);
    }

private:
    std::mt19937_64 engine_;
};

struct Element
{
    int weight;
    int degree;
    bool source;
};

// Adds a random element of the solution space of the structure relations up
// to arity n_max, which are linear in the new coefficients.
void add_random_solution(const ModulePtr& V, const MultiMap& d, MultiMap& m2, const std::vector<MultiMap>& unknowns,
                         int n_max, Rng& rng)
{
    auto residual = [&](const MultiMap& m) {
        AInfinity trial(V, d, n_max);
        trial.set_product(2, m);
        return check_structure(trial, n_max);
    };
    const ResidualReport base = residual(m2);
    std::map<std::tuple<int, Word, Word>, int> rows;
    std::vector<std::vector<std::pair<int, Scalar>>> cols;
    for (const MultiMap& u : unknowns)
    {
        const ResidualReport r = residual(m2 + u);
        std::vector<std::pair<int, Scalar>> col;
        for (const auto& [n, res] : r.residuals)
        {
            const MultiMap diff = res - base.residuals.at(n);
            for (const auto& [in, out] : diff.table())
                for (const auto& [w, c] : out.terms())
                {
                    auto it = rows.try_emplace({n, in, w}, static_cast<int>(rows.size())).first;
                    col.emplace_back(it->second, c);
                }
        }
        cols.push_back(std::move(col));
    }
    Matrix eq(static_cast<int>(rows.size()), static_cast<int>(unknowns.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, x] : cols[c]) eq.at(r, static_cast<int>(c)) = x;
    for (const Column& sol : kernel_basis(eq))
    {
        const int c = rng.between(-2, 2);
        if (c == 0) continue;
        for (std::size_t k = 0; k < sol.size(); ++k)
            if (!sol[k].is_zero()) m2.add(unknowns[k], Scalar(c) * sol[k]);
    }
}

}  // namespace

Instance random_dga(std::uint64_t seed, int j, int truncation)
{
    Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(j));

    std::vector<Element> elems;
    const int n1 = rng.between(2, 3);
    for (int i = 0; i < n1; ++i) elems.push_back({1, rng.between(-1, 1), rng.between(0, 3) == 0});
    auto pick = [&](int lo, int hi) -> const Element& { return elems[static_cast<std::size_t>(rng.between(lo, hi))]; };
    // Weight two holds a product target and usually a source one degree up
    // that can bound it; weight three receives products with weight two.
    const int t_deg = std::clamp(pick(0, n1 - 1).degree + pick(0, n1 - 1).degree, -3, 2);
    elems.push_back({2, t_deg, false});
    if (rng.between(0, 3) != 0) elems.push_back({2, t_deg + 1, true});
    const int n2 = static_cast<int>(elems.size()) - n1;
    const int room = 6 - n1 - n2;
    const int n3 = rng.between(std::min(1, room), room);
    for (int i = 0; i < n3; ++i)
    {
        const int deg = pick(n1, n1 + n2 - 1).degree + pick(0, n1 - 1).degree + (i == 0 ? 0 : rng.between(-1, 0));
        elems.push_back({3, std::clamp(deg, -3, 3), false});
    }

    std::map<int, int> dims;
    std::vector<int> ids;
    for (const Element& e : elems) ++dims[e.degree];
    const ModulePtr V = make_module(dims, "V");
    std::map<int, int> used;
    for (const Element& e : elems) ids.push_back(V->id({e.degree, used[e.degree]++}));

    // Sources hit only targets of the same weight one degree down, so d^2 = 0.
    MultiMap d(V, V, 1, -1);
    for (std::size_t a = 0; a < elems.size(); ++a)
    {
        if (!elems[a].source) continue;
        for (std::size_t b = 0; b < elems.size(); ++b)
        {
            if (elems[b].source || elems[b].weight != elems[a].weight || elems[b].degree != elems[a].degree - 1)
                continue;
            const int c = rng.between(-2, 2);
            if (c != 0) d.add_term({ids[a]}, {ids[b]}, Scalar(c));
        }
    }

    auto mu = std::make_shared<AInfinity>(V, d, truncation);
    std::vector<std::string> labels(static_cast<std::size_t>(V->total_dim()));
    for (std::size_t a = 0; a < elems.size(); ++a)
        labels[static_cast<std::size_t>(ids[a])] =
            std::string(1, static_cast<char>('a' + elems[a].weight - 1)) + std::to_string(a) + (elems[a].source ? "*" : "");

    if (truncation < 2) return {"random-" + std::to_string(j), mu, labels};

    // Weight one (x) weight one -> weight two first, then the products with
    // one weight-two input landing in weight three. Each layer enters the
    // structure relations linearly once the previous layers are fixed.
    MultiMap m2(V, V, 2, 0);
    auto layer = [&](int wt) {
        std::vector<MultiMap> unknowns;
        for (std::size_t a = 0; a < elems.size(); ++a)
            for (std::size_t b = 0; b < elems.size(); ++b)
                for (std::size_t t = 0; t < elems.size(); ++t)
                    if (elems[a].weight + elems[b].weight == wt && elems[t].weight == wt &&
                        elems[t].degree == elems[a].degree + elems[b].degree)
                    {
                        MultiMap m(V, V, 2, 0);
                        m.add_term({ids[a], ids[b]}, {ids[t]}, Scalar(1));
                        unknowns.push_back(std::move(m));
                    }
        if (unknowns.empty()) return;
        add_random_solution(V, d, m2, unknowns, std::min(truncation, 3), rng);
    };
    layer(2);
    layer(3);
    mu->set_product(2, std::move(m2));
    return {"random-" + std::to_string(j), mu, labels};
}

namespace
{

MultiMap random_map(const ModulePtr& src, const ModulePtr& tgt, int degree, Rng& rng)
{
    MultiMap out(src, tgt, 1, degree);
    for (int a = 0; a < src->total_dim(); ++a)
        for (int b = 0; b < tgt->total_dim(); ++b)
            if (tgt->degree_of(b) == src->degree_of(a) + degree)
            {
                const int c = rng.between(-1, 1);
                if (c != 0) out.add_term({a}, {b}, Scalar(c));
            }
    return out;
}

}  // namespace

DeformationRetract scrambled_retract(const DeformationRetract& r, std::uint64_t seed)
{
    if (!r.dW.is_zero()) throw std::invalid_argument("scrambled_retract expects a zero small differential");
    Rng rng(seed);
    const MultiMap t = random_map(r.V, r.W, 1, rng);
    const MultiMap rp = random_map(r.W, r.V, 1, rng);
    const MultiMap s = random_map(r.V, r.V, 2, rng);
    const MultiMap& d = r.dV;
    DeformationRetract out = r;
    out.f = r.f + compose(t, d);
    out.g = r.g + compose(d, rp);
    out.h = r.h + compose(r.g, t) + compose(rp, r.f) + compose(rp, compose(t, d)) + compose(d, s) - compose(s, d);
    const auto bad = out.violations();
    if (!bad.empty()) throw std::logic_error("scrambled retract violates " + bad.front());
    return out;
}

}  // namespace htt
