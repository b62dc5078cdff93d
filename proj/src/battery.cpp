// SPDX-License-Identifier: MIT

#include "htt/battery.hpp"

#include <exception>
#include <random>

namespace htt
{

namespace
{

Check from_report(const std::string& name, const ResidualReport& r)
{
    return {name, r.all_zero(), r.all_zero() ? "zero" : r.first_offender()};
}

Check from_identity(const std::string& prefix, const OperatorIdentity& id)
{
    std::string detail = "zero";
    if (!id.holds())
    {
        detail = "nonzero on homogeneity";
        for (int n : id.failing) detail += " " + std::to_string(n);
    }
    return {prefix + id.name, id.holds(), detail};
}

void append(std::vector<Check>& out, const std::string& prefix, std::vector<Check> more)
{
    for (auto& c : more)
    {
        c.name = prefix + c.name;
        out.push_back(std::move(c));
    }
}

std::string homogeneities(const std::vector<int>& ns)
{
    if (ns.empty()) return "none";
    std::string s;
    for (int n : ns) s += (s.empty() ? "" : " ") + std::to_string(n);
    return s;
}

// Adds one unit term to some component, preferring arity 2.
ComponentFamily corrupt(ComponentFamily fam, std::mt19937_64& rng)
{
    const GradedModule& src = *fam.source;
    const GradedModule& tgt = *fam.target;
    if (src.total_dim() == 0 || tgt.total_dim() == 0) return fam;
    std::vector<int> arities;
    for (int n = 2; n <= fam.truncation; ++n) arities.push_back(n);
    arities.push_back(1);
    for (int n : arities)
        for (int attempt = 0; attempt < 64; ++attempt)
        {
            Word in;
            for (int k = 0; k < n; ++k) in.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(src.total_dim())));
            const int deg = word_degree(src, in) + fam.degree;
            const int dim = tgt.dim(deg);
            if (dim == 0) continue;
            const int out = tgt.id({deg, static_cast<int>(rng() % static_cast<std::uint64_t>(dim))});
            MultiMap m = fam.component(n);
            m.add_term(in, {out}, Scalar(1));
            fam.set(n, std::move(m));
            return fam;
        }
    return fam;
}

class EquivalenceRunner
{
public:
    explicit EquivalenceRunner(int N) : N_(N) {}

    void codifferential(const ComponentFamily& d)
    {
        const ResidualReport comp = check_codifferential(d, N_);
        const CoalgebraOperator D = lift_coderivation(d);
        const CoalgebraOperator one = CoalgebraOperator::identity(d.source, N_);
        record(0, comp, square_defect(D));
        if (comultiplication_defect(D, {{&D, &one}, {&one, &D}}, N_) != 0) ++tally.comultiplication_defects;
    }

    void morphism(const ComponentFamily& f, const ComponentFamily& dV, const ComponentFamily& dW)
    {
        const ResidualReport comp = check_morphism_components(f, dV, dW, N_);
        const CoalgebraOperator F = lift_morphism(f);
        record(2, comp, intertwining_defect(F, lift_coderivation(dV), lift_coderivation(dW)));
        if (comultiplication_defect(F, {{&F, &F}}, N_) != 0) ++tally.comultiplication_defects;
    }

    void homotopy(const ComponentFamily& h, const ComponentFamily& dV, const ComponentFamily& dW)
    {
        const ResidualReport comp = check_homotopy_components(h, dV, dW, N_);
        const CoalgebraOperator E = lift_morphism(*h.left);
        const CoalgebraOperator G = lift_morphism(*h.right);
        const CoalgebraOperator H = lift_homotopy(h);
        record(4, comp, homotopy_defect(E, G, H, lift_coderivation(dV), lift_coderivation(dW)));
        if (comultiplication_defect(H, {{&E, &H}, {&H, &G}}, N_) != 0) ++tally.comultiplication_defects;
    }

    EquivalenceTally tally;

private:
    void record(std::size_t base, const ResidualReport& comp, const CoalgebraOperator& defect)
    {
        const bool comp_holds = comp.all_zero();
        const bool op_holds = defect.is_zero_upto(N_);
        if (comp_holds)
        {
            ++tally.tested[base];
            if (!op_holds) ++tally.discrepancies[base];
        }
        if (op_holds)
        {
            ++tally.tested[base + 1];
            if (!comp_holds) ++tally.discrepancies[base + 1];
        }
        const ResidualReport blocks = component_blocks(defect, N_, comp.relation);
        for (int n = 1; n <= N_; ++n)
            if (!(blocks.residuals.at(n) == comp.residuals.at(n))) ++tally.residual_mismatches;
    }

    int N_;
};

DeformationRetract identity_retract(const Instance& in)
{
    const ModulePtr& V = in.mu->carrier();
    const MultiMap& d = in.mu->differential();
    return {V, V, d, d, MultiMap::identity(V), MultiMap::identity(V), MultiMap(V, V, 1, 1)};
}

std::uint64_t scramble_seed(std::uint64_t seed, const std::string& name)
{
    std::uint64_t h = seed * 0x9E3779B97F4A7C15ULL + 7919;
    for (unsigned char c : name) h = h * 131 + c;
    return h;
}

}  // namespace

void EquivalenceTally::add(const EquivalenceTally& o)
{
    for (std::size_t i = 0; i < tested.size(); ++i)
    {
        tested[i] += o.tested[i];
        discrepancies[i] += o.discrepancies[i];
    }
    residual_mismatches += o.residual_mismatches;
    comultiplication_defects += o.comultiplication_defects;
}

std::size_t EquivalenceTally::total_discrepancies() const
{
    std::size_t t = residual_mismatches + comultiplication_defects;
    for (auto d : discrepancies) t += d;
    return t;
}

std::vector<Check> transfer_checks(const TransferPackage& pkg, int n_max)
{
    std::vector<Check> out;
    for (const auto& r : pkg.reports) out.push_back(from_report("residual " + r.relation, r));
    for (const auto& r : pkg.agreement) out.push_back(from_report("agreement " + r.relation, r));
    const DeformationRetract& r = pkg.retract;
    const AInfinity& mu = *pkg.mu;
    out.push_back(from_report("p-kernel identity", check_p_identity(pkg.kernels, r, mu, n_max)));
    out.push_back(from_report("p-kernel identity on g", check_p_identity_on_g(pkg.kernels, r, mu, n_max)));
    out.push_back(from_report("q-kernel identity", check_q_identity(pkg.kernels, r, mu, n_max)));
    out.push_back(from_report("suspended p-kernel identity", check_p_identity_suspended(pkg.suspended, n_max)));
    out.push_back(from_report("suspended q-kernel identity", check_q_identity_suspended(pkg.suspended, n_max)));
    return out;
}

std::vector<Check> hpl_checks(const TransferPackage& pkg, int N)
{
    std::vector<Check> out;
    const PerturbationData d = build_perturbation(pkg.retract, *pkg.mu, N);
    const std::vector<int> nil = nilpotency_failures(d.X, N);
    out.push_back({"(delta_mu H)^n vanishes on homogeneity n", nil.empty(), "failing " + homogeneities(nil)});
    const std::vector<int> inv = inversion_failures(d.X, N);
    out.push_back({"finite series inverts 1 - delta_mu H", inv.empty(), "failing " + homogeneities(inv)});
    const HplOutput hpl = hpl_transfer(d);
    for (const auto& c : hpl.conclusions) out.push_back(from_identity("conclusion ", c));

    const Comparison cmp = compare_hpl_vs_kernels(hpl, pkg, N);
    if (pkg.retract.side_conditions().all())
    {
        for (const auto& e : extraction_defects(hpl)) out.push_back(from_identity("extraction ", e));
        for (const auto& o : cmp.objects) out.push_back(from_identity("hpl vs kernels ", o));
        out.push_back({"hpl vs kernels verdict", cmp.status == "exact", cmp.status});
        for (const auto& l : check_annihilation_lemmas(pkg, N)) out.push_back(from_report("lemma " + l.relation, l));
    }
    else
        out.push_back({"hpl vs kernels verdict", cmp.status == "skipped: side conditions not met", cmp.status});
    return out;
}

EquivalenceTally equivalence_battery(const TransferPackage& pkg, std::uint64_t seed)
{
    const int N = pkg.truncation;
    std::mt19937_64 rng(seed);
    const SuspendedAInfinity smu = suspend_structure(*pkg.mu);
    const SuspendedAInfinity snu = suspend_structure(*pkg.nu);
    const ComponentFamily dV = smu.family();
    const ComponentFamily dW = snu.family();
    const ComponentFamily phi = suspend_morphism(*pkg.phi, smu.carrier, snu.carrier);
    const ComponentFamily psi = suspend_morphism(*pkg.psi, snu.carrier, smu.carrier);
    const ComponentFamily H = suspend_homotopy(*pkg.H, smu.carrier, smu.carrier);

    EquivalenceRunner run(N);
    run.codifferential(dV);
    run.codifferential(dW);
    run.codifferential(corrupt(dV, rng));
    run.codifferential(corrupt(dW, rng));
    run.morphism(phi, dV, dW);
    run.morphism(psi, dW, dV);
    run.morphism(corrupt(phi, rng), dV, dW);
    run.morphism(corrupt(psi, rng), dW, dV);
    run.homotopy(H, dV, dV);
    run.homotopy(corrupt(H, rng), dV, dV);
    return run.tally;
}

Check suspension_sign_identity(int n_max)
{
    const ModulePtr M = make_module({{0, 1}, {1, 1}, {2, 1}}, "T");
    const ModulePtr sM = suspend_module(M);
    const MultiMap s = suspension_map(M, sM);
    const MultiMap w = desuspension_map(sM, M);
    for (int n = 1; n <= n_max; ++n)
    {
        const long e = (static_cast<long>(n) * (n - 1) / 2) % 2;
        const MultiMap expected = Scalar(e == 0 ? 1 : -1) * tensor_power(MultiMap::identity(sM), n);
        if (!(compose(tensor_power(s, n), tensor_power(w, n)) == expected))
            return {"s^n w^n = (-1)^{n(n-1)/2}", false, "fails at n=" + std::to_string(n)};
    }
    return {"s^n w^n = (-1)^{n(n-1)/2}", true, "holds for n <= " + std::to_string(n_max)};
}

Check suspension_round_trip(const TransferPackage& pkg)
{
    const AInfinity& mu = *pkg.mu;
    const SuspendedAInfinity s = suspend_structure(mu);
    const AInfinity back = desuspend_structure(s, mu.carrier());
    if (!(back.differential() == mu.differential())) return {"suspension round trip", false, "differential"};
    for (int n = 2; n <= mu.truncation(); ++n)
        if (!(back.product(n) == mu.product(n)))
            return {"suspension round trip", false, "product arity " + std::to_string(n)};
    const ModulePtr& V = pkg.retract.V;
    const ModulePtr& W = pkg.retract.W;
    const ModulePtr sV = suspend_module(V);
    const ModulePtr sW = suspend_module(W);
    for (int n = 1; n <= pkg.truncation; ++n)
        if (!(desuspend_map(suspend_map(pkg.phi->component(n), sV, sW), V, W) == pkg.phi->component(n)))
            return {"suspension round trip", false, "phi arity " + std::to_string(n)};
    return {"suspension round trip", true, "exact"};
}

std::vector<Check> degeneration_checks(const Instance& in, int N)
{
    std::vector<Check> out;
    const DeformationRetract id = identity_retract(in);
    const TransferPackage pkg = transfer(id, in.mu, N);
    bool nu_ok = true;
    bool higher_zero = true;
    for (int n = 2; n <= N; ++n)
    {
        const MultiMap expected = compose(id.f, compose(in.mu->product(n), tensor_power(id.g, n)));
        nu_ok = nu_ok && pkg.nu->product(n) == expected;
        higher_zero = higher_zero && pkg.phi->component(n).is_zero() && pkg.psi->component(n).is_zero() &&
                      pkg.H->component(n).is_zero();
    }
    out.push_back({"h = 0 gives nu_n = f mu_n g^n", nu_ok, nu_ok ? "exact" : "differs"});
    out.push_back({"h = 0 gives phi, psi, H of arity >= 2 zero", higher_zero, higher_zero ? "zero" : "nonzero"});

    AInfinity flat(in.mu->carrier(), in.mu->differential(), N);
    const DeformationRetract r = harmonious_retract(in.complex());
    const PerturbationData d = build_perturbation(r, flat, N);
    const HplOutput hpl = hpl_transfer(d);
    const bool same = hpl.D_W.equal_upto(d.dW, N) && hpl.phi.equal_upto(d.F, N) && hpl.psi.equal_upto(d.G, N) &&
                      hpl.H.equal_upto(d.H, N);
    out.push_back({"delta_mu = 0 leaves the retract data unchanged", same, same ? "exact" : "differs"});
    return out;
}

bool BatteryResult::pass() const
{
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

BatteryResult run_battery(const Instance& in, std::uint64_t seed, int N)
{
    BatteryResult res;
    res.instance = in.name;
    auto guarded = [&](const std::string& stage, auto&& body) {
        try
        {
            body();
        }
        catch (const std::exception& ex)
        {
            res.checks.push_back({stage, false, std::string("exception: ") + ex.what()});
        }
    };

    guarded("structure", [&] { res.checks.push_back(from_report("structure", check_structure(*in.mu, N))); });
    guarded("harmonious retract", [&] {
        const DeformationRetract r = harmonious_retract(in.complex());
        const TransferPackage pkg = transfer(r, in.mu, N);
        if (N >= 3) res.nu3_nonzero = !pkg.nu->product(3).is_zero();
        append(res.checks, "harmonious/", transfer_checks(pkg, N));
        append(res.checks, "harmonious/", hpl_checks(pkg, N));
        res.equivalence.add(equivalence_battery(pkg, seed));
        res.checks.push_back(suspension_round_trip(pkg));

        const DeformationRetract sr = scrambled_retract(r, scramble_seed(seed, in.name));
        const auto v = sr.violations();
        res.checks.push_back({"scrambled/retract valid", v.empty(), v.empty() ? "valid" : v.front()});
        const TransferPackage spkg = transfer(sr, in.mu, N);
        append(res.checks, "scrambled/", transfer_checks(spkg, N));
        append(res.checks, "scrambled/", hpl_checks(spkg, N));
        res.equivalence.add(equivalence_battery(spkg, seed + 1));
    });
    const EquivalenceTally& t = res.equivalence;
    res.checks.push_back({"equivalence battery", t.total_discrepancies() == 0,
                          std::to_string(t.total_discrepancies()) + " discrepancies"});
    guarded("degenerations", [&] { append(res.checks, "", degeneration_checks(in, N)); });
    return res;
}

std::vector<MutantOutcome> mutation_suite(const std::vector<Instance>& instances, std::uint64_t seed, int N)
{
    struct Prepared
    {
        const Instance* in;
        DeformationRetract harmonious;
        DeformationRetract scrambled;
    };
    std::vector<Prepared> prepared;
    for (const auto& in : instances)
    {
        DeformationRetract r = harmonious_retract(in.complex());
        DeformationRetract sr = scrambled_retract(r, scramble_seed(seed, in.name));
        prepared.push_back({&in, std::move(r), std::move(sr)});
    }

    std::vector<MutantOutcome> out;
    for (SignMutant m : all_sign_mutants())
    {
        MutantOutcome o{m, false, "", ""};
        SignMutantScope scope(m);
        auto first_failure = [&](const std::vector<Check>& checks) {
            for (const auto& c : checks)
                if (!c.pass)
                {
                    o.killed = true;
                    o.checker = c.name;
                    return true;
                }
            return false;
        };
        auto hunt = [&] {
            o.instance = "test module";
            if (first_failure({suspension_sign_identity(8)})) return;
            for (const auto& p : prepared)
            {
                o.instance = p.in->name;
                try
                {
                    if (first_failure({from_report("structure", check_structure(*p.in->mu, N))})) return;
                    for (const DeformationRetract* r : {&p.harmonious, &p.scrambled})
                    {
                        const std::string prefix = r == &p.harmonious ? "harmonious/" : "scrambled/";
                        const TransferPackage pkg = transfer(*r, p.in->mu, N);
                        std::vector<Check> checks = transfer_checks(pkg, N);
                        checks.push_back(suspension_round_trip(pkg));
                        for (auto& c : checks) c.name = prefix + c.name;
                        if (first_failure(checks)) return;
                    }
                    const TransferPackage pkg = transfer(p.harmonious, p.in->mu, N);
                    std::vector<Check> checks = hpl_checks(pkg, N);
                    for (auto& c : checks) c.name = "harmonious/" + c.name;
                    if (first_failure(checks)) return;
                }
                catch (const std::exception& ex)
                {
                    o.killed = true;
                    o.checker = std::string("exception: ") + ex.what();
                    return;
                }
            }
            o.instance.clear();
        };
        hunt();
        out.push_back(o);
    }
    return out;
}

std::vector<Instance> corpus(std::uint64_t seed, int size, int N)
{
    std::vector<Instance> out;
    for (int j = 0; j < size; ++j) out.push_back(random_dga(seed, j, N));
    return out;
}

}  // namespace htt
