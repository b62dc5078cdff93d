// SPDX-License-Identifier: MIT

#include "htt/commands.hpp"

#include "htt/battery.hpp"
#include "htt/document.hpp"
#include "htt/report.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace htt
{

namespace
{

class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Report keys use [A-Za-z0-9._-] only.
std::string key(const std::string& s)
{
    std::string out;
    for (char c : s)
    {
        const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_';
        if (keep)
            out += c;
        else if (!out.empty() && out.back() != '_')
            out += '_';
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

// The object name in front of "name: relation".
std::string subject(const std::string& relation)
{
    const auto colon = relation.find(':');
    return key(colon == std::string::npos ? relation : relation.substr(0, colon));
}

using Labels = std::vector<std::string>;

std::string label(const Labels& labels, const GradedModule& m, int id)
{
    if (static_cast<std::size_t>(id) < labels.size()) return labels[static_cast<std::size_t>(id)];
    const BasisRef r = m.ref(id);
    return "[" + std::to_string(r.degree) + "," + std::to_string(r.index) + "]";
}

std::string describe(const Vector& v, const Labels& labels, const GradedModule& m)
{
    std::string s;
    for (const auto& [w, c] : v.terms())
    {
        std::string coeff = c.str();
        const bool negative = coeff.front() == '-';
        if (negative) coeff.erase(0, 1);
        s += s.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        if (coeff != "1") s += coeff + " ";
        for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + label(labels, m, w[k]);
    }
    return s.empty() ? "0" : s;
}

void list_map(Report& rep, const std::string& name, const MultiMap& m, const Labels& in, const Labels& out)
{
    for (const auto& [w, v] : m.table())
    {
        std::string args;
        for (std::size_t k = 0; k < w.size(); ++k) args += (k ? "," : "") + label(in, *m.source(), w[k]);
        rep.detail(name + "(" + args + ") = " + describe(v, out, *m.target()));
    }
}

// A basis element of W is named after g(w) when that is a single labelled element.
Labels small_labels(const DeformationRetract& r, const Labels& vlabels)
{
    if (vlabels.empty()) return {};
    Labels out;
    for (int id = 0; id < r.W->total_dim(); ++id)
    {
        const Vector* v = r.g.find({id});
        if (v && v->size() == 1 && v->terms().begin()->second.is_one())
            out.push_back(label(vlabels, *r.V, v->terms().begin()->first.front()));
        else
            out.push_back("w" + std::to_string(r.W->ref(id).degree) + "." + std::to_string(r.W->ref(id).index));
    }
    return out;
}

CommandResult finish(Report& rep, bool ok)
{
    rep.set("status", ok ? "ok" : "failure");
    return {ok ? kExitOk : kExitMath, rep.str()};
}

CommandResult input_error(Report& rep, const std::string& location, const std::string& message)
{
    rep.set("status", "input-error");
    if (!location.empty()) rep.set("error.location", location);
    rep.detail("error: " + message);
    return {kExitInput, rep.str()};
}

std::map<int, MultiMap> desuspended(const CoalgebraOperator& op, FamilyKind kind, const ModulePtr& v,
                                    const ModulePtr& w, int lowest)
{
    const ComponentFamily fam = extract_components(op, kind);
    std::map<int, MultiMap> out;
    for (int n = lowest; n <= fam.truncation; ++n) out.emplace(n, desuspend_map(fam.component(n), v, w));
    return out;
}

}  // namespace

CommandResult cmd_check(const std::string& path)
{
    Report rep;
    rep.set("command", "check");
    rep.set("file", path);
    try
    {
        const Document doc = parse_document(read_file(path));
        rep.set("format_version", doc.format_version);
        rep.set("field", doc.modulus == 0 ? std::string("rational") : "mod-" + std::to_string(doc.modulus));
        rep.set("truncation", doc.truncation);
        // Components above the truncation are unknown, not zero.
        rep.set("verified_up_to_arity", doc.truncation);
        bool ok = true;
        for (const auto& [name, s] : doc.structures)
            ok = rep.residuals("structure." + key(name), check_structure(*build_structure(doc, name), doc.truncation)) && ok;
        for (const auto& [name, m] : doc.morphisms)
            ok = rep.residuals("morphism." + key(name), check_morphism(*build_morphism(doc, name), doc.truncation)) && ok;
        for (const auto& [name, h] : doc.homotopies)
            ok = rep.residuals("homotopy." + key(name), check_homotopy(*build_homotopy(doc, name), doc.truncation)) && ok;
        if (doc.retract)
        {
            const DeformationRetract r = build_retract(doc);
            const auto v = r.violations();
            rep.set("retract", v.empty() ? "valid" : "invalid");
            for (const auto& s : v) rep.detail("retract: " + s);
            const SideConditions sc = r.side_conditions();
            rep.set("retract.side_conditions", sc.all() ? "hold" : "fail");
            ok = ok && v.empty();
        }
        if (doc.transfer)
        {
            rep.set("transfer.method", doc.transfer->method);
            rep.set("transfer.arity", doc.transfer->arity);
            if (!doc.transfer->hpl_vs_kernels.empty()) rep.set("transfer.hpl_vs_kernels", doc.transfer->hpl_vs_kernels);
        }
        return finish(rep, ok);
    }
    catch (const ParseError& ex)
    {
        return input_error(rep, ex.location(), ex.what());
    }
    catch (const InputError& ex)
    {
        return input_error(rep, "", ex.what());
    }
    catch (const std::invalid_argument& ex)
    {
        return input_error(rep, "", ex.what());
    }
}

CommandResult cmd_transfer(const TransferOptions& opts)
{
    Report rep;
    rep.set("command", "transfer");
    rep.set("file", opts.path);
    rep.set("method", opts.method);
    rep.set("arity", opts.arity);
    rep.set("verified_up_to_arity", opts.arity);
    Document doc;
    try
    {
        if (opts.method != "kernels" && opts.method != "hpl" && opts.method != "both")
            throw InputError("method must be kernels, hpl or both");
        if (opts.arity < 1) throw InputError("arity must be at least 1");
        if (!opts.retract.empty() && opts.retract != "auto" && opts.retract != "file")
            throw InputError("retract must be auto or file");
        doc = parse_document(read_file(opts.path));
    }
    catch (const ParseError& ex)
    {
        return input_error(rep, ex.location(), ex.what());
    }
    catch (const InputError& ex)
    {
        return input_error(rep, "", ex.what());
    }

    std::string sname = opts.structure;
    if (sname.empty())
    {
        if (doc.retract)
            sname = doc.retract->structure;
        else if (doc.structures.size() == 1)
            sname = doc.structures.begin()->first;
        else
            return input_error(rep, "/structures", "choose a structure with --structure");
    }
    if (!doc.structures.count(sname)) return input_error(rep, "/structures", "unknown structure \"" + sname + "\"");
    rep.set("structure", key(sname));

    const int N = opts.arity;
    const StructureData& sd = doc.structures.at(sname);
    const ModuleData& vmod = doc.modules.at(sd.module);
    const ModulePtr V = vmod.module;
    auto mu_full = build_structure(doc, sname);
    auto mu = std::make_shared<AInfinity>(V, sd.differential, N);
    for (int n = 2; n <= N && n <= doc.truncation; ++n) mu->set_product(n, mu_full->product(n));

    const bool use_file = opts.retract == "file" || (opts.retract.empty() && doc.retract);
    std::optional<DeformationRetract> chosen;
    Labels wlabels;
    std::string wname = "W";
    if (use_file)
    {
        if (!doc.retract) return input_error(rep, "/retract", "missing field");
        if (doc.retract->structure != sname)
            return input_error(rep, "/retract/structure", "retract belongs to another structure");
        chosen = build_retract(doc);
        wname = doc.retract->small_module;
        wlabels = doc.modules.at(wname).labels;
        rep.set("retract", "file");
    }
    else
    {
        rep.set("retract", "auto");
        const MultiMap d2 = compose(sd.differential, sd.differential);
        if (!d2.is_zero())
        {
            rep.detail("differential does not square to zero");
            return finish(rep, false);
        }
        chosen = harmonious_retract({V, sd.differential});
        wlabels = small_labels(*chosen, vmod.labels);
        if (doc.modules.count(wname) || wname == sd.module) wname = sd.module + "_small";
    }
    const DeformationRetract& r = *chosen;
    const auto violations = r.violations();
    rep.set("retract.valid", violations.empty() ? "yes" : "no");
    for (const auto& v : violations) rep.detail("retract: " + v);
    if (!violations.empty()) return finish(rep, false);
    const bool side = r.side_conditions().all();
    rep.set("retract.side_conditions", side ? "hold" : "fail");

    bool ok = true;
    Document out;
    out.modulus = doc.modulus;
    out.truncation = N;
    out.modules.emplace(sd.module, vmod);
    out.modules.emplace(wname, ModuleData{r.W, wlabels});
    StructureData source{sd.module, sd.differential, {}};
    for (int n = 2; n <= N; ++n) source.products.emplace(n, mu->product(n));
    out.structures.emplace("source", source);
    out.retract = RetractData{"source", wname, r.dW, r.f, r.g, r.h};
    TransferData tdata{opts.method, N, "", ""};

    auto emit = [&](const std::map<int, MultiMap>& nu, const std::map<int, MultiMap>& phi,
                    const std::map<int, MultiMap>& psi, const std::map<int, MultiMap>& H) {
        StructureData t{wname, r.dW, {}};
        for (const auto& [n, m] : nu)
            if (n >= 2) t.products.emplace(n, m);
        out.structures.emplace("transferred", t);
        out.morphisms.emplace("phi", MorphismData{"source", "transferred", phi});
        out.morphisms.emplace("psi", MorphismData{"transferred", "source", psi});
        out.homotopies.emplace("H", HomotopyData{"compose:psi,phi", "identity:source", H});
        for (int n = 2; n <= N; ++n)
            list_map(rep, "nu_" + std::to_string(n), nu.at(n), wlabels, wlabels);
        if (N >= 3) rep.set("nu3_nonzero", nu.at(3).is_zero() ? "no" : "yes");
    };

    try
    {
        std::optional<TransferPackage> pkg;
        if (opts.method != "hpl")
        {
            pkg = transfer(r, mu, N);
            for (const auto& rr : pkg->reports) ok = rep.residuals("kernels." + subject(rr.relation), rr) && ok;
            for (const auto& rr : pkg->agreement) ok = rep.residuals("agreement." + key(rr.relation), rr) && ok;
            ok = rep.residuals("kernels.p-identity", check_p_identity(pkg->kernels, r, *mu, N)) && ok;
            ok = rep.residuals("kernels.q-identity", check_q_identity(pkg->kernels, r, *mu, N)) && ok;
            std::map<int, MultiMap> nu, phi, psi, H;
            nu.emplace(1, r.dW);
            for (int n = 1; n <= N; ++n)
            {
                if (n >= 2) nu.emplace(n, pkg->nu->product(n));
                phi.emplace(n, pkg->phi->component(n));
                psi.emplace(n, pkg->psi->component(n));
                H.emplace(n, pkg->H->component(n));
            }
            emit(nu, phi, psi, H);
        }
        if (opts.method != "kernels")
        {
            const PerturbationData pd = build_perturbation(r, *mu, N);
            const auto nil = nilpotency_failures(pd.X, N);
            const auto inv = inversion_failures(pd.X, N);
            rep.flag("hpl.nilpotent", nil.empty());
            rep.flag("hpl.series_inverts", inv.empty());
            ok = ok && nil.empty() && inv.empty();
            const HplOutput hpl = hpl_transfer(pd);
            static const char* const kConclusionKeys[] = {"square_zero", "phi_intertwines", "psi_intertwines",
                                                          "homotopy"};
            for (std::size_t k = 0; k < hpl.conclusions.size(); ++k)
            {
                const auto& c = hpl.conclusions[k];
                rep.flag(std::string("hpl.conclusion.") + kConclusionKeys[k], c.holds());
                if (!c.holds()) rep.detail("hpl: " + c.name + " fails");
                ok = ok && c.holds();
            }
            tdata.extraction = hpl.canonical ? "canonical" : "non-canonical";
            rep.set("hpl.extraction", tdata.extraction);
            if (hpl.canonical)
                for (const auto& e : extraction_defects(hpl))
                {
                    rep.flag("hpl.extraction." + key(e.name), e.holds());
                    ok = ok && e.holds();
                }
            if (pkg)
            {
                const Comparison cmp = compare_hpl_vs_kernels(hpl, *pkg, N);
                tdata.hpl_vs_kernels = cmp.status;
                rep.set("hpl_vs_kernels", cmp.status);
                for (const auto& o : cmp.objects)
                {
                    rep.set("hpl_vs_kernels." + key(o.name), o.holds() ? "exact" : "mismatch");
                    ok = ok && o.holds();
                }
            }
            else if (hpl.canonical)
            {
                auto nu = desuspended(hpl.delta_nu, FamilyKind::coderivation, r.W, r.W, 2);
                nu.emplace(1, r.dW);
                emit(nu, desuspended(hpl.phi, FamilyKind::morphism, V, r.W, 1),
                     desuspended(hpl.psi, FamilyKind::morphism, r.W, V, 1),
                     desuspended(hpl.H, FamilyKind::homotopy, V, V, 1));
            }
        }
    }
    catch (const std::exception& ex)
    {
        rep.detail(std::string("error: ") + ex.what());
        return finish(rep, false);
    }

    out.transfer = tdata;
    if (!opts.output.empty())
    {
        std::ofstream os(opts.output, std::ios::binary);
        if (!os) return input_error(rep, "", "cannot write " + opts.output);
        os << serialize_document(out);
        rep.set("output", opts.output);
    }
    return finish(rep, ok);
}

CommandResult cmd_selftest(const SelftestOptions& opts)
{
    Report rep;
    rep.set("command", "selftest");
    rep.set("corpus_size", opts.corpus_size);
    rep.set("seed", std::to_string(opts.seed));
    rep.set("arity", opts.arity);
    rep.set("verified_up_to_arity", opts.arity);
    if (opts.corpus_size < 0) return input_error(rep, "", "corpus size must be non-negative");
    if (opts.arity < 2) return input_error(rep, "", "arity must be at least 2");
    if (opts.instance && (*opts.instance < 0 || *opts.instance >= opts.corpus_size))
        return input_error(rep, "", "instance outside the corpus");
    if (opts.corpus_size == 0) return finish(rep, true);

    FieldScope rational(0);
    const int N = opts.arity;
    const std::vector<Instance> all = corpus(opts.seed, opts.corpus_size, N);
    std::vector<int> run;
    if (opts.instance)
        run.push_back(*opts.instance);
    else
        for (int j = 0; j < opts.corpus_size; ++j) run.push_back(j);
    if (opts.instance) rep.set("instance", *opts.instance);

    const std::string repro = "htt selftest --corpus-size " + std::to_string(opts.corpus_size) + " --seed " +
                              std::to_string(opts.seed) + " --arity " + std::to_string(N) + " --instance ";
    bool ok = true;
    const Check sign = suspension_sign_identity(8);
    rep.flag("sign_identity", sign.pass);
    ok = ok && sign.pass;

    std::vector<std::string> order;
    std::map<std::string, std::pair<int, int>> tally;  // passed, run
    EquivalenceTally eq;
    int passed = 0;
    int nu3 = 0;
    for (int j : run)
    {
        const BatteryResult res = run_battery(all[static_cast<std::size_t>(j)], opts.seed, N);
        eq.add(res.equivalence);
        nu3 += res.nu3_nonzero ? 1 : 0;
        for (const auto& c : res.checks)
        {
            auto [it, inserted] = tally.try_emplace(c.name, 0, 0);
            if (inserted) order.push_back(c.name);
            it->second.first += c.pass ? 1 : 0;
            it->second.second += 1;
            if (!c.pass) rep.detail(res.instance + ": " + c.name + ": " + c.detail);
        }
        if (res.pass())
            ++passed;
        else
        {
            ok = false;
            rep.detail("reproduce: " + repro + std::to_string(j));
        }
    }
    rep.set("instances.run", static_cast<long>(run.size()));
    rep.set("instances.passed", passed);
    rep.set("instances.nu3_nonzero", nu3);
    for (const auto& name : order)
    {
        const auto [p, n] = tally.at(name);
        rep.set("check." + key(name), p == n ? std::string("pass") : "fail " + std::to_string(n - p) + "/" + std::to_string(n));
    }
    for (std::size_t k = 0; k < EquivalenceTally::kDirections.size(); ++k)
        rep.set("equivalence." + key(EquivalenceTally::kDirections[k]),
                std::to_string(eq.tested[k]) + " tested, " + std::to_string(eq.discrepancies[k]) + " discrepancies");
    rep.set("equivalence.residual_mismatches", static_cast<long>(eq.residual_mismatches));
    rep.set("equivalence.comultiplication_defects", static_cast<long>(eq.comultiplication_defects));

    if (opts.mutants)
    {
        std::vector<Instance> hunt = {instance_massey(N), instance_forms(N)};
        for (int j : run) hunt.push_back(all[static_cast<std::size_t>(j)]);
        const auto outcomes = mutation_suite(hunt, opts.seed, N);
        int killed = 0;
        for (const auto& o : outcomes)
        {
            killed += o.killed ? 1 : 0;
            rep.set("mutant." + std::string(mutant_name(o.mutant)),
                    o.killed ? "killed on " + o.instance + " by " + o.checker : std::string("survived"));
        }
        rep.set("mutants.killed", std::to_string(killed) + "/" + std::to_string(outcomes.size()));
        ok = ok && killed == static_cast<int>(outcomes.size());
    }
    return finish(rep, ok);
}

}  // namespace htt
