// SPDX-License-Identifier: MIT

#include "htt/document.hpp"

#include <json.hpp>

#include <charconv>
#include <set>

namespace htt
{

using nlohmann::json;

namespace
{

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

void require_keys(const json& j, const std::string& at, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {})
{
    if (!j.is_object()) throw ParseError(at, "expected an object");
    for (const auto& [k, v] : j.items())
        if (!required.count(k) && !optional.count(k)) throw ParseError(child(at, k), "unknown field");
    for (const auto& k : required)
        if (!j.contains(k)) throw ParseError(child(at, k), "missing field");
}

long as_int(const json& j, const std::string& at)
{
    if (!j.is_number_integer()) throw ParseError(at, "expected an integer");
    return j.get<long>();
}

std::string as_string(const json& j, const std::string& at)
{
    if (!j.is_string()) throw ParseError(at, "expected a string");
    return j.get<std::string>();
}

int int_key(const std::string& key, const std::string& at)
{
    int value = 0;
    const char* end = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(key.data(), end, value);
    if (ec != std::errc() || ptr != end || key.empty() || std::to_string(value) != key)
        throw ParseError(at, "expected an integer key, got \"" + key + "\"");
    return value;
}

int basis_id(const json& j, const GradedModule& m, const std::string& at)
{
    if (!j.is_array() || j.size() != 2) throw ParseError(at, "expected a basis reference [degree, index]");
    const long deg = as_int(j[0], child(at, 0));
    const long idx = as_int(j[1], child(at, 1));
    if (idx < 0 || idx >= m.dim(static_cast<int>(deg)))
        throw ParseError(at, "no basis element [" + std::to_string(deg) + ", " + std::to_string(idx) + "] in module " +
                                 m.name());
    return m.id({static_cast<int>(deg), static_cast<int>(idx)});
}

MultiMap parse_map(const json& j, const std::string& at, const ModulePtr& src, const ModulePtr& tgt, int arity,
                   int degree)
{
    if (!j.is_array()) throw ParseError(at, "expected a list of entries");
    MultiMap m(src, tgt, arity, degree);
    for (std::size_t e = 0; e < j.size(); ++e)
    {
        const std::string eat = child(at, e);
        require_keys(j[e], eat, {"inputs", "output"});
        const json& ins = j[e]["inputs"];
        if (!ins.is_array() || static_cast<int>(ins.size()) != arity)
            throw ParseError(child(eat, "inputs"), "expected " + std::to_string(arity) + " basis references");
        Word in;
        for (std::size_t k = 0; k < ins.size(); ++k) in.push_back(basis_id(ins[k], *src, child(child(eat, "inputs"), k)));
        const json& outs = j[e]["output"];
        if (!outs.is_array()) throw ParseError(child(eat, "output"), "expected a list of [reference, scalar] pairs");
        for (std::size_t k = 0; k < outs.size(); ++k)
        {
            const std::string oat = child(child(eat, "output"), k);
            if (!outs[k].is_array() || outs[k].size() != 2) throw ParseError(oat, "expected [reference, scalar]");
            const int out = basis_id(outs[k][0], *tgt, child(oat, 0));
            Scalar c;
            try
            {
                c = Scalar::parse(as_string(outs[k][1], child(oat, 1)));
            }
            catch (const ParseError&)
            {
                throw;
            }
            catch (const std::exception& ex)
            {
                throw ParseError(child(oat, 1), ex.what());
            }
            try
            {
                m.add_term(in, {out}, c);
            }
            catch (const std::invalid_argument& ex)
            {
                throw ParseError(oat, ex.what());
            }
        }
    }
    return m;
}

json serialize_map(const MultiMap& m)
{
    json out = json::array();
    const GradedModule& src = *m.source();
    const GradedModule& tgt = *m.target();
    for (const auto& [in, v] : m.table())
    {
        json ins = json::array();
        for (int id : in) ins.push_back({src.ref(id).degree, src.ref(id).index});
        json outs = json::array();
        for (const auto& [w, c] : v.terms())
            outs.push_back({json::array({tgt.ref(w.front()).degree, tgt.ref(w.front()).index}), c.str()});
        out.push_back({{"inputs", ins}, {"output", outs}});
    }
    return out;
}

const ModuleData& module_named(const Document& d, const std::string& name, const std::string& at)
{
    auto it = d.modules.find(name);
    if (it == d.modules.end()) throw ParseError(at, "unknown module \"" + name + "\"");
    return it->second;
}

const StructureData& structure_named(const Document& d, const std::string& name, const std::string& at)
{
    auto it = d.structures.find(name);
    if (it == d.structures.end()) throw ParseError(at, "unknown structure \"" + name + "\"");
    return it->second;
}

std::map<int, MultiMap> parse_components(const json& j, const std::string& at, const ModulePtr& src,
                                         const ModulePtr& tgt, int degree_offset, int lowest, int truncation)
{
    if (!j.is_object()) throw ParseError(at, "expected an object keyed by arity");
    std::map<int, MultiMap> out;
    for (const auto& [k, v] : j.items())
    {
        const int n = int_key(k, child(at, k));
        if (n < lowest || n > truncation)
            throw ParseError(child(at, k), "arity outside " + std::to_string(lowest) + ".." + std::to_string(truncation));
        out.emplace(n, parse_map(v, child(at, k), src, tgt, n, n + degree_offset));
    }
    return out;
}

json serialize_components(const std::map<int, MultiMap>& c)
{
    json out = json::object();
    for (const auto& [n, m] : c) out[std::to_string(n)] = serialize_map(m);
    return out;
}

}  // namespace

bool ModuleData::operator==(const ModuleData& o) const
{
    return module->same_shape(*o.module) && module->name() == o.module->name() && labels == o.labels;
}

Document parse_document(const std::string& text)
{
    json j;
    try
    {
        j = json::parse(text);
    }
    catch (const json::parse_error& ex)
    {
        throw ParseError("byte " + std::to_string(ex.byte), "malformed JSON");
    }
    const std::string root;
    require_keys(j, root, {"format_version", "field", "truncation", "modules"},
                 {"modulus", "structures", "retract", "morphisms", "homotopies", "transfer"});
    Document d;
    d.format_version = static_cast<int>(as_int(j["format_version"], "/format_version"));
    if (d.format_version != kFormatVersion)
        throw ParseError("/format_version", "unsupported format version " + std::to_string(d.format_version));

    const std::string field = as_string(j["field"], "/field");
    if (field == "rational")
    {
        if (j.contains("modulus")) throw ParseError("/modulus", "modulus given for the rational field");
    }
    else if (field == "mod-p")
    {
        if (!j.contains("modulus")) throw ParseError("/modulus", "missing field");
        const long p = as_int(j["modulus"], "/modulus");
        if (p < 2) throw ParseError("/modulus", "modulus must be a prime");
        d.modulus = static_cast<unsigned long>(p);
    }
    else
        throw ParseError("/field", "expected \"rational\" or \"mod-p\"");
    try
    {
        Field::set_modulus(d.modulus);
    }
    catch (const std::invalid_argument& ex)
    {
        throw ParseError("/modulus", ex.what());
    }

    d.truncation = static_cast<int>(as_int(j["truncation"], "/truncation"));
    if (d.truncation < 1) throw ParseError("/truncation", "truncation must be at least 1");

    const json& mods = j["modules"];
    if (!mods.is_object()) throw ParseError("/modules", "expected an object");
    for (const auto& [name, mj] : mods.items())
    {
        const std::string at = child("/modules", name);
        require_keys(mj, at, {"dims"}, {"labels"});
        if (!mj["dims"].is_object()) throw ParseError(child(at, "dims"), "expected an object keyed by degree");
        std::map<int, int> dims;
        for (const auto& [k, v] : mj["dims"].items())
        {
            const long n = as_int(v, child(child(at, "dims"), k));
            if (n < 0) throw ParseError(child(child(at, "dims"), k), "negative dimension");
            if (n > 0) dims[int_key(k, child(child(at, "dims"), k))] = static_cast<int>(n);
        }
        ModuleData md{make_module(std::move(dims), name), {}};
        if (mj.contains("labels"))
        {
            const json& lj = mj["labels"];
            const std::string lat = child(at, "labels");
            if (!lj.is_array() || static_cast<int>(lj.size()) != md.module->total_dim())
                throw ParseError(lat, "expected one label per basis element");
            for (std::size_t k = 0; k < lj.size(); ++k) md.labels.push_back(as_string(lj[k], child(lat, k)));
        }
        d.modules.emplace(name, std::move(md));
    }

    if (j.contains("structures"))
    {
        const json& sj = j["structures"];
        if (!sj.is_object()) throw ParseError("/structures", "expected an object");
        for (const auto& [name, s] : sj.items())
        {
            const std::string at = child("/structures", name);
            require_keys(s, at, {"module", "differential"}, {"products"});
            const std::string mod = as_string(s["module"], child(at, "module"));
            const ModulePtr& V = module_named(d, mod, child(at, "module")).module;
            StructureData sd{mod, parse_map(s["differential"], child(at, "differential"), V, V, 1, -1), {}};
            if (s.contains("products"))
                sd.products = parse_components(s["products"], child(at, "products"), V, V, -2, 2, d.truncation);
            d.structures.emplace(name, std::move(sd));
        }
    }

    if (j.contains("retract"))
    {
        const json& r = j["retract"];
        const std::string at = "/retract";
        require_keys(r, at, {"structure", "small_module", "small_differential", "f", "g", "h"});
        const std::string sname = as_string(r["structure"], child(at, "structure"));
        const ModulePtr& V =
            module_named(d, structure_named(d, sname, child(at, "structure")).module, child(at, "structure")).module;
        const std::string wname = as_string(r["small_module"], child(at, "small_module"));
        const ModulePtr& W = module_named(d, wname, child(at, "small_module")).module;
        d.retract = RetractData{sname,
                                wname,
                                parse_map(r["small_differential"], child(at, "small_differential"), W, W, 1, -1),
                                parse_map(r["f"], child(at, "f"), V, W, 1, 0),
                                parse_map(r["g"], child(at, "g"), W, V, 1, 0),
                                parse_map(r["h"], child(at, "h"), V, V, 1, 1)};
    }

    auto carrier = [&](const std::string& sname, const std::string& at) -> const ModulePtr& {
        return module_named(d, structure_named(d, sname, at).module, at).module;
    };

    if (j.contains("morphisms"))
    {
        const json& mj = j["morphisms"];
        if (!mj.is_object()) throw ParseError("/morphisms", "expected an object");
        for (const auto& [name, m] : mj.items())
        {
            const std::string at = child("/morphisms", name);
            require_keys(m, at, {"source", "target", "components"});
            MorphismData md{as_string(m["source"], child(at, "source")), as_string(m["target"], child(at, "target")), {}};
            md.components = parse_components(m["components"], child(at, "components"),
                                              carrier(md.source, child(at, "source")),
                                              carrier(md.target, child(at, "target")), -1, 1, d.truncation);
            d.morphisms.emplace(name, std::move(md));
        }
    }

    if (j.contains("homotopies"))
    {
        const json& hj = j["homotopies"];
        if (!hj.is_object()) throw ParseError("/homotopies", "expected an object");
        for (const auto& [name, h] : hj.items())
        {
            const std::string at = child("/homotopies", name);
            require_keys(h, at, {"from", "to", "components"});
            HomotopyData hd{as_string(h["from"], child(at, "from")), as_string(h["to"], child(at, "to")), {}};
            d.homotopies.emplace(name, std::move(hd));
        }
        // Components need the flank carriers, resolved once all names exist.
        for (const auto& [name, h] : hj.items())
        {
            const std::string at = child("/homotopies", name);
            HomotopyData& hd = d.homotopies.at(name);
            // Resolve the flank to learn source and target carriers.
            auto flank_carriers = [&](const std::string& ref, const std::string& fat) {
                if (ref.rfind("identity:", 0) == 0)
                {
                    const ModulePtr& m = carrier(ref.substr(9), fat);
                    return std::make_pair(m, m);
                }
                if (ref.rfind("compose:", 0) == 0)
                {
                    const std::string rest = ref.substr(8);
                    const auto comma = rest.find(',');
                    if (comma == std::string::npos) throw ParseError(fat, "expected compose:<g>,<f>");
                    const auto g = d.morphisms.find(rest.substr(0, comma));
                    const auto f = d.morphisms.find(rest.substr(comma + 1));
                    if (g == d.morphisms.end() || f == d.morphisms.end()) throw ParseError(fat, "unknown morphism in " + ref);
                    return std::make_pair(carrier(f->second.source, fat), carrier(g->second.target, fat));
                }
                const auto m = d.morphisms.find(ref);
                if (m == d.morphisms.end()) throw ParseError(fat, "unknown morphism \"" + ref + "\"");
                return std::make_pair(carrier(m->second.source, fat), carrier(m->second.target, fat));
            };
            const auto [src, tgt] = flank_carriers(hd.from, child(at, "from"));
            const auto [src2, tgt2] = flank_carriers(hd.to, child(at, "to"));
            if (!src->same_shape(*src2) || !tgt->same_shape(*tgt2))
                throw ParseError(at, "flanks have different source or target");
            hd.components = parse_components(h["components"], child(at, "components"), src, tgt, 0, 1, d.truncation);
        }
    }

    if (j.contains("transfer"))
    {
        const json& t = j["transfer"];
        const std::string at = "/transfer";
        require_keys(t, at, {"method", "arity"}, {"hpl_vs_kernels", "extraction"});
        TransferData td;
        td.method = as_string(t["method"], child(at, "method"));
        if (td.method != "kernels" && td.method != "hpl" && td.method != "both")
            throw ParseError(child(at, "method"), "expected kernels, hpl or both");
        td.arity = static_cast<int>(as_int(t["arity"], child(at, "arity")));
        if (t.contains("hpl_vs_kernels")) td.hpl_vs_kernels = as_string(t["hpl_vs_kernels"], child(at, "hpl_vs_kernels"));
        if (t.contains("extraction")) td.extraction = as_string(t["extraction"], child(at, "extraction"));
        d.transfer = td;
    }
    return d;
}

std::string serialize_document(const Document& d)
{
    json j;
    j["format_version"] = d.format_version;
    j["field"] = d.modulus == 0 ? "rational" : "mod-p";
    if (d.modulus != 0) j["modulus"] = d.modulus;
    j["truncation"] = d.truncation;
    json mods = json::object();
    for (const auto& [name, m] : d.modules)
    {
        json dims = json::object();
        for (const auto& [deg, n] : m.module->dims()) dims[std::to_string(deg)] = n;
        json mj{{"dims", dims}};
        if (!m.labels.empty()) mj["labels"] = m.labels;
        mods[name] = mj;
    }
    j["modules"] = mods;
    if (!d.structures.empty())
    {
        json sj = json::object();
        for (const auto& [name, s] : d.structures)
        {
            json x{{"module", s.module}, {"differential", serialize_map(s.differential)}};
            if (!s.products.empty()) x["products"] = serialize_components(s.products);
            sj[name] = x;
        }
        j["structures"] = sj;
    }
    if (d.retract)
    {
        const RetractData& r = *d.retract;
        j["retract"] = {{"structure", r.structure},
                        {"small_module", r.small_module},
                        {"small_differential", serialize_map(r.small_differential)},
                        {"f", serialize_map(r.f)},
                        {"g", serialize_map(r.g)},
                        {"h", serialize_map(r.h)}};
    }
    if (!d.morphisms.empty())
    {
        json mj = json::object();
        for (const auto& [name, m] : d.morphisms)
            mj[name] = {{"source", m.source}, {"target", m.target}, {"components", serialize_components(m.components)}};
        j["morphisms"] = mj;
    }
    if (!d.homotopies.empty())
    {
        json hj = json::object();
        for (const auto& [name, h] : d.homotopies)
            hj[name] = {{"from", h.from}, {"to", h.to}, {"components", serialize_components(h.components)}};
        j["homotopies"] = hj;
    }
    if (d.transfer)
    {
        json t{{"method", d.transfer->method}, {"arity", d.transfer->arity}};
        if (!d.transfer->hpl_vs_kernels.empty()) t["hpl_vs_kernels"] = d.transfer->hpl_vs_kernels;
        if (!d.transfer->extraction.empty()) t["extraction"] = d.transfer->extraction;
        j["transfer"] = t;
    }
    return j.dump(2) + "\n";
}

AInfinityPtr build_structure(const Document& doc, const std::string& name)
{
    const std::string at = child("/structures", name);
    const StructureData& s = structure_named(doc, name, at);
    auto a = std::make_shared<AInfinity>(module_named(doc, s.module, at).module, s.differential, doc.truncation);
    for (const auto& [n, m] : s.products) a->set_product(n, m);
    return a;
}

DeformationRetract build_retract(const Document& doc)
{
    if (!doc.retract) throw ParseError("/retract", "missing field");
    const RetractData& r = *doc.retract;
    const StructureData& s = structure_named(doc, r.structure, "/retract/structure");
    return {module_named(doc, s.module, "/retract/structure").module,
            module_named(doc, r.small_module, "/retract/small_module").module,
            s.differential,
            r.small_differential,
            r.f,
            r.g,
            r.h};
}

MorphismPtr build_morphism(const Document& doc, const std::string& name)
{
    const std::string at = child("/morphisms", name);
    auto it = doc.morphisms.find(name);
    if (it == doc.morphisms.end()) throw ParseError(at, "unknown morphism \"" + name + "\"");
    auto m = std::make_shared<AInftyMorphism>(build_structure(doc, it->second.source),
                                              build_structure(doc, it->second.target), doc.truncation);
    for (const auto& [n, c] : it->second.components) m->set_component(n, c);
    return m;
}

namespace
{

MorphismPtr build_flank(const Document& doc, const std::string& ref, const std::string& at)
{
    if (ref.rfind("identity:", 0) == 0)
        return std::make_shared<const AInftyMorphism>(AInftyMorphism::identity(build_structure(doc, ref.substr(9))));
    if (ref.rfind("compose:", 0) == 0)
    {
        const std::string rest = ref.substr(8);
        const auto comma = rest.find(',');
        if (comma == std::string::npos) throw ParseError(at, "expected compose:<g>,<f>");
        return std::make_shared<const AInftyMorphism>(
            compose_morphisms(*build_morphism(doc, rest.substr(0, comma)), *build_morphism(doc, rest.substr(comma + 1))));
    }
    return build_morphism(doc, ref);
}

}  // namespace

std::shared_ptr<const AInftyHomotopy> build_homotopy(const Document& doc, const std::string& name)
{
    const std::string at = child("/homotopies", name);
    auto it = doc.homotopies.find(name);
    if (it == doc.homotopies.end()) throw ParseError(at, "unknown homotopy \"" + name + "\"");
    auto h = std::make_shared<AInftyHomotopy>(build_flank(doc, it->second.from, child(at, "from")),
                                              build_flank(doc, it->second.to, child(at, "to")), doc.truncation);
    for (const auto& [n, c] : it->second.components) h->set_component(n, c);
    return h;
}

std::string basis_name(const ModuleData& m, int id)
{
    if (!m.labels.empty()) return m.labels.at(static_cast<std::size_t>(id));
    const BasisRef r = m.module->ref(id);
    return "[" + std::to_string(r.degree) + "," + std::to_string(r.index) + "]";
}

}  // namespace htt
