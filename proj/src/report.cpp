#include "toricsym/report.hpp"

#include "toricsym/chain.hpp"
#include "toricsym/demazure.hpp"
#include "toricsym/io.hpp"
#include "toricsym/lattice_count.hpp"
#include "toricsym/stability.hpp"

namespace toricsym {

using nlohmann::json;

namespace {

// --- encoding helpers; every rational is a "p/q" string so nothing is lost to doubles

json enc(const Rational& q) { return to_string(q); }
json enc(const Integer& z) { return z.get_str(); }
json enc(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(enc(x));
    return a;
}
json enc(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(enc(x));
    return a;
}
template <typename T>
json enc_opt(const std::optional<T>& o) {
    return o ? json(*o) : json(nullptr);
}

Rational dec_rat(const json& j) {
    if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}
Integer dec_int(const json& j) {
    Integer z;
    if (!j.is_string() || z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("expected an integer string, got " + j.dump());
    return z;
}
RatVector dec_ratvec(const json& j) {
    RatVector v;
    for (const auto& x : j) v.push_back(dec_rat(x));
    return v;
}
IntVector dec_intvec(const json& j) {
    IntVector v;
    for (const auto& x : j) v.push_back(dec_int(x));
    return v;
}
template <typename T>
std::optional<T> dec_opt(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}
long dec_key(const std::string& s) {
    try {
        std::size_t used = 0;
        long k = std::stol(s, &used);
        if (used == s.size()) return k;
    } catch (const std::exception&) {
    }
    throw ParseError("expected an integer key, got '" + s + "'");
}

json enc(const std::vector<RootEntry>& rs) {
    json a = json::array();
    for (const auto& r : rs) a.push_back({{"m", r.m}, {"ray", r.ray}});
    return a;
}
std::vector<RootEntry> dec_roots(const json& j) {
    std::vector<RootEntry> out;
    for (const auto& r : j) out.push_back({r.at("m").get<LatticePoint>(), r.at("ray").get<std::size_t>()});
    return out;
}

json enc(const PolytopeSummary& p) {
    json verts = json::array();
    for (const auto& v : p.vertices) verts.push_back(enc(v));
    return {{"vertices", verts}, {"facets", p.facets}, {"volume", enc(p.volume)},
            {"barycenter", enc(p.barycenter)}, {"lattice", p.lattice}};
}
PolytopeSummary dec_polytope(const json& j) {
    PolytopeSummary p;
    for (const auto& v : j.at("vertices")) p.vertices.push_back(dec_ratvec(v));
    p.facets = j.at("facets").get<std::size_t>();
    p.volume = dec_rat(j.at("volume"));
    p.barycenter = dec_ratvec(j.at("barycenter"));
    p.lattice = j.at("lattice").get<bool>();
    return p;
}

json enc(const SymmetrySummary& s) {
    return {{"aut_order", s.aut_order},
            {"aut0_order", enc_opt(s.aut0_order)},
            {"centrally_symmetric", s.centrally_symmetric},
            {"bs_symmetric", s.bs_symmetric},
            {"centrally_lattice_symmetric", s.centrally_lattice_symmetric},
            {"fixed_space_dimension", s.fixed_space_dimension}};
}
SymmetrySummary dec_symmetry(const json& j) {
    SymmetrySummary s;
    s.aut_order = j.at("aut_order").get<std::size_t>();
    s.aut0_order = dec_opt<std::size_t>(j.at("aut0_order"));
    s.centrally_symmetric = j.at("centrally_symmetric").get<bool>();
    s.bs_symmetric = j.at("bs_symmetric").get<bool>();
    s.centrally_lattice_symmetric = j.at("centrally_lattice_symmetric").get<bool>();
    s.fixed_space_dimension = j.at("fixed_space_dimension").get<std::size_t>();
    return s;
}

json enc(const StabilitySummary& s) {
    json dk = json::object(), al = json::object(), bk = json::object();
    for (const auto& [k, v] : s.delta_k) dk[std::to_string(k)] = enc(v);
    for (const auto& [k, v] : s.alpha) al[k] = enc(v);
    for (const auto& [k, v] : s.balanced_k) bk[std::to_string(k)] = v;
    return {{"delta", enc(s.delta)}, {"delta_k", dk}, {"alpha", al},
            {"ke_exists", s.ke_exists}, {"reductive", s.reductive}, {"balanced_k", bk}};
}
StabilitySummary dec_stability(const json& j) {
    StabilitySummary s;
    s.delta = dec_rat(j.at("delta"));
    for (const auto& [k, v] : j.at("delta_k").items()) s.delta_k[dec_key(k)] = dec_rat(v);
    for (const auto& [k, v] : j.at("alpha").items()) s.alpha[k] = dec_rat(v);
    s.ke_exists = j.at("ke_exists").get<bool>();
    s.reductive = j.at("reductive").get<bool>();
    for (const auto& [k, v] : j.at("balanced_k").items()) s.balanced_k[dec_key(k)] = v.get<bool>();
    return s;
}

json enc(const DemazureSummary& d) {
    json tors = json::array(), degs = json::array();
    for (const auto& t : d.class_group_torsion) tors.push_back(enc(t));
    for (const auto& v : d.degrees) degs.push_back(enc(v));
    return {{"class_group_free_rank", d.class_group_free_rank},
            {"class_group_torsion", tors},
            {"degrees", degs},
            {"classes", d.classes},
            {"graded_dims", d.graded_dims},
            {"gs_factor_sizes", d.gs_factor_sizes},
            {"unipotent_dim", d.unipotent_dim},
            {"dim_aut0", d.dim_aut0},
            {"is_reductive", d.is_reductive},
            {"weyl_order", enc_opt(d.weyl_order)},
            {"component_group_order", enc_opt(d.component_group_order)}};
}
DemazureSummary dec_demazure(const json& j) {
    DemazureSummary d;
    d.class_group_free_rank = j.at("class_group_free_rank").get<std::size_t>();
    for (const auto& t : j.at("class_group_torsion")) d.class_group_torsion.push_back(dec_int(t));
    for (const auto& v : j.at("degrees")) d.degrees.push_back(dec_intvec(v));
    d.classes = j.at("classes").get<std::vector<std::vector<std::size_t>>>();
    d.graded_dims = j.at("graded_dims").get<std::vector<std::size_t>>();
    d.gs_factor_sizes = j.at("gs_factor_sizes").get<std::vector<std::size_t>>();
    d.unipotent_dim = j.at("unipotent_dim").get<std::size_t>();
    d.dim_aut0 = j.at("dim_aut0").get<std::size_t>();
    d.is_reductive = j.at("is_reductive").get<bool>();
    d.weyl_order = dec_opt<std::size_t>(j.at("weyl_order"));
    d.component_group_order = dec_opt<std::size_t>(j.at("component_group_order"));
    return d;
}

json enc(const ChainSummary& c) {
    json nodes = json::object();
    for (const auto& [id, v] : c.nodes) nodes[id] = enc_opt(v);
    return {{"nodes", nodes}, {"vanishing_ks", c.vanishing_ks},
            {"violations", c.violations}, {"strict_witnesses", c.strict_witnesses}};
}
ChainSummary dec_chain(const json& j) {
    ChainSummary c;
    for (const auto& [id, v] : j.at("nodes").items()) c.nodes[id] = dec_opt<bool>(v);
    c.vanishing_ks = j.at("vanishing_ks").get<std::vector<long>>();
    c.violations = j.at("violations").get<std::vector<std::string>>();
    c.strict_witnesses = j.at("strict_witnesses").get<std::vector<std::string>>();
    return c;
}

template <typename T, typename Enc>
json opt_or_null(const std::optional<T>& o, Enc e) {
    return o ? e(*o) : json(nullptr);
}

// Runs one stage; only DomainError is treated as "not applicable here".
template <typename F>
void stage(AnalysisReport& r, const std::string& name, F&& body) {
    try {
        body();
    } catch (const InvariantViolation& e) {
        r.errors[name] = std::string("invariant violation: ") + e.what();
        r.invariant_violation = true;
    } catch (const DomainError& e) {
        r.errors[name] = e.what();
    }
}

std::vector<RootEntry> entries(const std::vector<Root>& rs) {
    std::vector<RootEntry> out;
    for (const auto& r : rs) out.push_back({r.m, r.ray});
    return out;
}

}  // namespace

AnalysisReport analyze(const Fan& f, const std::string& name, const std::string& hash, const AnalysisOptions& opts) {
    if (opts.k_max < 1) throw ValidationError("k_max must be at least 1");
    require_valid(f);
    AnalysisReport r;
    r.name = name;
    r.hash = hash;
    r.fan = {f.dim, f.rays.size(), f.max_cones.size(), is_complete(f), is_simplicial(f), is_smooth(f), false};
    r.fan.fano = r.fan.complete && is_fano(f);

    std::optional<Polytope> p;
    stage(r, "polytope", [&] {
        p = polytope_from_fan(f);
        auto vb = volume_and_barycenter(*p);
        r.polytope = PolytopeSummary{p->vertices(), p->facets().size(), vb.volume, vb.barycenter, is_lattice_polytope(*p)};
    });
    if (p) {
        stage(r, "quantized_barycenters", [&] {
            for (long k = 1; k <= opts.k_max; ++k) r.quantized_barycenters[k] = quantized_barycenter(*p, k);
        });
        if (!opts.skip_ehrhart)
            stage(r, "ehrhart", [&] { r.ehrhart = ehrhart_polynomial(*p).coefficients; });
    }
    stage(r, "roots", [&] {
        auto rd = roots(f);
        r.roots = RootSummary{entries(rd.semisimple), entries(rd.unipotent)};
    });
    stage(r, "symmetry", [&] {
        auto c = classify_symmetry(f);
        SymmetrySummary s;
        s.aut_order = symmetry_group_on_m(f).order();
        if (r.fan.fano) s.aut0_order = aut0_subgroup(*p).order();
        s.centrally_symmetric = c.centrally_symmetric;
        s.bs_symmetric = c.bs_symmetric;
        s.centrally_lattice_symmetric = c.centrally_lattice_symmetric;
        s.fixed_space_dimension = c.fixed_space_dimension;
        r.symmetry = s;
    });
    stage(r, "stability", [&] {
        auto m = metric_verdicts(f, opts.k_max);
        r.stability = StabilitySummary{m.delta, m.delta_k, m.alpha, m.ke_exists, m.reductive, m.balanced_k};
    });
    if (!opts.skip_demazure)
        stage(r, "demazure", [&] {
            auto d = demazure_report(f);
            DemazureSummary s;
            s.class_group_free_rank = d.class_group.free_rank;
            s.class_group_torsion = d.class_group.torsion;
            s.degrees = d.class_group.degree_of;
            for (const auto& c : d.classes) s.classes.push_back(c.rays);
            s.graded_dims = d.graded_dims;
            s.gs_factor_sizes = d.gs_factor_sizes;
            s.unipotent_dim = d.unipotent_dim;
            s.dim_aut0 = d.dim_aut0;
            s.is_reductive = d.is_reductive;
            s.weyl_order = d.weyl_order;
            s.component_group_order = d.component_group_order;
            r.demazure = s;
        });
    stage(r, "chain", [&] {
        auto c = verify_implication_chain(f, opts.k_max);
        ChainSummary s;
        for (const auto& n : c.nodes) s.nodes[n.id] = n.value;
        s.vanishing_ks = c.vanishing_ks;
        s.violations = c.violations;
        s.strict_witnesses = c.strict_witnesses;
        if (!c.consistent()) r.invariant_violation = true;
        r.chain = s;
    });
    return r;
}

AnalysisReport analyze_file(const std::string& path, const AnalysisOptions& opts) {
    std::string text = read_file(path);
    Fan f = parse_fan_text(text);
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
    if (auto dot = name.rfind('.'); dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return analyze(f, name, content_hash(text), opts);
}

json to_json(const AnalysisReport& r) {
    json bc = json::object();
    for (const auto& [k, v] : r.quantized_barycenters) bc[std::to_string(k)] = enc(v);
    json fan = {{"dim", r.fan.dim}, {"rays", r.fan.rays}, {"cones", r.fan.cones}, {"complete", r.fan.complete},
                {"simplicial", r.fan.simplicial}, {"smooth", r.fan.smooth}, {"fano", r.fan.fano}};
    json ehr = nullptr;
    if (r.ehrhart) ehr = enc(RatVector(*r.ehrhart));
    json roots_j = nullptr;
    if (r.roots) roots_j = {{"semisimple", enc(r.roots->semisimple)}, {"unipotent", enc(r.roots->unipotent)}};
    return {{"name", r.name},
            {"hash", r.hash},
            {"fan", fan},
            {"polytope", opt_or_null(r.polytope, [](const auto& x) { return enc(x); })},
            {"quantized_barycenters", bc},
            {"ehrhart", ehr},
            {"roots", roots_j},
            {"symmetry", opt_or_null(r.symmetry, [](const auto& x) { return enc(x); })},
            {"stability", opt_or_null(r.stability, [](const auto& x) { return enc(x); })},
            {"demazure", opt_or_null(r.demazure, [](const auto& x) { return enc(x); })},
            {"chain", opt_or_null(r.chain, [](const auto& x) { return enc(x); })},
            {"errors", r.errors},
            {"invariant_violation", r.invariant_violation}};
}

AnalysisReport report_from_json(const json& j) {
    try {
        AnalysisReport r;
        r.name = j.at("name").get<std::string>();
        r.hash = j.at("hash").get<std::string>();
        const auto& fan = j.at("fan");
        r.fan = {fan.at("dim").get<std::size_t>(),     fan.at("rays").get<std::size_t>(),
                 fan.at("cones").get<std::size_t>(),   fan.at("complete").get<bool>(),
                 fan.at("simplicial").get<bool>(),     fan.at("smooth").get<bool>(),
                 fan.at("fano").get<bool>()};
        if (!j.at("polytope").is_null()) r.polytope = dec_polytope(j.at("polytope"));
        for (const auto& [k, v] : j.at("quantized_barycenters").items()) r.quantized_barycenters[dec_key(k)] = dec_ratvec(v);
        if (!j.at("ehrhart").is_null()) r.ehrhart = dec_ratvec(j.at("ehrhart"));
        if (const auto& rj = j.at("roots"); !rj.is_null())
            r.roots = RootSummary{dec_roots(rj.at("semisimple")), dec_roots(rj.at("unipotent"))};
        if (!j.at("symmetry").is_null()) r.symmetry = dec_symmetry(j.at("symmetry"));
        if (!j.at("stability").is_null()) r.stability = dec_stability(j.at("stability"));
        if (!j.at("demazure").is_null()) r.demazure = dec_demazure(j.at("demazure"));
        if (!j.at("chain").is_null()) r.chain = dec_chain(j.at("chain"));
        r.errors = j.at("errors").get<std::map<std::string, std::string>>();
        r.invariant_violation = j.at("invariant_violation").get<bool>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

std::string serialize(const AnalysisReport& r) { return to_json(r).dump(2) + "\n"; }

AnalysisReport parse_report(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return report_from_json(j);
}

}  // namespace toricsym
