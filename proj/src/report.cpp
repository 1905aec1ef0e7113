#include "jtkk/report.hpp"

#include "jtkk/catalog.hpp"
#include "jtkk/serialize.hpp"

#include "json.hpp"

#include <filesystem>
#include <sstream>

namespace jtkk {

using nlohmann::json;

Section& Report::section(const std::string& title) {
    for (auto& s : sections)
        if (s.title == title) return s;
    sections.push_back({title, {}, {}});
    return sections.back();
}

const Section* Report::find(const std::string& title) const {
    for (const auto& s : sections)
        if (s.title == title) return &s;
    return nullptr;
}

const Check* Report::check(const std::string& name) const {
    for (const auto& s : sections)
        for (const auto& c : s.checks)
            if (c.name == name) return &c;
    return nullptr;
}

const Fact* Report::fact(const std::string& key) const {
    for (const auto& s : sections)
        for (const auto& f : s.facts)
            if (f.key == key) return &f;
    return nullptr;
}

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& s : sections)
        for (const auto& c : s.checks) n += !c.pass;
    return n;
}

std::string render_human(const std::vector<Report>& reports) {
    std::ostringstream os;
    std::size_t checks = 0, failed = 0;
    for (const auto& r : reports) {
        os << "== " << r.subject << " ==\n";
        for (const auto& s : r.sections) {
            os << "[" << s.title << "]\n";
            for (const auto& f : s.facts) os << "  " << f.key << ": " << f.value << "\n";
            for (const auto& c : s.checks) {
                os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
                if (!c.detail.empty()) os << "  (" << c.detail << ")";
                os << "\n";
                ++checks;
                failed += !c.pass;
            }
        }
    }
    os << "summary: " << reports.size() << " algebra(s), " << checks << " checks, " << failed << " failed\n";
    return os.str();
}

std::string render_machine(const std::vector<Report>& reports) {
    json out = json::object();
    out["format"] = "jtkk-report";
    out["version"] = 1;
    json rs = json::array();
    for (const auto& r : reports) {
        json jr = {{"subject", r.subject}, {"ok", r.ok()}, {"failures", r.failures()}};
        json ss = json::array();
        for (const auto& s : r.sections) {
            json facts = json::array(), checks = json::array();
            for (const auto& f : s.facts) facts.push_back({{"key", f.key}, {"value", f.value}});
            for (const auto& c : s.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            ss.push_back({{"title", s.title}, {"facts", facts}, {"checks", checks}});
        }
        jr["sections"] = ss;
        rs.push_back(jr);
    }
    out["reports"] = rs;
    return out.dump(2) + "\n";
}

std::vector<Report> parse_machine(std::string_view text) {
    std::vector<Report> out;
    try {
        json doc = json::parse(text);
        if (doc.at("format") != "jtkk-report" || doc.at("version") != 1) throw ParseError("not a version 1 report");
        for (const auto& jr : doc.at("reports")) {
            Report r;
            r.subject = jr.at("subject").get<std::string>();
            for (const auto& js : jr.at("sections")) {
                Section s;
                s.title = js.at("title").get<std::string>();
                for (const auto& f : js.at("facts")) s.facts.push_back({f.at("key"), f.at("value")});
                for (const auto& c : js.at("checks")) s.checks.push_back({c.at("name"), c.at("pass"), c.at("detail")});
                r.sections.push_back(std::move(s));
            }
            out.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    return out;
}

std::string to_string(Construction c) {
    switch (c) {
        case Construction::kan: return "kan";
        case Construction::ko: return "ko";
        case Construction::kotilde: return "kotilde";
        case Construction::ti_inn: return "ti-inn";
        case Construction::ti_der: return "ti-der";
    }
    return "ko";
}

Construction parse_construction(const std::string& s) {
    for (auto c : {Construction::kan, Construction::ko, Construction::kotilde, Construction::ti_inn, Construction::ti_der})
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown construction \"" + s + "\" (kan, ko, kotilde, ti-inn, ti-der)");
}

TkkAlgebra build(const JordanAlgebra& v, Construction c) {
    switch (c) {
        case Construction::kan: return kantor(v);
        case Construction::ko: return koecher(v);
        case Construction::kotilde: return koecher_tilde(v);
        case Construction::ti_inn: return tits(v, inn_data(v.base()));
        case Construction::ti_der: return tits(v, der_data(v.base()));
    }
    return koecher(v);
}

Source load_source(const std::string& s) {
    Source out;
    out.label = s;
    if (is_jordan_catalog_name(s)) {
        out.jordan = jordan_catalog(s);
        return out;
    }
    if (is_lie_catalog_name(s)) {
        out.lie = lie_catalog(s);
        return out;
    }
    if (!std::filesystem::exists(s)) throw CatalogError("unknown source \"" + s + "\": not a catalog name or a file");
    SuperAlgebra a = from_spec(load_file(s));
    if (a.kind() == AlgebraKind::lie) {
        CheckResult r = check_superanticommutative(a);
        if (!r.pass) throw AlgebraError(s + ": not super-anticommutative: " + describe(r));
        out.lie = a;
    } else {
        out.jordan = JordanAlgebra::make(a.with_kind(AlgebraKind::jordan));
    }
    return out;
}

std::string dims_string(const std::array<std::size_t, 3>& d) {
    return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ")";
}

std::string parity_string(std::pair<std::size_t, std::size_t> p) {
    return "(" + std::to_string(p.first) + "|" + std::to_string(p.second) + ")";
}

std::string basis_name(std::size_t i) { return "L_{e" + std::to_string(i + 1) + "}"; }

namespace {

Check from(std::string name, const CheckResult& r) { return {std::move(name), r.pass, r.pass ? "" : describe(r)}; }

Check flag(std::string name, bool ok, std::string detail = "") { return {std::move(name), ok, ok ? "" : std::move(detail)}; }

std::string dim_with_parity(const OperatorSpace& s) { return std::to_string(s.dim()) + " " + parity_string(s.parity_dims()); }

void structure_facts(Section& sec, const SuperAlgebra& v, const InclusionReport& r) {
    JordanPair p = JordanPair::doubled(v);
    sec.facts.push_back({"Der", dim_with_parity(der_algebra(v))});
    sec.facts.push_back({"Inn", dim_with_parity(inn_algebra(v))});
    sec.facts.push_back({"str", dim_with_parity(str_algebra(v))});
    sec.facts.push_back({"istr", dim_with_parity(istr_algebra(v))});
    sec.facts.push_back({"istr~", dim_with_parity(istr_tilde(v))});
    sec.facts.push_back({"str_w", dim_with_parity(str_w(v))});
    sec.facts.push_back({"pair_der", dim_with_parity(pair_der(p))});
    sec.facts.push_back({"pair_inn", dim_with_parity(pair_inn(p))});
    sec.facts.push_back({"{L_x} ∩ Der", std::to_string(r.l_cap_der)});
    sec.facts.push_back({"{L_x} ∩ Inn", std::to_string(r.l_cap_inn)});
}

void inclusion_checks(Section& sec, const InclusionReport& r) {
    sec.checks.push_back(flag("(L_x,-L_x) ∈ Der(V,V)", r.lemma_l_pairs));
    sec.checks.push_back(flag("(D,D) ∈ Der(V,V)", r.lemma_d_pairs));
    sec.checks.push_back(flag("str_w = (X,Y) -> (X,-Y) image of Der(V,V)", r.str_w_matches));
    sec.checks.push_back(flag("dim str_w = dim Der(V,V)", r.str_w == r.pair_der,
                              std::to_string(r.str_w) + " vs " + std::to_string(r.pair_der)));
    sec.checks.push_back(flag("Inn ideal in Der", r.inn_ideal_in_der));
    sec.checks.push_back(flag("istr ideal in str", r.istr_ideal_in_str));
    sec.checks.push_back(flag("Inn(V,V) ideal in Der(V,V)", r.pair_inn_ideal));
    if (r.hypothesis) {
        sec.checks.push_back(flag("psi: Inn -> istr injective", r.psi_injective));
        sec.checks.push_back(flag("psi(Inn) ⊆ istr", r.psi_into_istr));
        sec.checks.push_back(flag("phi: str -> Der(V,V) injective", r.phi_injective));
        sec.checks.push_back(flag("phi(str) ⊆ Der(V,V)", r.phi_into_pair_der));
    }
    if (r.unital) {
        sec.checks.push_back(flag("istr = Inn(V,V)", r.istr_eq_pair_inn));
        sec.checks.push_back(flag("str = Der(V,V)", r.str_eq_pair_der));
        sec.checks.push_back(flag("str = {L_x} ⊕ Der, istr = {L_x} ⊕ Inn", r.sums_direct));
        sec.checks.push_back(flag("swap eigenspaces of Der(V,V)", r.swap_eigenspaces));
        sec.checks.push_back(flag("dim str_w = dim str", r.str_w_eq_str));
    }
}

std::string chain_witness(const JordanAlgebra& v) {
    OperatorSpace inn = inn_algebra(v.base()), der = der_algebra(v.base());
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (!v.l(i).is_zero() && inn.contains(v.l(i))) return basis_name(i) + " ∈ Inn(V)";
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (!v.l(i).is_zero() && der.contains(v.l(i))) return basis_name(i) + " ∈ Der(V)";
    return "a nonzero L_x lies in Der(V)";
}

Subspace ko_inside_kotilde(const JordanAlgebra& v, const TkkAlgebra& kt) {
    JordanPair p = JordanPair::doubled(v.base());
    OperatorSpace pin = pair_inn(p), pd = pair_der(p);
    std::size_t d = kt.dim();
    std::vector<Vec> b;
    for (std::size_t i = 0; i < kt.n_minus; ++i) b.push_back(unit_vec(d, kt.minus(i)));
    for (std::size_t i = 0; i < kt.n_plus; ++i) b.push_back(unit_vec(d, kt.plus(i)));
    for (const auto& op : pin.pair_ops()) {
        Vec c = *pd.space.coordinates(flatten(op));
        Vec w = zero_vec(d);
        for (std::size_t k = 0; k < c.size(); ++k) w[kt.zero(k)] = c[k];
        b.push_back(std::move(w));
    }
    return Subspace::span(d, b);
}

void tower_facts(Section& sec, const std::string& label, const DerTower& t, const std::vector<int>& shifts) {
    for (int s : shifts) {
        std::string key = label + " shift " + (s > 0 ? "+" : "") + std::to_string(s);
        sec.facts.push_back({key, "Der " + parity_string({t.der_at(s, 0), t.der_at(s, 1)}) + " Out " +
                                      parity_string({t.out_at(s, 0), t.out_at(s, 1)})});
    }
}

std::array<std::size_t, 3> out_graded(const DerTower& t) {
    std::array<std::size_t, 3> d{};
    for (int s = -1; s <= 1; ++s) d[s + 1] = t.out_at(s, 0) + t.out_at(s, 1);
    return d;
}

}  // namespace

Report dims_report(const JordanAlgebra& v) {
    Report rep;
    rep.subject = v.name();
    InclusionReport r = inclusion_report(v);
    Section& sec = rep.section("dimensions");
    sec.facts.push_back({"V", std::to_string(v.dim()) + " " + parity_string(parity_dims(v.base()))});
    sec.facts.push_back({"unit", v.unital() ? "yes" : "none"});
    structure_facts(sec, v.base(), r);
    Section& inc = rep.section("inclusion report");
    inc.facts.push_back({"chain hypothesis", r.hypothesis ? "holds" : "fails: " + chain_witness(v)});
    inc.facts.push_back({"note", r.note});
    if (r.hypothesis) {
        inc.facts.push_back({"Inn ⊊ istr", r.strict_inn_istr ? "strict" : "equal"});
        inc.facts.push_back({"istr ⊊ str", r.strict_istr_str ? "strict" : "equal"});
        inc.facts.push_back({"str ⊊ Der(V,V)", r.strict_str_pair_der ? "strict" : "equal"});
    }
    inclusion_checks(inc, r);
    return rep;
}

Report tkk_report(const JordanAlgebra& v, Construction c) {
    Report rep;
    TkkAlgebra t = build(v, c);
    rep.subject = t.source;
    Section& sec = rep.section(to_string(c));
    sec.facts.push_back({"graded dims", dims_string(t.graded_dims())});
    sec.facts.push_back({"parity", parity_string(parity_dims(t.lie))});
    sec.facts.push_back({"total", std::to_string(t.dim())});
    sec.checks.push_back(from("super-Jacobi", check_lie(t.lie)));
    CheckResult jg = is_jordan_graded(t.lie);
    sec.facts.push_back({"jordan-graded", jg.pass ? "yes" : "no"});
    if (c == Construction::ko || c == Construction::kotilde) sec.checks.push_back(from("jordan-graded", jg));
    if (c == Construction::kan) {
        sec.checks.push_back(from("Kantor relations", check_kantor_relations(v, t)));
        sec.facts.push_back({"g+ vs dim V", std::to_string(t.n_plus) + (t.n_plus == v.dim() ? " = " : " ≠ ") +
                                                std::to_string(v.dim())});
    }
    if (c == Construction::ti_inn) sec.checks.push_back(from("Ti -> Ko_D", check_propnu(v, inn_data(v.base()))));
    if (c == Construction::ti_der) sec.checks.push_back(from("Ti -> Ko_D", check_propnu(v, der_data(v.base()))));
    if (c == Construction::ko) {
        DerTower tower = lie_der_tower(t.lie);
        Section& d = rep.section("Der tower");
        tower_facts(d, "Der(Ko)", tower, {-2, -1, 0, 1, 2});
        d.facts.push_back({"Out(Ko) graded", dims_string(out_graded(tower))});
        d.facts.push_back({"Out(Ko) parity", parity_string(tower.out_parity())});
    }
    if (!v.unital() && (c == Construction::kan || c == Construction::ti_inn || c == Construction::ti_der))
        rep.section("notes").facts.push_back({"unital equivalences", "skipped: no unit"});
    return rep;
}

Report verify_jordan(const JordanAlgebra& v) {
    Report rep;
    rep.subject = v.name();
    const SuperAlgebra& a = v.base();
    JordanPair p = JordanPair::doubled(a);

    Section& id = rep.section("identities");
    id.checks.push_back(from("supercommutative", check_supercommutative(a)));
    id.checks.push_back(from("Jordan identity", check_jordan_identity(a)));
    id.checks.push_back(from("operator identity", check_operator_identity(a)));
    id.checks.push_back(from("triple product symmetry", check_triple_symmetry(a)));
    id.checks.push_back(from("5-linear identity", check_five_linear(a)));
    id.checks.push_back(from("pair outer symmetry", check_outer_symmetry(p)));
    id.checks.push_back(from("pair 5-linear identity", check_pair_five_linear(p)));

    InclusionReport r = inclusion_report(v);
    Section& st = rep.section("structure");
    structure_facts(st, a, r);
    inclusion_checks(st, r);

    TkkAlgebra ko = koecher(v), kt = koecher_tilde(v), kan = kantor(v);
    TitsData di = inn_data(a), dd = der_data(a);
    TkkAlgebra tin = tits(v, di), tder = tits(v, dd);
    Section& con = rep.section("constructions");
    for (const TkkAlgebra* t : {&kan, &ko, &kt, &tin, &tder})
        con.facts.push_back({t->source, dims_string(t->graded_dims()) + " " + parity_string(parity_dims(t->lie))});
    con.checks.push_back(from("Kan super-Jacobi", check_lie(kan.lie)));
    con.checks.push_back(from("Kantor relations", check_kantor_relations(v, kan)));
    con.checks.push_back(from("Ko super-Jacobi", check_lie(ko.lie)));
    con.checks.push_back(from("Ko jordan-graded", is_jordan_graded(ko.lie)));
    con.checks.push_back(from("Ko~ super-Jacobi", check_lie(kt.lie)));
    con.checks.push_back(flag("Ko ideal in Ko~", is_ideal(kt.lie, ko_inside_kotilde(v, kt))));
    con.checks.push_back(from("Der(Ko)_0 = Der(V,V)", check_der0_pair(p)));
    con.checks.push_back(from("Ti(Inn) super-Jacobi", check_lie(tin.lie)));
    con.checks.push_back(from("Ti(Der) super-Jacobi", check_lie(tder.lie)));
    con.checks.push_back(from("Ti(Inn) -> Ko_Inn", check_propnu(v, di)));
    con.checks.push_back(from("Ti(Der) -> Ko_Der", check_propnu(v, dd)));

    Section& rt = rep.section("round trips");
    rt.checks.push_back(from("J(Ko(V,V)) = (V,V)", check_j_of_ko(p)));
    rt.checks.push_back(from("Ko(J(Ko)) = Ko", check_ko_of_j(ko.lie)));
    rt.checks.push_back(from("Ti(Inn) recovers V", tits_roundtrip(v, di)));
    rt.checks.push_back(from("Ti(Der) recovers V", tits_roundtrip(v, dd)));

    Section& dv = rep.section("derivations");
    DerTower tower = lie_der_tower(ko.lie);
    tower_facts(dv, "Der(Ko)", tower, {-2, -1, 0, 1, 2});
    dv.facts.push_back({"Out(Ko) graded", dims_string(out_graded(tower))});
    dv.facts.push_back({"Out(Ko) parity", parity_string(tower.out_parity())});
    DerTower ttower = lie_der_tower(kt.lie);
    dv.checks.push_back(flag("Out(Ko~) = 0", ttower.out_dim() == 0, "dim " + std::to_string(ttower.out_dim())));

    if (v.unital()) {
        UnitalReport u = check_unital_equivalences(v);
        Section& un = rep.section("unital equivalences");
        un.checks.push_back(from("Kan ≅ Ko", u.kan_ko));
        un.checks.push_back(from("Ti(Inn) ≅ Ko", u.ti_ko));
        un.checks.push_back(from("Ko_Inn ≅ Ko", u.ko_inn));
        un.checks.push_back(flag("Der(Ko) shifts ±2 vanish", u.shifts_pm2_zero));
        un.checks.push_back(flag("Der(Ko) shifts ±1 have dim V", u.shifts_pm1_dim_v));
        un.checks.push_back(flag("Der(Ko) = Ko~ per shift and parity", u.der_eq_kotilde));
        un.checks.push_back(flag("Out(Ko)_0 = str - istr", u.out0_eq_str_istr));
    } else {
        Section& cx = rep.section("counterexamples");
        cx.facts.push_back({"unital equivalences", "skipped: no unit"});
        if (!r.hypothesis) cx.facts.push_back({"chain hypothesis fails", chain_witness(v)});
        if (r.istr != r.pair_inn)
            cx.facts.push_back({"istr ≇ Inn(V,V)", "dims " + std::to_string(r.istr) + " vs " + std::to_string(r.pair_inn)});
        if (r.str != r.pair_der)
            cx.facts.push_back({"str ≇ Der(V,V)", "dims " + std::to_string(r.str) + " vs " + std::to_string(r.pair_der)});
        if (r.l_cap_der != 0) cx.facts.push_back({"{L_x} + Der(V) not direct", "intersection dim " + std::to_string(r.l_cap_der)});
        if (kan.graded_dims() != ko.graded_dims())
            cx.facts.push_back({"Kan ≇ Ko", "graded dims differ: " + dims_string(kan.graded_dims()) + " vs " +
                                                 dims_string(ko.graded_dims())});
        cx.facts.push_back({"Out(Ko) dims", dims_string(out_graded(tower))});
    }
    return rep;
}

Report verify_lie(const SuperAlgebra& g, bool expect_simple) {
    Report rep;
    rep.subject = g.name();
    Section& id = rep.section("identities");
    id.checks.push_back(from("super-anticommutative", check_superanticommutative(g)));
    id.checks.push_back(from("super-Jacobi", check_super_jacobi(g)));
    Section& st = rep.section("structure");
    std::size_t c = center(g).dim(), d = derived(g).dim();
    st.facts.push_back({"dim", std::to_string(g.dim()) + " " + parity_string(parity_dims(g))});
    st.facts.push_back({"center", std::to_string(c)});
    st.facts.push_back({"derived", std::to_string(d)});
    if (expect_simple) {
        st.checks.push_back(flag("center = 0", c == 0, "dim " + std::to_string(c)));
        st.checks.push_back(flag("derived = self", d == g.dim(), "dim " + std::to_string(d)));
    }
    return rep;
}

Report verify_source(const Source& s) {
    if (s.jordan) return verify_jordan(*s.jordan);
    auto simple = simple_lie_entries();
    bool expect = std::find(simple.begin(), simple.end(), s.label) != simple.end();
    Report r = verify_lie(*s.lie, expect);
    r.subject = s.label;
    return r;
}

}  // namespace jtkk
