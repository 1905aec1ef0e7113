// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "jtkk/catalog.hpp"
#include "jtkk/report.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace jtkk;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

using PD = std::pair<std::size_t, std::size_t>;
using Dims = std::array<std::size_t, 3>;

std::string num(std::size_t n) { return std::to_string(n); }

std::string pd(PD p) { return parity_string(p); }

Outcome identity_suites() {
    Outcome o;
    std::size_t jordan = 0, lie = 0;
    for (const auto& name : shipped_jordan_entries()) {
        JordanAlgebra v = jordan_catalog(name);
        const SuperAlgebra& a = v.base();
        JordanPair p = JordanPair::doubled(a);
        o.expect(check_supercommutative(a).pass, name + " supercommutative");
        o.expect(check_jordan_identity(a).pass, name + " Jordan identity");
        o.expect(check_operator_identity(a).pass, name + " operator identity");
        o.expect(check_triple_symmetry(a).pass, name + " triple symmetry");
        o.expect(check_five_linear(a).pass, name + " 5-linear identity");
        o.expect(check_pair_five_linear(p).pass, name + " pair 5-linear identity");
        ++jordan;
        for (auto c : {Construction::kan, Construction::ko, Construction::kotilde, Construction::ti_inn,
                       Construction::ti_der}) {
            TkkAlgebra t = build(v, c);
            o.expect(check_lie(t.lie).pass, t.source + " super-Jacobi");
            ++lie;
        }
    }
    for (const auto& name : shipped_lie_entries()) {
        o.expect(check_lie(lie_catalog(name)).pass, name + " super-Jacobi");
        ++lie;
    }
    o.note(num(jordan) + " Jordan algebras, " + num(lie) + " Lie superalgebras checked");
    return o;
}

Outcome j19_chain() {
    Outcome o;
    JordanAlgebra v = j19();
    JordanPair p = JordanPair::doubled(v.base());
    bool in_inn = inn_algebra(v.base()).contains(v.l(1));
    std::size_t istr = istr_algebra(v.base()).dim(), str = str_algebra(v.base()).dim();
    std::size_t pin = pair_inn(p).dim(), pder = pair_der(p).dim();
    o.expect(in_inn, "L_{e2} ∈ Inn(V)");
    o.expect(istr == 2, "dim istr = 2");
    o.expect(str == 3, "dim str = 3");
    o.expect(pin == 3, "dim pair_inn = 3");
    o.expect(pder == 5, "dim pair_der = 5");
    o.expect(istr != pin && str != pder, "istr ≇ pair_inn and str ≇ pair_der by dimension");
    o.note("L_{e2} ∈ Inn " + std::string(in_inn ? "yes" : "no") + ", istr " + num(istr) + ", str " + num(str) +
           ", pair_inn " + num(pin) + ", pair_der " + num(pder));
    return o;
}

Outcome truncated_polynomials() {
    Outcome o;
    for (int k = 4; k <= 7; ++k) {
        JordanAlgebra v = trunc_poly(k);
        InclusionReport r = inclusion_report(v);
        std::size_t istr = istr_algebra(v.base()).dim(), ist = istr_tilde(v.base()).dim();
        std::string tag = "k=" + std::to_string(k) + " ";
        o.expect(istr == std::size_t(k - 2), tag + "dim istr = k-2");
        o.expect(ist == std::size_t(k - 3), tag + "dim istr~ = k-3");
        o.expect(der_algebra(v.base()).contains(v.l(k - 3)), tag + "L_{t^{k-2}} ∈ Der");
        o.expect(r.l_cap_der != 0, tag + "{L_x} ∩ Der ≠ 0");
        o.note(tag + "istr " + num(istr) + " istr~ " + num(ist) + " {L_x}∩Der " + num(r.l_cap_der));
    }
    return o;
}

Outcome kac_superalgebra() {
    Outcome o;
    JordanAlgebra v = kac_k();
    JordanPair p = JordanPair::doubled(v.base());
    o.expect(find_unit(v.base()).status == UnitResult::Status::none, "find_unit = none");
    OperatorSpace istr = istr_algebra(v.base()), str = str_algebra(v.base()), pin = pair_inn(p), pder = pair_der(p);
    for (const auto* s : {&istr, &str, &pin}) o.expect(s->dim() == 8 && s->parity_dims() == PD{4, 4}, s->label + " = 8 (4|4)");
    o.expect(pder.dim() == 9 && pder.parity_dims() == PD{5, 4}, "pair_der = 9 (5|4)");
    TkkAlgebra ko = koecher(v), kt = koecher_tilde(v), kan = kantor(v), ti = tits(v, inn_data(v.base()));
    o.expect(ko.graded_dims() == Dims{3, 8, 3}, "Ko graded (3,8,3)");
    o.expect(parity_dims(ko.lie) == PD{6, 8}, "Ko parity (6|8)");
    o.expect(kt.dim() == 15 && kt.n_zero == 9, "Ko~ total 15 with degree 0 part 9");
    DerTower tower = lie_der_tower(ko.lie);
    bool out_ok = true;
    for (int s = -1; s <= 1; ++s) out_ok = out_ok && tower.out_at(s, 0) == 1 && tower.out_at(s, 1) == 0;
    out_ok = out_ok && tower.out_dim() == 3;
    o.expect(out_ok, "Out(Ko) = (1,1,1) at shifts -1,0,+1, all even");
    o.expect(kan.n_plus != 3, "Kan₊ ≠ 3");
    Fingerprint fti = fingerprint(ti.lie), fko = fingerprint(ko.lie);
    o.expect(fti == fko, "Ti(K,Inn,sl2) fingerprint = Ko(K) fingerprint");
    o.note("Ko " + dims_string(ko.graded_dims()) + " " + pd(parity_dims(ko.lie)) + ", Ko~ " + num(kt.dim()) +
           ", Kan " + dims_string(kan.graded_dims()) + ", Out(Ko) " + pd(tower.out_parity()) + ", Ti " + describe(fti));
    return o;
}

Outcome unital_equivalences() {
    Outcome o;
    for (std::string name : {"full_matrix:1,1", "full_matrix:1,2", "full_matrix:2,1", "form:1,2", "form:2,2", "dt:2"}) {
        UnitalReport u = check_unital_equivalences(jordan_catalog(name));
        o.expect(u.kan_ko.pass, name + " Kan ≅ Ko: " + describe(u.kan_ko));
        o.expect(u.ti_ko.pass, name + " Ti-Inn ≅ Ko: " + describe(u.ti_ko));
        o.expect(u.shifts_pm2_zero, name + " Der(Ko) shifts ±2 zero");
        o.expect(u.shifts_pm1_dim_v, name + " Der(Ko) shifts ±1 = dim V");
        o.expect(u.der_eq_kotilde, name + " Der(Ko) = Ko~ per shift and parity");
        o.expect(u.out0_eq_str_istr, name + " Out(Ko)_0 = str - istr");
        o.note(name + " Der(Ko) " + num(u.tower.der_dim()) + " Out " + pd(u.tower.out_parity()));
    }
    return o;
}

Outcome round_trips() {
    Outcome o;
    std::size_t n = 0;
    for (const auto& name : shipped_jordan_entries()) {
        JordanAlgebra v = jordan_catalog(name);
        o.expect(check_j_of_ko(JordanPair::doubled(v.base())).pass, name + " J(Ko(V,V)) = (V,V)");
        o.expect(check_ko_of_j(koecher(v).lie).pass, name + " Ko(J(g)) ≅ g");
        ++n;
    }
    o.expect(tits_roundtrip(jordan_catalog("full_matrix:1,1"), inn_data(jordan_catalog("full_matrix:1,1").base())).pass,
             "tits_roundtrip (gl(1,1)+, Inn)");
    o.expect(tits_roundtrip(kac_k(), inn_data(kac_k().base())).pass, "tits_roundtrip (K, Inn)");
    o.expect(tits_roundtrip(j19(), der_data(j19().base())).pass, "tits_roundtrip (j19, Der)");
    o.note(num(n) + " catalog entries, 3 Tits round trips");
    return o;
}

std::size_t osp_even(std::size_t m, std::size_t n) { return m * (m - 1) / 2 + n * (2 * n + 1); }

Outcome table_fingerprints() {
    Outcome o;
    JordanAlgebra gl11 = jordan_catalog("full_matrix:1,1");
    TkkAlgebra ko = koecher(gl11), kt = koecher_tilde(gl11);
    Fingerprint fko = fingerprint(ko.lie), fpsl = fingerprint(lie_catalog("psl:2"));
    o.expect(fko.parity == PD{6, 8} && fpsl.parity == PD{6, 8}, "Ko(gl(1,1)+) parity (6|8) matching psl(2|2)");
    o.expect(consistent_with(fko, fpsl), "Ko(gl(1,1)+) consistent with psl(2|2)");
    o.expect(kt.dim() == 17 && parity_dims(kt.lie) == PD{9, 8}, "Ko~(gl(1,1)+) total 17 (9|8)");
    std::ostringstream forms;
    for (auto [p, q2] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 0}}) {
        TkkAlgebra f = koecher(form_algebra(p, q2));
        std::size_t m = p + 3, n = q2 / 2;
        PD got = parity_dims(f.lie);
        o.expect(got == PD{osp_even(m, n), m * 2 * n},
                 "Ko(form(" + std::to_string(p) + "," + std::to_string(q2) + ")) = osp(" + num(m) + "|" + num(2 * n) + ")");
        forms << " form(" << p << "," << q2 << ") " << pd(got) << " vs osp(" << m << "|" << 2 * n << ")";
    }
    Fingerprint d2 = fingerprint(koecher(dt_algebra(2)).lie), dh = fingerprint(koecher(dt_algebra(Rational(1, 2))).lie);
    o.expect(d2.parity == PD{9, 8} && dh.parity == PD{9, 8}, "Ko(dt) total 17 (9|8) for t = 2, 1/2");
    o.expect(d2 == dh, "Ko(dt(2)) and Ko(dt(1/2)) fingerprints equal");
    o.note("Ko(gl11) " + describe(fko) + ", psl(2|2) " + describe(fpsl) + ";" + forms.str() +
           "; the osp rank follows the dimension count p+3 (see README)");
    return o;
}

Outcome out_kotilde() {
    Outcome o;
    std::size_t n = 0;
    for (const auto& name : shipped_jordan_entries()) {
        TkkAlgebra kt = koecher_tilde(jordan_catalog(name));
        std::size_t out = lie_der_tower(kt.lie).out_dim();
        o.expect(out == 0, name + " Out(Ko~) = 0, got " + num(out));
        ++n;
    }
    o.note(num(n) + " catalog entries");
    return o;
}

Outcome str_w_dims() {
    Outcome o;
    std::size_t unital = 0;
    for (const auto& name : shipped_jordan_entries()) {
        JordanAlgebra v = jordan_catalog(name);
        std::size_t sw = str_w(v.base()).dim(), pd_ = pair_der(JordanPair::doubled(v.base())).dim();
        o.expect(sw == pd_, name + " dim str_w = dim pair_der (" + num(sw) + " vs " + num(pd_) + ")");
        if (v.unital()) {
            o.expect(sw == str_algebra(v.base()).dim(), name + " dim str_w = dim str");
            ++unital;
        }
    }
    o.note(num(shipped_jordan_entries().size()) + " entries, " + num(unital) + " unital");
    return o;
}

std::optional<std::size_t> stated_dim(const std::string& spec) {
    auto colon = spec.find(':');
    std::string fam = spec.substr(0, colon), args = spec.substr(colon + 1);
    if (fam == "gl") {
        std::size_t m = std::stoul(args), n = std::stoul(args.substr(args.find(',') + 1));
        return (m + n) * (m + n);
    }
    std::size_t n = std::stoul(args);
    if (fam == "pe" || fam == "q") return 2 * n * n;
    if (fam == "spe") return 2 * n * n - 1;
    if (fam == "H") return (std::size_t(1) << n) - 2;
    return std::nullopt;
}

Outcome lie_catalog_table() {
    Outcome o;
    std::size_t dims = 0, simple = 0;
    for (const auto& name : shipped_lie_entries()) {
        auto want = stated_dim(name);
        if (!want) continue;
        std::size_t got = lie_catalog(name).dim();
        o.expect(got == *want, name + " dim " + num(got) + ", expected " + num(*want));
        ++dims;
    }
    for (const auto& name : simple_lie_entries()) {
        SuperAlgebra g = lie_catalog(name);
        o.expect(center(g).dim() == 0, name + " center = 0");
        o.expect(derived(g).dim() == g.dim(), name + " derived = self");
        ++simple;
    }
    o.note(num(dims) + " dimension formulas, " + num(simple) + " simple entries");
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"identity suites", identity_suites},
        {"j19 inclusion chain counterexample", j19_chain},
        {"truncated polynomial algebras", truncated_polynomials},
        {"Kac superalgebra K", kac_superalgebra},
        {"unital equivalences", unital_equivalences},
        {"round trips", round_trips},
        {"TKK fingerprints at small rank", table_fingerprints},
        {"Out(Ko~) = 0", out_kotilde},
        {"str_w = pair_der", str_w_dims},
        {"Lie catalog dimensions and simplicity", lie_catalog_table},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        std::printf(" [%.2fs]\n", secs);
        std::cout.flush();
        for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    }
    std::cout << (failed ? "FAILED " : "ALL PASS ") << criteria.size() - failed << "/" << criteria.size() << "\n";
    return failed ? 1 : 0;
}
