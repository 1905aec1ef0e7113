#include "doctest.h"
#include "jtkk/catalog.hpp"
#include "jtkk/tkk.hpp"

using namespace jtkk;

namespace {

using Dims = std::array<std::size_t, 3>;
using PD = std::pair<std::size_t, std::size_t>;

std::size_t osp_even(std::size_t m, std::size_t n) { return m * (m - 1) / 2 + n * (2 * n + 1); }

}  // namespace

TEST_CASE("sl2 killing form by hand") {
    Matrix k = sl2_killing();
    // ad e ad f on (e,f,h): e -> 2e, f -> 0, h -> 2h, trace 4
    CHECK(k(0, 1) == 2);
    CHECK(k(1, 0) == 2);
    CHECK(k(2, 2) == 4);
    CHECK(k(0, 0) == 0);
    CHECK(k(0, 2) == 0);
}

TEST_CASE("Koecher of the one-dimensional unital algebra is sl2") {
    auto v = JordanAlgebra::make(SuperAlgebra::make("K", AlgebraKind::jordan, {0}, std::nullopt, {{0, 0, 0, 1}}));
    auto ko = koecher(v);
    REQUIRE(ko.graded_dims() == Dims{1, 1, 1});
    // basis (u, d, x) with d = (1, -1), so D_{e,e} pair = (2, -2) = 2d and h = 2d
    const auto& g = ko.lie;
    CHECK(g.product(2, 0) == SparseVec{{1, Rational(2)}});
    CHECK(g.product(1, 2) == SparseVec{{2, Rational(1)}});
    CHECK(g.product(1, 0) == SparseVec{{0, Rational(-1)}});
    CHECK(check_lie(g).pass);
}

TEST_CASE("K constructions") {
    auto v = kac_k();
    auto ko = koecher(v);
    CHECK(ko.graded_dims() == Dims{3, 8, 3});
    CHECK(parity_dims(ko.lie) == PD{6, 8});
    CHECK(check_lie(ko.lie).pass);
    CHECK(is_jordan_graded(ko.lie).pass);

    auto kt = koecher_tilde(v);
    CHECK(kt.dim() == 15);
    CHECK(kt.n_zero == 9);
    CHECK(check_lie(kt.lie).pass);
    CHECK(is_ideal(kt.lie, [&] {
        std::vector<Vec> b;
        auto pin = pair_inn(JordanPair::doubled(v.base()));
        auto pd = pair_der(JordanPair::doubled(v.base()));
        for (std::size_t i = 0; i < 3; ++i) {
            b.push_back(unit_vec(15, kt.minus(i)));
            b.push_back(unit_vec(15, kt.plus(i)));
        }
        for (const auto& op : pin.pair_ops()) {
            Vec c = *pd.space.coordinates(flatten(op));
            Vec w = zero_vec(15);
            for (std::size_t k = 0; k < c.size(); ++k) w[kt.zero(k)] = c[k];
            b.push_back(w);
        }
        return Subspace::span(15, b);
    }()));

    auto tw = lie_der_tower(ko.lie);
    for (int s = -2; s <= 2; ++s) {
        CHECK(tw.out_at(s, 1) == 0);
        CHECK(tw.out_at(s, 0) == (std::abs(s) <= 1 ? 1u : 0u));
    }
    CHECK(lie_der_tower(kt.lie).out_dim() == 0);

    auto kan = kantor(v);
    CHECK(kan.n_plus != 3);
    CHECK(check_kantor_relations(v, kan).pass);
    CHECK(check_lie(kan.lie).pass);

    auto ti = tits(v, inn_data(v.base()));
    CHECK(fingerprint(ti.lie) == fingerprint(ko.lie));
    CHECK(consistent_with(fingerprint(ko.lie), fingerprint(lie_catalog("psl:2"))));
    CHECK(consistent_with(fingerprint(kt.lie), fingerprint(lie_catalog("pgl:2"))));
    CHECK_THROWS_AS(check_unital_equivalences(v), std::invalid_argument);
}

TEST_CASE("j19 constructions") {
    auto v = j19();
    CHECK(koecher(v).graded_dims() == Dims{3, 3, 3});
    CHECK(kantor(v).n_zero == 2);
    CHECK(check_propnu(v, inn_data(v.base())).pass);
    CHECK(tits_roundtrip(v, der_data(v.base())).pass);
}

TEST_CASE("tits data validation") {
    auto v = j19().base();
    auto l = l_space(v);
    CHECK_THROWS_AS(make_tits_data(v, l), AlgebraError);
    auto zero = make_space("zero", v.parities(), {});
    CHECK_THROWS_AS(make_tits_data(v, zero), AlgebraError);
}

TEST_CASE("unital equivalences") {
    for (auto name : {"full_matrix:1,1", "full_matrix:1,2", "full_matrix:2,1", "form:1,2", "form:2,2", "dt:2"}) {
        CAPTURE(name);
        auto v = jordan_catalog(name);
        auto r = check_unital_equivalences(v);
        CHECK(r.kan_ko.pass);
        CHECK(r.ti_ko.pass);
        CHECK(r.ko_inn.pass);
        CHECK(r.shifts_pm2_zero);
        CHECK(r.shifts_pm1_dim_v);
        CHECK(r.der_eq_kotilde);
        CHECK(r.out0_eq_str_istr);
        CHECK(check_kantor_relations(v, kantor(v)).pass);
    }
}

TEST_CASE("full_matrix(2,1) has Ko~ = Ko") {
    auto v = full_matrix(2, 1);
    CHECK(koecher_tilde(v).graded_dims() == koecher(v).graded_dims());
}

TEST_CASE("round trips on the catalog") {
    for (const auto& name : shipped_jordan_entries()) {
        CAPTURE(name);
        auto v = jordan_catalog(name);
        auto pr = JordanPair::doubled(v.base());
        CHECK(check_j_of_ko(pr).pass);
        CHECK(check_ko_of_j(koecher(pr).lie).pass);
        CHECK(check_der0_pair(pr).pass);
        CHECK(check_propnu(v, inn_data(v.base())).pass);
    }
    for (auto [name, der] : {std::pair{"full_matrix:1,1", false}, {"kacK", false}, {"j19", true}}) {
        auto v = jordan_catalog(name);
        CHECK(tits_roundtrip(v, der ? der_data(v.base()) : inn_data(v.base())).pass);
    }
}

TEST_CASE("table fingerprints") {
    auto gl11 = full_matrix(1, 1);
    CHECK(parity_dims(koecher(gl11).lie) == PD{6, 8});
    CHECK(consistent_with(fingerprint(koecher(gl11).lie), fingerprint(lie_catalog("psl:2"))));
    CHECK(parity_dims(koecher_tilde(gl11).lie) == PD{9, 8});
    for (auto [p, q2] : {std::pair{1, 2}, {2, 2}, {3, 0}}) {
        CAPTURE(p);
        CAPTURE(q2);
        auto ko = koecher(form_algebra(p, q2));
        std::size_t m = static_cast<std::size_t>(p + 3), n = static_cast<std::size_t>(q2 / 2);
        CHECK(parity_dims(ko.lie) == PD{osp_even(m, n), m * 2 * n});
    }
    auto a = fingerprint(koecher(dt_algebra(Rational(2))).lie);
    auto b = fingerprint(koecher(dt_algebra(Rational(1, 2))).lie);
    CHECK(a.parity == PD{9, 8});
    CHECK(a == b);
}

TEST_CASE("Jordan gradedness") {
    // abelian 3-graded algebra
    auto ab = SuperAlgebra::make("ab", AlgebraKind::lie, {0, 0, 0}, std::vector<int>{-1, 0, 1}, {});
    auto p = j_functor(ab);
    CHECK(p.triple(0, 0, 0, 0).empty());
    CHECK_FALSE(is_jordan_graded(ab).pass);

    // sl2 plus a central degree-0 element
    auto g = SuperAlgebra::make("sl2+c", AlgebraKind::lie, {0, 0, 0, 0}, std::vector<int>{-1, 0, 0, 1},
                                {{3, 0, 1, 1}, {0, 3, 1, -1}, {1, 3, 3, 2}, {3, 1, 3, -2}, {1, 0, 0, -2}, {0, 1, 0, 2}});
    REQUIRE(check_lie(g).pass);
    CHECK_FALSE(is_jordan_graded(g).pass);
    CHECK(is_jordan_graded(koecher(full_matrix(1, 1)).lie).pass);
    CHECK(is_jordan_graded(kantor(full_matrix(1, 1)).lie).pass);

    auto bad = SuperAlgebra::make("bad", AlgebraKind::lie, {0, 0}, std::vector<int>{0, 2}, {});
    CHECK_THROWS_AS(j_functor(bad), AlgebraError);
}
