#include "doctest.h"
#include "jtkk/catalog.hpp"
#include "jtkk/structure.hpp"

using namespace jtkk;

namespace {

int sg(int e) { return (e & 1) ? -1 : 1; }

// Leibniz rule checked directly on basis products.
bool leibniz(const SuperAlgebra& v, const Matrix& d, int p) {
    std::size_t n = v.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec bi = unit_vec(n, i), bj = unit_vec(n, j);
            Vec lhs = d.apply(v.product(bi, bj));
            Vec rhs = v.product(d.apply(bi), bj);
            axpy(rhs, Rational(sg(p * v.parity(i))), v.product(bi, d.apply(bj)));
            if (lhs != rhs) return false;
        }
    return true;
}

// Pair derivation rule checked with the dense triple product.
bool pair_rule(const JordanPair& pr, const PairOperator& op) {
    const Matrix* m[2] = {&op.plus, &op.minus};
    for (int s = 0; s < 2; ++s) {
        int t = 1 - s;
        std::size_t a = pr.dim(s), b = pr.dim(t);
        for (std::size_t x = 0; x < a; ++x)
            for (std::size_t y = 0; y < b; ++y)
                for (std::size_t z = 0; z < a; ++z) {
                    Vec ex = unit_vec(a, x), ey = unit_vec(b, y), ez = unit_vec(a, z);
                    int px = pr.parity(s, x), py = pr.parity(t, y);
                    Vec lhs = m[s]->apply(pr.triple(s, ex, ey, ez));
                    Vec rhs = pr.triple(s, m[s]->apply(ex), ey, ez);
                    axpy(rhs, Rational(sg(px * op.parity)), pr.triple(s, ex, m[t]->apply(ey), ez));
                    axpy(rhs, Rational(sg((px + py) * op.parity)), pr.triple(s, ex, ey, m[s]->apply(ez)));
                    if (lhs != rhs) return false;
                }
    }
    return true;
}

Matrix diag3(int a, int b, int c) {
    Matrix m(3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

// A(e2) = e2, A(e3) = 2 e3: forced by A(e2^2) = 2 e2 A(e2).
Matrix remark_a() { return diag3(0, 1, 2); }

}  // namespace

TEST_CASE("derivation bases satisfy Leibniz") {
    for (auto name : {"j19", "kacK", "trunc_poly:5", "full_matrix:1,1", "form:1,2", "dt:2"}) {
        auto v = jordan_catalog(name);
        auto der = der_algebra(v.base());
        CAPTURE(name);
        for (std::size_t k = 0; k < der.dim(); ++k) CHECK(leibniz(v.base(), der.op(k), der.basis_parity(k)));
    }
}

TEST_CASE("pair derivation bases satisfy the pair rule") {
    for (auto name : {"j19", "kacK", "trunc_poly:4", "full_matrix:1,1"}) {
        auto v = jordan_catalog(name);
        auto pr = JordanPair::doubled(v.base());
        auto pd = pair_der(pr);
        CAPTURE(name);
        for (const auto& op : pd.pair_ops()) CHECK(pair_rule(pr, op));
        for (const auto& op : pair_inn(pr).pair_ops()) CHECK(pd.contains(op));
    }
}

TEST_CASE("j19 structure algebras") {
    auto v = j19();
    const auto& b = v.base();
    auto istr = istr_algebra(b);
    CHECK(istr.dim() == 2);
    CHECK(istr.contains(v.l(0)));
    CHECK(istr.contains(v.l(1)));
    CHECK(inn_algebra(b).contains(v.l(1)));
    auto str = str_algebra(b);
    CHECK(str.dim() == 3);
    CHECK(str.contains(remark_a()));
    CHECK(der_algebra(b).contains(remark_a()));
    CHECK_FALSE(str.contains(diag3(0, 2, 1)));

    auto pr = JordanPair::doubled(b);
    auto pi = pair_inn(pr);
    CHECK(pi.dim() == 3);
    Matrix z(3, 3);
    Matrix l1 = v.l(0), ml1 = Rational(-1) * v.l(0);
    CHECK(pi.contains(PairOperator{l1, ml1, 0}));
    CHECK(pi.contains(PairOperator{v.l(1), z, 0}));
    CHECK(pi.contains(PairOperator{z, v.l(1), 0}));
    auto pd = pair_der(pr);
    CHECK(pd.dim() == 5);
    CHECK(pd.contains(PairOperator{remark_a(), remark_a(), 0}));
    CHECK(pd.contains(PairOperator{remark_a(), Rational(-1) * remark_a(), 0}));

    auto r = inclusion_report(v);
    CHECK_FALSE(r.hypothesis);
    CHECK(r.pair_inn == 3);
    CHECK(r.istr == 2);
    CHECK(r.str == 3);
    CHECK(r.pair_der == 5);
}

TEST_CASE("truncated polynomial structure algebras") {
    for (int k = 4; k <= 7; ++k) {
        CAPTURE(k);
        auto v = trunc_poly(k);
        const auto& b = v.base();
        CHECK(istr_algebra(b).dim() == static_cast<std::size_t>(k - 2));
        auto itl = istr_tilde(b);
        CHECK(itl.dim() == static_cast<std::size_t>(k - 3));
        // basis t^1..t^{k-1}, so t^{k-2} is index k-3
        CHECK(der_algebra(b).contains(v.l(static_cast<std::size_t>(k - 3))));
        for (int e = 2; e <= k - 2; ++e) CHECK(itl.contains(v.l(static_cast<std::size_t>(e - 1))));
        auto r = inclusion_report(v);
        CHECK(r.l_cap_der > 0);
        CHECK(r.pair_inn == r.istr_tilde);
    }
}

TEST_CASE("K structure algebras") {
    auto v = kac_k();
    auto r = inclusion_report(v);
    CHECK_FALSE(v.unital());
    CHECK(r.istr == 8);
    CHECK(r.str == 8);
    CHECK(r.pair_inn == 8);
    CHECK(r.pair_der == 9);
    CHECK(r.str_w == 9);
    CHECK(r.chain_ok());
    CHECK_FALSE(r.strict_inn_istr);
    CHECK_FALSE(r.strict_istr_str);
    CHECK(r.strict_str_pair_der);
    auto pd = pair_der(JordanPair::doubled(v.base()));
    CHECK(pd.parity_dims() == std::pair<std::size_t, std::size_t>{5, 4});
    CHECK(istr_algebra(v.base()).parity_dims() == std::pair<std::size_t, std::size_t>{4, 4});
}

TEST_CASE("report invariants on the catalog") {
    for (const auto& name : shipped_jordan_entries()) {
        CAPTURE(name);
        auto v = jordan_catalog(name);
        auto r = inclusion_report(v);
        CHECK(r.lemma_l_pairs);
        CHECK(r.lemma_d_pairs);
        CHECK(r.str_w_matches);
        CHECK(r.str_w == r.pair_der);
        CHECK(r.inn_ideal_in_der);
        CHECK(r.istr_ideal_in_str);
        CHECK(r.pair_inn_ideal);
        if (v.unital()) {
            CHECK(r.unital_ok());
            CHECK(r.str_w == r.str);
        }
    }
}

TEST_CASE("trivial algebras") {
    auto zero = SuperAlgebra::make("zero", AlgebraKind::jordan, {0, 1}, std::nullopt, {});
    CHECK(inn_algebra(zero).dim() == 0);
    CHECK(istr_algebra(zero).dim() == 0);
    CHECK(istr_tilde(zero).dim() == 0);
    CHECK(der_algebra(zero).dim() == 4);
    auto one = SuperAlgebra::make("line", AlgebraKind::jordan, {0}, std::nullopt, {});
    CHECK(der_algebra(one).dim() == 1);
}
