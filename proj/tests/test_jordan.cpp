#include "doctest.h"
#include "jtkk/catalog.hpp"

#include <random>

using namespace jtkk;

namespace {

Vec basis(std::size_t n, std::size_t i) { return unit_vec(n, i); }

int sgn_of(int a, int b) { return (a & b) ? -1 : 1; }

// {x,y,z} straight from the definition using only the product.
Vec triple_oracle(const SuperAlgebra& v, const Vec& x, int px, const Vec& y, int py, const Vec& z) {
    Vec r = v.product(v.product(x, y), z) + v.product(x, v.product(y, z));
    axpy(r, Rational(-sgn_of(px, py)), v.product(y, v.product(x, z)));
    return Rational(2) * r;
}

// random homogeneous vector of the given parity
Vec random_homogeneous(std::mt19937& rng, const SuperAlgebra& v, int p) {
    Vec x(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (v.parity(i) == p) x[i] = Rational(static_cast<int>(rng() % 7) - 3);
    return x;
}

}  // namespace

TEST_CASE("left multiplication") {
    JordanAlgebra j = j19();
    Matrix l = l_matrix(j.base(), basis(3, 0));
    Matrix expect(3, 3);
    expect(0, 0) = 1;
    expect(1, 1) = Rational(1, 2);
    CHECK(l == expect);
    CHECK(l_op(j.base(), Vec(3)).matrix.is_zero());
    JordanAlgebra k = kac_k();
    GradedOperator la = l_op(k.base(), basis(3, 0));
    CHECK(la.parity == 0);
    CHECK(la.matrix.apply(basis(3, 0)) == basis(3, 0));
    CHECK(la.matrix.apply(basis(3, 1)) == Rational(1, 2) * basis(3, 1));
    CHECK(la.matrix.apply(basis(3, 2)) == Rational(1, 2) * basis(3, 2));
    CHECK(l_op(k.base(), basis(3, 1)).parity == 1);
    CHECK_THROWS(l_op(k.base(), Vec{1, 1, 0}));
}

TEST_CASE("Jordan identity") {
    CHECK(check_jordan_identity(j19().base()));
    CHECK(check_jordan_identity(kac_k().base()));
    Rational h(1, 2);
    SuperAlgebra bad = SuperAlgebra::make("bad", AlgebraKind::plain, {0, 0, 0}, std::nullopt,
                                          {{0, 0, 0, 1}, {0, 1, 1, h}, {1, 0, 1, h}, {1, 1, 0, 1}});
    CHECK(check_supercommutative(bad));
    auto r = check_jordan_identity(bad);
    CHECK_FALSE(r);
    CHECK_FALSE(check_five_linear(bad));
    CHECK_THROWS_AS(JordanAlgebra::make(bad), AlgebraError);
    CHECK_NOTHROW(JordanAlgebra::unchecked(bad));
}

TEST_CASE("triple product and operators on a unital algebra") {
    JordanAlgebra v = full_matrix(1, 1);
    REQUIRE(v.unital());
    const Vec& e = *v.unit();
    CHECK(e == Vec{1, 0, 0, 1});
    const auto& a = v.base();
    for (std::size_t i = 0; i < 4; ++i) {
        Vec x = basis(4, i);
        CHECK(triple(a, e, x, e) == Rational(2) * x);
        CHECK(d_matrix(a, x, e) == Rational(2) * l_matrix(a, x));
        for (std::size_t j = 0; j < 4; ++j) {
            Vec y = basis(4, j);
            CHECK(triple(a, x, e, y) == Rational(2) * a.product(x, y));
        }
    }
    CHECK(d_matrix(a, Vec(4), e).is_zero());
}

TEST_CASE("triple symmetry and U operator on random inputs") {
    std::mt19937 rng(3);
    for (const char* name : {"kacK", "full_matrix:1,1", "dt:2", "form:1,2", "j19"}) {
        JordanAlgebra v = jordan_catalog(name);
        const auto& a = v.base();
        for (int t = 0; t < 20; ++t) {
            int px = rng() % 2, py = rng() % 2, pz = rng() % 2;
            Vec x = random_homogeneous(rng, a, px), y = random_homogeneous(rng, a, py), z = random_homogeneous(rng, a, pz);
            Vec lhs = triple(a, x, y, z);
            CHECK(lhs == triple_oracle(a, x, px, y, py, z));
            int s = sgn_of(px, py) * sgn_of(py, pz) * sgn_of(px, pz);
            CHECK(lhs == Rational(s) * triple(a, z, y, x));
            CHECK(d_matrix(a, x, y).apply(z) == lhs);
            // U_{x,y}(z) = (-1)^{|y||z|} D_{x,z}(y)
            CHECK(u_matrix(a, x, y).apply(z) == Rational(sgn_of(py, pz)) * d_matrix(a, x, z).apply(y));
        }
    }
}

TEST_CASE("five-linear identity") {
    CHECK(check_five_linear(j19().base()));
    CHECK(check_five_linear(kac_k().base()));
    CHECK(check_operator_identity(kac_k().base()));
}

TEST_CASE("find_unit") {
    CHECK(find_unit(kac_k().base()).status == UnitResult::Status::none);
    CHECK(find_unit(trunc_poly(5).base()).status == UnitResult::Status::none);
    CHECK(find_unit(j19().base()).status == UnitResult::Status::none);
    auto u = find_unit(full_matrix(1, 1).base());
    CHECK(u.status == UnitResult::Status::unique);
    CHECK(*u.unit == Vec{1, 0, 0, 1});
    SuperAlgebra zero = SuperAlgebra::make("0", AlgebraKind::jordan, {}, std::nullopt, {});
    CHECK(find_unit(zero).status == UnitResult::Status::unique);
}

TEST_CASE("doubled superpair") {
    for (const char* name : {"j19", "kacK", "dt:1/2"}) {
        JordanAlgebra v = jordan_catalog(name);
        JordanPair p = JordanPair::doubled(v.base());
        CHECK(check_outer_symmetry(p));
        CHECK(check_pair_five_linear(p));
        CHECK(p.d_matrix(0, basis(v.dim(), 0), basis(v.dim(), 0)) == d_matrix(v.base(), basis(v.dim(), 0), basis(v.dim(), 0)));
    }
}
