#include "doctest.h"
#include "jtkk/catalog.hpp"

using namespace jtkk;

TEST_CASE("every shipped Jordan algebra passes the identity suite") {
    for (const auto& name : shipped_jordan_entries()) {
        CAPTURE(name);
        JordanAlgebra v = jordan_catalog(name);
        const auto& a = v.base();
        CHECK(check_supercommutative(a));
        CHECK(check_jordan_identity(a));
        CHECK(check_operator_identity(a));
        CHECK(check_triple_symmetry(a));
        CHECK(check_five_linear(a));
        if (v.unital()) {
            const Vec& e = *v.unit();
            for (std::size_t i = 0; i < v.dim(); ++i) {
                Vec x = unit_vec(v.dim(), i);
                CHECK(d_matrix(a, x, e) == Rational(2) * l_matrix(a, x));
                CHECK(triple(a, e, x, e) == Rational(2) * x);
            }
        }
    }
}

TEST_CASE("Jordan catalog basics") {
    CHECK(parity_dims(kac_k().base()) == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK_FALSE(kac_k().unital());
    JordanAlgebra m = full_matrix(1, 1);
    CHECK(m.unital());
    CHECK(parity_dims(m.base()) == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(jordan_catalog("dt:1/2").name() == "dt:1/2");
    CHECK_THROWS_AS(jordan_catalog("trunc_poly:9"), CatalogError);
    CHECK_THROWS_AS(jordan_catalog("nope"), CatalogError);
    CHECK_THROWS_AS(jordan_catalog("dt:-1"), CatalogError);
    CHECK_THROWS_AS(jordan_catalog("dt:0.5"), CatalogError);
    CHECK(is_external("dt:2"));
    CHECK_FALSE(is_external("kacK"));
    for (const char* u : {"full_matrix:1,2", "form:1,2", "form:2,2", "form:3,0", "dt:2", "dt:1/2"})
        CHECK(jordan_catalog(u).unital());
}

TEST_CASE("Lie catalog dimensions") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n) {
            if (m + n == 0) continue;
            auto d = parity_dims(gl(m, n));
            CHECK(d.first == static_cast<std::size_t>(m * m + n * n));
            CHECK(d.second == static_cast<std::size_t>(2 * m * n));
        }
    for (int n = 1; n <= 4; ++n) {
        CHECK(pe(n).dim() == static_cast<std::size_t>(2 * n * n));
        CHECK(spe(n).dim() == static_cast<std::size_t>(2 * n * n - 1));
        CHECK(q(n).dim() == static_cast<std::size_t>(2 * n * n));
        CHECK(sq(n).dim() == static_cast<std::size_t>(2 * n * n - 1));
        CHECK(psq(n).dim() == static_cast<std::size_t>(2 * n * n - 2));
        CHECK(pq(n).dim() == static_cast<std::size_t>(2 * n * n - 1));
    }
    for (int n = 2; n <= 6; ++n) {
        CHECK(h(n).dim() == (std::size_t{1} << n) - 2);
        CHECK(h_tilde(n).dim() == (std::size_t{1} << n) - 1);
        CHECK(lie_catalog("KCHtilde:" + std::to_string(n)).dim() == (std::size_t{1} << n));
    }
    for (int n = 1; n <= 4; ++n) CHECK(lie_catalog("W:" + std::to_string(n)).dim() == static_cast<std::size_t>(n) << n);
    CHECK(kc_h_tilde_lambda(4).dim() == 1 + 3 + 4);
    auto d = parity_dims(psl(2));
    CHECK(d == std::pair<std::size_t, std::size_t>{6, 8});
    CHECK(parity_dims(pgl(2)) == std::pair<std::size_t, std::size_t>{7, 8});
}

TEST_CASE("Lie catalog centers") {
    SuperAlgebra s = sl(2, 2);
    Subspace z = center(s);
    CHECK(z.dim() == 1);
    CHECK(center(poisson(2)).contains(unit_vec(4, 0)));
    CHECK_THROWS_AS(quotient_algebra(q(2), Subspace::span(8, {unit_vec(8, 1)})), AlgebraError);
}

TEST_CASE("every shipped Lie algebra passes super-Jacobi") {
    for (const auto& name : shipped_lie_entries()) {
        CAPTURE(name);
        CHECK(check_lie(lie_catalog(name)));
    }
}

TEST_CASE("simplicity ranges") {
    for (const auto& name : simple_lie_entries()) {
        CAPTURE(name);
        SuperAlgebra a = lie_catalog(name);
        CHECK(center(a).dim() == 0);
        CHECK(derived(a).dim() == a.dim());
    }
}
