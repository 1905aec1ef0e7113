#include "doctest.h"
#include "jtkk/exact.hpp"

#include <algorithm>
#include <random>

using namespace jtkk;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (auto& row : rows) {
        std::size_t j = 0;
        for (int v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

Vec vec(std::initializer_list<int> xs) {
    Vec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> d(-3, 3), z(0, 2);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (z(rng)) {
                m(i, j) = Rational(d(rng), 1 + z(rng));
                m(i, j).canonicalize();
            }
    return m;
}

}  // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/3") == Rational(1, 3));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(to_string(parse_rational("6/3")) == "2");
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("+1"), ParseError);
}

TEST_CASE("matrix bounds") {
    Matrix m(2, 2);
    CHECK_THROWS(m.at(2, 0));
    CHECK_THROWS(m.at(0, 2));
    CHECK(Matrix::identity(3).apply(vec({1, 2, 3})) == vec({1, 2, 3}));
}

TEST_CASE("kernel examples") {
    CHECK(kernel(Matrix::identity(2)).dim() == 0);
    CHECK(kernel(Matrix(3, 3)) == Subspace::full(3));
    Subspace k = kernel(mat({{1, 2}, {2, 4}}));
    REQUIRE(k.dim() == 1);
    // hand elimination: x1 = -2 x2, so (2,-1) spans
    CHECK(k == Subspace::span(2, {vec({2, -1})}));
}

TEST_CASE("solve examples") {
    Vec b = vec({5, -7});
    CHECK(*solve(Matrix::identity(2), b) == b);
    auto x = solve(mat({{1, 1}}), vec({1}));
    REQUIRE(x);
    CHECK((*x)[0] + (*x)[1] == 1);
    // rank [[1],[2]] = 1 but rank of augmented = 2
    CHECK_FALSE(solve(mat({{1}, {2}}), vec({1, 1})));
    CHECK_THROWS(solve(mat({{1}, {2}}), vec({1})));
}

TEST_CASE("subspace examples") {
    CHECK(Subspace::span(2, {vec({1, 0}), vec({1, 0})}).dim() == 1);
    Subspace x = Subspace::span(2, {vec({1, 0})}), y = Subspace::span(2, {vec({0, 1})});
    CHECK(x.sum(y).dim() == 2);
    Subspace a = Subspace::span(3, {vec({1, 1, 0}), vec({0, 0, 1})});
    Subspace b = Subspace::span(3, {vec({1, 1, 1})});
    CHECK(a.intersect(b) == b);
    CHECK(a.contains(vec({2, 2, 5})));
    CHECK_FALSE(a.contains(vec({1, 0, 0})));
    CHECK(a.quotient_dim(b) == 1);
    CHECK_THROWS(a.sum(Subspace::zero(2)));
}

TEST_CASE("coordinates round trip") {
    Subspace a = Subspace::span(4, {vec({1, 2, 0, 1}), vec({0, 1, 1, 1})});
    Vec v = vec({3, 7, 1, 4});
    auto c = a.coordinates(v);
    REQUIRE(c);
    CHECK(a.from_coordinates(*c) == v);
    CHECK_FALSE(a.coordinates(vec({0, 0, 0, 1})));
}

TEST_CASE("property: solve and kernel on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        Matrix m = random_matrix(rng, r, c);
        Subspace k = kernel(m);
        CHECK(k.dim() + rank(m) == c);
        for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
        Vec b(r);
        for (auto& x : b) x = Rational(static_cast<int>(rng() % 7) - 3);
        if (auto x = solve(m, b)) CHECK(m.apply(*x) == b);
        // a consistent right-hand side must be solvable
        Vec x0(c);
        for (auto& x : x0) x = Rational(static_cast<int>(rng() % 5) - 2);
        CHECK(solve(m, m.apply(x0)));
    }
}

TEST_CASE("property: Grassmann identity and canonicity") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + rng() % 5;
        auto gen = [&](std::size_t cnt) {
            Matrix m = random_matrix(rng, cnt, n);
            std::vector<Vec> vs;
            for (std::size_t i = 0; i < cnt; ++i) vs.push_back(m.row(i));
            return vs;
        };
        auto va = gen(rng() % (n + 1)), vb = gen(rng() % (n + 1));
        Subspace a = Subspace::span(n, va), b = Subspace::span(n, vb);
        CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
        CHECK(a.intersect(b).contains(a.intersect(b)));
        CHECK(a.contains(a.intersect(b)));
        CHECK(b.contains(a.intersect(b)));

        std::vector<Vec> shuffled = va;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (auto& v : shuffled) {
            Rational s(static_cast<int>(1 + rng() % 4), static_cast<int>(1 + rng() % 3));
            s.canonicalize();
            v = s * v;
        }
        if (!shuffled.empty()) axpy(shuffled.front(), Rational(2), shuffled.back());
        Subspace a2 = Subspace::span(n, shuffled);
        CHECK(a2 == a);
    }
}
