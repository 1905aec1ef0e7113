#include "jtkk/jordan.hpp"

namespace jtkk {

namespace {

int sign(int a, int b) { return (a & b & 1) ? -1 : 1; }

SparseVec right_product(const SuperAlgebra& v, const SparseVec& x, std::size_t k) {
    SparseVec acc;
    for (const auto& [m, c] : x) sparse_axpy(acc, c, v.product(m, k));
    return acc;
}

Matrix combine(const std::vector<Matrix>& ops, const SparseVec& coeffs, std::size_t n) {
    Matrix m(n, n);
    for (const auto& [i, c] : coeffs) m += c * ops[i];
    return m;
}

std::vector<Matrix> left_matrices(const SuperAlgebra& v) {
    std::vector<Matrix> ls;
    for (std::size_t i = 0; i < v.dim(); ++i) ls.push_back(v.left_matrix(i));
    return ls;
}

// D_{b_i,b_j} for all i, j.
std::vector<Matrix> d_matrices(const SuperAlgebra& v) {
    const std::size_t n = v.dim();
    std::vector<Matrix> ds;
    ds.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix m(n, n);
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& [r, c] : triple_basis(v, i, j, k)) m(r, k) = c;
            ds.push_back(std::move(m));
        }
    return ds;
}

std::optional<int> homogeneous_parity(const SuperAlgebra& v, const Vec& x) {
    if (x.size() != v.dim()) throw std::invalid_argument("operator: dimension mismatch");
    if (is_zero(x)) return 0;
    auto p = v.vector_parity(x);
    if (!p) throw std::invalid_argument("operator: input is not homogeneous");
    return p;
}

}  // namespace

UnitResult find_unit(const SuperAlgebra& v) {
    const std::size_t n = v.dim();
    Matrix m(n * n, n);
    Vec b(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        b[j * n + j] = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [k, c] : v.product(i, j)) m(j * n + k, i) = c;
    }
    UnitResult r;
    auto x = solve(m, b);
    if (!x) return r;
    r.unit = std::move(x);
    r.status = kernel(m).dim() == 0 ? UnitResult::Status::unique : UnitResult::Status::non_unique;
    return r;
}

CheckResult check_jordan_identity(const SuperAlgebra& v) {
    const std::size_t n = v.dim();
    auto ls = left_matrices(v);
    std::vector<Matrix> lp(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lp[i * n + j] = combine(ls, v.product(i, j), n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const int px = v.parity(x), py = v.parity(y), pz = v.parity(z);
                Matrix acc = Rational(sign(px, pz)) * supercommutator(ls[x], px, lp[y * n + z], py ^ pz);
                acc += Rational(sign(py, px)) * supercommutator(ls[y], py, lp[z * n + x], pz ^ px);
                acc += Rational(sign(pz, py)) * supercommutator(ls[z], pz, lp[x * n + y], px ^ py);
                if (!acc.is_zero()) return CheckResult::fail({x, y, z}, "Jordan identity sum is nonzero");
            }
    return CheckResult::ok();
}

CheckResult check_operator_identity(const SuperAlgebra& v) {
    const std::size_t n = v.dim();
    auto ls = left_matrices(v);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const int px = v.parity(x), py = v.parity(y);
            Matrix lxy = supercommutator(ls[x], px, ls[y], py);
            for (std::size_t z = 0; z < n; ++z) {
                Matrix lhs = supercommutator(lxy, px ^ py, ls[z], v.parity(z));
                SparseVec t = v.left_product(x, v.product(y, z));
                sparse_axpy(t, -sign(px, py), v.left_product(y, v.product(x, z)));
                if (lhs != combine(ls, t, n))
                    return CheckResult::fail({x, y, z}, "[[L_x,L_y],L_z] != L_{x(yz)} - s L_{y(xz)}");
            }
        }
    return CheckResult::ok();
}

SparseVec triple_basis(const SuperAlgebra& v, std::size_t i, std::size_t j, std::size_t k) {
    SparseVec acc = right_product(v, v.product(i, j), k);
    sparse_axpy(acc, 1, v.left_product(i, v.product(j, k)));
    sparse_axpy(acc, -sign(v.parity(i), v.parity(j)), v.left_product(j, v.product(i, k)));
    for (auto& [idx, c] : acc) c *= 2;
    return acc;
}

CheckResult check_triple_symmetry(const SuperAlgebra& v) {
    const std::size_t n = v.dim();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const int px = v.parity(x), py = v.parity(y), pz = v.parity(z);
                int s = sign(px, py) * sign(py, pz) * sign(px, pz);
                SparseVec rhs;
                sparse_axpy(rhs, s, triple_basis(v, z, y, x));
                if (triple_basis(v, x, y, z) != rhs) return CheckResult::fail({x, y, z}, "triple symmetry fails");
            }
    return CheckResult::ok();
}

CheckResult check_five_linear(const SuperAlgebra& v) {
    const std::size_t n = v.dim();
    auto ds = d_matrices(v);
    // D_{w,b} and D_{b,w} for a sparse w.
    auto d_left = [&](const SparseVec& w, std::size_t b) {
        Matrix m(n, n);
        for (const auto& [i, c] : w) m += c * ds[i * n + b];
        return m;
    };
    auto d_right = [&](std::size_t a, const SparseVec& w) {
        Matrix m(n, n);
        for (const auto& [i, c] : w) m += c * ds[a * n + i];
        return m;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t w = 0; w < n; ++w) {
                    const int pxy = v.parity(x) ^ v.parity(y), puw = v.parity(u) ^ v.parity(w);
                    const Rational s = sign(pxy, puw);
                    Matrix lhs = supercommutator(ds[x * n + y], pxy, ds[u * n + w], puw);
                    Matrix first = d_left(triple_basis(v, x, y, u), w) - s * d_right(u, triple_basis(v, w, x, y));
                    if (lhs != first) return CheckResult::fail({x, y, u, w}, "[D,D] != D_{{x,y,u},v} - s D_{u,{v,x,y}}");
                    Matrix second = d_right(x, triple_basis(v, y, u, w)) - s * d_left(triple_basis(v, u, w, x), y);
                    if (lhs != second) return CheckResult::fail({x, y, u, w}, "[D,D] != D_{x,{y,u,v}} - s D_{{u,v,x},y}");
                }
    return CheckResult::ok();
}

JordanAlgebra::JordanAlgebra(SuperAlgebra base) : base_(std::move(base)) {
    base_ = base_.with_kind(AlgebraKind::jordan);
    left_ = left_matrices(base_);
    auto u = find_unit(base_);
    if (u.status == UnitResult::Status::unique) unit_ = u.unit;
}

JordanAlgebra JordanAlgebra::make(SuperAlgebra base) {
    if (auto r = check_supercommutative(base); !r)
        throw AlgebraError(base.name() + ": not supercommutative: " + describe(r), r.witness->indices);
    if (auto r = check_jordan_identity(base); !r)
        throw AlgebraError(base.name() + ": Jordan identity fails: " + describe(r), r.witness->indices);
    return JordanAlgebra(std::move(base));
}

JordanAlgebra JordanAlgebra::unchecked(SuperAlgebra base) { return JordanAlgebra(std::move(base)); }

Vec triple(const SuperAlgebra& v, const Vec& x, const Vec& y, const Vec& z) {
    const std::size_t n = v.dim();
    if (x.size() != n || y.size() != n || z.size() != n) throw std::invalid_argument("triple: dimension mismatch");
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(z[k]) == 0) continue;
                Rational s = x[i] * y[j] * z[k];
                for (const auto& [m, c] : triple_basis(v, i, j, k)) r[m] += s * c;
            }
        }
    }
    return r;
}

Matrix l_matrix(const SuperAlgebra& v, const Vec& x) { return v.left_matrix(x); }

Matrix d_matrix(const SuperAlgebra& v, const Vec& x, const Vec& y) {
    const std::size_t n = v.dim();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("d_matrix: dimension mismatch");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            Rational s = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& [r, c] : triple_basis(v, i, j, k)) m(r, k) += s * c;
        }
    }
    return m;
}

Matrix u_matrix(const SuperAlgebra& v, const Vec& x, const Vec& y) {
    const std::size_t n = v.dim();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("u_matrix: dimension mismatch");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            Rational s = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                Rational t = s * sign(v.parity(j), v.parity(k));
                for (const auto& [r, c] : triple_basis(v, i, k, j)) m(r, k) += t * c;
            }
        }
    }
    return m;
}

GradedOperator l_op(const SuperAlgebra& v, const Vec& x) {
    int p = *homogeneous_parity(v, x);
    return {l_matrix(v, x), p, std::nullopt};
}

GradedOperator d_op(const SuperAlgebra& v, const Vec& x, const Vec& y) {
    int p = *homogeneous_parity(v, x) ^ *homogeneous_parity(v, y);
    return {d_matrix(v, x, y), p, std::nullopt};
}

GradedOperator u_op(const SuperAlgebra& v, const Vec& x, const Vec& y) {
    int p = *homogeneous_parity(v, x) ^ *homogeneous_parity(v, y);
    return {u_matrix(v, x, y), p, std::nullopt};
}

// ------------------------------------------------------------ superpairs

JordanPair JordanPair::make(std::array<std::vector<int>, 2> parity, std::array<std::vector<SparseVec>, 2> table) {
    JordanPair p;
    p.parity_ = std::move(parity);
    p.table_ = std::move(table);
    for (int s = 0; s < 2; ++s) {
        const std::size_t ns = p.dim(s), nt = p.dim(1 - s);
        if (p.table_[s].size() != ns * nt * ns) throw AlgebraError("superpair table has wrong size");
        for (std::size_t x = 0; x < ns; ++x)
            for (std::size_t y = 0; y < nt; ++y)
                for (std::size_t z = 0; z < ns; ++z)
                    for (const auto& [k, c] : p.triple(s, x, y, z)) {
                        if (k >= ns) throw AlgebraError("superpair entry out of range", {x, y, z, k});
                        if (p.parity(s, k) != (p.parity(s, x) ^ p.parity(1 - s, y) ^ p.parity(s, z)))
                            throw AlgebraError("superpair triple product is not even", {x, y, z, k});
                    }
    }
    return p;
}

JordanPair JordanPair::doubled(const SuperAlgebra& v) {
    const std::size_t n = v.dim();
    std::vector<SparseVec> t(n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) t[(x * n + y) * n + z] = triple_basis(v, x, y, z);
    return make({v.parities(), v.parities()}, {t, t});
}

Vec JordanPair::triple(int s, const Vec& x, const Vec& y, const Vec& z) const {
    const std::size_t ns = dim(s), nt = dim(1 - s);
    if (x.size() != ns || y.size() != nt || z.size() != ns) throw std::invalid_argument("pair triple: dimension mismatch");
    Vec r(ns);
    for (std::size_t i = 0; i < ns; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < nt; ++j) {
            if (sgn(y[j]) == 0) continue;
            for (std::size_t k = 0; k < ns; ++k) {
                if (sgn(z[k]) == 0) continue;
                Rational c = x[i] * y[j] * z[k];
                for (const auto& [m, a] : triple(s, i, j, k)) r[m] += c * a;
            }
        }
    }
    return r;
}

Matrix JordanPair::d_matrix(int s, std::size_t x, std::size_t y) const {
    const std::size_t ns = dim(s);
    Matrix m(ns, ns);
    for (std::size_t z = 0; z < ns; ++z)
        for (const auto& [k, c] : triple(s, x, y, z)) m(k, z) = c;
    return m;
}

Matrix JordanPair::d_matrix(int s, const Vec& x, const Vec& y) const {
    const std::size_t ns = dim(s), nt = dim(1 - s);
    if (x.size() != ns || y.size() != nt) throw std::invalid_argument("pair d_matrix: dimension mismatch");
    Matrix m(ns, ns);
    for (std::size_t i = 0; i < ns; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < nt; ++j)
            if (sgn(y[j]) != 0) m += (x[i] * y[j]) * d_matrix(s, i, j);
    }
    return m;
}

CheckResult check_outer_symmetry(const JordanPair& p) {
    for (int s = 0; s < 2; ++s) {
        const std::size_t ns = p.dim(s), nt = p.dim(1 - s);
        for (std::size_t x = 0; x < ns; ++x)
            for (std::size_t y = 0; y < nt; ++y)
                for (std::size_t z = 0; z < ns; ++z) {
                    const int px = p.parity(s, x), py = p.parity(1 - s, y), pz = p.parity(s, z);
                    SparseVec rhs;
                    sparse_axpy(rhs, sign(px, py) * sign(py, pz) * sign(pz, px), p.triple(s, z, y, x));
                    if (p.triple(s, x, y, z) != rhs)
                        return CheckResult::fail({static_cast<std::size_t>(s), x, y, z}, "outer symmetry fails");
                }
    }
    return CheckResult::ok();
}

CheckResult check_pair_five_linear(const JordanPair& p) {
    for (int s = 0; s < 2; ++s) {
        const int t = 1 - s;
        const std::size_t ns = p.dim(s), nt = p.dim(t);
        // {a, b, w} with w sparse in slot 3, slot 1, or slot 2 (w in V^t)
        auto in3 = [&](std::size_t a, std::size_t b, const SparseVec& w) {
            SparseVec acc;
            for (const auto& [m, c] : w) sparse_axpy(acc, c, p.triple(s, a, b, m));
            return acc;
        };
        auto in1 = [&](const SparseVec& w, std::size_t b, std::size_t c3) {
            SparseVec acc;
            for (const auto& [m, c] : w) sparse_axpy(acc, c, p.triple(s, m, b, c3));
            return acc;
        };
        auto in2 = [&](std::size_t a, const SparseVec& w, std::size_t c3) {
            SparseVec acc;
            for (const auto& [m, c] : w) sparse_axpy(acc, c, p.triple(s, a, m, c3));
            return acc;
        };
        for (std::size_t x = 0; x < ns; ++x)
            for (std::size_t y = 0; y < nt; ++y)
                for (std::size_t u = 0; u < ns; ++u)
                    for (std::size_t v = 0; v < nt; ++v) {
                        const int sg = sign(p.parity(s, x) ^ p.parity(t, y), p.parity(s, u) ^ p.parity(t, v));
                        const SparseVec& vxy = p.triple(t, v, x, y);
                        const SparseVec& xyu = p.triple(s, x, y, u);
                        for (std::size_t w = 0; w < ns; ++w) {
                            SparseVec lhs = in3(x, y, p.triple(s, u, v, w));
                            sparse_axpy(lhs, -1, in1(xyu, v, w));
                            SparseVec rhs = in3(u, v, p.triple(s, x, y, w));
                            sparse_axpy(rhs, -1, in2(u, vxy, w));
                            SparseVec scaled;
                            sparse_axpy(scaled, sg, rhs);
                            if (lhs != scaled)
                                return CheckResult::fail({static_cast<std::size_t>(s), x, y, u, v, w},
                                                         "5-linear identity fails");
                        }
                    }
    }
    return CheckResult::ok();
}

}  // namespace jtkk
