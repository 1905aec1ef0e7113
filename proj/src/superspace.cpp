#include "jtkk/superspace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace jtkk {

std::string to_string(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::jordan: return "jordan";
        case AlgebraKind::lie: return "lie";
        case AlgebraKind::plain: return "plain";
    }
    return "plain";
}

std::string describe(const CheckResult& r) {
    if (r.pass) return "pass";
    std::ostringstream os;
    os << "fail";
    if (r.witness) {
        os << " at (";
        for (std::size_t i = 0; i < r.witness->indices.size(); ++i) os << (i ? "," : "") << r.witness->indices[i];
        os << ")";
        if (!r.witness->detail.empty()) os << ": " << r.witness->detail;
    }
    return os.str();
}

namespace {

int sign(int a, int b) { return (a & b & 1) ? -1 : 1; }

void add_scaled(SparseVec& acc, const Rational& s, const SparseVec& v) { sparse_axpy(acc, s, v); }

}  // namespace

SuperAlgebra SuperAlgebra::make(std::string name, AlgebraKind kind, std::vector<int> parity,
                                std::optional<std::vector<int>> zdegree, const std::vector<ProductEntry>& products) {
    const std::size_t n = parity.size();
    std::vector<Vec> dense(n * n);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& e : products) {
        if (e.i >= n || e.j >= n || e.k >= n)
            throw AlgebraError("product entry index out of range", {e.i, e.j, e.k});
        if (!seen.emplace(e.i, e.j, e.k).second)
            throw AlgebraError("duplicate product entry", {e.i, e.j, e.k});
        auto& d = dense[e.i * n + e.j];
        if (d.empty()) d.resize(n);
        d[e.k] = e.coeff;
    }
    std::vector<SparseVec> table(n * n);
    for (std::size_t t = 0; t < n * n; ++t)
        if (!dense[t].empty()) table[t] = to_sparse(dense[t]);
    return from_table(std::move(name), kind, std::move(parity), std::move(zdegree), std::move(table));
}

SuperAlgebra SuperAlgebra::from_table(std::string name, AlgebraKind kind, std::vector<int> parity,
                                      std::optional<std::vector<int>> zdegree, std::vector<SparseVec> table) {
    const std::size_t n = parity.size();
    for (int p : parity)
        if (p != 0 && p != 1) throw AlgebraError("parity values must be 0 or 1");
    if (zdegree && zdegree->size() != n) throw AlgebraError("zdegree length differs from dimension");
    if (table.size() != n * n) throw AlgebraError("product table has wrong size");
    SuperAlgebra a;
    a.name_ = std::move(name);
    a.kind_ = kind;
    a.parity_ = std::move(parity);
    a.zdegree_ = std::move(zdegree);
    a.table_ = std::move(table);
    a.verify_homogeneity();
    return a;
}

void SuperAlgebra::verify_homogeneity() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : product(i, j)) {
                if (k >= n) throw AlgebraError("product entry index out of range", {i, j, k});
                if (sgn(c) == 0) throw AlgebraError("stored zero coefficient", {i, j, k});
                if (parity_[k] != ((parity_[i] + parity_[j]) & 1))
                    throw AlgebraError("inhomogeneous product entry (parity)", {i, j, k});
                if (zdegree_ && (*zdegree_)[k] != (*zdegree_)[i] + (*zdegree_)[j])
                    throw AlgebraError("inhomogeneous product entry (Z-degree)", {i, j, k});
            }
}

Vec SuperAlgebra::product(const Vec& x, const Vec& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("product: dimension mismatch");
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            Rational s = x[i] * y[j];
            for (const auto& [k, c] : product(i, j)) r[k] += s * c;
        }
    }
    return r;
}

Vec SuperAlgebra::left_product(std::size_t i, const Vec& y) const {
    const std::size_t n = dim();
    if (y.size() != n) throw std::invalid_argument("left_product: dimension mismatch");
    Vec r(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(y[j]) == 0) continue;
        for (const auto& [k, c] : product(i, j)) r[k] += y[j] * c;
    }
    return r;
}

SparseVec SuperAlgebra::left_product(std::size_t i, const SparseVec& y) const {
    SparseVec acc;
    for (const auto& [j, c] : y) add_scaled(acc, c, product(i, j));
    return acc;
}

Matrix SuperAlgebra::left_matrix(std::size_t i) const {
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : product(i, j)) m(k, j) = c;
    return m;
}

Matrix SuperAlgebra::left_matrix(const Vec& x) const {
    const std::size_t n = dim();
    if (x.size() != n) throw std::invalid_argument("left_matrix: dimension mismatch");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : product(i, j)) m(k, j) += x[i] * c;
    }
    return m;
}

std::vector<ProductEntry> SuperAlgebra::entries() const {
    std::vector<ProductEntry> out;
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : product(i, j)) out.push_back({i, j, k, c});
    return out;
}

SuperAlgebra SuperAlgebra::renamed(std::string name) const {
    SuperAlgebra a = *this;
    a.name_ = std::move(name);
    return a;
}

SuperAlgebra SuperAlgebra::with_kind(AlgebraKind k) const {
    SuperAlgebra a = *this;
    a.kind_ = k;
    return a;
}

SuperAlgebra SuperAlgebra::with_zdegrees(std::optional<std::vector<int>> z) const {
    return from_table(name_, kind_, parity_, std::move(z), table_);
}

std::optional<int> SuperAlgebra::vector_parity(const Vec& v) const {
    std::optional<int> p;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        if (p && *p != parity_.at(i)) return std::nullopt;
        p = parity_.at(i);
    }
    return p;
}

// ------------------------------------------------------------ operators

Matrix supercommutator(const Matrix& a, int pa, const Matrix& b, int pb) {
    Matrix ab = a * b;
    Matrix ba = b * a;
    if (sign(pa, pb) < 0) return ab + ba;
    return ab - ba;
}

GradedOperator supercommutator(const GradedOperator& a, const GradedOperator& b) {
    GradedOperator r{supercommutator(a.matrix, a.parity, b.matrix, b.parity), (a.parity + b.parity) & 1, std::nullopt};
    if (a.zshift && b.zshift) r.zshift = *a.zshift + *b.zshift;
    return r;
}

bool is_homogeneous_operator(const SuperAlgebra& a, const Matrix& m, int parity, std::optional<int> zshift) {
    const std::size_t n = a.dim();
    if (m.rows() != n || m.cols() != n) return false;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (sgn(m(r, c)) == 0) continue;
            if (a.parity(r) != ((a.parity(c) + parity) & 1)) return false;
            if (zshift && a.zdegree(r) != a.zdegree(c) + *zshift) return false;
        }
    return true;
}

std::optional<int> operator_parity(const std::vector<int>& parity, const Matrix& m) {
    std::optional<int> p;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (sgn(m(r, c)) == 0) continue;
            int q = (parity[r] + parity[c]) & 1;
            if (p && *p != q) return std::nullopt;
            p = q;
        }
    return p;
}

// --------------------------------------------------------------- checks

CheckResult check_supercommutative(const SuperAlgebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SparseVec lhs = a.product(i, j);
            SparseVec rhs;
            add_scaled(rhs, sign(a.parity(i), a.parity(j)), a.product(j, i));
            if (lhs != rhs) return CheckResult::fail({i, j}, "x y != (-1)^{|x||y|} y x");
        }
    return CheckResult::ok();
}

CheckResult check_superanticommutative(const SuperAlgebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SparseVec lhs = a.product(i, j);
            SparseVec rhs;
            add_scaled(rhs, -sign(a.parity(i), a.parity(j)), a.product(j, i));
            if (lhs != rhs) return CheckResult::fail({i, j}, "[x,y] != -(-1)^{|x||y|} [y,x]");
        }
    return CheckResult::ok();
}

CheckResult check_super_jacobi(const SuperAlgebra& a) {
    const std::size_t n = a.dim();
    auto nested = [&](std::size_t x, std::size_t y, std::size_t z) { return a.left_product(x, a.product(y, z)); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const int pi = a.parity(i), pj = a.parity(j), pk = a.parity(k);
                SparseVec acc;
                add_scaled(acc, sign(pi, pk), nested(i, j, k));
                add_scaled(acc, sign(pj, pi), nested(j, k, i));
                add_scaled(acc, sign(pk, pj), nested(k, i, j));
                if (!acc.empty()) return CheckResult::fail({i, j, k}, "super-Jacobi sum is nonzero");
            }
    return CheckResult::ok();
}

CheckResult check_lie(const SuperAlgebra& a) {
    if (auto r = check_superanticommutative(a); !r) return r;
    return check_super_jacobi(a);
}

// ------------------------------------------------------------ structure

std::map<std::pair<int, int>, std::size_t> graded_dims(const SuperAlgebra& a) {
    std::map<std::pair<int, int>, std::size_t> m;
    for (std::size_t i = 0; i < a.dim(); ++i) ++m[{a.zdegree(i), a.parity(i)}];
    return m;
}

std::pair<std::size_t, std::size_t> parity_dims(const SuperAlgebra& a) {
    std::pair<std::size_t, std::size_t> d{0, 0};
    for (int p : a.parities()) (p ? d.second : d.first)++;
    return d;
}

Subspace center(const SuperAlgebra& a) {
    // Unknown x; equations (x b_j)_k = 0 and (b_j x)_k = 0.
    const std::size_t n = a.dim();
    RowReducer rr(n);
    for (std::size_t j = 0; j < n && !rr.full(); ++j) {
        std::vector<SparseVec> left(n), right(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& [k, c] : a.product(i, j)) left[k].emplace_back(i, c);
            for (const auto& [k, c] : a.product(j, i)) right[k].emplace_back(i, c);
        }
        for (auto& r : left) rr.add(r);
        for (auto& r : right) rr.add(r);
    }
    return rr.kernel();
}

Subspace derived(const SuperAlgebra& a) {
    const std::size_t n = a.dim();
    RowReducer rr(n);
    for (std::size_t i = 0; i < n && !rr.full(); ++i)
        for (std::size_t j = 0; j < n && !rr.full(); ++j) rr.add(a.product(i, j));
    return rr.row_space();
}

bool is_graded_subspace(const SuperAlgebra& a, const Subspace& s) {
    for (const auto& v : s.basis()) {
        std::map<std::pair<int, int>, Vec> parts;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (sgn(v[i]) == 0) continue;
            auto& p = parts[{a.zdegree(i), a.parity(i)}];
            if (p.empty()) p.resize(v.size());
            p[i] = v[i];
        }
        if (parts.size() <= 1) continue;
        for (const auto& [key, part] : parts)
            if (!s.contains(part)) return false;
    }
    return true;
}

namespace {

// Homogeneous basis of a graded subspace: RREF vectors are homogeneous
// because grading components have disjoint coordinate supports.
void require_homogeneous_basis(const SuperAlgebra& a, const Subspace& s, const char* what) {
    if (!is_graded_subspace(a, s)) throw AlgebraError(std::string(what) + " is not a graded subspace");
    for (std::size_t b = 0; b < s.dim(); ++b) {
        std::optional<std::pair<int, int>> g;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (sgn(s.basis()[b][i]) == 0) continue;
            std::pair<int, int> gi{a.zdegree(i), a.parity(i)};
            if (g && *g != gi) throw AlgebraError(std::string(what) + " basis is not homogeneous", {b});
            g = gi;
        }
    }
}

}  // namespace

SuperAlgebra quotient_algebra(const SuperAlgebra& a, const Subspace& ideal, std::string name) {
    const std::size_t n = a.dim();
    if (ideal.ambient_dim() != n) throw AlgebraError("ideal ambient dimension mismatch");
    if (!is_graded_subspace(a, ideal)) throw AlgebraError("ideal is not a graded subspace");
    for (std::size_t b = 0; b < ideal.dim(); ++b)
        for (std::size_t i = 0; i < n; ++i) {
            Vec ei = unit_vec(n, i);
            if (!ideal.contains(a.product(ei, ideal.basis()[b])) || !ideal.contains(a.product(ideal.basis()[b], ei)))
                throw AlgebraError("subspace is not a two-sided ideal", {i, b});
        }
    std::vector<char> is_pivot(n, 0);
    for (std::size_t p : ideal.pivots()) is_pivot[p] = 1;
    std::vector<std::size_t> keep;
    std::vector<long> new_index(n, -1);
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) {
            new_index[i] = static_cast<long>(keep.size());
            keep.push_back(i);
        }
    const std::size_t m = keep.size();
    std::vector<int> parity(m);
    std::optional<std::vector<int>> z;
    if (a.zdegrees()) z.emplace(m);
    for (std::size_t t = 0; t < m; ++t) {
        parity[t] = a.parity(keep[t]);
        if (z) (*z)[t] = a.zdegree(keep[t]);
    }
    std::vector<SparseVec> table(m * m);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
            Vec v = to_dense(a.product(keep[s], keep[t]), n);
            for (std::size_t b = 0; b < ideal.dim(); ++b) {
                Rational c = v[ideal.pivots()[b]];
                if (sgn(c) != 0) axpy(v, -c, ideal.basis()[b]);
            }
            SparseVec out;
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(v[k]) != 0) out.emplace_back(static_cast<std::size_t>(new_index[k]), v[k]);
            table[s * m + t] = std::move(out);
        }
    if (name.empty()) name = a.name() + "/I";
    return SuperAlgebra::from_table(std::move(name), a.kind(), std::move(parity), std::move(z), std::move(table));
}

SuperAlgebra subalgebra(const SuperAlgebra& a, const Subspace& s, std::string name) {
    const std::size_t n = a.dim();
    if (s.ambient_dim() != n) throw AlgebraError("subspace ambient dimension mismatch");
    require_homogeneous_basis(a, s, "subspace");
    const std::size_t m = s.dim();
    std::vector<int> parity(m);
    std::optional<std::vector<int>> z;
    if (a.zdegrees()) z.emplace(m);
    for (std::size_t b = 0; b < m; ++b) {
        std::size_t p = s.pivots()[b];
        parity[b] = a.parity(p);
        if (z) (*z)[b] = a.zdegree(p);
    }
    std::vector<SparseVec> table(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto c = s.coordinates(a.product(s.basis()[i], s.basis()[j]));
            if (!c) throw AlgebraError("subspace is not closed under the product", {i, j});
            table[i * m + j] = to_sparse(*c);
        }
    if (name.empty()) name = a.name() + "|sub";
    return SuperAlgebra::from_table(std::move(name), a.kind(), std::move(parity), std::move(z), std::move(table));
}

SuperAlgebra operator_lie_algebra(std::string name, const std::vector<Matrix>& ops, const std::vector<int>& parity,
                                  std::optional<std::vector<int>> zdegree) {
    const std::size_t m = ops.size();
    if (parity.size() != m) throw AlgebraError("operator_lie_algebra: parity length mismatch");
    if (m == 0) return SuperAlgebra::from_table(std::move(name), AlgebraKind::lie, {}, std::move(zdegree), {});
    const std::size_t r = ops[0].rows(), c = ops[0].cols();
    std::vector<Vec> flat;
    for (const auto& op : ops) flat.push_back(op.flat());
    Subspace span = Subspace::span(r * c, flat);
    if (span.dim() != m) throw AlgebraError("operator_lie_algebra: operators are linearly dependent");
    // Column b holds the echelon coordinates of ops[b]; its inverse maps
    // echelon coordinates back to the given operators.
    Matrix to_echelon(m, m);
    for (std::size_t b = 0; b < m; ++b) {
        Vec co = *span.coordinates(flat[b]);
        for (std::size_t t = 0; t < m; ++t) to_echelon(t, b) = co[t];
    }
    Matrix back(m, m);
    for (std::size_t t = 0; t < m; ++t) {
        Vec col = *solve(to_echelon, unit_vec(m, t));
        for (std::size_t b = 0; b < m; ++b) back(b, t) = col[b];
    }
    std::vector<SparseVec> table(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Matrix br = supercommutator(ops[i], parity[i], ops[j], parity[j]);
            auto co = span.coordinates(br.flat());
            if (!co) throw AlgebraError("operator_lie_algebra: operators not closed under bracket", {i, j});
            table[i * m + j] = to_sparse(back.apply(*co));
        }
    return SuperAlgebra::from_table(std::move(name), AlgebraKind::lie, parity, std::move(zdegree), std::move(table));
}

}  // namespace jtkk
