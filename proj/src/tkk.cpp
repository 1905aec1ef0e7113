#include "jtkk/tkk.hpp"

#include <functional>
#include <stdexcept>

namespace jtkk {

namespace {

int sg(int e) { return (e & 1) ? -1 : 1; }

SparseVec scaled(const SparseVec& v, const Rational& s) {
    SparseVec out;
    if (s == 0) return out;
    out.reserve(v.size());
    for (const auto& [i, c] : v) out.emplace_back(i, s * c);
    return out;
}

// Adds s * dense block `v` placed at `offset`.
void add_block(SparseVec& acc, const Rational& s, const Vec& v, std::size_t offset) {
    SparseVec t;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) t.emplace_back(offset + i, v[i]);
    sparse_axpy(acc, s, t);
}

Vec coords_or_throw(const Subspace& s, const Vec& v, const std::string& what) {
    auto c = s.coordinates(v);
    if (!c) throw AlgebraError(what);
    return *c;
}

// Coordinates with respect to an arbitrary independent list.
class BasisCoords {
public:
    explicit BasisCoords(const std::vector<Vec>& basis, std::size_t ambient)
        : space_(Subspace::span(ambient, basis)) {
        std::size_t k = basis.size();
        Matrix a(k, k);
        for (std::size_t l = 0; l < k; ++l) {
            Vec w = *space_.coordinates(basis[l]);
            for (std::size_t r = 0; r < k; ++r) a(r, l) = w[r];
        }
        back_ = Matrix(k, k);
        for (std::size_t r = 0; r < k; ++r) {
            auto col = solve(a, unit_vec(k, r));
            for (std::size_t l = 0; l < k; ++l) back_(l, r) = (*col)[l];
        }
    }
    std::optional<Vec> coords(const Vec& v) const {
        auto w = space_.coordinates(v);
        if (!w) return std::nullopt;
        return back_.apply(*w);
    }

private:
    Subspace space_;
    Matrix back_;
};

using Natural = std::function<std::optional<SparseVec>(std::size_t, std::size_t)>;

// Fills the table from the oriented brackets; missing orientations are
// recovered from super-antisymmetry.
SuperAlgebra build_lie(std::string name, const std::vector<int>& parity, const std::vector<int>& zdeg,
                       const Natural& natural) {
    std::size_t d = parity.size();
    std::vector<SparseVec> table(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (auto v = natural(i, j)) {
                table[i * d + j] = std::move(*v);
            } else if (auto w = natural(j, i)) {
                table[i * d + j] = scaled(*w, Rational(-sg(parity[i] * parity[j])));
            } else {
                throw std::logic_error("bracket orientation missing");
            }
        }
    return SuperAlgebra::from_table(std::move(name), AlgebraKind::lie, parity, zdeg, std::move(table));
}

enum class Block { minus, zero, plus };

std::vector<std::size_t> indices_of_degree(const SuperAlgebra& g, int deg) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (g.zdegree(i) == deg) out.push_back(i);
    return out;
}

Matrix left_product_block(const SuperAlgebra& g, std::size_t x, const std::vector<std::size_t>& from,
                          const std::vector<std::size_t>& to) {
    std::vector<long> pos(g.dim(), -1);
    for (std::size_t r = 0; r < to.size(); ++r) pos[to[r]] = static_cast<long>(r);
    Matrix m(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c)
        for (const auto& [k, v] : g.product(x, from[c])) {
            if (pos[k] < 0) throw AlgebraError("bracket leaves the expected degree", {x, from[c]});
            m(static_cast<std::size_t>(pos[k]), c) = v;
        }
    return m;
}

}  // namespace

std::string to_string(Origin o) {
    switch (o) {
        case Origin::vminus: return "vminus";
        case Origin::op0: return "op0";
        case Origin::vplus: return "vplus";
        case Origin::kantor_p: return "kantorP";
        case Origin::kantor_lp: return "kantorLP";
        case Origin::formal_l: return "formalL";
        case Origin::h_tensor: return "hV";
    }
    return "?";
}

// ------------------------------------------------------------ Kantor

namespace {

struct KantorParts {
    OperatorSpace istr;
    std::vector<Vec> plus;        // tensors, index (x*n+y)*n+k
    std::vector<int> plus_parity;
    std::vector<Origin> plus_origin;
    Vec p_tensor;
    std::vector<Vec> lp_tensor;   // [L_{b_a}, P]
};

std::size_t tix(std::size_t n, std::size_t x, std::size_t y, std::size_t k) { return (x * n + y) * n + k; }

KantorParts kantor_parts(const SuperAlgebra& v) {
    std::size_t n = v.dim();
    KantorParts parts;
    parts.istr = istr_algebra(v);
    parts.p_tensor = zero_vec(n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (const auto& [k, c] : v.product(x, y)) parts.p_tensor[tix(n, x, y, k)] = c;
    for (std::size_t a = 0; a < n; ++a) {
        Vec t = zero_vec(n * n * n);
        Vec ea = unit_vec(n, a);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                Vec ex = unit_vec(n, x), ey = unit_vec(n, y);
                Vec r = v.product(ea, v.product(ex, ey));
                axpy(r, Rational(-1), v.product(v.product(ea, ex), ey));
                axpy(r, Rational(-sg(v.parity(x) * v.parity(y))), v.product(v.product(ea, ey), ex));
                for (std::size_t k = 0; k < n; ++k) t[tix(n, x, y, k)] = r[k];
            }
        parts.lp_tensor.push_back(std::move(t));
    }
    RowReducer red(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        if (red.add(parts.lp_tensor[a])) {
            parts.plus.push_back(parts.lp_tensor[a]);
            parts.plus_parity.push_back(v.parity(a));
            parts.plus_origin.push_back(Origin::kantor_lp);
        }
    if (red.add(parts.p_tensor)) {
        parts.plus.push_back(parts.p_tensor);
        parts.plus_parity.push_back(0);
        parts.plus_origin.push_back(Origin::kantor_p);
    }
    return parts;
}

}  // namespace

TkkAlgebra kantor(const JordanAlgebra& jv) {
    const SuperAlgebra& v = jv.base();
    std::size_t n = v.dim();
    KantorParts parts = kantor_parts(v);
    const auto& istr = parts.istr;
    std::size_t m = istr.dim(), q = parts.plus.size();
    BasisCoords plus_coords(parts.plus, n * n * n);
    auto ops = istr.ops();

    TkkAlgebra out;
    out.source = "Kan(" + v.name() + ")";
    out.n_minus = n;
    out.n_zero = m;
    out.n_plus = q;
    std::vector<int> parity, zdeg;
    for (std::size_t i = 0; i < n; ++i) {
        parity.push_back(v.parity(i));
        zdeg.push_back(-1);
        out.origin.push_back(Origin::vminus);
    }
    for (std::size_t k = 0; k < m; ++k) {
        parity.push_back(istr.basis_parity(k));
        zdeg.push_back(0);
        out.origin.push_back(Origin::op0);
    }
    for (std::size_t l = 0; l < q; ++l) {
        parity.push_back(parts.plus_parity[l]);
        zdeg.push_back(1);
        out.origin.push_back(parts.plus_origin[l]);
    }
    auto block = [&](std::size_t i) { return i < n ? Block::minus : (i < n + m ? Block::zero : Block::plus); };

    Natural natural = [&](std::size_t i, std::size_t j) -> std::optional<SparseVec> {
        Block bi = block(i), bj = block(j);
        SparseVec r;
        if ((bi == Block::minus && bj == Block::minus) || (bi == Block::plus && bj == Block::plus)) return r;
        if (bi == Block::zero && bj == Block::zero) {
            std::size_t k = i - n, l = j - n;
            Matrix c = supercommutator(ops[k], istr.basis_parity(k), ops[l], istr.basis_parity(l));
            add_block(r, 1, coords_or_throw(istr.space, c.flat(), "istr not closed"), n);
            return r;
        }
        if (bi == Block::zero && bj == Block::minus) {
            add_block(r, 1, ops[i - n].column(j), 0);
            return r;
        }
        if (bi == Block::plus && bj == Block::minus) {
            const Vec& t = parts.plus[i - n - m];
            Matrix o(n, n);
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t k = 0; k < n; ++k) o(k, y) = t[tix(n, j, y, k)];
            add_block(r, 1, coords_or_throw(istr.space, o.flat(), "[g+, g-] leaves istr"), n);
            return r;
        }
        if (bi == Block::zero && bj == Block::plus) {
            std::size_t k = i - n, l = j - n - m;
            const Matrix& a = ops[k];
            const Vec& b = parts.plus[l];
            int s = sg(istr.basis_parity(k) * parts.plus_parity[l]);
            Vec t = zero_vec(n * n * n);
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    int sxy = sg(v.parity(x) * v.parity(y));
                    for (std::size_t kk = 0; kk < n; ++kk) {
                        Rational acc = 0;
                        for (std::size_t z = 0; z < n; ++z) {
                            acc += a(kk, z) * b[tix(n, x, y, z)];
                            if (a(z, x) != 0) acc -= s * a(z, x) * b[tix(n, z, y, kk)];
                            if (a(z, y) != 0) acc -= s * sxy * a(z, y) * b[tix(n, z, x, kk)];
                        }
                        t[tix(n, x, y, kk)] = acc;
                    }
                }
            auto c = plus_coords.coords(t);
            if (!c) throw AlgebraError("[g0, g+] leaves g+");
            add_block(r, 1, *c, n + m);
            return r;
        }
        return std::nullopt;
    };
    out.lie = build_lie(out.source, parity, zdeg, natural);
    return out;
}

CheckResult check_kantor_relations(const JordanAlgebra& jv, const TkkAlgebra& kan) {
    const SuperAlgebra& v = jv.base();
    const SuperAlgebra& g = kan.lie;
    std::size_t n = v.dim(), d = g.dim();
    KantorParts parts = kantor_parts(v);
    BasisCoords plus_coords(parts.plus, n * n * n);
    auto embed_plus = [&](const Vec& tensor) {
        Vec out = zero_vec(d);
        auto c = plus_coords.coords(tensor);
        if (!c) throw AlgebraError("tensor outside g+");
        for (std::size_t l = 0; l < c->size(); ++l) out[kan.plus(l)] = (*c)[l];
        return out;
    };
    auto embed_zero = [&](const Matrix& m) {
        Vec out = zero_vec(d);
        auto c = parts.istr.space.coordinates(m.flat());
        if (!c) throw AlgebraError("operator outside istr");
        for (std::size_t k = 0; k < c->size(); ++k) out[kan.zero(k)] = (*c)[k];
        return out;
    };
    auto embed_minus = [&](const Vec& x) {
        Vec out = zero_vec(d);
        for (std::size_t i = 0; i < n; ++i) out[kan.minus(i)] = x[i];
        return out;
    };
    auto lp = [&](const Vec& y) {  // [L_y, P]
        Vec t = zero_vec(n * n * n);
        for (std::size_t a = 0; a < n; ++a)
            if (y[a] != 0) axpy(t, y[a], parts.lp_tensor[a]);
        return embed_plus(t);
    };
    Vec p = embed_plus(parts.p_tensor);
    std::vector<Vec> l, lpv;
    for (std::size_t a = 0; a < n; ++a) {
        l.push_back(embed_zero(jv.l(a)));
        lpv.push_back(embed_plus(parts.lp_tensor[a]));
    }
    auto br = [&](const Vec& x, const Vec& y) { return g.product(x, y); };
    auto e = [&](std::size_t i) { return unit_vec(n, i); };

    for (std::size_t x = 0; x < n; ++x)
        if (br(p, embed_minus(e(x))) != l[x]) return CheckResult::fail({x}, "[P,x] != L_x");
    for (std::size_t a = 0; a < n; ++a) {
        if (br(l[a], p) != lpv[a]) return CheckResult::fail({a}, "bracket of L_a with P differs from [L_a,P]");
        for (std::size_t x = 0; x < n; ++x) {
            Vec rhs = br(l[a], l[x]);
            axpy(rhs, Rational(-1), embed_zero(l_matrix(v, v.product(e(a), e(x)))));
            if (br(lpv[a], embed_minus(e(x))) != rhs) return CheckResult::fail({a, x}, "[[L_a,P],x] relation");
        }
        for (std::size_t b = 0; b < n; ++b) {
            Vec lhs = br(l[a], lpv[b]);
            Vec rhs = Rational(-1) * lp(v.product(e(a), e(b)));
            if (lhs != rhs) return CheckResult::fail({a, b}, "[L_a,[L_b,P]] relation");
            Vec lab = br(l[a], l[b]);
            if (!is_zero(br(lab, p))) return CheckResult::fail({a, b}, "[[L_a,L_b],P] != 0");
            for (std::size_t c = 0; c < n; ++c) {
                Vec w = v.product(e(a), v.product(e(c), e(b)));
                axpy(w, Rational(-1), v.product(v.product(e(a), e(c)), e(b)));
                Vec rhs2 = Rational(sg(v.parity(b) * v.parity(c))) * lp(w);
                if (br(lab, lpv[c]) != rhs2) return CheckResult::fail({a, b, c}, "[[L_a,L_b],[L_c,P]] relation");
            }
        }
    }
    if (jv.unital()) {
        Vec t = zero_vec(n * n * n);
        for (std::size_t a = 0; a < n; ++a)
            if ((*jv.unit())[a] != 0) axpy(t, (*jv.unit())[a], parts.lp_tensor[a]);
        if (parts.p_tensor != Rational(-1) * t) return CheckResult::fail({}, "P != -[L_e,P]");
    }
    return CheckResult::ok();
}

// ------------------------------------------------------------ Koecher

TkkAlgebra koecher_with(const JordanPair& p, const OperatorSpace& zero, std::string source) {
    std::size_t np = p.dim(0), nm = p.dim(1), m = zero.dim();
    auto ops = zero.pair_ops();
    TkkAlgebra out;
    out.source = std::move(source);
    out.n_minus = nm;
    out.n_zero = m;
    out.n_plus = np;
    std::vector<int> parity, zdeg;
    for (std::size_t i = 0; i < nm; ++i) {
        parity.push_back(p.parity(1, i));
        zdeg.push_back(-1);
        out.origin.push_back(Origin::vminus);
    }
    for (std::size_t k = 0; k < m; ++k) {
        parity.push_back(ops[k].parity);
        zdeg.push_back(0);
        out.origin.push_back(Origin::op0);
    }
    for (std::size_t i = 0; i < np; ++i) {
        parity.push_back(p.parity(0, i));
        zdeg.push_back(1);
        out.origin.push_back(Origin::vplus);
    }
    auto block = [&](std::size_t i) { return i < nm ? Block::minus : (i < nm + m ? Block::zero : Block::plus); };
    Natural natural = [&](std::size_t i, std::size_t j) -> std::optional<SparseVec> {
        Block bi = block(i), bj = block(j);
        SparseVec r;
        if ((bi == Block::minus && bj == Block::minus) || (bi == Block::plus && bj == Block::plus)) return r;
        if (bi == Block::zero && bj == Block::zero) {
            auto c = supercommutator(ops[i - nm], ops[j - nm]);
            add_block(r, 1, coords_or_throw(zero.space, flatten(c), out.source + ": g0 not closed"), nm);
            return r;
        }
        if (bi == Block::zero && bj == Block::minus) {
            add_block(r, 1, ops[i - nm].minus.column(j), 0);
            return r;
        }
        if (bi == Block::zero && bj == Block::plus) {
            add_block(r, 1, ops[i - nm].plus.column(j - nm - m), nm + m);
            return r;
        }
        if (bi == Block::plus && bj == Block::minus) {
            auto dxy = pair_inner(p, i - nm - m, j);
            add_block(r, 1, coords_or_throw(zero.space, flatten(dxy), out.source + ": D_{x,u} outside g0"), nm);
            return r;
        }
        return std::nullopt;
    };
    out.lie = build_lie(out.source, parity, zdeg, natural);
    return out;
}

TkkAlgebra koecher(const JordanPair& p) { return koecher_with(p, pair_inn(p), "Ko"); }
TkkAlgebra koecher(const JordanAlgebra& v) {
    return koecher_with(JordanPair::doubled(v.base()), pair_inn(JordanPair::doubled(v.base())), "Ko(" + v.name() + ")");
}
TkkAlgebra koecher_tilde(const JordanPair& p) { return koecher_with(p, pair_der(p), "Ko~"); }
TkkAlgebra koecher_tilde(const JordanAlgebra& v) {
    JordanPair p = JordanPair::doubled(v.base());
    return koecher_with(p, pair_der(p), "Ko~(" + v.name() + ")");
}

// ------------------------------------------------------------ Tits

namespace {

// sl2 structure constants in (e, f, h).
SparseVec sl2_bracket(std::size_t a, std::size_t b) {
    static const SparseVec table[3][3] = {
        {{}, {{2, Rational(1)}}, {{0, Rational(-2)}}},
        {{{2, Rational(-1)}}, {}, {{1, Rational(2)}}},
        {{{0, Rational(2)}}, {{1, Rational(-2)}}, {}},
    };
    return table[a][b];
}

}  // namespace

Matrix sl2_killing() {
    std::array<Matrix, 3> ad;
    for (std::size_t a = 0; a < 3; ++a) {
        ad[a] = Matrix(3, 3);
        for (std::size_t b = 0; b < 3; ++b)
            for (const auto& [k, c] : sl2_bracket(a, b)) ad[a](k, b) = c;
    }
    Matrix kil(3, 3);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            Matrix prod = ad[a] * ad[b];
            Rational tr = 0;
            for (std::size_t i = 0; i < 3; ++i) tr += prod(i, i);
            kil(a, b) = tr / 2;
        }
    return kil;
}

TitsData make_tits_data(const SuperAlgebra& v, OperatorSpace d) {
    if (!is_closed(d)) throw AlgebraError("derivation container not closed under bracket");
    if (!d.space.contains(inn_algebra(v).space)) throw AlgebraError("derivation container misses Inn(V)");
    if (!der_algebra(v).space.contains(d.space)) throw AlgebraError("derivation container leaves Der(V)");
    return {std::move(d), sl2_killing()};
}

TitsData inn_data(const SuperAlgebra& v) { return make_tits_data(v, inn_algebra(v)); }
TitsData der_data(const SuperAlgebra& v) { return make_tits_data(v, der_algebra(v)); }

TkkAlgebra tits(const JordanAlgebra& jv, const TitsData& data) {
    const SuperAlgebra& v = jv.base();
    std::size_t n = v.dim(), m = data.d.dim();
    auto ops = data.d.ops();
    TkkAlgebra out;
    out.source = "Ti(" + v.name() + "," + data.d.label + ",sl2)";
    out.n_minus = n;
    out.n_zero = m + n;
    out.n_plus = n;
    std::vector<int> parity, zdeg;
    auto push = [&](int p, int z, Origin o) {
        parity.push_back(p);
        zdeg.push_back(z);
        out.origin.push_back(o);
    };
    for (std::size_t i = 0; i < n; ++i) push(v.parity(i), -1, Origin::vminus);
    for (std::size_t k = 0; k < m; ++k) push(data.d.basis_parity(k), 0, Origin::op0);
    for (std::size_t i = 0; i < n; ++i) push(v.parity(i), 0, Origin::h_tensor);
    for (std::size_t i = 0; i < n; ++i) push(v.parity(i), 1, Origin::vplus);

    // y index: 0 = e, 1 = f, 2 = h
    auto tensor_of = [&](std::size_t i) -> std::optional<std::pair<std::size_t, std::size_t>> {
        if (i < n) return std::pair{std::size_t{1}, i};
        if (i < n + m) return std::nullopt;
        if (i < 2 * n + m) return std::pair{std::size_t{2}, i - n - m};
        return std::pair{std::size_t{0}, i - 2 * n - m};
    };
    auto tensor_index = [&](std::size_t y, std::size_t a) {
        return y == 1 ? a : (y == 2 ? n + m + a : 2 * n + m + a);
    };
    std::vector<Matrix> l;
    for (std::size_t i = 0; i < n; ++i) l.push_back(jv.l(i));

    Natural natural = [&](std::size_t i, std::size_t j) -> std::optional<SparseVec> {
        auto ti = tensor_of(i), tj = tensor_of(j);
        SparseVec r;
        if (!ti && !tj) {
            std::size_t k = i - n, q = j - n;
            Matrix c = supercommutator(ops[k], data.d.basis_parity(k), ops[q], data.d.basis_parity(q));
            add_block(r, 1, coords_or_throw(data.d.space, c.flat(), "D not closed"), n);
            return r;
        }
        if (!ti && tj) {
            auto [y, a] = *tj;
            Vec img = ops[i - n].column(a);
            for (std::size_t b = 0; b < n; ++b)
                if (img[b] != 0) r.emplace_back(tensor_index(y, b), img[b]);
            std::sort(r.begin(), r.end(), [](const auto& x, const auto& z) { return x.first < z.first; });
            return r;
        }
        if (ti && tj) {
            auto [y, a] = *ti;
            auto [y2, b] = *tj;
            const Rational& kappa = data.killing(y, y2);
            if (kappa != 0) {
                Matrix c = supercommutator(l[a], v.parity(a), l[b], v.parity(b));
                add_block(r, kappa, coords_or_throw(data.d.space, c.flat(), "[L_a,L_b] outside D"), n);
            }
            for (const auto& [yy, cy] : sl2_bracket(y, y2))
                for (const auto& [k, c] : v.product(a, b)) {
                    SparseVec t{{tensor_index(yy, k), cy * c}};
                    sparse_axpy(r, 1, t);
                }
            return r;
        }
        return std::nullopt;
    };
    out.lie = build_lie(out.source, parity, zdeg, natural);
    return out;
}

TkkAlgebra koecher_d(const JordanAlgebra& jv, const TitsData& data) {
    const SuperAlgebra& v = jv.base();
    std::size_t n = v.dim(), m = data.d.dim();
    auto ops = data.d.ops();
    TkkAlgebra out;
    out.source = "Ko_" + data.d.label + "(" + v.name() + ")";
    out.n_minus = n;
    out.n_zero = m + n;
    out.n_plus = n;
    std::vector<int> parity, zdeg;
    auto push = [&](int p, int z, Origin o) {
        parity.push_back(p);
        zdeg.push_back(z);
        out.origin.push_back(o);
    };
    for (std::size_t i = 0; i < n; ++i) push(v.parity(i), -1, Origin::vminus);
    for (std::size_t k = 0; k < m; ++k) push(data.d.basis_parity(k), 0, Origin::op0);
    for (std::size_t i = 0; i < n; ++i) push(v.parity(i), 0, Origin::formal_l);
    for (std::size_t i = 0; i < n; ++i) push(v.parity(i), 1, Origin::vplus);
    const std::size_t U = 0, D = n, L = n + m, X = 2 * n + m;
    enum Kind { ku, kd, kl, kx };
    auto kind = [&](std::size_t i) { return i < D ? ku : (i < L ? kd : (i < X ? kl : kx)); };
    std::vector<Matrix> l;
    for (std::size_t i = 0; i < n; ++i) l.push_back(jv.l(i));
    auto inn_coords = [&](std::size_t a, std::size_t b) {
        Matrix c = supercommutator(l[a], v.parity(a), l[b], v.parity(b));
        return coords_or_throw(data.d.space, c.flat(), "[L_a,L_b] outside D");
    };

    Natural natural = [&](std::size_t i, std::size_t j) -> std::optional<SparseVec> {
        Kind ki = kind(i), kj = kind(j);
        SparseVec r;
        if ((ki == ku && kj == ku) || (ki == kx && kj == kx)) return r;
        if (ki == kd && kj == kd) {
            std::size_t a = i - D, b = j - D;
            Matrix c = supercommutator(ops[a], data.d.basis_parity(a), ops[b], data.d.basis_parity(b));
            add_block(r, 1, coords_or_throw(data.d.space, c.flat(), "D not closed"), D);
            return r;
        }
        if (ki == kd && kj == kl) {
            add_block(r, 1, ops[i - D].column(j - L), L);
            return r;
        }
        if (ki == kl && kj == kl) {
            add_block(r, 1, inn_coords(i - L, j - L), D);
            return r;
        }
        if (ki == kd && kj == ku) {
            add_block(r, 1, ops[i - D].column(j - U), U);
            return r;
        }
        if (ki == kd && kj == kx) {
            add_block(r, 1, ops[i - D].column(j - X), X);
            return r;
        }
        if (ki == kl && kj == ku) {
            add_block(r, -1, l[i - L].column(j - U), U);
            return r;
        }
        if (ki == kl && kj == kx) {
            add_block(r, 1, l[i - L].column(j - X), X);
            return r;
        }
        if (ki == kx && kj == ku) {
            std::size_t a = i - X, b = j - U;
            for (const auto& [k, c] : v.product(a, b)) r.emplace_back(L + k, 2 * c);
            add_block(r, 2, inn_coords(a, b), D);
            return r;
        }
        return std::nullopt;
    };
    out.lie = build_lie(out.source, parity, zdeg, natural);
    return out;
}

CheckResult check_homomorphism(const SuperAlgebra& g, const SuperAlgebra& h, const Matrix& m) {
    if (m.cols() != g.dim() || m.rows() != h.dim()) return CheckResult::fail({}, "map has the wrong shape");
    if (g.dim() != h.dim() || rank(m) != g.dim()) return CheckResult::fail({}, "map is not bijective");
    std::vector<Vec> img;
    for (std::size_t i = 0; i < g.dim(); ++i) img.push_back(m.column(i));
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            Vec lhs = m.apply(to_dense(g.product(i, j), g.dim()));
            if (lhs != h.product(img[i], img[j])) return CheckResult::fail({i, j}, "bracket not preserved");
        }
    return CheckResult::ok();
}

CheckResult check_propnu(const JordanAlgebra& v, const TitsData& data) {
    TkkAlgebra ti = tits(v, data);
    TkkAlgebra kd = koecher_d(v, data);
    std::size_t n = v.dim(), m = data.d.dim(), d = ti.dim();
    Matrix map(d, d);
    for (std::size_t i = 0; i < n; ++i) {
        map(i, i) = 1;                          // f⊗a -> a-
        map(n + m + i, n + m + i) = 2;          // h⊗a -> 2 L_a
        map(2 * n + m + i, 2 * n + m + i) = 1;  // e⊗a -> a+
    }
    for (std::size_t k = 0; k < m; ++k) map(n + k, n + k) = 1;
    return check_homomorphism(ti.lie, kd.lie, map);
}

CheckResult tits_roundtrip(const JordanAlgebra& jv, const TitsData& data) {
    const SuperAlgebra& v = jv.base();
    TkkAlgebra ti = tits(jv, data);
    const SuperAlgebra& g = ti.lie;
    std::size_t n = v.dim(), m = data.d.dim(), d = g.dim();
    auto F = [&](std::size_t a) { return a; };
    auto Dk = [&](std::size_t k) { return n + k; };
    auto H = [&](std::size_t a) { return n + m + a; };
    auto E = [&](std::size_t a) { return 2 * n + m + a; };

    // The sl2 action y.(d + y'⊗v) = [y,y']⊗v must act by even derivations.
    for (std::size_t y = 0; y < 3; ++y) {
        Matrix act(d, d);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t y2 = 0; y2 < 3; ++y2) {
                std::size_t src = y2 == 0 ? E(a) : (y2 == 1 ? F(a) : H(a));
                for (const auto& [yy, c] : sl2_bracket(y, y2)) {
                    std::size_t dst = yy == 0 ? E(a) : (yy == 1 ? F(a) : H(a));
                    act(dst, src) += c;
                }
            }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vec lhs = act.apply(to_dense(g.product(i, j), d));
                Vec rhs = g.product(act.column(i), unit_vec(d, j)) + g.product(unit_vec(d, i), act.column(j));
                if (lhs != rhs) return CheckResult::fail({y, i, j}, "sl2 does not act by derivations");
            }
    }

    Rational kef = data.killing(0, 1);
    std::vector<ProductEntry> mu;
    std::vector<std::vector<Vec>> pairing(n, std::vector<Vec>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec br = to_dense(g.product(E(a), F(b)), d);
            Vec dpart = zero_vec(m);
            for (std::size_t k = 0; k < m; ++k) dpart[k] = br[Dk(k)] / kef;
            pairing[a][b] = dpart;
            for (std::size_t k = 0; k < n; ++k)
                if (br[H(k)] != 0) mu.push_back({a, b, k, br[H(k)]});
            for (std::size_t t = 0; t < d; ++t)
                if (br[t] != 0 && !(t >= n && t < 2 * n + m)) return CheckResult::fail({a, b}, "[e⊗a, f⊗b] leaves degree 0");
        }
    SuperAlgebra recovered = SuperAlgebra::make("A", AlgebraKind::jordan, v.parities(), std::nullopt, mu);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (recovered.product(a, b) != v.product(a, b)) return CheckResult::fail({a, b}, "recovered product differs");
    if (auto r = check_jordan_identity(recovered); !r) return r;

    // alpha(d_k, a) from [d_k, e⊗a].
    std::vector<Matrix> alpha;
    for (std::size_t k = 0; k < m; ++k) {
        Matrix op(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (const auto& [t, c] : g.product(Dk(k), E(a))) {
                if (t < E(0)) return CheckResult::fail({k, a}, "[d, e⊗a] leaves e⊗V");
                op(t - E(0), a) = c;
            }
        alpha.push_back(std::move(op));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix phi(n, n);
            for (std::size_t k = 0; k < m; ++k)
                if (pairing[a][b][k] != 0) phi += pairing[a][b][k] * alpha[k];
            if (phi != supercommutator(jv.l(a), v.parity(a), jv.l(b), v.parity(b)))
                return CheckResult::fail({a, b}, "phi(<a,b>) != [L_a,L_b]");
        }
    return CheckResult::ok();
}

// ------------------------------------------------------------ J functor

JordanPair j_functor(const SuperAlgebra& g) {
    if (!g.zdegrees()) throw AlgebraError("algebra carries no Z-grading");
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (g.zdegree(i) < -1 || g.zdegree(i) > 1) throw AlgebraError("not 3-graded", {i});
    std::array<std::vector<std::size_t>, 2> idx{indices_of_degree(g, 1), indices_of_degree(g, -1)};
    for (int s = 0; s < 2; ++s)
        for (auto i : idx[s])
            for (auto j : idx[s])
                if (!g.product(i, j).empty()) throw AlgebraError("bracket of equal outer degrees is nonzero", {i, j});
    std::array<std::vector<int>, 2> parity;
    for (int s = 0; s < 2; ++s)
        for (auto i : idx[s]) parity[s].push_back(g.parity(i));
    std::array<std::vector<SparseVec>, 2> table;
    for (int s = 0; s < 2; ++s) {
        int t = 1 - s;
        std::vector<long> pos(g.dim(), -1);
        for (std::size_t r = 0; r < idx[s].size(); ++r) pos[idx[s][r]] = static_cast<long>(r);
        for (auto x : idx[s])
            for (auto y : idx[t]) {
                SparseVec xy = g.product(x, y);
                for (auto z : idx[s]) {
                    SparseVec acc;
                    for (const auto& [k, c] : xy) sparse_axpy(acc, c, g.product(k, z));
                    SparseVec local;
                    for (const auto& [k, c] : acc) {
                        if (pos[k] < 0) throw AlgebraError("triple product leaves the outer space", {x, y, z});
                        local.emplace_back(static_cast<std::size_t>(pos[k]), c);
                    }
                    table[s].push_back(std::move(local));
                }
            }
    }
    JordanPair p = JordanPair::make(parity, table);
    if (auto r = check_outer_symmetry(p); !r) throw AlgebraError("J(g) fails outer symmetry: " + describe(r));
    if (auto r = check_pair_five_linear(p); !r) throw AlgebraError("J(g) fails the 5-linear identity: " + describe(r));
    return p;
}

CheckResult is_jordan_graded(const SuperAlgebra& g) {
    auto zero = indices_of_degree(g, 0);
    std::vector<Vec> brackets, zero_basis;
    for (auto i : indices_of_degree(g, 1))
        for (auto j : indices_of_degree(g, -1)) brackets.push_back(to_dense(g.product(i, j), g.dim()));
    for (auto i : zero) zero_basis.push_back(unit_vec(g.dim(), i));
    Subspace span = Subspace::span(g.dim(), brackets);
    Subspace g0 = Subspace::span(g.dim(), zero_basis);
    if (span != g0) return CheckResult::fail({}, "[g+, g-] != g0 (dim " + std::to_string(span.dim()) + " vs " +
                                                     std::to_string(g0.dim()) + ")");
    Subspace c = center(g).intersect(g0);
    if (c.dim() != 0) return CheckResult::fail({c.pivots()[0]}, "g0 meets the center");
    return CheckResult::ok();
}

bool is_ideal(const SuperAlgebra& g, const Subspace& s) {
    for (const auto& b : s.basis())
        for (std::size_t i = 0; i < g.dim(); ++i)
            if (!s.contains(g.product(unit_vec(g.dim(), i), b))) return false;
    return true;
}

CheckResult check_j_of_ko(const JordanPair& p) {
    JordanPair back = j_functor(koecher(p).lie);
    for (int s = 0; s < 2; ++s) {
        if (back.parities(s) != p.parities(s)) return CheckResult::fail({}, "parities differ");
        for (std::size_t x = 0; x < p.dim(s); ++x)
            for (std::size_t y = 0; y < p.dim(1 - s); ++y)
                for (std::size_t z = 0; z < p.dim(s); ++z)
                    if (back.triple(s, x, y, z) != p.triple(s, x, y, z))
                        return CheckResult::fail({static_cast<std::size_t>(s), x, y, z}, "triple product differs");
    }
    return CheckResult::ok();
}

CheckResult check_ko_of_j(const SuperAlgebra& g) {
    JordanPair p = j_functor(g);
    TkkAlgebra ko = koecher(p);
    auto plus = indices_of_degree(g, 1), minus = indices_of_degree(g, -1), zero = indices_of_degree(g, 0);
    OperatorSpace inn = pair_inn(p);
    Matrix map(ko.dim(), g.dim());
    for (std::size_t r = 0; r < plus.size(); ++r) map(ko.plus(r), plus[r]) = 1;
    for (std::size_t r = 0; r < minus.size(); ++r) map(ko.minus(r), minus[r]) = 1;
    for (auto i : zero) {
        PairOperator op{left_product_block(g, i, plus, plus), left_product_block(g, i, minus, minus), g.parity(i)};
        auto c = inn.space.coordinates(flatten(op));
        if (!c) return CheckResult::fail({i}, "ad on the outer spaces is not inner");
        for (std::size_t k = 0; k < c->size(); ++k) map(ko.zero(k), i) = (*c)[k];
    }
    return check_homomorphism(g, ko.lie, map);
}

// ------------------------------------------------------------ derivation tower

std::size_t DerTower::der_dim() const {
    std::size_t s = 0;
    for (const auto& [k, v] : der_dims) s += v;
    return s;
}
std::size_t DerTower::inn_dim() const {
    std::size_t s = 0;
    for (const auto& [k, v] : inn_dims) s += v;
    return s;
}
std::size_t DerTower::out_dim() const {
    std::size_t s = 0;
    for (const auto& [k, v] : out_dims) s += v;
    return s;
}
std::pair<std::size_t, std::size_t> DerTower::out_parity() const {
    std::pair<std::size_t, std::size_t> o{0, 0};
    for (const auto& [k, v] : out_dims) (k.second ? o.second : o.first) += v;
    return o;
}
std::size_t DerTower::der_at(int shift, int parity) const {
    auto it = der_dims.find({shift, parity});
    return it == der_dims.end() ? 0 : it->second;
}
std::size_t DerTower::out_at(int shift, int parity) const {
    auto it = out_dims.find({shift, parity});
    return it == out_dims.end() ? 0 : it->second;
}

DerTower lie_der_tower(const SuperAlgebra& g) {
    std::size_t d = g.dim();
    DerTower t;
    std::vector<int> shifts{0};
    if (g.zdegrees() && d > 0) {
        auto [lo, hi] = std::minmax_element(g.zdegrees()->begin(), g.zdegrees()->end());
        shifts.clear();
        for (int s = *lo - *hi; s <= *hi - *lo; ++s) shifts.push_back(s);
    }
    std::map<DerTower::Key, std::vector<Vec>> ads;
    for (std::size_t i = 0; i < d; ++i) {
        DerTower::Key k{g.zdegrees() ? g.zdegree(i) : 0, g.parity(i)};
        ads[k].push_back(g.left_matrix(i).flat());
    }
    for (int s : shifts)
        for (int p = 0; p < 2; ++p) {
            std::optional<int> z = g.zdegrees() ? std::optional<int>(s) : std::nullopt;
            Subspace der = algebra_derivations(g, p, z);
            Subspace inn = Subspace::span(d * d, ads[{s, p}]);
            if (!der.contains(inn)) throw AlgebraError("inner derivation missing from Der(" + g.name() + ")");
            t.der_dims[{s, p}] = der.dim();
            t.inn_dims[{s, p}] = inn.dim();
            t.out_dims[{s, p}] = der.dim() - inn.dim();
            t.der.emplace(DerTower::Key{s, p}, std::move(der));
        }
    return t;
}

Fingerprint fingerprint(const SuperAlgebra& g, bool with_out) {
    Fingerprint f;
    f.graded = graded_dims(g);
    f.parity = parity_dims(g);
    f.center = center(g).dim();
    f.derived = derived(g).dim();
    if (with_out) {
        f.out = lie_der_tower(g).out_parity();
        f.has_out = true;
    }
    return f;
}

bool consistent_with(const Fingerprint& a, const Fingerprint& b) {
    return a.parity == b.parity && a.center == b.center && a.derived == b.derived && a.has_out == b.has_out &&
           a.out == b.out;
}

std::string describe(const Fingerprint& f) {
    std::string s = "dim (" + std::to_string(f.parity.first) + "|" + std::to_string(f.parity.second) + ")";
    s += " center " + std::to_string(f.center) + " derived " + std::to_string(f.derived);
    if (f.has_out) s += " out (" + std::to_string(f.out.first) + "|" + std::to_string(f.out.second) + ")";
    return s;
}

// ------------------------------------------------------------ unital equivalences

CheckResult check_der0_pair(const JordanPair& p) {
    TkkAlgebra ko = koecher(p);
    const SuperAlgebra& g = ko.lie;
    std::size_t d = g.dim(), np = p.dim(0), nm = p.dim(1);
    OperatorSpace pd = pair_der(p);
    std::vector<Vec> restricted;
    for (int par = 0; par < 2; ++par) {
        Subspace der = algebra_derivations(g, par, 0);
        for (const auto& b : der.basis()) {
            Matrix m = Matrix::unflatten(b, d, d);
            Matrix plus(np, np), minus(nm, nm);
            for (std::size_t r = 0; r < np; ++r)
                for (std::size_t c = 0; c < np; ++c) plus(r, c) = m(ko.plus(r), ko.plus(c));
            for (std::size_t r = 0; r < nm; ++r)
                for (std::size_t c = 0; c < nm; ++c) minus(r, c) = m(ko.minus(r), ko.minus(c));
            PairOperator op{plus, minus, par};
            if (!pd.contains(op)) return CheckResult::fail({}, "restriction is not a pair derivation");
            restricted.push_back(flatten(op));
        }
    }
    Subspace img = Subspace::span(pd.space.ambient_dim(), restricted);
    if (img.dim() != restricted.size()) return CheckResult::fail({}, "restriction is not injective");
    if (img != pd.space) return CheckResult::fail({}, "restriction misses pair derivations");
    return CheckResult::ok();
}

CheckResult check_ko_inn_is_ko(const JordanAlgebra& jv) {
    const SuperAlgebra& v = jv.base();
    TitsData data = inn_data(v);
    TkkAlgebra kd = koecher_d(jv, data);
    TkkAlgebra ko = koecher(jv);
    OperatorSpace pin = pair_inn(JordanPair::doubled(v));
    std::size_t n = v.dim(), m = data.d.dim();
    if (kd.dim() != ko.dim()) return CheckResult::fail({}, "dimensions differ");
    Matrix map(ko.dim(), kd.dim());
    for (std::size_t i = 0; i < n; ++i) {
        map(ko.minus(i), i) = 1;
        map(ko.plus(i), 2 * n + m + i) = 1;
    }
    auto place = [&](std::size_t col, const PairOperator& op) {
        auto c = pin.space.coordinates(flatten(op));
        if (!c) return false;
        for (std::size_t k = 0; k < c->size(); ++k) map(ko.zero(k), col) = (*c)[k];
        return true;
    };
    for (std::size_t k = 0; k < m; ++k)
        if (!place(n + k, {data.d.op(k), data.d.op(k), data.d.basis_parity(k)}))
            return CheckResult::fail({k}, "(D,D) outside Inn(V,V)");
    for (std::size_t i = 0; i < n; ++i)
        if (!place(n + m + i, {jv.l(i), Rational(-1) * jv.l(i), v.parity(i)}))
            return CheckResult::fail({i}, "(L,-L) outside Inn(V,V)");
    return check_homomorphism(kd.lie, ko.lie, map);
}

UnitalReport check_unital_equivalences(const JordanAlgebra& jv) {
    if (!jv.unital()) throw std::invalid_argument(jv.name() + " has no unit; see the counterexample report");
    const SuperAlgebra& v = jv.base();
    std::size_t n = v.dim();
    const Vec& e = *jv.unit();
    UnitalReport rep;

    TkkAlgebra kan = kantor(jv);
    TkkAlgebra ko = koecher(jv);
    JordanPair pair = JordanPair::doubled(v);
    OperatorSpace pin = pair_inn(pair);

    // Kan -> Ko: identity on g-, phi on g+ (P -> -e/2, [L_a,P] -> a/2), and
    // g0 -> (phi ad|+ phi^{-1}, ad|-).
    if (kan.n_plus != n || kan.n_zero != ko.n_zero) {
        rep.kan_ko = CheckResult::fail({}, "graded dimensions differ");
    } else {
        KantorParts parts = kantor_parts(v);
        BasisCoords pc(parts.plus, n * n * n);
        std::vector<Vec> gens;
        std::vector<Vec> images;
        for (std::size_t a = 0; a < n; ++a) {
            gens.push_back(*pc.coords(parts.lp_tensor[a]));
            images.push_back(Rational(1, 2) * unit_vec(n, a));
        }
        gens.push_back(*pc.coords(parts.p_tensor));
        images.push_back(Rational(-1, 2) * e);
        // phi on the g+ basis: solve gens -> images, checking consistency.
        Matrix gm = Matrix::from_columns(gens, n);
        Matrix phi(n, n);
        bool consistent = true;
        for (std::size_t l = 0; l < n && consistent; ++l) {
            auto c = solve(gm, unit_vec(n, l));
            if (!c) {
                consistent = false;
                break;
            }
            Vec img = zero_vec(n);
            for (std::size_t g = 0; g < gens.size(); ++g) axpy(img, (*c)[g], images[g]);
            for (std::size_t r = 0; r < n; ++r) phi(r, l) = img[r];
        }
        Subspace ker = kernel(gm);
        for (const auto& kv : ker.basis()) {
            Vec img = zero_vec(n);
            for (std::size_t g = 0; g < gens.size(); ++g) axpy(img, kv[g], images[g]);
            if (!is_zero(img)) consistent = false;
        }
        if (!consistent) {
            rep.kan_ko = CheckResult::fail({}, "phi is not well defined on g+");
        } else {
            Matrix phi_inv(n, n);
            bool inv = true;
            for (std::size_t l = 0; l < n; ++l) {
                auto c = solve(phi, unit_vec(n, l));
                if (!c) {
                    inv = false;
                    break;
                }
                for (std::size_t r = 0; r < n; ++r) phi_inv(r, l) = (*c)[r];
            }
            Matrix map(ko.dim(), kan.dim());
            std::vector<std::size_t> plus_idx, minus_idx;
            for (std::size_t i = 0; i < n; ++i) {
                plus_idx.push_back(kan.plus(i));
                minus_idx.push_back(kan.minus(i));
                map(ko.minus(i), kan.minus(i)) = 1;
                for (std::size_t r = 0; r < n; ++r) map(ko.plus(r), kan.plus(i)) = phi(r, i);
            }
            bool ok = inv;
            for (std::size_t k = 0; k < kan.n_zero && ok; ++k) {
                std::size_t z = kan.zero(k);
                Matrix adp = left_product_block(kan.lie, z, plus_idx, plus_idx);
                Matrix adm = left_product_block(kan.lie, z, minus_idx, minus_idx);
                PairOperator op{phi * adp * phi_inv, adm, kan.lie.parity(z)};
                auto c = pin.space.coordinates(flatten(op));
                if (!c) {
                    ok = false;
                    break;
                }
                for (std::size_t q = 0; q < c->size(); ++q) map(ko.zero(q), z) = (*c)[q];
            }
            rep.kan_ko = ok ? check_homomorphism(kan.lie, ko.lie, map)
                            : CheckResult::fail({}, "degree-0 image outside Inn(V,V)");
        }
    }

    // Ti(V, Inn, sl2) -> Ko(V).
    {
        TitsData data = inn_data(v);
        TkkAlgebra ti = tits(jv, data);
        std::size_t m = data.d.dim();
        Matrix map(ko.dim(), ti.dim());
        bool ok = ti.dim() == ko.dim();
        for (std::size_t i = 0; i < n && ok; ++i) {
            map(ko.minus(i), i) = 1;
            map(ko.plus(i), 2 * n + m + i) = 1;
            auto c = pin.space.coordinates(flatten(PairOperator{Rational(2) * jv.l(i), Rational(-2) * jv.l(i), v.parity(i)}));
            if (!c) ok = false;
            else
                for (std::size_t q = 0; q < c->size(); ++q) map(ko.zero(q), n + m + i) = (*c)[q];
        }
        for (std::size_t k = 0; k < m && ok; ++k) {
            auto c = pin.space.coordinates(flatten(PairOperator{data.d.op(k), data.d.op(k), data.d.basis_parity(k)}));
            if (!c) ok = false;
            else
                for (std::size_t q = 0; q < c->size(); ++q) map(ko.zero(q), n + k) = (*c)[q];
        }
        rep.ti_ko = ok ? check_homomorphism(ti.lie, ko.lie, map) : CheckResult::fail({}, "image outside Ko(V)");
    }

    rep.ko_inn = check_ko_inn_is_ko(jv);

    rep.tower = lie_der_tower(ko.lie);
    const auto& t = rep.tower;
    rep.shifts_pm2_zero = true;
    rep.shifts_pm1_dim_v = true;
    auto [ve, vo] = parity_dims(v);
    for (int p = 0; p < 2; ++p) {
        if (t.der_at(2, p) || t.der_at(-2, p)) rep.shifts_pm2_zero = false;
    }
    if (t.der_at(1, 0) + t.der_at(1, 1) != n || t.der_at(-1, 0) + t.der_at(-1, 1) != n) rep.shifts_pm1_dim_v = false;
    if (t.der_at(1, 0) != ve || t.der_at(-1, 0) != ve) rep.shifts_pm1_dim_v = false;

    TkkAlgebra kt = koecher_tilde(jv);
    auto gd = graded_dims(kt.lie);
    rep.der_eq_kotilde = true;
    for (const auto& [key, dim] : t.der_dims) {
        auto it = gd.find(key);
        std::size_t expect = it == gd.end() ? 0 : it->second;
        if (dim != expect) rep.der_eq_kotilde = false;
    }
    for (const auto& [key, dim] : gd)
        if (t.der_at(key.first, key.second) != dim) rep.der_eq_kotilde = false;

    auto str = str_algebra(v).parity_dims();
    auto istr = istr_algebra(v).parity_dims();
    rep.out0_eq_str_istr = t.out_at(0, 0) == str.first - istr.first && t.out_at(0, 1) == str.second - istr.second;
    return rep;
}

}  // namespace jtkk
