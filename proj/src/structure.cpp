#include "jtkk/structure.hpp"

#include <algorithm>

namespace jtkk {

namespace {

int sgn(int e) { return (e & 1) ? -1 : 1; }

class RowBuilder {
public:
    void add(std::size_t col, const Rational& c) {
        if (sgn_zero(c)) return;
        terms_.emplace_back(col, c);
    }
    SparseVec finish() {
        std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVec out;
        for (auto& [c, v] : terms_) {
            if (!out.empty() && out.back().first == c)
                out.back().second += v;
            else
                out.emplace_back(c, v);
        }
        std::erase_if(out, [](const auto& t) { return sgn_zero(t.second); });
        terms_.clear();
        return out;
    }

private:
    static bool sgn_zero(const Rational& c) { return sgn(c) == 0; }
    SparseVec terms_;
};

// Compact unknown numbering restricted to an allowed subset of coordinates.
struct Unknowns {
    std::vector<long> col_of;
    std::vector<std::size_t> full_of;

    explicit Unknowns(std::size_t n) : col_of(n, -1) {}
    void allow(std::size_t t) {
        col_of[t] = static_cast<long>(full_of.size());
        full_of.push_back(t);
    }
    std::size_t size() const { return full_of.size(); }
    void add(RowBuilder& row, std::size_t t, const Rational& c) const {
        if (col_of[t] >= 0) row.add(static_cast<std::size_t>(col_of[t]), c);
    }
    Subspace expand(const Subspace& compact) const {
        std::vector<Vec> out;
        out.reserve(compact.dim());
        for (const auto& b : compact.basis()) {
            Vec v = zero_vec(col_of.size());
            for (std::size_t i = 0; i < b.size(); ++i) v[full_of[i]] = b[i];
            out.push_back(std::move(v));
        }
        return Subspace::span(col_of.size(), out);
    }
};

Subspace solve_system(RowReducer& red, const Unknowns& u) { return u.expand(red.kernel()); }

OperatorSpace single_space(std::string label, const std::vector<int>& parity, Subspace s) {
    OperatorSpace out;
    out.label = std::move(label);
    out.plus_parity = parity;
    out.space = std::move(s);
    return out;
}

OperatorSpace pair_space(std::string label, const std::vector<int>& plus, const std::vector<int>& minus, Subspace s) {
    OperatorSpace out;
    out.label = std::move(label);
    out.plus_parity = plus;
    out.minus_parity = minus;
    out.pair = true;
    out.space = std::move(s);
    return out;
}

Vec neg(const Vec& v) {
    Vec out = v;
    for (auto& x : out) x = -x;
    return out;
}

Subspace project_plus(const OperatorSpace& s) {
    std::size_t n = s.plus_parity.size();
    std::vector<Vec> out;
    for (const auto& b : s.space.basis()) out.emplace_back(b.begin(), b.begin() + static_cast<long>(n * n));
    return Subspace::span(n * n, out);
}

}  // namespace

Vec flatten(const PairOperator& p) {
    Vec out = p.plus.flat();
    out.insert(out.end(), p.minus.flat().begin(), p.minus.flat().end());
    return out;
}

PairOperator supercommutator(const PairOperator& a, const PairOperator& b) {
    return {supercommutator(a.plus, a.parity, b.plus, b.parity), supercommutator(a.minus, a.parity, b.minus, b.parity),
            (a.parity + b.parity) & 1};
}

int flat_parity(const OperatorSpace& s, std::size_t t) {
    std::size_t n = s.plus_parity.size();
    if (t < n * n) return s.plus_parity[t / n] ^ s.plus_parity[t % n];
    t -= n * n;
    std::size_t m = s.minus_parity.size();
    return s.minus_parity[t / m] ^ s.minus_parity[t % m];
}

std::pair<std::size_t, std::size_t> OperatorSpace::parity_dims() const {
    std::pair<std::size_t, std::size_t> d{0, 0};
    for (std::size_t k = 0; k < dim(); ++k) (basis_parity(k) ? d.second : d.first)++;
    return d;
}

int OperatorSpace::basis_parity(std::size_t k) const { return flat_parity(*this, space.pivots().at(k)); }

Matrix OperatorSpace::op(std::size_t k) const {
    std::size_t n = plus_parity.size();
    return Matrix::unflatten(space.basis().at(k), n, n);
}

PairOperator OperatorSpace::pair_op(std::size_t k) const {
    std::size_t n = plus_parity.size(), m = minus_parity.size();
    const Vec& b = space.basis().at(k);
    Vec p(b.begin(), b.begin() + static_cast<long>(n * n));
    Vec q(b.begin() + static_cast<long>(n * n), b.end());
    return {Matrix::unflatten(p, n, n), Matrix::unflatten(q, m, m), basis_parity(k)};
}

std::vector<Matrix> OperatorSpace::ops() const {
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < dim(); ++k) out.push_back(op(k));
    return out;
}

std::vector<PairOperator> OperatorSpace::pair_ops() const {
    std::vector<PairOperator> out;
    for (std::size_t k = 0; k < dim(); ++k) out.push_back(pair_op(k));
    return out;
}

OperatorSpace make_space(std::string label, const std::vector<int>& parity, const std::vector<Matrix>& ops) {
    std::size_t n = parity.size();
    std::vector<Vec> flat;
    for (const auto& m : ops) flat.push_back(m.flat());
    return single_space(std::move(label), parity, Subspace::span(n * n, flat));
}

OperatorSpace make_pair_space(std::string label, const std::vector<int>& plus, const std::vector<int>& minus,
                              const std::vector<PairOperator>& ops) {
    std::size_t amb = plus.size() * plus.size() + minus.size() * minus.size();
    std::vector<Vec> flat;
    for (const auto& p : ops) flat.push_back(flatten(p));
    return pair_space(std::move(label), plus, minus, Subspace::span(amb, flat));
}

Subspace bracket_span(const OperatorSpace& a, const OperatorSpace& b) {
    std::vector<Vec> out;
    if (a.pair) {
        auto pa = a.pair_ops(), pb = b.pair_ops();
        for (const auto& x : pa)
            for (const auto& y : pb) out.push_back(flatten(supercommutator(x, y)));
    } else {
        auto ma = a.ops(), mb = b.ops();
        for (std::size_t i = 0; i < ma.size(); ++i)
            for (std::size_t j = 0; j < mb.size(); ++j)
                out.push_back(supercommutator(ma[i], a.basis_parity(i), mb[j], b.basis_parity(j)).flat());
    }
    return Subspace::span(a.space.ambient_dim(), out);
}

bool is_closed(const OperatorSpace& s) { return s.space.contains(bracket_span(s, s)); }

bool is_ideal(const OperatorSpace& ideal, const OperatorSpace& big) {
    return ideal.space.contains(bracket_span(big, ideal));
}

Subspace algebra_derivations(const SuperAlgebra& a, int parity, std::optional<int> zshift) {
    std::size_t n = a.dim();
    Unknowns u(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if ((a.parity(r) ^ a.parity(c)) != parity) continue;
            if (zshift && a.zdegree(r) - a.zdegree(c) != *zshift) continue;
            u.allow(r * n + c);
        }
    RowReducer red(u.size());
    std::vector<RowBuilder> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // D(b_i b_j) - D(b_i) b_j - s b_i D(b_j), component k
            for (const auto& [m, c] : a.product(i, j))
                for (std::size_t k = 0; k < n; ++k) u.add(rows[k], k * n + m, c);
            int s = sgn(parity * a.parity(i));
            for (std::size_t r = 0; r < n; ++r) {
                if (u.col_of[r * n + i] >= 0)
                    for (const auto& [k, c] : a.product(r, j)) u.add(rows[k], r * n + i, -c);
                if (u.col_of[r * n + j] >= 0)
                    for (const auto& [k, c] : a.product(i, r)) u.add(rows[k], r * n + j, s == 1 ? Rational(-c) : c);
            }
            for (auto& row : rows) {
                auto sv = row.finish();
                if (!sv.empty()) red.add(sv);
            }
            if (red.full()) return Subspace::zero(n * n);
        }
    return solve_system(red, u);
}

OperatorSpace der_algebra(const SuperAlgebra& v) {
    Subspace s = algebra_derivations(v, 0).sum(algebra_derivations(v, 1));
    auto out = single_space("Der", v.parities(), s);
    if (!is_closed(out)) throw AlgebraError("derivations of " + v.name() + " not closed under bracket");
    return out;
}

OperatorSpace l_space(const SuperAlgebra& v) {
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < v.dim(); ++i) ops.push_back(v.left_matrix(i));
    return make_space("L", v.parities(), ops);
}

OperatorSpace inn_algebra(const SuperAlgebra& v) {
    std::vector<Matrix> ops;
    std::vector<Matrix> l;
    for (std::size_t i = 0; i < v.dim(); ++i) l.push_back(v.left_matrix(i));
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = i; j < v.dim(); ++j) ops.push_back(supercommutator(l[i], v.parity(i), l[j], v.parity(j)));
    auto out = make_space("Inn", v.parities(), ops);
    if (!is_closed(out)) throw AlgebraError("Inn of " + v.name() + " not closed under bracket");
    return out;
}

OperatorSpace istr_algebra(const SuperAlgebra& v) {
    auto out = single_space("istr", v.parities(), l_space(v).space.sum(inn_algebra(v).space));
    if (!is_closed(out)) throw AlgebraError("istr of " + v.name() + " not closed under bracket");
    return out;
}

OperatorSpace str_algebra(const SuperAlgebra& v) {
    auto out = single_space("str", v.parities(), l_space(v).space.sum(der_algebra(v).space));
    if (!is_closed(out)) throw AlgebraError("str of " + v.name() + " not closed under bracket");
    return out;
}

OperatorSpace istr_tilde(const SuperAlgebra& v) {
    std::size_t n = v.dim();
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ops.push_back(d_matrix(v, unit_vec(n, i), unit_vec(n, j)));
    return make_space("istr~", v.parities(), ops);
}

OperatorSpace pair_der(const JordanPair& p) {
    std::array<std::size_t, 2> n{p.dim(0), p.dim(1)};
    std::array<std::size_t, 2> off{0, n[0] * n[0]};
    std::size_t amb = n[0] * n[0] + n[1] * n[1];
    auto var = [&](int s, std::size_t r, std::size_t c) { return off[s] + r * n[s] + c; };

    Subspace total(amb);
    for (int par = 0; par < 2; ++par) {
        Unknowns u(amb);
        for (int s = 0; s < 2; ++s)
            for (std::size_t r = 0; r < n[s]; ++r)
                for (std::size_t c = 0; c < n[s]; ++c)
                    if ((p.parity(s, r) ^ p.parity(s, c)) == par) u.allow(var(s, r, c));
        RowReducer red(u.size());
        bool done = false;
        for (int s = 0; s < 2 && !done; ++s) {
            int t = 1 - s;
            std::vector<RowBuilder> rows(n[s]);
            for (std::size_t x = 0; x < n[s] && !done; ++x)
                for (std::size_t y = 0; y < n[t] && !done; ++y) {
                    int s1 = sgn(par * p.parity(s, x));
                    int s2 = sgn(par * (p.parity(s, x) + p.parity(t, y)));
                    for (std::size_t z = 0; z < n[s]; ++z) {
                        for (const auto& [m, c] : p.triple(s, x, y, z))
                            for (std::size_t k = 0; k < n[s]; ++k) u.add(rows[k], var(s, k, m), c);
                        for (std::size_t r = 0; r < n[s]; ++r) {
                            for (const auto& [k, c] : p.triple(s, r, y, z)) u.add(rows[k], var(s, r, x), -c);
                            for (const auto& [k, c] : p.triple(s, x, y, r)) u.add(rows[k], var(s, r, z), -s2 * c);
                        }
                        for (std::size_t r = 0; r < n[t]; ++r)
                            for (const auto& [k, c] : p.triple(s, x, r, z)) u.add(rows[k], var(t, r, y), -s1 * c);
                        for (auto& row : rows) {
                            auto sv = row.finish();
                            if (!sv.empty()) red.add(sv);
                        }
                        if (red.full()) {
                            done = true;
                            break;
                        }
                    }
                }
        }
        if (!done) total = total.sum(solve_system(red, u));
    }
    auto out = pair_space("PairDer", p.parities(0), p.parities(1), total);
    if (!is_closed(out)) throw AlgebraError("pair derivations not closed under bracket");
    return out;
}

PairOperator pair_inner(const JordanPair& p, std::size_t x, std::size_t y) {
    int px = p.parity(0, x), py = p.parity(1, y);
    Matrix minus = p.d_matrix(1, y, x);
    if (!((px * py) & 1)) minus *= Rational(-1);
    return {p.d_matrix(0, x, y), minus, px ^ py};
}

OperatorSpace pair_inn(const JordanPair& p) {
    std::vector<PairOperator> ops;
    for (std::size_t x = 0; x < p.dim(0); ++x)
        for (std::size_t y = 0; y < p.dim(1); ++y) ops.push_back(pair_inner(p, x, y));
    return make_pair_space("PairInn", p.parities(0), p.parities(1), ops);
}

OperatorSpace str_w(const SuperAlgebra& v) {
    std::size_t n = v.dim();
    JordanPair p = JordanPair::doubled(v);
    auto T = [&](std::size_t a, std::size_t b, std::size_t c) -> const SparseVec& { return p.triple(0, a, b, c); };
    std::size_t amb = 2 * n * n;
    // w = 0 selects X, w = 1 selects Y.
    auto var = [&](int w, std::size_t r, std::size_t c) { return w * n * n + r * n + c; };
    auto par = [&](std::size_t i) { return v.parity(i); };

    Subspace total(amb);
    for (int d = 0; d < 2; ++d) {
        Unknowns u(amb);
        for (int w = 0; w < 2; ++w)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if ((par(r) ^ par(c)) == d) u.allow(var(w, r, c));
        RowReducer red(u.size());
        std::vector<RowBuilder> rows(n);
        bool done = false;
        for (int w = 0; w < 2 && !done; ++w) {
            int o = 1 - w;
            for (std::size_t a = 0; a < n && !done; ++a)
                for (std::size_t b = 0; b < n && !done; ++b)
                    for (std::size_t z = 0; z < n; ++z) {
                        // U_{Wa,b} + (-1)^{d|a|} U_{a,Wb} - W U_{a,b} - (-1)^{d(|a|+|b|)} U_{a,b} O, at z
                        int e1 = sgn(par(b) * par(z));
                        int e2 = sgn(d * par(a) + (par(b) + d) * par(z));
                        int e3 = e1;
                        int e4 = sgn(d * (par(a) + par(b)) + par(b) * (par(z) + d));
                        for (std::size_t r = 0; r < n; ++r) {
                            for (const auto& [k, c] : T(r, z, b)) u.add(rows[k], var(w, r, a), e1 * c);
                            for (const auto& [k, c] : T(a, z, r)) u.add(rows[k], var(w, r, b), e2 * c);
                            for (const auto& [k, c] : T(a, r, b)) u.add(rows[k], var(o, r, z), -e4 * c);
                        }
                        for (const auto& [m, c] : T(a, z, b))
                            for (std::size_t k = 0; k < n; ++k) u.add(rows[k], var(w, k, m), -e3 * c);
                        for (auto& row : rows) {
                            auto sv = row.finish();
                            if (!sv.empty()) red.add(sv);
                        }
                        if (red.full()) {
                            done = true;
                            break;
                        }
                    }
        }
        if (!done) total = total.sum(solve_system(red, u));
    }
    return pair_space("str_w", v.parities(), v.parities(), total);
}

OperatorSpace flip_minus(const OperatorSpace& s) {
    std::size_t n = s.plus_parity.size();
    std::vector<Vec> out;
    for (const auto& b : s.space.basis()) {
        Vec f = b;
        for (std::size_t t = n * n; t < f.size(); ++t) f[t] = -f[t];
        out.push_back(std::move(f));
    }
    auto r = s;
    r.space = Subspace::span(s.space.ambient_dim(), out);
    return r;
}

InclusionReport inclusion_report(const JordanAlgebra& jv) {
    const SuperAlgebra& v = jv.base();
    std::size_t n = v.dim();
    InclusionReport r;
    r.unital = jv.unital();

    auto der = der_algebra(v);
    auto inn = inn_algebra(v);
    auto ls = l_space(v);
    auto istr = istr_algebra(v);
    auto str = str_algebra(v);
    auto itl = istr_tilde(v);
    JordanPair pair = JordanPair::doubled(v);
    auto pd = pair_der(pair);
    auto pi = pair_inn(pair);
    auto sw = str_w(v);

    r.inn = inn.dim();
    r.der = der.dim();
    r.lspace = ls.dim();
    r.istr = istr.dim();
    r.str = str.dim();
    r.istr_tilde = itl.dim();
    r.pair_inn = pi.dim();
    r.pair_der = pd.dim();
    r.str_w = sw.dim();
    r.l_cap_der = ls.space.intersect(der.space).dim();
    r.l_cap_inn = ls.space.intersect(inn.space).dim();
    r.hypothesis = r.l_cap_der == 0;

    std::vector<Vec> l_pairs, d_pairs;
    for (const auto& b : ls.space.basis()) {
        Vec f = b;
        Vec m = neg(b);
        f.insert(f.end(), m.begin(), m.end());
        l_pairs.push_back(std::move(f));
    }
    for (const auto& b : der.space.basis()) {
        Vec f = b;
        f.insert(f.end(), b.begin(), b.end());
        d_pairs.push_back(std::move(f));
    }
    Subspace lp = Subspace::span(2 * n * n, l_pairs);
    Subspace dp = Subspace::span(2 * n * n, d_pairs);
    r.lemma_l_pairs = pd.space.contains(lp);
    r.lemma_d_pairs = pd.space.contains(dp);
    r.str_w_matches = sw.space == flip_minus(pd).space;
    r.inn_ideal_in_der = is_ideal(inn, der);
    r.istr_ideal_in_str = is_ideal(istr, str);
    r.pair_inn_ideal = is_ideal(pi, pd);

    Subspace psi_image = project_plus(pi);
    r.psi_injective = psi_image.dim() == pi.dim();
    r.psi_into_istr = istr.space.contains(psi_image);
    Subspace phi_image = lp.sum(dp);
    r.phi_injective = r.hypothesis && phi_image.dim() == ls.dim() + der.dim();
    r.phi_into_pair_der = r.lemma_l_pairs && r.lemma_d_pairs;
    r.strict_inn_istr = pi.dim() < istr.dim();
    r.strict_istr_str = istr.dim() < str.dim();
    r.strict_str_pair_der = str.dim() < pd.dim();

    if (r.hypothesis)
        r.note = "no nonzero L_x is a derivation (L_0 = 0 excluded)";
    else
        r.note = "chain inapplicable: a nonzero L_x is a derivation";

    if (r.unital) {
        r.istr_eq_pair_inn = r.psi_injective && psi_image == istr.space;
        r.str_eq_pair_der = r.phi_injective && phi_image == pd.space;
        r.sums_direct = r.l_cap_der == 0 && r.l_cap_inn == 0;
        std::vector<Vec> diag, anti;
        for (std::size_t t = 0; t < n * n; ++t) {
            Vec a = zero_vec(2 * n * n), b = zero_vec(2 * n * n);
            a[t] = a[n * n + t] = 1;
            b[t] = 1;
            b[n * n + t] = -1;
            diag.push_back(std::move(a));
            anti.push_back(std::move(b));
        }
        Subspace fixed = pd.space.intersect(Subspace::span(2 * n * n, diag));
        Subspace flipped = pd.space.intersect(Subspace::span(2 * n * n, anti));
        r.swap_eigenspaces = fixed == dp && flipped == lp;
        Subspace sw_plus = project_plus(sw);
        r.str_w_eq_str = sw_plus.dim() == sw.dim() && sw_plus == str.space;
    }
    return r;
}

}  // namespace jtkk
