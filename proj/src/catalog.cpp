#include "jtkk/catalog.hpp"

#include <bit>
#include <charconv>
#include <map>
#include <mutex>

namespace jtkk {

namespace {

const Rational half(1, 2);

JordanAlgebra checked(SuperAlgebra a) { return JordanAlgebra::make(std::move(a)); }

void require(bool ok, const std::string& what) {
    if (!ok) throw CatalogError(what);
}

// ---------------------------------------------------------- matrix types

struct MatrixBasis {
    std::vector<Matrix> ops;
    std::vector<int> parity;
};

int index_parity(int m, int a) { return a < m ? 0 : 1; }

Matrix unit_matrix(int size, int r, int c) {
    Matrix e(size, size);
    e(r, c) = 1;
    return e;
}

SuperAlgebra lie_from_ops(const std::string& name, const MatrixBasis& b) {
    SuperAlgebra a = operator_lie_algebra(name, b.ops, b.parity);
    if (auto r = check_lie(a); !r) throw AlgebraError(name + ": " + describe(r));
    return a;
}

Subspace span_of_identity(const MatrixBasis& b) {
    const std::size_t size = b.ops.front().rows();
    Matrix cols(size * size, b.ops.size());
    for (std::size_t j = 0; j < b.ops.size(); ++j)
        for (std::size_t t = 0; t < size * size; ++t) cols(t, j) = b.ops[j].flat()[t];
    auto x = solve(cols, Matrix::identity(size).flat());
    if (!x) throw CatalogError("identity is not in the matrix span");
    return Subspace::span(b.ops.size(), {*x});
}

SuperAlgebra quotient_by_identity(const std::string& name, const MatrixBasis& b) {
    SuperAlgebra a = lie_from_ops(name + "~", b);
    return quotient_algebra(a, span_of_identity(b), name);
}

MatrixBasis gl_basis(int m, int n) {
    const int s = m + n;
    MatrixBasis b;
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) {
            b.ops.push_back(unit_matrix(s, r, c));
            b.parity.push_back(index_parity(m, r) ^ index_parity(m, c));
        }
    return b;
}

MatrixBasis sl_basis(int m, int n) {
    const int s = m + n;
    MatrixBasis b;
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) {
            if (r == c) continue;
            b.ops.push_back(unit_matrix(s, r, c));
            b.parity.push_back(index_parity(m, r) ^ index_parity(m, c));
        }
    for (int a = 0; a + 1 < s; ++a) {
        // str(E_aa) + c str(E_{a+1,a+1}) = 0
        int sa = index_parity(m, a) ? -1 : 1, sb = index_parity(m, a + 1) ? -1 : 1;
        Matrix d = unit_matrix(s, a, a);
        d(a + 1, a + 1) = -sa * sb;
        b.ops.push_back(d);
        b.parity.push_back(0);
    }
    return b;
}

MatrixBasis pe_basis(int n, bool special) {
    const int s = 2 * n;
    MatrixBasis b;
    auto a_part = [&](int i, int j) {
        Matrix x = unit_matrix(s, i, j);
        x(n + j, n + i) -= 1;
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && special) continue;
            b.ops.push_back(a_part(i, j));
            b.parity.push_back(0);
        }
    if (special)
        for (int i = 0; i + 1 < n; ++i) {
            b.ops.push_back(a_part(i, i) - a_part(i + 1, i + 1));
            b.parity.push_back(0);
        }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Matrix x = unit_matrix(s, i, n + j);
            if (i != j) x(j, n + i) = 1;
            b.ops.push_back(x);
            b.parity.push_back(1);
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix x = unit_matrix(s, n + i, j);
            x(n + j, i) = -1;
            b.ops.push_back(x);
            b.parity.push_back(1);
        }
    return b;
}

MatrixBasis q_basis(int n, bool special) {
    const int s = 2 * n;
    MatrixBasis b;
    auto block = [&](int i, int j, int off) {
        Matrix x(s, s);
        x(i, j + off) = 1;
        x(i + n, j + n - off) = 1;
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            b.ops.push_back(block(i, j, 0));
            b.parity.push_back(0);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (special && i == j) continue;
            b.ops.push_back(block(i, j, n));
            b.parity.push_back(1);
        }
    if (special)
        for (int i = 0; i + 1 < n; ++i) {
            b.ops.push_back(block(i, i, n) - block(i + 1, i + 1, n));
            b.parity.push_back(1);
        }
    return b;
}

// ------------------------------------------------------ exterior algebra

using Mono = unsigned;

int popcount(Mono m) { return std::popcount(m); }

// xi_a xi_b = sign xi_{a|b}, or 0 when they overlap.
int mono_product_sign(Mono a, Mono b) {
    if (a & b) return 0;
    int inv = 0;
    for (Mono t = b; t; t &= t - 1) {
        int j = std::countr_zero(t);
        inv += popcount(a >> (j + 1));
    }
    return (inv & 1) ? -1 : 1;
}


// Left derivative by xi_i.
int mono_derivative(Mono s, int i, Mono& out) {
    if (!((s >> i) & 1u)) return 0;
    out = s & ~(1u << i);
    return (popcount(s & ((1u << i) - 1)) & 1) ? -1 : 1;
}

// {xi_a, xi_b} as a map monomial -> coefficient.
std::vector<std::pair<Mono, Rational>> poisson_bracket(int n, Mono a, Mono b) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 2 < n; ++i) pairs.emplace_back(i, i);
    pairs.emplace_back(n - 2, n - 1);
    pairs.emplace_back(n - 1, n - 2);
    std::vector<std::pair<Mono, Rational>> out;
    int outer = (popcount(a) & 1) ? -1 : 1;
    for (auto [i, j] : pairs) {
        Mono da = 0, db = 0;
        int s1 = mono_derivative(a, i, da);
        if (!s1) continue;
        int s2 = mono_derivative(b, j, db);
        if (!s2) continue;
        int s3 = mono_product_sign(da, db);
        if (!s3) continue;
        Mono r = da | db;
        Rational c = outer * s1 * s2 * s3;
        bool merged = false;
        for (auto& [m, v] : out)
            if (m == r) {
                v += c;
                merged = true;
            }
        if (!merged) out.emplace_back(r, c);
    }
    std::erase_if(out, [](const auto& t) { return sgn(t.second) == 0; });
    return out;
}

// Monomials ordered by degree, then by value; 1 first.
std::vector<Mono> monomials(int n) {
    std::vector<Mono> ms;
    for (int d = 0; d <= n; ++d)
        for (Mono m = 0; m < (1u << n); ++m)
            if (popcount(m) == d) ms.push_back(m);
    return ms;
}

std::vector<int> mono_index(int n, const std::vector<Mono>& ms) {
    std::vector<int> idx(1u << n, -1);
    for (std::size_t i = 0; i < ms.size(); ++i) idx[ms[i]] = static_cast<int>(i);
    return idx;
}

// Matrix on Λ(n) (monomial basis) of g -> {xi_a, g}.
Matrix poisson_ad(int n, Mono a, const std::vector<Mono>& ms, const std::vector<int>& idx) {
    Matrix m(ms.size(), ms.size());
    for (std::size_t c = 0; c < ms.size(); ++c)
        for (const auto& [r, v] : poisson_bracket(n, a, ms[c])) m(idx[r], c) += v;
    return m;
}

// Matrix on Λ(n) of xi_s d/dxi_i.
Matrix vector_field(int n, Mono s, int i, const std::vector<Mono>& ms, const std::vector<int>& idx) {
    Matrix m(ms.size(), ms.size());
    for (std::size_t c = 0; c < ms.size(); ++c) {
        Mono d = 0;
        int s1 = mono_derivative(ms[c], i, d);
        if (!s1) continue;
        int s2 = mono_product_sign(s, d);
        if (!s2) continue;
        m(idx[s | d], c) += s1 * s2;
    }
    (void)n;
    return m;
}

Matrix euler_field(const std::vector<Mono>& ms) {
    Matrix m(ms.size(), ms.size());
    for (std::size_t c = 0; c < ms.size(); ++c) m(c, c) = popcount(ms[c]);
    return m;
}

// ------------------------------------------------------------- parsing

std::pair<std::string, std::vector<std::string>> split_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<std::string> params;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::size_t start = 0;
        while (true) {
            auto comma = rest.find(',', start);
            params.push_back(rest.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return {name, params};
}

int parse_int(const std::string& s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw CatalogError("invalid integer parameter '" + s + "'");
    return v;
}

std::vector<int> int_params(const std::vector<std::string>& ps, std::size_t count, const std::string& name) {
    if (ps.size() != count)
        throw CatalogError(name + " expects " + std::to_string(count) + " parameter(s)");
    std::vector<int> out;
    for (const auto& p : ps) out.push_back(parse_int(p));
    return out;
}

}  // namespace

// ============================================================== Jordan

JordanAlgebra j19() {
    return checked(SuperAlgebra::make("j19", AlgebraKind::jordan, {0, 0, 0}, std::nullopt,
                                      {{0, 0, 0, 1}, {0, 1, 1, half}, {1, 0, 1, half}, {1, 1, 2, 1}}));
}

JordanAlgebra kac_k() {
    // a, xi1, xi2
    return checked(SuperAlgebra::make("kacK", AlgebraKind::jordan, {0, 1, 1}, std::nullopt,
                                      {{0, 0, 0, 1},
                                       {0, 1, 1, half},
                                       {1, 0, 1, half},
                                       {0, 2, 2, half},
                                       {2, 0, 2, half},
                                       {1, 2, 0, 1},
                                       {2, 1, 0, -1}}));
}

JordanAlgebra trunc_poly(int k) {
    require(k >= 3 && k <= 8, "trunc_poly: k must lie in [3, 8]");
    // basis t^1 .. t^{k-1}
    std::vector<ProductEntry> es;
    for (int a = 1; a < k; ++a)
        for (int b = 1; a + b < k; ++b)
            es.push_back({static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1),
                          static_cast<std::size_t>(a + b - 1), 1});
    return checked(SuperAlgebra::make("trunc_poly:" + std::to_string(k), AlgebraKind::jordan,
                                      std::vector<int>(k - 1, 0), std::nullopt, es));
}

JordanAlgebra full_matrix(int m, int n) {
    require(m >= 0 && n >= 0 && m + n >= 1 && m + n <= 3, "full_matrix: need 1 <= m+n <= 3");
    const int s = m + n;
    auto id = [&](int r, int c) { return static_cast<std::size_t>(r * s + c); };
    std::vector<int> parity;
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) parity.push_back(index_parity(m, r) ^ index_parity(m, c));
    std::vector<SparseVec> table(parity.size() * parity.size());
    const std::size_t dim = parity.size();
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int c = 0; c < s; ++c)
                for (int d = 0; d < s; ++d) {
                    std::size_t x = id(a, b), y = id(c, d);
                    Vec v(dim);
                    // x o y = (xy + (-1)^{|x||y|} yx) / 2
                    if (b == c) v[id(a, d)] += half;
                    if (d == a) v[id(c, b)] += ((parity[x] & parity[y]) ? -half : half);
                    table[x * dim + y] = to_sparse(v);
                }
    return checked(SuperAlgebra::from_table("full_matrix:" + std::to_string(m) + "," + std::to_string(n),
                                            AlgebraKind::jordan, parity, std::nullopt, table));
}

JordanAlgebra form_algebra(int p, int q2) {
    require(p >= 0 && q2 >= 0 && q2 % 2 == 0 && p + q2 <= 5 && p + q2 >= 1,
            "form: need p >= 0, even q2 >= 0, 1 <= p+q2 <= 5");
    // e, v_1..v_p (even), w_1..w_q2 (odd)
    std::vector<int> parity(1 + p + q2, 0);
    for (int i = 0; i < q2; ++i) parity[1 + p + i] = 1;
    const std::size_t dim = parity.size();
    std::vector<ProductEntry> es;
    for (std::size_t x = 0; x < dim; ++x) {
        es.push_back({0, x, x, 1});
        if (x != 0) es.push_back({x, 0, x, 1});
    }
    for (int i = 0; i < p; ++i) es.push_back({static_cast<std::size_t>(1 + i), static_cast<std::size_t>(1 + i), 0, 1});
    for (int i = 0; i < q2; i += 2) {
        std::size_t a = 1 + p + i, b = a + 1;
        es.push_back({a, b, 0, 1});
        es.push_back({b, a, 0, -1});
    }
    return checked(SuperAlgebra::make("form:" + std::to_string(p) + "," + std::to_string(q2), AlgebraKind::jordan,
                                      parity, std::nullopt, es));
}

JordanAlgebra dt_algebra(const Rational& t) {
    require(sgn(t) != 0 && t != -1, "dt: t must not be 0 or -1");
    // e1, e2 (even), x, y (odd)
    std::vector<ProductEntry> es = {{0, 0, 0, 1}, {1, 1, 1, 1}};
    for (std::size_t e : {0u, 1u})
        for (std::size_t o : {2u, 3u}) {
            es.push_back({e, o, o, half});
            es.push_back({o, e, o, half});
        }
    es.push_back({2, 3, 0, 1});
    es.push_back({2, 3, 1, t});
    es.push_back({3, 2, 0, -1});
    es.push_back({3, 2, 1, -t});
    return checked(SuperAlgebra::make("dt:" + to_string(t), AlgebraKind::jordan, {0, 0, 1, 1}, std::nullopt, es));
}

std::vector<CatalogInfo> jordan_catalog_info() {
    return {
        {"j19", "", "3-dim algebra e1^2=e1, e1e2=e2/2, e2^2=e3", false},
        {"kacK", "", "Kac's non-unital algebra <a> + <xi1,xi2>", false},
        {"trunc_poly", "k (3..8)", "tQ[t]/(t^k)", false},
        {"full_matrix", "m,n (m+n<=3)", "gl(m,n)+ under x o y = (xy + (-1)^{|x||y|} yx)/2", true},
        {"form", "p,2q (p+2q<=5)", "Qe + W with v o w = f(v,w) e", true},
        {"dt", "t (rational, not 0 or -1)", "4-dim family D_t", true},
    };
}

JordanAlgebra jordan_catalog_uncached(const std::string& spec) {
    auto [name, ps] = split_spec(spec);
    if (name == "j19" && ps.empty()) return j19();
    if (name == "kacK" && ps.empty()) return kac_k();
    if (name == "trunc_poly") return trunc_poly(int_params(ps, 1, name)[0]);
    if (name == "full_matrix") {
        auto v = int_params(ps, 2, name);
        return full_matrix(v[0], v[1]);
    }
    if (name == "form") {
        auto v = int_params(ps, 2, name);
        return form_algebra(v[0], v[1]);
    }
    if (name == "dt") {
        if (ps.size() != 1) throw CatalogError("dt expects 1 parameter");
        try {
            return dt_algebra(parse_rational(ps[0]));
        } catch (const ParseError& e) {
            throw CatalogError(std::string("dt: ") + e.what());
        }
    }
    throw CatalogError("unknown Jordan catalog entry '" + spec + "'");
}

JordanAlgebra jordan_catalog(const std::string& spec) {
    static std::mutex mu;
    static std::map<std::string, JordanAlgebra> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(spec); it != memo.end()) return it->second;
    }
    JordanAlgebra a = jordan_catalog_uncached(spec);
    std::lock_guard lock(mu);
    return memo.emplace(spec, std::move(a)).first->second;
}

bool is_jordan_catalog_name(const std::string& spec) {
    auto name = split_spec(spec).first;
    for (const auto& i : jordan_catalog_info())
        if (i.name == name) return true;
    return false;
}

bool is_external(const std::string& spec) {
    auto name = split_spec(spec).first;
    for (const auto& i : jordan_catalog_info())
        if (i.name == name) return i.external;
    return false;
}

// ================================================================= Lie

SuperAlgebra gl(int m, int n) {
    require(m >= 0 && n >= 0 && m + n >= 1 && m + n <= 4, "gl: need 1 <= m+n <= 4");
    return lie_from_ops("gl:" + std::to_string(m) + "," + std::to_string(n), gl_basis(m, n));
}

SuperAlgebra sl(int m, int n) {
    require(m >= 0 && n >= 0 && m + n >= 2 && m + n <= 4, "sl: need 2 <= m+n <= 4");
    return lie_from_ops("sl:" + std::to_string(m) + "," + std::to_string(n), sl_basis(m, n));
}

SuperAlgebra psl(int n) {
    require(n >= 1 && n <= 2, "psl: need 1 <= n <= 2");
    return quotient_by_identity("psl:" + std::to_string(n), sl_basis(n, n));
}

SuperAlgebra pgl(int n) {
    require(n >= 1 && n <= 2, "pgl: need 1 <= n <= 2");
    return quotient_by_identity("pgl:" + std::to_string(n), gl_basis(n, n));
}

SuperAlgebra pe(int n) {
    require(n >= 1 && n <= 4, "pe: need 1 <= n <= 4");
    return lie_from_ops("pe:" + std::to_string(n), pe_basis(n, false));
}

SuperAlgebra spe(int n) {
    require(n >= 1 && n <= 4, "spe: need 1 <= n <= 4");
    return lie_from_ops("spe:" + std::to_string(n), pe_basis(n, true));
}

SuperAlgebra q(int n) {
    require(n >= 1 && n <= 4, "q: need 1 <= n <= 4");
    return lie_from_ops("q:" + std::to_string(n), q_basis(n, false));
}

SuperAlgebra sq(int n) {
    require(n >= 1 && n <= 4, "sq: need 1 <= n <= 4");
    return lie_from_ops("sq:" + std::to_string(n), q_basis(n, true));
}

SuperAlgebra psq(int n) {
    require(n >= 1 && n <= 4, "psq: need 1 <= n <= 4");
    return quotient_by_identity("psq:" + std::to_string(n), q_basis(n, true));
}

SuperAlgebra pq(int n) {
    require(n >= 1 && n <= 4, "pq: need 1 <= n <= 4");
    return quotient_by_identity("pq:" + std::to_string(n), q_basis(n, false));
}

SuperAlgebra poisson(int n) {
    require(n >= 2 && n <= 6, "Lambda: need 2 <= n <= 6");
    auto ms = monomials(n);
    auto idx = mono_index(n, ms);
    const std::size_t dim = ms.size();
    std::vector<int> parity, z;
    for (Mono m : ms) {
        parity.push_back(popcount(m) & 1);
        z.push_back(popcount(m) - 2);
    }
    std::vector<SparseVec> table(dim * dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            Vec v(dim);
            for (const auto& [r, c] : poisson_bracket(n, ms[a], ms[b])) v[idx[r]] += c;
            table[a * dim + b] = to_sparse(v);
        }
    SuperAlgebra a = SuperAlgebra::from_table("Lambda:" + std::to_string(n), AlgebraKind::lie, parity, z, table);
    if (auto r = check_lie(a); !r) throw AlgebraError(a.name() + ": " + describe(r));
    return a;
}

SuperAlgebra h_tilde(int n) {
    require(n >= 2 && n <= 6, "Htilde: need 2 <= n <= 6");
    SuperAlgebra lam = poisson(n);
    // monomial 1 is basis index 0
    return quotient_algebra(lam, Subspace::span(lam.dim(), {unit_vec(lam.dim(), 0)}), "Htilde:" + std::to_string(n));
}

SuperAlgebra h(int n) {
    require(n >= 2 && n <= 6, "H: need 2 <= n <= 6");
    SuperAlgebra ht = h_tilde(n);
    return subalgebra(ht, derived(ht), "H:" + std::to_string(n));
}

SuperAlgebra w(int n) {
    require(n >= 1 && n <= 4, "W: need 1 <= n <= 4");
    auto ms = monomials(n);
    auto idx = mono_index(n, ms);
    MatrixBasis b;
    std::vector<int> z;
    for (Mono s : ms)
        for (int i = 0; i < n; ++i) {
            b.ops.push_back(vector_field(n, s, i, ms, idx));
            b.parity.push_back((popcount(s) + 1) & 1);
            z.push_back(popcount(s) - 1);
        }
    SuperAlgebra a = operator_lie_algebra("W:" + std::to_string(n), b.ops, b.parity, z);
    if (auto r = check_lie(a); !r) throw AlgebraError(a.name() + ": " + describe(r));
    return a;
}

SuperAlgebra kc_h_tilde(int n) {
    require(n >= 2 && n <= 6, "KCHtilde: need 2 <= n <= 6");
    auto ms = monomials(n);
    auto idx = mono_index(n, ms);
    std::vector<Matrix> ops{euler_field(ms)};
    std::vector<int> parity{0}, z{0};
    for (Mono s : ms) {
        if (s == 0) continue;
        ops.push_back(poisson_ad(n, s, ms, idx));
        parity.push_back(popcount(s) & 1);
        z.push_back(popcount(s) - 2);
    }
    SuperAlgebra a = operator_lie_algebra("KCHtilde:" + std::to_string(n), ops, parity, z);
    if (auto r = check_lie(a); !r) throw AlgebraError(a.name() + ": " + describe(r));
    return a;
}

SuperAlgebra kc_h_tilde_lambda(int n) {
    require(n >= 4 && n <= 6, "KCHtildeLambda: need 4 <= n <= 6");
    const int k = n - 2;
    auto ms = monomials(k);
    auto idx = mono_index(k, ms);
    // C, then h_S (S nonempty), then g_T (all T)
    const std::size_t nh = ms.size() - 1, ng = ms.size(), dim = 1 + nh + ng;
    auto h_of = [&](Mono s) { return static_cast<std::size_t>(idx[s]); };  // 1..nh, since 1 has index 0
    auto g_of = [&](Mono s) { return 1 + nh + static_cast<std::size_t>(idx[s]); };
    std::vector<int> parity(dim, 0), z(dim, 0);
    for (Mono s : ms) {
        if (s) {
            parity[h_of(s)] = popcount(s) & 1;
            z[h_of(s)] = popcount(s) - 2;
        }
        parity[g_of(s)] = popcount(s) & 1;
        z[g_of(s)] = popcount(s);
    }
    std::vector<SparseVec> table(dim * dim);
    auto put = [&](std::size_t a, std::size_t b, std::size_t r, const Rational& c) {
        Vec v = to_dense(table[a * dim + b], dim);
        v[r] += c;
        table[a * dim + b] = to_sparse(v);
    };
    for (Mono s : ms) {
        if (s) {
            put(0, h_of(s), h_of(s), popcount(s) - 2);
            put(h_of(s), 0, h_of(s), -(popcount(s) - 2));
        }
        if (popcount(s)) {
            put(0, g_of(s), g_of(s), popcount(s));
            put(g_of(s), 0, g_of(s), -popcount(s));
        }
    }
    for (Mono a : ms) {
        if (!a) continue;
        for (Mono b : ms) {
            int sg = ((popcount(a) & 1) && (popcount(b) & 1)) ? 1 : -1;  // [y,x] = -(-1)^{|x||y|}[x,y]
            for (const auto& [r, c] : poisson_bracket(k, a, b)) {
                if (b && r) put(h_of(a), h_of(b), h_of(r), c);
                put(h_of(a), g_of(b), g_of(r), c);
                put(g_of(b), h_of(a), g_of(r), sg * c);
            }
        }
    }
    SuperAlgebra alg = SuperAlgebra::from_table("KCHtildeLambda:" + std::to_string(n), AlgebraKind::lie, parity, z, table);
    if (auto r = check_lie(alg); !r) throw AlgebraError(alg.name() + ": " + describe(r));
    return alg;
}

std::vector<CatalogInfo> lie_catalog_info() {
    return {
        {"gl", "m,n (m+n<=4)", "End(Q^{m|n}) with the supercommutator", false},
        {"sl", "m,n (2<=m+n<=4)", "supertrace-zero matrices", false},
        {"psl", "n (n<=2)", "sl(n|n)/<I>", false},
        {"pgl", "n (n<=2)", "gl(n|n)/<I>", false},
        {"pe", "n (n<=4)", "periplectic", false},
        {"spe", "n (n<=4)", "special periplectic, tr a = 0", false},
        {"q", "n (n<=4)", "queer", false},
        {"sq", "n (n<=4)", "special queer, tr b = 0", false},
        {"psq", "n (n<=4)", "sq(n)/<I>", false},
        {"pq", "n (n<=4)", "q(n)/<I>", false},
        {"Lambda", "n (2..6)", "exterior algebra with the Poisson bracket", false},
        {"Htilde", "n (2..6)", "Lambda(n)/<1>", false},
        {"H", "n (2..6)", "[Htilde(n), Htilde(n)]", false},
        {"W", "n (1..4)", "derivations of Lambda(n)", false},
        {"KCHtilde", "n (2..6)", "KC x Htilde(n) inside W(n)", false},
        {"KCHtildeLambda", "n (4..6)", "KC x (Htilde(n-2) x Lambda(n-2))", false},
    };
}

SuperAlgebra lie_catalog_uncached(const std::string& spec) {
    auto [name, ps] = split_spec(spec);
    auto one = [&] { return int_params(ps, 1, name)[0]; };
    auto two = [&] { return int_params(ps, 2, name); };
    if (name == "gl") { auto v = two(); return gl(v[0], v[1]); }
    if (name == "sl") { auto v = two(); return sl(v[0], v[1]); }
    if (name == "psl") return psl(one());
    if (name == "pgl") return pgl(one());
    if (name == "pe") return pe(one());
    if (name == "spe") return spe(one());
    if (name == "q") return q(one());
    if (name == "sq") return sq(one());
    if (name == "psq") return psq(one());
    if (name == "pq") return pq(one());
    if (name == "Lambda") return poisson(one());
    if (name == "Htilde") return h_tilde(one());
    if (name == "H") return h(one());
    if (name == "W") return w(one());
    if (name == "KCHtilde") return kc_h_tilde(one());
    if (name == "KCHtildeLambda") return kc_h_tilde_lambda(one());
    throw CatalogError("unknown Lie catalog entry '" + spec + "'");
}

SuperAlgebra lie_catalog(const std::string& spec) {
    static std::mutex mu;
    static std::map<std::string, SuperAlgebra> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(spec); it != memo.end()) return it->second;
    }
    SuperAlgebra a = lie_catalog_uncached(spec);
    std::lock_guard lock(mu);
    return memo.emplace(spec, std::move(a)).first->second;
}

bool is_lie_catalog_name(const std::string& spec) {
    auto name = split_spec(spec).first;
    for (const auto& i : lie_catalog_info())
        if (i.name == name) return true;
    return false;
}

std::vector<std::string> simple_lie_entries() {
    return {"sl:2,0", "sl:3,0", "sl:1,2", "sl:2,1", "sl:1,3", "sl:3,1", "psl:2", "spe:3", "spe:4",
            "psq:3", "psq:4", "W:2",   "W:3",   "W:4",   "H:4",   "H:5",   "H:6"};
}

std::vector<std::string> shipped_jordan_entries() {
    return {"j19",    "kacK",   "trunc_poly:3", "trunc_poly:4", "trunc_poly:5",
            "trunc_poly:6", "trunc_poly:7", "trunc_poly:8", "full_matrix:1,0", "full_matrix:1,1",
            "full_matrix:1,2", "full_matrix:2,1", "form:1,2", "form:2,2", "form:3,0",
            "dt:2",   "dt:1/2"};
}

std::vector<std::string> shipped_lie_entries() {
    std::vector<std::string> out;
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n) {
            if (m + n >= 1) out.push_back("gl:" + std::to_string(m) + "," + std::to_string(n));
            if (m + n >= 2) out.push_back("sl:" + std::to_string(m) + "," + std::to_string(n));
        }
    for (int n = 1; n <= 2; ++n) {
        out.push_back("psl:" + std::to_string(n));
        out.push_back("pgl:" + std::to_string(n));
    }
    for (const char* t : {"pe", "spe", "q", "sq", "psq", "pq"})
        for (int n = 1; n <= 4; ++n) out.push_back(std::string(t) + ":" + std::to_string(n));
    for (int n = 2; n <= 6; ++n) {
        out.push_back("Lambda:" + std::to_string(n));
        out.push_back("Htilde:" + std::to_string(n));
        out.push_back("H:" + std::to_string(n));
        out.push_back("KCHtilde:" + std::to_string(n));
    }
    for (int n = 1; n <= 4; ++n) out.push_back("W:" + std::to_string(n));
    for (int n = 4; n <= 6; ++n) out.push_back("KCHtildeLambda:" + std::to_string(n));
    return out;
}

}  // namespace jtkk
