#pragma once

// Three-graded Lie superalgebras from Jordan superalgebras and superpairs,
// their Jordan pairs, and derivation towers.

#include "jtkk/structure.hpp"

#include <array>
#include <map>

namespace jtkk {

enum class Origin { vminus, op0, vplus, kantor_p, kantor_lp, formal_l, h_tensor };
std::string to_string(Origin o);

/// Basis ordered as degree -1, then degree 0, then degree +1.
struct TkkAlgebra {
    SuperAlgebra lie;
    std::vector<Origin> origin;
    std::string source;
    std::size_t n_minus = 0, n_zero = 0, n_plus = 0;

    std::array<std::size_t, 3> graded_dims() const { return {n_minus, n_zero, n_plus}; }
    std::size_t dim() const { return lie.dim(); }
    std::size_t minus(std::size_t i) const { return i; }
    std::size_t zero(std::size_t i) const { return n_minus + i; }
    std::size_t plus(std::size_t i) const { return n_minus + n_zero + i; }
};

/// Kantor's construction: V, istr(V), span{P, [L_a,P]} in Hom(V⊗V,V).
TkkAlgebra kantor(const JordanAlgebra& v);
/// Kantor relations, and P = -[L_e,P] when V is unital.
CheckResult check_kantor_relations(const JordanAlgebra& v, const TkkAlgebra& kan);

/// Koecher's construction with g0 = `zero`, a subspace of Der(V+,V-)
/// containing every D_{x,y}.
TkkAlgebra koecher_with(const JordanPair& p, const OperatorSpace& zero, std::string source);
TkkAlgebra koecher(const JordanPair& p);
TkkAlgebra koecher(const JordanAlgebra& v);
TkkAlgebra koecher_tilde(const JordanPair& p);
TkkAlgebra koecher_tilde(const JordanAlgebra& v);

/// sl2 basis (e, f, h) with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
struct TitsData {
    OperatorSpace d;       // concrete subspace of End(V); psi is the inclusion
    Matrix killing;        // (y,y') = tr(ad y ad y') / 2
};

Matrix sl2_killing();
/// Throws AlgebraError when d is not closed, misses Inn(V) or leaves Der(V).
TitsData make_tits_data(const SuperAlgebra& v, OperatorSpace d);
TitsData inn_data(const SuperAlgebra& v);
TitsData der_data(const SuperAlgebra& v);

/// Basis f⊗V, D, h⊗V, e⊗V.
TkkAlgebra tits(const JordanAlgebra& v, const TitsData& data);
/// Basis V-, D, formal L_V, V+.
TkkAlgebra koecher_d(const JordanAlgebra& v, const TitsData& data);
/// e⊗a -> a+, f⊗a -> a-, h⊗a -> 2 L_a, D -> D.
CheckResult check_propnu(const JordanAlgebra& v, const TitsData& data);
/// Recovers the product and <a,b> from Ti(V, D, sl2) and compares.
CheckResult tits_roundtrip(const JordanAlgebra& v, const TitsData& data);

/// Columns of `m` are images of g's basis in h. Checks bijectivity and
/// m[x,y] = [mx,my] on all basis pairs.
CheckResult check_homomorphism(const SuperAlgebra& g, const SuperAlgebra& h, const Matrix& m);

/// Throws AlgebraError when g is not 3-graded or the result is not a superpair.
JordanPair j_functor(const SuperAlgebra& g);
CheckResult is_jordan_graded(const SuperAlgebra& g);
bool is_ideal(const SuperAlgebra& g, const Subspace& s);
/// J(Ko(p)) = p on all basis tuples.
CheckResult check_j_of_ko(const JordanPair& p);
/// g -> Ko(J(g)) built from ad on degree 0.
CheckResult check_ko_of_j(const SuperAlgebra& g);

struct DerTower {
    using Key = std::pair<int, int>;  // (shift, parity)
    std::map<Key, Subspace> der;
    std::map<Key, std::size_t> der_dims, inn_dims, out_dims;
    std::size_t der_dim() const;
    std::size_t inn_dim() const;
    std::size_t out_dim() const;
    std::pair<std::size_t, std::size_t> out_parity() const;
    std::size_t der_at(int shift, int parity) const;
    std::size_t out_at(int shift, int parity) const;
};

/// Shifts range over all degree differences; an ungraded algebra uses shift 0.
DerTower lie_der_tower(const SuperAlgebra& g);

struct Fingerprint {
    std::map<std::pair<int, int>, std::size_t> graded;  // (degree, parity)
    std::pair<std::size_t, std::size_t> parity{0, 0};
    std::size_t center = 0;
    std::size_t derived = 0;
    std::pair<std::size_t, std::size_t> out{0, 0};
    bool has_out = false;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const SuperAlgebra& g, bool with_out = true);
/// Grading-independent parts agree (parity dims, center, derived, Out).
bool consistent_with(const Fingerprint& a, const Fingerprint& b);
std::string describe(const Fingerprint& f);

/// Restriction of Der(Ko(p))_0 to V+ ⊕ V- is a bijection onto Der(V+,V-).
CheckResult check_der0_pair(const JordanPair& p);
/// Ko_{Inn}(V) -> Ko(V), D + L_x -> (D + L_x, D - L_x), unital V.
CheckResult check_ko_inn_is_ko(const JordanAlgebra& v);

struct UnitalReport {
    CheckResult kan_ko;           // explicit map from the 3-graded Jordan pair isomorphism
    CheckResult ti_ko;            // e⊗a -> a+, f⊗a -> a-, h⊗a -> 2(L_a,-L_a), D -> (D,D)
    CheckResult ko_inn;
    bool shifts_pm2_zero = false;
    bool shifts_pm1_dim_v = false;
    bool der_eq_kotilde = false;
    bool out0_eq_str_istr = false;
    DerTower tower;
    bool ok() const {
        return kan_ko.pass && ti_ko.pass && ko_inn.pass && shifts_pm2_zero && shifts_pm1_dim_v && der_eq_kotilde &&
               out0_eq_str_istr;
    }
};

/// Throws std::invalid_argument for non-unital V.
UnitalReport check_unital_equivalences(const JordanAlgebra& v);

}  // namespace jtkk
