#pragma once

// Derivation and structure algebras of Jordan superalgebras and superpairs,
// all realized inside End(V) or End(V+) ⊕ End(V-).

#include "jtkk/jordan.hpp"

namespace jtkk {

struct PairOperator {
    Matrix plus;
    Matrix minus;
    int parity = 0;
};

/// Row-major flattening; pairs are the plus block followed by the minus block.
Vec flatten(const PairOperator& p);
PairOperator supercommutator(const PairOperator& a, const PairOperator& b);

struct OperatorSpace {
    std::string label;
    std::vector<int> plus_parity;   // parities of V (or V+)
    std::vector<int> minus_parity;  // parities of V-, pair spaces only
    bool pair = false;
    Subspace space;                 // flattened operators

    std::size_t dim() const { return space.dim(); }
    /// (even, odd).
    std::pair<std::size_t, std::size_t> parity_dims() const;
    int basis_parity(std::size_t k) const;
    Matrix op(std::size_t k) const;
    PairOperator pair_op(std::size_t k) const;
    std::vector<Matrix> ops() const;
    std::vector<PairOperator> pair_ops() const;
    bool contains(const Matrix& m) const { return space.contains(m.flat()); }
    bool contains(const PairOperator& p) const { return space.contains(flatten(p)); }
};

/// Parity of flattened coordinate t of an operator space.
int flat_parity(const OperatorSpace& s, std::size_t t);

OperatorSpace make_space(std::string label, const std::vector<int>& parity, const std::vector<Matrix>& ops);
OperatorSpace make_pair_space(std::string label, const std::vector<int>& plus, const std::vector<int>& minus,
                              const std::vector<PairOperator>& ops);

/// Span of all supercommutators [a_i, b_j].
Subspace bracket_span(const OperatorSpace& a, const OperatorSpace& b);
bool is_closed(const OperatorSpace& s);
/// [big, ideal] ⊆ ideal.
bool is_ideal(const OperatorSpace& ideal, const OperatorSpace& big);

/// Super-Leibniz solutions D(xy) = D(x)y + (-1)^{p|x|} x D(y) of parity p,
/// optionally restricted to a Z-degree shift; row-major flattened n*n.
Subspace algebra_derivations(const SuperAlgebra& a, int parity, std::optional<int> zshift = std::nullopt);

OperatorSpace der_algebra(const SuperAlgebra& v);
OperatorSpace inn_algebra(const SuperAlgebra& v);
/// span{L_x}.
OperatorSpace l_space(const SuperAlgebra& v);
OperatorSpace istr_algebra(const SuperAlgebra& v);
OperatorSpace str_algebra(const SuperAlgebra& v);
OperatorSpace istr_tilde(const SuperAlgebra& v);

OperatorSpace pair_der(const JordanPair& p);
OperatorSpace pair_inn(const JordanPair& p);
/// D_{x,y} pair operator (D_{x,y}, -(-1)^{|x||y|} D_{y,x}) for basis x in V+, y in V-.
PairOperator pair_inner(const JordanPair& p, std::size_t x, std::size_t y);
/// Both U-operator conditions, as printed, solved per parity.
OperatorSpace str_w(const SuperAlgebra& v);
/// (X, Y) -> (X, -Y).
OperatorSpace flip_minus(const OperatorSpace& s);

struct InclusionReport {
    std::size_t inn = 0, der = 0, lspace = 0, istr = 0, str = 0, istr_tilde = 0;
    std::size_t pair_inn = 0, pair_der = 0, str_w = 0;
    /// {L_x} ∩ Der(V); the chain hypothesis is read as "no nonzero L_x is a derivation".
    std::size_t l_cap_der = 0;
    std::size_t l_cap_inn = 0;
    bool hypothesis = false;
    bool unital = false;

    // Always computed.
    bool lemma_l_pairs = false;    // (L_x,-L_x) in Der(V,V)
    bool lemma_d_pairs = false;    // (D,D) in Der(V,V)
    bool str_w_matches = false;    // str_w = flip of Der(V,V)
    bool inn_ideal_in_der = false;
    bool istr_ideal_in_str = false;
    bool pair_inn_ideal = false;

    // Chain, meaningful when hypothesis holds.
    bool psi_injective = false;
    bool psi_into_istr = false;
    bool phi_injective = false;
    bool phi_into_pair_der = false;
    bool strict_inn_istr = false, strict_istr_str = false, strict_str_pair_der = false;

    // Unital extras.
    bool istr_eq_pair_inn = false;
    bool str_eq_pair_der = false;
    bool sums_direct = false;
    bool swap_eigenspaces = false;
    bool str_w_eq_str = false;

    std::string note;
    bool chain_ok() const {
        return hypothesis && psi_injective && psi_into_istr && phi_injective && phi_into_pair_der;
    }
    bool unital_ok() const {
        return unital && istr_eq_pair_inn && str_eq_pair_der && sums_direct && swap_eigenspaces && str_w_eq_str;
    }
};

InclusionReport inclusion_report(const JordanAlgebra& v);

}  // namespace jtkk
