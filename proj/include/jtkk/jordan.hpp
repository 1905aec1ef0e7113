#pragma once

// Jordan superalgebras, their operators L, D, U and the triple product;
// Jordan superpairs given by two trilinear tables.

#include "jtkk/superspace.hpp"

#include <array>

namespace jtkk {

struct UnitResult {
    enum class Status { unique, none, non_unique };
    Status status = Status::none;
    std::optional<Vec> unit;  // set for unique, and a particular solution for non_unique
};

/// Solves e b_i = b_i for all i.
UnitResult find_unit(const SuperAlgebra& v);

CheckResult check_jordan_identity(const SuperAlgebra& v);
/// [[L_x,L_y],L_z] = L_{x(yz)} - (-1)^{|x||y|} L_{y(xz)}.
CheckResult check_operator_identity(const SuperAlgebra& v);
CheckResult check_triple_symmetry(const SuperAlgebra& v);
/// [D_{x,y},D_{u,v}] in both D-forms.
CheckResult check_five_linear(const SuperAlgebra& v);

class JordanAlgebra {
public:
    /// Verifies supercommutativity and the Jordan identity, then looks for a unit.
    static JordanAlgebra make(SuperAlgebra base);
    static JordanAlgebra unchecked(SuperAlgebra base);

    const SuperAlgebra& base() const { return base_; }
    const std::string& name() const { return base_.name(); }
    std::size_t dim() const { return base_.dim(); }
    int parity(std::size_t i) const { return base_.parity(i); }
    const std::vector<int>& parities() const { return base_.parities(); }
    const std::optional<Vec>& unit() const { return unit_; }
    bool unital() const { return unit_.has_value(); }

    /// L_{b_i}.
    const Matrix& l(std::size_t i) const { return left_.at(i); }

private:
    explicit JordanAlgebra(SuperAlgebra base);
    SuperAlgebra base_;
    std::optional<Vec> unit_;
    std::vector<Matrix> left_;
};

/// {b_i,b_j,b_k}.
SparseVec triple_basis(const SuperAlgebra& v, std::size_t i, std::size_t j, std::size_t k);
/// Trilinear extension; mixed inputs are expanded over homogeneous basis vectors.
Vec triple(const SuperAlgebra& v, const Vec& x, const Vec& y, const Vec& z);

Matrix l_matrix(const SuperAlgebra& v, const Vec& x);
Matrix d_matrix(const SuperAlgebra& v, const Vec& x, const Vec& y);
/// U_{x,y}(z) = (-1)^{|y||z|} {x,z,y}.
Matrix u_matrix(const SuperAlgebra& v, const Vec& x, const Vec& y);

/// Homogeneous-input versions; throw std::invalid_argument on mixed input.
GradedOperator l_op(const SuperAlgebra& v, const Vec& x);
GradedOperator d_op(const SuperAlgebra& v, const Vec& x, const Vec& y);
GradedOperator u_op(const SuperAlgebra& v, const Vec& x, const Vec& y);

/// Jordan superpair (V+, V-). Index 0 is +, index 1 is -. table[s] holds
/// {b_x, b_y, b_z}^s at (x * dim(1-s) + y) * dim(s) + z.
class JordanPair {
public:
    JordanPair() = default;
    static JordanPair make(std::array<std::vector<int>, 2> parity, std::array<std::vector<SparseVec>, 2> table);
    /// (V,V) with both products equal to the triple product.
    static JordanPair doubled(const SuperAlgebra& v);

    std::size_t dim(int s) const { return parity_[s].size(); }
    int parity(int s, std::size_t i) const { return parity_[s].at(i); }
    const std::vector<int>& parities(int s) const { return parity_[s]; }

    const SparseVec& triple(int s, std::size_t x, std::size_t y, std::size_t z) const {
        return table_[s][(x * dim(1 - s) + y) * dim(s) + z];
    }
    Vec triple(int s, const Vec& x, const Vec& y, const Vec& z) const;
    /// z -> {b_x, b_y, z}^s on V^s.
    Matrix d_matrix(int s, std::size_t x, std::size_t y) const;
    Matrix d_matrix(int s, const Vec& x, const Vec& y) const;

    friend bool operator==(const JordanPair&, const JordanPair&) = default;

private:
    std::array<std::vector<int>, 2> parity_;
    std::array<std::vector<SparseVec>, 2> table_;
};

CheckResult check_outer_symmetry(const JordanPair& p);
/// Element form of the 5-linear identity over all basis 5-tuples, both signs.
CheckResult check_pair_five_linear(const JordanPair& p);

}  // namespace jtkk
