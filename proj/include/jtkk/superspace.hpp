#pragma once

// Z2-graded (optionally Z-graded) algebras given by structure constants.

#include "jtkk/exact.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jtkk {

enum class AlgebraKind { plain, jordan, lie };

std::string to_string(AlgebraKind k);

/// b_i * b_j has coefficient `coeff` on b_k.
struct ProductEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Rational coeff;
};

/// First failing basis tuple of an identity check.
struct Witness {
    std::vector<std::size_t> indices;
    std::string detail;
};

struct CheckResult {
    bool pass = true;
    std::optional<Witness> witness;

    static CheckResult ok() { return {}; }
    static CheckResult fail(std::vector<std::size_t> idx, std::string detail) {
        return {false, Witness{std::move(idx), std::move(detail)}};
    }
    explicit operator bool() const { return pass; }
};

std::string describe(const CheckResult& r);

class AlgebraError : public std::runtime_error {
public:
    AlgebraError(const std::string& msg, std::vector<std::size_t> witness = {})
        : std::runtime_error(msg), witness_(std::move(witness)) {}
    const std::vector<std::size_t>& witness() const { return witness_; }

private:
    std::vector<std::size_t> witness_;
};

class SuperAlgebra {
public:
    SuperAlgebra() = default;

    /// Builds from a product list. Rejects out-of-range indices, duplicate
    /// (i,j,k) entries and entries that break parity or Z-degree homogeneity.
    static SuperAlgebra make(std::string name, AlgebraKind kind, std::vector<int> parity,
                             std::optional<std::vector<int>> zdegree, const std::vector<ProductEntry>& products);

    /// Builds from a dense n*n table of sparse products (row-major in (i,j)).
    static SuperAlgebra from_table(std::string name, AlgebraKind kind, std::vector<int> parity,
                                   std::optional<std::vector<int>> zdegree, std::vector<SparseVec> table);

    const std::string& name() const { return name_; }
    AlgebraKind kind() const { return kind_; }
    std::size_t dim() const { return parity_.size(); }
    int parity(std::size_t i) const { return parity_.at(i); }
    const std::vector<int>& parities() const { return parity_; }
    const std::optional<std::vector<int>>& zdegrees() const { return zdegree_; }
    int zdegree(std::size_t i) const { return zdegree_ ? zdegree_->at(i) : 0; }

    const SparseVec& product(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }
    /// Bilinear extension.
    Vec product(const Vec& x, const Vec& y) const;
    /// b_i * y for a dense y.
    Vec left_product(std::size_t i, const Vec& y) const;
    /// b_i * y for a sparse y, sparse result.
    SparseVec left_product(std::size_t i, const SparseVec& y) const;

    /// Matrix of y -> b_i y (columns are images of basis vectors).
    Matrix left_matrix(std::size_t i) const;
    Matrix left_matrix(const Vec& x) const;

    std::vector<ProductEntry> entries() const;

    SuperAlgebra renamed(std::string name) const;
    SuperAlgebra with_kind(AlgebraKind k) const;
    SuperAlgebra with_zdegrees(std::optional<std::vector<int>> z) const;

    /// Parity of a homogeneous vector; nullopt for 0 or mixed vectors.
    std::optional<int> vector_parity(const Vec& v) const;

    friend bool operator==(const SuperAlgebra&, const SuperAlgebra&) = default;

private:
    void verify_homogeneity() const;

    std::string name_;
    AlgebraKind kind_ = AlgebraKind::plain;
    std::vector<int> parity_;
    std::optional<std::vector<int>> zdegree_;
    std::vector<SparseVec> table_;
};

/// Parity-homogeneous endomorphism of an algebra's underlying space.
struct GradedOperator {
    Matrix matrix;
    int parity = 0;
    std::optional<int> zshift;
};

/// A B - (-1)^{|A||B|} B A.
Matrix supercommutator(const Matrix& a, int pa, const Matrix& b, int pb);
GradedOperator supercommutator(const GradedOperator& a, const GradedOperator& b);

/// Checks that the operator maps parity-i vectors to parity-(i+p) vectors
/// (and degree-j to degree-(j+shift) when a shift is given).
bool is_homogeneous_operator(const SuperAlgebra& a, const Matrix& m, int parity, std::optional<int> zshift = {});

/// Parity of an operator on a space with the given basis parities.
std::optional<int> operator_parity(const std::vector<int>& parity, const Matrix& m);

CheckResult check_supercommutative(const SuperAlgebra& a);
CheckResult check_superanticommutative(const SuperAlgebra& a);
CheckResult check_super_jacobi(const SuperAlgebra& a);
/// Super-anticommutativity followed by super-Jacobi.
CheckResult check_lie(const SuperAlgebra& a);

/// (zdegree, parity) -> dimension; zdegree is 0 for ungraded algebras.
std::map<std::pair<int, int>, std::size_t> graded_dims(const SuperAlgebra& a);
std::pair<std::size_t, std::size_t> parity_dims(const SuperAlgebra& a);

/// {x : x y = 0 and y x = 0 for all y}.
Subspace center(const SuperAlgebra& a);
/// Span of all products.
Subspace derived(const SuperAlgebra& a);

/// True when s is the direct sum of its intersections with the parity
/// (and degree) components.
bool is_graded_subspace(const SuperAlgebra& a, const Subspace& s);

/// Quotient by a graded two-sided ideal; basis = standard vectors outside
/// the ideal's pivot columns. Throws AlgebraError with a witness otherwise.
SuperAlgebra quotient_algebra(const SuperAlgebra& a, const Subspace& ideal, std::string name = {});
/// Subalgebra on the echelon basis of s. Throws AlgebraError if not closed.
SuperAlgebra subalgebra(const SuperAlgebra& a, const Subspace& s, std::string name = {});

/// Builds an algebra from operators closed under the supercommutator.
/// Brackets are re-expressed in the given basis by exact solving.
SuperAlgebra operator_lie_algebra(std::string name, const std::vector<Matrix>& ops, const std::vector<int>& parity,
                                  std::optional<std::vector<int>> zdegree = {});

}  // namespace jtkk
