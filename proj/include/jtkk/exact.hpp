#pragma once

// Exact rational linear algebra: rationals, dense matrices, canonical
// subspaces and an incremental sparse row reducer.
//
// Every equation system in the library (derivation systems, membership
// tests, coordinate solves) goes through RowReducer. Systems are assembled
// as sparse rows; operators on algebras of dimension <= 64 are kept as dense
// Matrix values. The split is fixed: anything that is an unknown-vs-equation
// system is sparse, anything that is an operator is dense.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jtkk {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

/// Sparse vector: strictly increasing indices, no stored zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p" or "p/q" (optional leading '-', q >= 1). Decimals and
/// exponents are rejected. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec& axpy(Vec& y, const Rational& a, const Vec& x);  // y += a x
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);
/// acc += s v on sorted sparse vectors.
void sparse_axpy(SparseVec& acc, const Rational& s, const SparseVec& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
    /// Row-major unflatten of a vector of length rows*cols.
    static Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Bounds-checked access.
    Rational& at(std::size_t r, std::size_t c);
    const Rational& at(std::size_t r, std::size_t c) const;

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec column(std::size_t c) const;
    Vec row(std::size_t r) const;
    /// Row-major flattening.
    const Vec& flat() const { return data_; }

    Vec apply(const Vec& x) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec data_;
};

/// Sparse equation system: each row is a linear form in `cols` unknowns.
struct SparseSystem {
    std::size_t cols = 0;
    std::vector<SparseVec> rows;
};

class Subspace;

/// Incremental reduced row-echelon form over sparse rows. Pivot rows are
/// kept fully reduced, so an incoming row is reduced in a single pass.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols);

    /// Adds a row; returns true when the rank grew.
    bool add(const SparseVec& row);
    bool add(const Vec& row) { return add(to_sparse(row)); }

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == cols_; }

    /// Reduces `row` modulo the current row space; the result has zeros in
    /// all pivot columns.
    SparseVec reduce(const SparseVec& row) const;

    Subspace row_space() const;
    /// Solutions x of r . x = 0 for every added row r.
    Subspace kernel() const;

private:
    std::size_t cols_;
    std::vector<SparseVec> rows_;          // pivot rows, pivot entry 1
    std::vector<long> pivot_row_of_col_;   // -1 when not a pivot column
    mutable Vec scratch_;
    mutable std::vector<char> touched_;
};

/// A linear subspace of Q^n held by its canonical reduced row-echelon basis.
/// Two subspaces are equal iff their bases are identical.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates in the echelon basis, or nullopt if v is not in the space.
    std::optional<Vec> coordinates(const Vec& v) const;
    Vec from_coordinates(const Vec& c) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    /// dim(this / (this ∩ other)).
    std::size_t quotient_dim(const Subspace& other) const;
    /// Basis of {y : y . v = 0 for all v in this}.
    Subspace annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.ambient_ == b.ambient_ && a.basis_ == b.basis_; }

private:
    friend class RowReducer;
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
    std::vector<SparseVec> sparse_;  // same basis, sparse
};

Subspace kernel(const Matrix& m);
Subspace kernel(const SparseSystem& s);
std::size_t rank(const Matrix& m);

/// Some x with m x = b, or nullopt if the system is inconsistent. The
/// returned solution is verified by re-multiplication.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace jtkk
