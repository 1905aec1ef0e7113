#include "jtkk/exact.hpp"

#include <algorithm>
#include <cctype>

namespace jtkk {

Rational parse_rational(std::string_view text) {
    auto bad = [&] { return ParseError("invalid rational '" + std::string(text) + "'"); };
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) throw bad();
    std::string num(text.substr(0, i));
    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/') throw bad();
        ++i;
        std::size_t den_start = i;
        if (i >= text.size() || text[i] == '0') throw bad();
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != text.size()) throw bad();
        den = std::string(text.substr(den_start));
    }
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vec& axpy(Vec& y, const Rational& a, const Vec& x) {
    if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
    if (sgn(a) == 0) return y;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) y[i] += a * x[i];
    return y;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    return axpy(r, 1, b);
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    return axpy(r, -1, b);
}

Vec operator*(const Rational& s, const Vec& v) {
    Vec r(v.size());
    if (sgn(s) == 0) return r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) r[i] = s * v[i];
    return r;
}

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) s.emplace_back(i, v[i]);
    return s;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
    Vec d(n);
    for (const auto& [i, x] : v) d.at(i) = x;
    return d;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("unflatten: length mismatch");
    Matrix m(rows, cols);
    m.data_ = v;
    return m;
}

Rational& Matrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix::at out of bounds");
    return data_[r * cols_ + c];
}

const Rational& Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix::at out of bounds");
    return data_[r * cols_ + c];
}

Vec Matrix::column(std::size_t c) const {
    if (c >= cols_) throw std::out_of_range("Matrix::column out of bounds");
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vec Matrix::row(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("Matrix::row out of bounds");
    return Vec(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
    Vec y(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(x[c]) == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational& a = (*this)(r, c);
            if (sgn(a) != 0) y[r] += a * x[c];
        }
    }
    return y;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const { return jtkk::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix +: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (sgn(o.data_[i]) != 0) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix -: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (sgn(o.data_[i]) != 0) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : data_)
        if (sgn(x) != 0) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix *: shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& y = b(k, j);
                if (sgn(y) != 0) m(i, j) += x * y;
            }
        }
    return m;
}

// ------------------------------------------------------------ RowReducer

RowReducer::RowReducer(std::size_t cols)
    : cols_(cols), pivot_row_of_col_(cols, -1), scratch_(cols), touched_(cols, 0) {}

SparseVec RowReducer::reduce(const SparseVec& row) const {
    std::vector<std::size_t> touched;
    auto touch = [&](std::size_t c) {
        if (!touched_[c]) {
            touched_[c] = 1;
            touched.push_back(c);
        }
    };
    for (const auto& [c, v] : row) {
        if (c >= cols_) throw std::out_of_range("RowReducer: column out of range");
        if (pivot_row_of_col_[c] >= 0) continue;
        touch(c);
        scratch_[c] += v;
    }
    for (const auto& [c, v] : row) {
        long pr = pivot_row_of_col_[c];
        if (pr < 0) continue;
        for (const auto& [c2, w] : rows_[static_cast<std::size_t>(pr)]) {
            if (c2 == c) continue;
            touch(c2);
            scratch_[c2] -= v * w;
        }
    }
    std::sort(touched.begin(), touched.end());
    SparseVec out;
    for (std::size_t c : touched) {
        if (sgn(scratch_[c]) != 0) out.emplace_back(c, scratch_[c]);
        scratch_[c] = 0;
        touched_[c] = 0;
    }
    return out;
}

namespace {

// a -= s * b, both sorted sparse.
void sparse_sub_scaled(SparseVec& a, const Rational& s, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(std::move(a[i++]));
        } else if (i >= a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -s * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second - s * b[j].second;
            if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

}  // namespace

void sparse_axpy(SparseVec& acc, const Rational& s, const SparseVec& v) {
    if (sgn(s) == 0 || v.empty()) return;
    Rational neg = -s;
    sparse_sub_scaled(acc, neg, v);
}

bool RowReducer::add(const SparseVec& row) {
    if (full()) return false;
    SparseVec red = reduce(row);
    if (red.empty()) return false;
    std::size_t pc = red.front().first;
    Rational inv = 1 / red.front().second;
    for (auto& [c, v] : red) v *= inv;
    for (auto& other : rows_) {
        auto it = std::lower_bound(other.begin(), other.end(), pc,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        if (it == other.end() || it->first != pc) continue;
        Rational s = it->second;
        sparse_sub_scaled(other, s, red);
    }
    pivot_row_of_col_[pc] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(red));
    return true;
}

Subspace RowReducer::row_space() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().first < rows_[b].front().first; });
    Subspace s(cols_);
    for (std::size_t i : order) {
        s.basis_.push_back(to_dense(rows_[i], cols_));
        s.sparse_.push_back(rows_[i]);
        s.pivots_.push_back(rows_[i].front().first);
    }
    return s;
}

Subspace RowReducer::kernel() const {
    std::vector<Vec> vecs;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (pivot_row_of_col_[f] >= 0) continue;
        Vec v(cols_);
        v[f] = 1;
        for (const auto& r : rows_) {
            auto it = std::lower_bound(r.begin(), r.end(), f,
                                       [](const auto& e, std::size_t c) { return e.first < c; });
            if (it != r.end() && it->first == f) v[r.front().first] = -it->second;
        }
        vecs.push_back(std::move(v));
    }
    return Subspace::span(cols_, vecs);
}

// -------------------------------------------------------------- Subspace

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.basis_.push_back(unit_vec(ambient, i));
        s.sparse_.push_back({{i, Rational(1)}});
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    RowReducer rr(ambient);
    for (const auto& v : vectors) {
        if (v.size() != ambient) throw std::invalid_argument("Subspace::span: ambient mismatch");
        rr.add(v);
    }
    return rr.row_space();
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::coordinates: ambient mismatch");
    Vec c(basis_.size());
    Vec rest = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        c[i] = v[pivots_[i]];
        if (sgn(c[i]) == 0) continue;
        for (const auto& [k, x] : sparse_[i]) rest[k] -= c[i] * x;
    }
    if (!is_zero(rest)) return std::nullopt;
    return c;
}

Vec Subspace::from_coordinates(const Vec& c) const {
    if (c.size() != basis_.size()) throw std::invalid_argument("Subspace::from_coordinates: length mismatch");
    Vec v(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, c[i], basis_[i]);
    return v;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
}

Subspace Subspace::annihilator() const {
    RowReducer rr(ambient_);
    for (const auto& b : basis_) rr.add(b);
    return rr.kernel();
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::intersect: ambient mismatch");
    RowReducer rr(ambient_);
    for (const auto& a : annihilator().basis_) rr.add(a);
    for (const auto& a : other.annihilator().basis_) rr.add(a);
    return rr.kernel();
}

std::size_t Subspace::quotient_dim(const Subspace& other) const { return dim() - intersect(other).dim(); }

// ------------------------------------------------------- free functions

Subspace kernel(const Matrix& m) {
    RowReducer rr(m.cols());
    for (std::size_t r = 0; r < m.rows() && !rr.full(); ++r) rr.add(m.row(r));
    return rr.kernel();
}

Subspace kernel(const SparseSystem& s) {
    RowReducer rr(s.cols);
    for (const auto& row : s.rows) {
        if (rr.full()) break;
        rr.add(row);
    }
    return rr.kernel();
}

std::size_t rank(const Matrix& m) {
    RowReducer rr(m.cols());
    for (std::size_t r = 0; r < m.rows() && !rr.full(); ++r) rr.add(m.row(r));
    return rr.rank();
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    // Augmented rows [m | b]; inconsistent iff the last column becomes a pivot.
    const std::size_t n = m.cols();
    RowReducer rr(n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vec row = m.row(r);
        row.push_back(b[r]);
        rr.add(row);
    }
    Subspace rs = rr.row_space();
    Vec x(n);
    for (std::size_t i = 0; i < rs.dim(); ++i) {
        std::size_t p = rs.pivots()[i];
        if (p == n) return std::nullopt;
        x[p] = rs.basis()[i][n];
    }
    if (m.apply(x) != b) throw std::logic_error("solve: verification failed");
    return x;
}

}  // namespace jtkk
