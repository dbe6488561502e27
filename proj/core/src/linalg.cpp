#include "koszulkit/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace koszulkit {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& b = o(k, j);
                if (sgn(b) == 0) continue;
                mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
                p(i, j) += t;
            }
        }
    }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix s(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix s(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
    return s;
}

Matrix Matrix::scaled(const Rational& s) const {
    Matrix m(*this);
    for (auto& v : m.data_) v *= s;
    return m;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out(rows_);
    Rational t;
    for (std::size_t k = 0; k < cols_; ++k) {
        if (sgn(v[k]) == 0) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            mpq_mul(t.get_mpq_t(), a.get_mpq_t(), v[k].get_mpq_t());
            out[i] += t;
        }
    }
    return out;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
}

Matrix Matrix::hcat(const Matrix& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("hcat row mismatch");
    Matrix m(rows_, cols_ + right.cols_);
    m.set_block(0, 0, *this);
    m.set_block(0, cols_, right);
    return m;
}

Matrix Matrix::vcat(const Matrix& below) const {
    if (cols_ != below.cols_) throw std::invalid_argument("vcat column mismatch");
    Matrix m(rows_ + below.rows_, cols_);
    m.set_block(0, 0, *this);
    m.set_block(rows_, 0, below);
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return sgn(v) == 0; });
}

std::size_t Matrix::nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const Rational& v) { return sgn(v) != 0; }));
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

RrefResult rref(Matrix m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> nz;
    Rational t, inv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && sgn(m(p, c)) == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = c; j < C; ++j) swap(m(p, j), m(r, j));
        inv = 1 / m(r, c);
        nz.clear();
        for (std::size_t j = c; j < C; ++j) {
            if (sgn(m(r, j)) == 0) continue;
            m(r, j) *= inv;
            nz.push_back(j);
        }
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j : nz) {
                mpq_mul(t.get_mpq_t(), f.get_mpq_t(), m(r, j).get_mpq_t());
                m(i, j) -= t;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    if (m.rows() > m.cols()) return rref(m.transpose()).rank();
    return rref(m).rank();
}

bool Subspace::operator==(const Subspace& o) const {
    if (ambient_dim != o.ambient_dim || dim() != o.dim()) return false;
    return column_space(basis).basis == column_space(o.basis).basis;
}

Vector Subspace::coordinates(const Vector& v) const {
    Vector c(pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k) c[k] = v[pivots[k]];
    return c;
}

Matrix Subspace::coordinates(const Matrix& m) const {
    return m.select_rows(pivots);
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_dim) return false;
    Vector back = basis.apply(coordinates(v));
    return back == v;
}

Subspace zero_subspace(std::size_t ambient) {
    return Subspace{ambient, Matrix(ambient, 0), {}};
}

Subspace full_subspace(std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    std::iota(piv.begin(), piv.end(), 0);
    return Subspace{ambient, Matrix::identity(ambient), piv};
}

Subspace column_space(const Matrix& m) {
    if (m.cols() == 0) return zero_subspace(m.rows());
    RrefResult rr = rref(m.transpose());
    const std::size_t k = rr.rank();
    Matrix b(m.rows(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) b(i, j) = rr.reduced(j, i);
    return Subspace{m.rows(), std::move(b), std::move(rr.pivots)};
}

Subspace span_of(const std::vector<Vector>& vectors, std::size_t ambient) {
    SpanBuilder sb(ambient);
    for (const auto& v : vectors) {
        sb.add(v);
        if (sb.full()) break;
    }
    return sb.subspace();
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("subspace ambient mismatch");
    return column_space(a.basis.hcat(b.basis));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("subspace ambient mismatch");
    // a c = b d  <=>  [a | -b] (c, d) = 0
    Matrix stacked = a.basis.hcat(b.basis.scaled(-1));
    Subspace k = kernel_basis(stacked);
    Matrix coeffs(a.dim(), k.dim());
    for (std::size_t j = 0; j < k.dim(); ++j)
        for (std::size_t i = 0; i < a.dim(); ++i) coeffs(i, j) = k.basis(i, j);
    return column_space(a.basis * coeffs);
}

bool is_subspace_of(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim) return false;
    for (std::size_t j = 0; j < a.dim(); ++j)
        if (!b.contains(a.basis.column(j))) return false;
    return true;
}

Subspace kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < C; ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix b(C, free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        b(free[j], j) = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) b(rr.pivots[i], j) = -rr.reduced(i, free[j]);
    }
    return Subspace{C, std::move(b), std::move(free)};
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
    RrefResult rr = rref(std::move(aug));
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.reduced(i, m.cols());
    return x;
}

Subspace annihilator(const Subspace& s) {
    if (s.dim() == 0) return full_subspace(s.ambient_dim);
    return kernel_basis(s.basis.transpose());
}

Subspace orthogonal_complement(const Subspace& s, const Subspace& within, const Matrix& gram) {
    if (s.dim() == 0) return within;
    Matrix cond = s.basis.transpose() * gram * within.basis;
    Subspace k = kernel_basis(cond);
    return column_space(within.basis * k.basis);
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RrefResult rr = rref(m.hcat(Matrix::identity(n)));
    if (rr.rank() < n || (n > 0 && rr.pivots[n - 1] != n - 1)) throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

Vector SpanBuilder::reduce(Vector v) const {
    Rational t;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (sgn(v[p]) == 0) continue;
        Rational f = v[p];
        const Vector& row = rows_[k];
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (sgn(row[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), row[j].get_mpq_t());
            v[j] -= t;
        }
    }
    return v;
}

bool SpanBuilder::add(Vector v) {
    if (v.size() != ambient_) throw std::invalid_argument("SpanBuilder: vector length mismatch");
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < ambient_ && sgn(v[p]) == 0) ++p;
    if (p == ambient_) return false;
    Rational inv = 1 / v[p];
    for (auto& x : v)
        if (sgn(x) != 0) x *= inv;
    Rational t;
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0) continue;
        Rational f = row[p];
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (sgn(v[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), v[j].get_mpq_t());
            row[j] -= t;
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

Subspace SpanBuilder::subspace() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    Matrix b(ambient_, rows_.size());
    std::vector<std::size_t> piv;
    for (std::size_t j = 0; j < order.size(); ++j) {
        for (std::size_t i = 0; i < ambient_; ++i) b(i, j) = rows_[order[j]][i];
        piv.push_back(pivots_[order[j]]);
    }
    return Subspace{ambient_, std::move(b), std::move(piv)};
}

std::string vector_witness(const Vector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + "]";
}

bool is_supported_prime(int p) {
    return p == 2 || p == 3 || p == 5 || p == 7;
}

std::size_t gf_rank(const std::vector<std::vector<int>>& m, int p) {
    if (!is_supported_prime(p)) throw std::invalid_argument("gf_rank: p must be a prime <= 7");
    int inv[8] = {0};
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b)
            if ((a * b) % p == 1) inv[a] = b;
    std::vector<std::vector<int>> a = m;
    const std::size_t R = a.size();
    const std::size_t C = R ? a[0].size() : 0;
    for (auto& row : a) {
        if (row.size() != C) throw std::invalid_argument("gf_rank: ragged matrix");
        for (auto& v : row) v = ((v % p) + p) % p;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t q = r;
        while (q < R && a[q][c] == 0) ++q;
        if (q == R) continue;
        std::swap(a[q], a[r]);
        const int s = inv[a[r][c]];
        for (auto& v : a[r]) v = (v * s) % p;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const int f = a[i][c];
            for (std::size_t j = c; j < C; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

}  // namespace koszulkit
