#ifndef KOSZULKIT_LINALG_HPP
#define KOSZULKIT_LINALG_HPP

#include "koszulkit/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace koszulkit {

using Vector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Rational>& data() const { return data_; }

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rational& s) const;
    Vector apply(const Vector& v) const;

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_columns(const std::vector<std::size_t>& idx) const;
    Matrix hcat(const Matrix& right) const;
    Matrix vcat(const Matrix& below) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    bool is_zero() const;
    std::size_t nonzeros() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix block_diagonal(const std::vector<Matrix>& blocks);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

// Column span. `basis` columns are independent; when produced by this module
// they are in canonical form: transpose of an RREF, so the rows listed in
// `pivots` form an identity block and coordinates are read off directly.
struct Subspace {
    std::size_t ambient_dim = 0;
    Matrix basis;
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return basis.cols(); }
    bool operator==(const Subspace& o) const;

    // Coordinates of v in the canonical basis; v must lie in the span.
    Vector coordinates(const Vector& v) const;
    // Coordinates of each column of m; every column must lie in the span.
    Matrix coordinates(const Matrix& m) const;
    bool contains(const Vector& v) const;
};

Subspace zero_subspace(std::size_t ambient);
Subspace full_subspace(std::size_t ambient);
Subspace column_space(const Matrix& m);
Subspace span_of(const std::vector<Vector>& vectors, std::size_t ambient);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
bool is_subspace_of(const Subspace& a, const Subspace& b);

Subspace kernel_basis(const Matrix& m);
std::optional<Vector> solve(const Matrix& m, const Vector& b);
Subspace annihilator(const Subspace& s);

// Orthogonal complement of s inside `within` for the symmetric form `gram`
// on the ambient space.
Subspace orthogonal_complement(const Subspace& s, const Subspace& within, const Matrix& gram);

Matrix inverse(const Matrix& m);

// Incrementally maintained row-reduced span, used when many candidate
// vectors are offered and most turn out to be redundant.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t ambient) : ambient_(ambient) {}
    // Returns true when v enlarged the span.
    bool add(Vector v);
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    bool full() const { return rows_.size() == ambient_; }
    Vector reduce(Vector v) const;
    Subspace subspace() const;

private:
    std::size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

// "[p/q,...]" for witnesses.
std::string vector_witness(const Vector& v);

// Rank over F_p for prime p <= 7; entries are reduced mod p first.
std::size_t gf_rank(const std::vector<std::vector<int>>& m, int p);
bool is_supported_prime(int p);

}  // namespace koszulkit

#endif
