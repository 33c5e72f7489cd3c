#pragma once

// Exact dense linear algebra over a prime field F_p.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace smith {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on incompatible shapes, fields, or complexes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A prime field F_p with 2 <= p < 2^31.
class Field {
 public:
  /// F_2.
  Field() = default;
  explicit Field(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t reduce(std::int64_t v) const;
  /// (-1)^k as a residue.
  std::uint32_t sign(long long k) const { return (k % 2 == 0) ? 1 : p_ - 1; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_ = 2;
};

bool is_prime(std::uint64_t n);

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  /// Shape-checked constructor from integer rows; `rows` may be empty when nrows == 0.
  static Matrix from_rows(Field field, std::size_t nrows, std::size_t ncols,
                          const std::vector<std::vector<std::int64_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<std::uint32_t>& data() const { return data_; }
  std::vector<std::uint32_t>& data() { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix column(std::size_t c) const;
  Matrix scaled(std::uint32_t k) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& blocks, Field field, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& blocks, Field field, std::size_t cols);
Matrix block_diagonal(const std::vector<Matrix>& blocks, Field field);
Matrix kron(const Matrix& a, const Matrix& b);

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Columns form a basis of ker a; one column per free variable of rref(a).
Matrix kernel_basis(const Matrix& a);
/// Independent columns of `a` spanning its image (the pivot columns).
Matrix column_basis(const Matrix& a);
/// Some X with aX = b, or nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);
bool is_injective(const Matrix& a);
bool is_surjective(const Matrix& a);
bool is_invertible(const Matrix& a);
/// True for a square matrix with exactly one nonzero entry per row and column, each equal to +-1.
bool is_signed_permutation(const Matrix& a);
bool is_permutation(const Matrix& a);

/// Incrementally maintained row-echelon basis of a subspace of F_p^n.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t length);
  /// Adds `v` if it is independent of the current span; returns whether it was added.
  bool insert(std::vector<std::uint32_t> v);
  bool contains(std::vector<std::uint32_t> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t length() const { return length_; }

 private:
  // Reduces v in place against the stored pivots; returns the first nonzero index or length_.
  std::size_t reduce(std::vector<std::uint32_t>& v) const;

  Field field_;
  std::size_t length_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

/// Chooses standard basis vectors completing the column span of `image` to all of
/// F_p^rows, scanning e_0, e_1, ... and keeping those independent of everything so far.
std::vector<std::size_t> complement_indices(const Matrix& image);

/// Affine system  sum_k L_k . T_k(X_k) . R_k = C  over unknown matrices X_k, where T_k is
/// the identity, X -> kron(X, I_m), or X -> kron(I_m, X). Equations are eliminated as they
/// are added, so memory stays proportional to the number of unknown scalars.
class LinearSystem {
 public:
  enum class Shape { Plain, KronRight, KronLeft };

  struct Term {
    Matrix left;
    std::size_t unknown;
    Matrix right;
    Shape shape = Shape::Plain;
    std::size_t kron_dim = 1;
  };

  explicit LinearSystem(Field field);

  std::size_t add_unknown(std::size_t rows, std::size_t cols);
  std::size_t unknown_count() const { return shapes_.size(); }
  std::size_t scalar_count() const { return total_; }
  const Field& field() const { return field_; }
  std::pair<std::size_t, std::size_t> unknown_shape(std::size_t k) const { return shapes_[k]; }

  /// Adds sum(terms) = rhs. A term with an empty `left` stands for the identity.
  void add_equation(const std::vector<Term>& terms, const Matrix& rhs);
  /// Fixes X_k = value.
  void fix(std::size_t unknown, const Matrix& value);

  bool consistent() const { return consistent_; }
  /// Any satisfying assignment (free variables set to zero), or nullopt.
  std::optional<std::vector<Matrix>> solve() const;
  /// Basis of the solution space of the homogeneous system.
  std::vector<std::vector<Matrix>> nullspace() const;
  std::size_t nullity() const { return total_ - rows_.size(); }

  static Term term(const Matrix& left, std::size_t unknown, const Matrix& right) {
    return Term{left, unknown, right, Shape::Plain, 1};
  }

 private:
  void add_row(std::vector<std::uint32_t> row);
  std::vector<Matrix> unflatten(const std::vector<std::uint32_t>& x) const;

  Field field_;
  std::vector<std::pair<std::size_t, std::size_t>> shapes_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  bool consistent_ = true;
  // Echelon rows of length total_ + 1 (last entry is the right-hand side).
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

/// Solves a system given as a flat list of equations; the single engine behind every
/// lifting and homotopy search.
std::optional<std::vector<Matrix>> solve_linear_constraints(const LinearSystem& system);

}  // namespace smith
