#pragma once

#include "hopf/scalar.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hopf {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over one Field.
class Matrix {
public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  /// Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(FieldPtr field, std::size_t cols, std::span<const Vector> rows);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(FieldPtr field, std::size_t rows, std::span<const Vector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr &field() const { return field_; }

  Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix operator*(const Matrix &rhs) const;
  Matrix operator+(const Matrix &rhs) const;
  Matrix operator-(const Matrix &rhs) const;
  Vector operator*(const Vector &v) const;
  Matrix scaled(const Scalar &s) const;
  Matrix transpose() const;
  /// Entrywise sigma.
  Matrix conj() const;
  /// sigma-conjugate transpose.
  Matrix adjoint() const;
  /// Kronecker product; row (a, b) sits at a * rhs.rows() + b.
  Matrix kron(const Matrix &rhs) const;

  bool is_zero() const;
  bool operator==(const Matrix &rhs) const;

private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Block diagonal sum.
Matrix direct_sum(const Matrix &a, const Matrix &b);
/// Columns stacked side by side: [a | b].
Matrix hconcat(const Matrix &a, const Matrix &b);
/// Rows stacked: [a ; b].
Matrix vconcat(const Matrix &a, const Matrix &b);

Vector zero_vector(const Field &f, std::size_t n);
Vector unit_vector(const Field &f, std::size_t n, std::size_t i);
Vector add(const Field &f, const Vector &a, const Vector &b);
Vector sub(const Field &f, const Vector &a, const Vector &b);
Vector scale(const Field &f, const Scalar &s, const Vector &v);
Vector conj(const Field &f, const Vector &v);
bool is_zero(const Field &f, const Vector &v);
/// Coordinates of a (x) b at index i * b.size() + j.
Vector kron(const Field &f, const Vector &a, const Vector &b);

/// Subspace of K^n held by its reduced row-echelon basis. The basis is
/// canonical, so two subspaces are equal iff their bases are equal.
class Subspace {
public:
  Subspace() = default;

  /// Canonical basis of the span of `vectors`. Throws InputError on mixed
  /// dimensions.
  static Subspace span(FieldPtr field, std::size_t ambient, std::vector<Vector> vectors);
  static Subspace zero(FieldPtr field, std::size_t ambient);
  static Subspace full(FieldPtr field, std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t codim() const { return ambient_ - basis_.size(); }
  const std::vector<Vector> &basis() const { return basis_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }
  const FieldPtr &field() const { return field_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  /// `v` minus its component along the basis at pivot positions; zero iff
  /// v lies in the subspace.
  Vector reduce(Vector v) const;
  bool contains(const Vector &v) const;
  bool contains(const Subspace &other) const;

  /// Rows form the basis.
  Matrix basis_matrix() const;
  /// Rows span the annihilator: A v = 0 iff v is in the subspace.
  Matrix annihilator() const;

  bool operator==(const Subspace &rhs) const;

private:
  FieldPtr field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace rref_basis(FieldPtr field, std::size_t ambient, std::vector<Vector> vectors);
Subspace kernel(const Matrix &m);
std::size_t rank(const Matrix &m);
/// Span of the columns.
Subspace column_space(const Matrix &m);
Subspace intersect(const Subspace &u, const Subspace &w);
Subspace sum(const Subspace &u, const Subspace &w);
/// {v : m v in w}
Subspace preimage(const Matrix &m, const Subspace &w);
/// {m u : u in u}
Subspace image(const Matrix &m, const Subspace &u);
/// {u in u : m u in w}; cheaper than intersect(u, preimage(m, w)).
Subspace restricted_preimage(const Subspace &u, const Matrix &m, const Subspace &w);
/// {u in u : a u = 0}
Subspace restricted_kernel(const Subspace &u, const Matrix &a);

/// Linear solutions x of m x = b, if any.
std::optional<Vector> solve(const Matrix &m, const Vector &b);

/// Quotient K^n / J realized on the coordinates that are not pivots of J.
struct QuotientMap {
  Matrix projection; // (n - dim J) x n
  Matrix section;    // n x (n - dim J); projection * section = identity
  std::vector<std::size_t> complement; // retained coordinates
};
QuotientMap quotient_map(const Subspace &j);

} // namespace hopf
