#include "hopf/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace hopf {

namespace {

void require_same_field(const FieldPtr &a, const FieldPtr &b) {
  if (a != b && !a->same_as(*b))
    throw MathError("field mismatch");
}

// In-place reduced row echelon form with first-nonzero pivoting. Zero rows
// are dropped; returns the pivot column of each remaining row.
std::vector<std::size_t> rref_in_place(const Field &f, std::vector<Vector> &rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && f.is_zero(rows[piv][col]))
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[rank]);
    Vector &p = rows[rank];
    if (!f.is_one(p[col])) {
      Scalar inv = f.inv(p[col]);
      for (std::size_t j = col; j < cols; ++j)
        if (!f.is_zero(p[j]))
          p[j] = f.mul(p[j], inv);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || f.is_zero(rows[i][col]))
        continue;
      Scalar factor = rows[i][col];
      Vector &r = rows[i];
      for (std::size_t j = col; j < cols; ++j)
        if (!f.is_zero(p[j]))
          r[j] = f.sub(r[j], f.mul(factor, p[j]));
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

std::vector<Vector> matrix_rows(const Matrix &m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row = m.row(r);
    if (!is_zero(*m.field(), row))
      rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = field->one();
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw InputError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(FieldPtr field, std::size_t rows, std::span<const Vector> cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::operator*(const Matrix &rhs) const {
  if (cols_ != rhs.rows_)
    throw InputError("matrix product shape mismatch");
  require_same_field(field_, rhs.field_);
  const Field &f = *field_;
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar &a = (*this)(i, k);
      if (f.is_zero(a))
        continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar &b = rhs(k, j);
        if (!f.is_zero(b))
          f.add_mul(out(i, j), a, b);
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix &rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InputError("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_->add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix &rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InputError("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_->sub(data_[i], rhs.data_[i]);
  return out;
}

Vector Matrix::operator*(const Vector &v) const {
  if (v.size() != cols_)
    throw InputError("matrix-vector shape mismatch");
  const Field &f = *field_;
  Vector out(rows_, f.zero());
  for (std::size_t c = 0; c < cols_; ++c) {
    if (f.is_zero(v[c]))
      continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!f.is_zero((*this)(r, c)))
        f.add_mul(out[r], (*this)(r, c), v[c]);
  }
  return out;
}

Matrix Matrix::scaled(const Scalar &s) const {
  Matrix out = *this;
  for (auto &x : out.data_)
    if (!field_->is_zero(x))
      x = field_->mul(x, s);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::conj() const {
  Matrix out = *this;
  if (field_->has_involution())
    for (auto &x : out.data_)
      x = field_->conj(x);
  return out;
}

Matrix Matrix::adjoint() const { return conj().transpose(); }

Matrix Matrix::kron(const Matrix &rhs) const {
  require_same_field(field_, rhs.field_);
  const Field &f = *field_;
  Matrix out(field_, rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar &a = (*this)(i, j);
      if (f.is_zero(a))
        continue;
      for (std::size_t k = 0; k < rhs.rows_; ++k)
        for (std::size_t l = 0; l < rhs.cols_; ++l)
          if (!f.is_zero(rhs(k, l)))
            out(i * rhs.rows_ + k, j * rhs.cols_ + l) = f.mul(a, rhs(k, l));
    }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [this](const Scalar &s) { return field_->is_zero(s); });
}

bool Matrix::operator==(const Matrix &rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Matrix direct_sum(const Matrix &a, const Matrix &b) {
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

Matrix hconcat(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows())
    throw InputError("hconcat row mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c)
      out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix vconcat(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.cols())
    throw InputError("vconcat column mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      out(a.rows() + r, c) = b(r, c);
  return out;
}

Vector zero_vector(const Field &f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field &f, std::size_t n, std::size_t i) {
  Vector v(n, f.zero());
  v[i] = f.one();
  return v;
}

Vector add(const Field &f, const Vector &a, const Vector &b) {
  Vector out(a.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = f.add(a[i], b[i]);
  return out;
}

Vector sub(const Field &f, const Vector &a, const Vector &b) {
  Vector out(a.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = f.sub(a[i], b[i]);
  return out;
}

Vector scale(const Field &f, const Scalar &s, const Vector &v) {
  Vector out(v.size(), f.zero());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!f.is_zero(v[i]))
      out[i] = f.mul(s, v[i]);
  return out;
}

Vector conj(const Field &f, const Vector &v) {
  Vector out;
  out.reserve(v.size());
  for (const auto &x : v)
    out.push_back(f.conj(x));
  return out;
}

bool is_zero(const Field &f, const Vector &v) {
  return std::all_of(v.begin(), v.end(), [&f](const Scalar &s) { return f.is_zero(s); });
}

Vector kron(const Field &f, const Vector &a, const Vector &b) {
  Vector out(a.size() * b.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i]))
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!f.is_zero(b[j]))
        out[i * b.size() + j] = f.mul(a[i], b[j]);
  }
  return out;
}

Subspace Subspace::span(FieldPtr field, std::size_t ambient, std::vector<Vector> vectors) {
  for (const auto &v : vectors)
    if (v.size() != ambient)
      throw InputError("vector of length " + std::to_string(v.size()) +
                       " in a space of dimension " + std::to_string(ambient));
  Subspace s;
  s.field_ = std::move(field);
  s.ambient_ = ambient;
  std::erase_if(vectors, [&s](const Vector &v) { return hopf::is_zero(*s.field_, v); });
  s.pivots_ = rref_in_place(*s.field_, vectors, ambient);
  s.basis_ = std::move(vectors);
  return s;
}

Subspace Subspace::zero(FieldPtr field, std::size_t ambient) { return span(std::move(field), ambient, {}); }

Subspace Subspace::full(FieldPtr field, std::size_t ambient) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ambient; ++i)
    basis.push_back(unit_vector(*field, ambient, i));
  return span(std::move(field), ambient, std::move(basis));
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_)
    throw InputError("vector dimension does not match subspace ambient dimension");
  const Field &f = *field_;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (f.is_zero(c))
      continue;
    const Vector &b = basis_[r];
    for (std::size_t j = pivots_[r]; j < ambient_; ++j)
      if (!f.is_zero(b[j]))
        v[j] = f.sub(v[j], f.mul(c, b[j]));
  }
  return v;
}

bool Subspace::contains(const Vector &v) const { return hopf::is_zero(*field_, reduce(v)); }

bool Subspace::contains(const Subspace &other) const {
  if (other.ambient_ != ambient_)
    throw InputError("subspace dimension mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const Vector &v) { return contains(v); });
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(field_, ambient_, basis_); }

Matrix Subspace::annihilator() const {
  // Functionals killing the basis: for each free column c, the row with 1 at c
  // and -basis[r][c] at pivot r.
  const Field &f = *field_;
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_)
    is_pivot[p] = true;
  Matrix a(field_, ambient_ - basis_.size(), ambient_);
  std::size_t row = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (is_pivot[c])
      continue;
    a(row, c) = f.one();
    for (std::size_t r = 0; r < basis_.size(); ++r)
      if (!f.is_zero(basis_[r][c]))
        a(row, pivots_[r]) = f.neg(basis_[r][c]);
    ++row;
  }
  return a;
}

bool Subspace::operator==(const Subspace &rhs) const {
  return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
}

Subspace rref_basis(FieldPtr field, std::size_t ambient, std::vector<Vector> vectors) {
  return Subspace::span(std::move(field), ambient, std::move(vectors));
}

Subspace kernel(const Matrix &m) {
  const Field &f = *m.field();
  std::vector<Vector> rows = matrix_rows(m);
  auto pivots = rref_in_place(f, rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c])
      continue;
    Vector v = unit_vector(f, m.cols(), c);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!f.is_zero(rows[r][c]))
        v[pivots[r]] = f.neg(rows[r][c]);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), std::move(basis));
}

std::size_t rank(const Matrix &m) {
  // Eliminate along the shorter side.
  if (m.rows() > m.cols())
    return rank(m.transpose());
  std::vector<Vector> rows = matrix_rows(m);
  return rref_in_place(*m.field(), rows, m.cols()).size();
}

Subspace column_space(const Matrix &m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    cols.push_back(m.column(c));
  return Subspace::span(m.field(), m.rows(), std::move(cols));
}

Subspace intersect(const Subspace &u, const Subspace &w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw InputError("subspace dimension mismatch in intersection");
  if (u.is_zero() || w.is_full())
    return u;
  if (w.is_zero() || u.is_full())
    return w;
  return restricted_kernel(u, w.annihilator());
}

Subspace sum(const Subspace &u, const Subspace &w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw InputError("subspace dimension mismatch in sum");
  std::vector<Vector> all = u.basis();
  all.insert(all.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(u.field(), u.ambient_dim(), std::move(all));
}

Subspace preimage(const Matrix &m, const Subspace &w) {
  if (m.rows() != w.ambient_dim())
    throw InputError("preimage: matrix rows do not match subspace dimension");
  if (w.is_full())
    return Subspace::full(m.field(), m.cols());
  return kernel(w.annihilator() * m);
}

Subspace image(const Matrix &m, const Subspace &u) {
  if (m.cols() != u.ambient_dim())
    throw InputError("image: matrix columns do not match subspace dimension");
  std::vector<Vector> out;
  for (const auto &v : u.basis())
    out.push_back(m * v);
  return Subspace::span(m.field(), m.rows(), std::move(out));
}

Subspace restricted_kernel(const Subspace &u, const Matrix &a) {
  if (a.cols() != u.ambient_dim())
    throw InputError("restricted kernel: dimension mismatch");
  if (u.is_zero() || a.rows() == 0)
    return u;
  // Parametrize u by its basis: x = B^T y, then solve (a B^T) y = 0.
  Matrix bt = u.basis_matrix().transpose();
  Subspace ys = kernel(a * bt);
  std::vector<Vector> out;
  for (const auto &y : ys.basis())
    out.push_back(bt * y);
  return Subspace::span(u.field(), u.ambient_dim(), std::move(out));
}

Subspace restricted_preimage(const Subspace &u, const Matrix &m, const Subspace &w) {
  if (m.rows() != w.ambient_dim() || m.cols() != u.ambient_dim())
    throw InputError("restricted preimage: dimension mismatch");
  if (w.is_full())
    return u;
  return restricted_kernel(u, w.annihilator() * m);
}

std::optional<Vector> solve(const Matrix &m, const Vector &b) {
  if (b.size() != m.rows())
    throw InputError("solve: right-hand side has wrong length");
  const Field &f = *m.field();
  // Augmented system; inconsistent iff a pivot lands in the last column.
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row = m.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  auto pivots = rref_in_place(f, rows, m.cols() + 1);
  Vector x(m.cols(), f.zero());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (pivots[r] == m.cols())
      return std::nullopt;
    x[pivots[r]] = rows[r][m.cols()];
  }
  return x;
}

QuotientMap quotient_map(const Subspace &j) {
  const Field &f = *j.field();
  const std::size_t n = j.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : j.pivots())
    is_pivot[p] = true;
  QuotientMap q;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c])
      q.complement.push_back(c);
  const std::size_t k = q.complement.size();
  q.projection = Matrix(j.field(), k, n);
  q.section = Matrix(j.field(), n, k);
  for (std::size_t i = 0; i < n; ++i) {
    Vector r = j.reduce(unit_vector(f, n, i));
    for (std::size_t c = 0; c < k; ++c)
      q.projection(c, i) = r[q.complement[c]];
  }
  for (std::size_t c = 0; c < k; ++c)
    q.section(q.complement[c], c) = f.one();
  return q;
}

} // namespace hopf
