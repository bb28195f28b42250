#include "hopf/representation.hpp"

namespace hopf {

Representation::Representation(HopfAlgebraPtr algebra, std::size_t dim, std::vector<Matrix> mats)
    : algebra_(std::move(algebra)), dim_(dim), mats_(std::move(mats)) {
  if (!algebra_)
    throw InputError("representation has no algebra");
  if (mats_.size() != algebra_->dim())
    throw InputError("representation needs " + std::to_string(algebra_->dim()) + " matrices, got " +
                     std::to_string(mats_.size()));
  for (const auto &m : mats_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw InputError("representation matrices must be " + std::to_string(dim_) + "x" + std::to_string(dim_));
}

Matrix Representation::image(const Vector &x) const {
  const Field &f = algebra_->k();
  Matrix out(algebra_->field(), dim_, dim_);
  for (std::size_t i = 0; i < mats_.size(); ++i) {
    if (f.is_zero(x[i]))
      continue;
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        if (!f.is_zero(mats_[i](r, c)))
          f.add_mul(out(r, c), x[i], mats_[i](r, c));
  }
  return out;
}

Matrix Representation::flattened() const {
  Matrix out(algebra_->field(), dim_ * dim_, mats_.size());
  for (std::size_t i = 0; i < mats_.size(); ++i)
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        out(r * dim_ + c, i) = mats_[i](r, c);
  return out;
}

bool same_algebra(const HopfAlgebraPtr &a, const HopfAlgebraPtr &b) {
  return a == b || a->same_structure(*b);
}

RepReport verify_rep(const Representation &pi) {
  const HopfAlgebra &h = *pi.algebra();
  const std::size_t d = h.dim();
  RepReport r;
  for (std::size_t i = 0; i < d && r.multiplicative; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (pi[i] * pi[j] != pi.image(h.tables().mult[i * d + j])) {
        r.multiplicative = false;
        r.witness = {i, j};
        break;
      }
  r.unital = pi.image(h.unit()) == Matrix::identity(h.field(), pi.dim());
  return r;
}

Subspace rep_kernel(const Representation &pi) { return kernel(pi.flattened()); }

Representation trivial_rep(const HopfAlgebraPtr &h) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < h->dim(); ++i) {
    Matrix m(h->field(), 1, 1);
    m(0, 0) = h->counit_vector()[i];
    mats.push_back(std::move(m));
  }
  return Representation(h, 1, std::move(mats));
}

Representation regular_rep(const HopfAlgebraPtr &h) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < h->dim(); ++i)
    mats.push_back(h->left_mult_matrix(h->basis_vector(i)));
  return Representation(h, h->dim(), std::move(mats));
}

Representation character_rep(const HopfAlgebraPtr &h, const Functional &phi) {
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < h->dim(); ++i) {
    Matrix m(h->field(), 1, 1);
    m(0, 0) = phi.coeffs[i];
    mats.push_back(std::move(m));
  }
  return Representation(h, 1, std::move(mats));
}

Representation dual_rep(const Representation &pi) {
  const HopfAlgebra &h = *pi.algebra();
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < h.dim(); ++i)
    mats.push_back(pi.image(h.antipode_matrix().column(i)).transpose());
  return Representation(pi.algebra(), pi.dim(), std::move(mats));
}

Representation tensor_rep(const Representation &pi, const Representation &rho) {
  if (!same_algebra(pi.algebra(), rho.algebra()))
    throw MathError("tensor of representations of different algebras");
  const HopfAlgebra &h = *pi.algebra();
  const Field &f = h.k();
  const std::size_t d = h.dim();
  const std::size_t n = pi.dim() * rho.dim();
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix m(h.field(), n, n);
    const Vector &di = h.tables().comult[i];
    for (std::size_t jk = 0; jk < d * d; ++jk) {
      if (f.is_zero(di[jk]))
        continue;
      Matrix term = pi[jk / d].kron(rho[jk % d]);
      m = m + term.scaled(di[jk]);
    }
    mats.push_back(std::move(m));
  }
  return Representation(pi.algebra(), n, std::move(mats));
}

Representation product_rep(const Representation &pi, const Representation &rho) {
  if (!same_algebra(pi.algebra(), rho.algebra()))
    throw MathError("product of representations of different algebras");
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < pi.algebra()->dim(); ++i)
    mats.push_back(direct_sum(pi[i], rho[i]));
  return Representation(pi.algebra(), pi.dim() + rho.dim(), std::move(mats));
}

Representation pullback_rep(const HopfAlgebraPtr &h, const Matrix &projection, const Representation &rho) {
  if (projection.cols() != h->dim() || projection.rows() != rho.algebra()->dim())
    throw InputError("projection shape does not match algebras");
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < h->dim(); ++i)
    mats.push_back(rho.image(projection.column(i)));
  return Representation(h, rho.dim(), std::move(mats));
}

Word reduce_word(const Word &w, std::size_t antipode_order) {
  Word out = w;
  for (auto &l : out.letters)
    l %= antipode_order;
  return out;
}

std::string to_string(const Word &w) {
  if (w.letters.empty())
    return "1";
  std::string s;
  for (auto l : w.letters)
    s += "a" + std::to_string(l);
  return s;
}

Representation iterated_dual(const Representation &pi, std::size_t k) {
  Representation out = pi;
  for (std::size_t i = 0; i < k; ++i)
    out = dual_rep(out);
  return out;
}

Representation word_rep(const Representation &pi, const Word &w) {
  if (w.letters.empty())
    return trivial_rep(pi.algebra());
  Representation out = iterated_dual(pi, w.letters.front());
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    out = tensor_rep(out, iterated_dual(pi, w.letters[i]));
  return out;
}

bool pointed_criterion(const Representation &pi, const std::vector<Vector> &grouplikes) {
  const Subspace ker = rep_kernel(pi);
  for (const auto &g : grouplikes) {
    Subspace p = skew_primitives(*pi.algebra(), g);
    if (!intersect(p, ker).is_zero())
      return false;
  }
  return true;
}

} // namespace hopf
