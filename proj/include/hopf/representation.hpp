#pragma once

#include "hopf/hopf_algebra.hpp"

#include <vector>

namespace hopf {

/// Algebra map H -> End(K^n) given by the images of the basis elements.
class Representation {
public:
  /// Checks shapes only; see verify_rep().
  Representation(HopfAlgebraPtr algebra, std::size_t dim, std::vector<Matrix> mats);

  const HopfAlgebraPtr &algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix> &matrices() const { return mats_; }
  const Matrix &operator[](std::size_t i) const { return mats_[i]; }

  /// pi(x) for x in coordinates.
  Matrix image(const Vector &x) const;
  /// n^2 x d matrix whose column i is pi(e_i) flattened row-major.
  Matrix flattened() const;

private:
  HopfAlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<Matrix> mats_;
};

struct RepReport {
  bool multiplicative = true;
  bool unital = true;
  std::vector<std::size_t> witness; // first failing (i, j)

  bool passed() const { return multiplicative && unital; }
};

RepReport verify_rep(const Representation &pi);
/// {x : pi(x) = 0}
Subspace rep_kernel(const Representation &pi);

Representation trivial_rep(const HopfAlgebraPtr &h);
Representation regular_rep(const HopfAlgebraPtr &h);
/// pi^*(x) = pi(S x)^T
Representation dual_rep(const Representation &pi);
/// Action through Delta on V (x) W, index (a, b) -> a * dim(W) + b.
Representation tensor_rep(const Representation &pi, const Representation &rho);
/// Block-diagonal action on V (+) W.
Representation product_rep(const Representation &pi, const Representation &rho);
/// Representation of H obtained by composing a representation of a quotient
/// with the projection H -> quotient.
Representation pullback_rep(const HopfAlgebraPtr &h, const Matrix &projection, const Representation &rho);
/// Matrix realisation of a character as a 1-dimensional representation.
Representation character_rep(const HopfAlgebraPtr &h, const Functional &phi);

/// Element of the free monoid on alpha_0, alpha_1, ...; alpha_k stands for the
/// k-fold dual V^{*...*}. The empty word is the unit (trivial module).
struct Word {
  std::vector<std::size_t> letters;

  bool operator==(const Word &) const = default;
};

/// Letters reduced modulo the antipode order t (S^t = id, so alpha_k and
/// alpha_{k+t} give identical matrices).
Word reduce_word(const Word &w, std::size_t antipode_order);
std::string to_string(const Word &w);

/// pi^w on V^w = V^{a_1} (x) ... (x) V^{a_r}.
Representation word_rep(const Representation &pi, const Word &w);
/// k-fold dual.
Representation iterated_dual(const Representation &pi, std::size_t k);

/// For every listed group-like g, pi restricted to P_{g,1}(H) is injective.
/// Throws MathError on a non-group-like entry.
bool pointed_criterion(const Representation &pi, const std::vector<Vector> &grouplikes);

/// Same algebra object, or algebras with identical structure constants.
bool same_algebra(const HopfAlgebraPtr &a, const HopfAlgebraPtr &b);

} // namespace hopf
