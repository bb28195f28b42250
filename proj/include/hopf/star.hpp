#pragma once

#include "hopf/extensions.hpp"

#include <optional>

namespace hopf {

/// Antilinear involution x -> star_matrix * sigma(x).
struct StarStructure {
  Matrix star_matrix;
};

struct StarReport {
  bool involutive = true;
  bool antimultiplicative = true;
  bool comultiplicative = true; // Delta(x^*) = Delta(x)^{* (x) *}
  bool counit = true;           // eps(x^*) = sigma(eps(x))
  bool antipode = true;         // S o * o S o * = id

  bool passed() const { return involutive && antimultiplicative && comultiplicative && counit && antipode; }
};

StarReport verify_star(const HopfAlgebra &h, const StarStructure &star);
Vector apply_star(const HopfAlgebra &h, const StarStructure &star, const Vector &x);
/// J + J^*
Subspace star_ideal_closure(const HopfAlgebra &h, const StarStructure &star, const Subspace &j);

/// Hermitian form <v, w> = w^dagger G v (sigma-conjugate transpose).
struct SesquilinearForm {
  Matrix gram;
};

bool is_hermitian(const SesquilinearForm &form);

enum class Positivity { positive_definite, positive_semidefinite, not_positive, undecidable };
const char *to_string(Positivity p);

/// Exact signature test by Hermitian elimination; undecidable unless the
/// fixed field of sigma is Q.
Positivity positivity(const SesquilinearForm &form);

/// G pi(x^*) = pi(x)^dagger G on the basis (identity form when omitted).
bool is_star_rep(const Representation &pi, const StarStructure &star,
                 const std::optional<SesquilinearForm> &form = {});

struct InnerUnitaryResult {
  bool inner_unitary = false;
  HopfImageResult largest_star_ideal;
};

/// Largest Hopf *-ideal inside Ker(pi) is zero. Throws MathError when the
/// star fails verify_star or pi is not a *-representation for `form`.
InnerUnitaryResult inner_unitary(const Representation &pi, const StarStructure &star,
                                 const std::optional<SesquilinearForm> &form = {});

/// a group-like, phi a character, m >= 1, such that
/// S^{2m}(x) = a (phi * id * phi^{-1})(x) a^{-1}.
struct RegularAntipodeWitness {
  Vector a;
  Functional phi;
  std::size_t m = 1;
};

/// phi^{-1} = phi o S; throws MathError if it is not a convolution inverse.
Functional convolution_inverse(const HopfAlgebra &h, const Functional &phi);
/// Throws MathError when phi is not a character or a is not group-like.
bool check_regular_antipode(const HopfAlgebra &h, const RegularAntipodeWitness &w);
/// pi' = pi (+) phi (+) phi^{-1}, dimension n + 2.
Representation augment_regular(const Representation &pi, const RegularAntipodeWitness &w);

struct ConditionalExpectation {
  Matrix map; // d x d, image inside A
  bool idempotent = false;
  bool fixes_subalgebra = false;
  bool image_is_subalgebra = false;
  bool bimodule = false; // E(a x) = a E(x), E(x a) = E(x) a

  bool passed() const { return idempotent && fixes_subalgebra && image_is_subalgebra; }
};

/// E = (id (x) phi)(id (x) p) Delta with phi the Haar functional of the
/// target of p. Throws MathError when that Haar functional does not exist.
ConditionalExpectation conditional_expectation(const SubalgebraEmbedding &emb, const HopfAlgebra &target,
                                               const Matrix &p);

struct UnitaryInduction {
  Representation induced;       // on (H (x) V) / radical
  SesquilinearForm form;        // nondegenerate form on the induced space
  Matrix gram;                  // full Gram matrix on H (x) V
  std::size_t gram_rank = 0;
  bool hermitian = false;
  bool isometric = false;       // v -> 1 (x) v preserves the form
  bool radical_invariant = false;
  Positivity positivity = Positivity::undecidable;
  Representation theta;         // regular rep of H//A through p (+) induced
  SesquilinearForm theta_form;
  bool theta_star_rep = false;
  bool rho_inner_unitary = false;
  bool theta_inner_unitary = false;
};

/// Induction of a *-representation rho of A (unitary for `v_form`) to H
/// through <x (x) v, y (x) w> = <rho(E(y^* x)) v, w>, killing null vectors.
UnitaryInduction unitary_induction(const SubalgebraEmbedding &emb, const Representation &rho,
                                   const SesquilinearForm &v_form);

} // namespace hopf
