#pragma once

#include "hopf/hopf_image.hpp"

namespace hopf {

/// Hopf subalgebra A of H: `small` carries A's own structure constants and
/// column a of `inclusion` is the image of its a-th basis vector in H.
struct SubalgebraEmbedding {
  HopfAlgebraPtr big;
  HopfAlgebraPtr small;
  Matrix inclusion;
  Subspace basis; // image of the inclusion inside big
};

struct EmbeddingReport {
  bool injective = true;
  bool unit = true;
  bool multiplicative = true;
  bool comultiplicative = true;
  bool counital = true;
  bool antipode = true;

  bool passed() const { return injective && unit && multiplicative && comultiplicative && counital && antipode; }
};

EmbeddingReport check_embedding(const HopfAlgebra &big, const HopfAlgebra &small, const Matrix &inclusion);
/// Validated embedding; throws InputError naming the first failed condition.
SubalgebraEmbedding make_embedding(HopfAlgebraPtr big, HopfAlgebraPtr small, Matrix inclusion);
/// Restricts H's structure to a subspace closed under all operations. The
/// small algebra uses the subspace's echelon basis. Throws MathError if the
/// subspace is not a Hopf subalgebra.
SubalgebraEmbedding subalgebra_from_subspace(const HopfAlgebraPtr &big, const Subspace &a);

/// ad_l(x)(y) = x_(1) y S(x_(2)) and ad_r(x)(y) = S(x_(1)) y x_(2) preserve A.
bool adjoint_stability(const SubalgebraEmbedding &emb);

struct PlusIdeal {
  Subspace left;  // A^+ H
  Subspace right; // H A^+
  HopfIdealReport report; // for A^+ H

  bool sides_agree() const { return left == right; }
  bool passed() const { return sides_agree() && report.passed(); }
};

/// A^+ H with A^+ = A cap Ker(eps), plus its Hopf-ideal report.
PlusIdeal plus_ideal(const SubalgebraEmbedding &emb);

/// H//A = H / A^+ H. Throws MathError when A^+ H is not a Hopf ideal.
HopfQuotient quotient_by_subalgebra(const SubalgebraEmbedding &emb);

/// {h : (id (x) p) Delta(h) = h (x) 1}. Throws MathError if p is not a Hopf
/// algebra map onto `target`.
Subspace coinvariants(const HopfAlgebra &h, const HopfAlgebra &target, const Matrix &p);

struct ExactSequenceReport {
  bool injective_surjective = false; // (1)
  bool composite_is_counit = false;  // (2) p o i = eps 1
  bool kernel_is_plus_ideal = false; // (3) Ker p = H A^+
  bool coinvariants_equal = false;   // (4) A = H^{co p}

  bool passed() const {
    return injective_surjective && composite_is_counit && kernel_is_plus_ideal && coinvariants_equal;
  }
};

ExactSequenceReport check_exact_sequence(const SubalgebraEmbedding &emb, const HopfAlgebra &target, const Matrix &p);

/// H (x)_A V = (H (x) V) / span{x a (x) v - x (x) rho(a) v}, coordinates of
/// H (x) V at index x * n + v.
struct InducedModule {
  std::size_t dim = 0;
  Subspace relations;
  Matrix projection; // dim x (d n)
  Matrix section;    // (d n) x dim
  Representation rep;
};

InducedModule induced_module(const SubalgebraEmbedding &emb, const Representation &rho);

struct ExtensionRep {
  Representation theta; // regular rep of H//A through p, (+) induced rep
  HopfQuotient quotient;
  InducedModule induced;
  /// False when A is not commutative; inner faithfulness of theta is then
  /// not guaranteed by the extension theorem.
  bool subalgebra_commutative = true;
};

/// theta(x) = (p(x), rho~(x)). Throws MathError when A is not normal.
ExtensionRep extension_rep(const SubalgebraEmbedding &emb, const Representation &rho);

struct GlueResult {
  Representation rep;
  HopfQuotient first, second;
  /// I1 cap I2 contains no nonzero Hopf ideal.
  bool hypothesis_holds = false;
};

/// x -> (rho1(pi1(x)), rho2(pi2(x))). rho_k must be representations of the
/// quotients H/I_k as returned by quotient_hopf.
GlueResult glueing_rep(const HopfAlgebraPtr &h, const Subspace &i1, const Subspace &i2, const Representation &rho1,
                       const Representation &rho2);

/// Injectivity of x -> pi1(x_(1)) (x) pi2(x_(2)) into H/I1 (x) H/I2.
bool cotensor_injectivity(const HopfAlgebraPtr &h, const Subspace &i1, const Subspace &i2);

} // namespace hopf
