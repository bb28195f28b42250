#pragma once

#include "hopf/group_table.hpp"
#include "hopf/linalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

/// Raw structure constants of a finite-dimensional Hopf algebra on the basis
/// e_0, ..., e_{d-1}. Tensor coordinates use index i*d + j for e_i (x) e_j.
struct HopfTables {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<Vector> mult;   // [i*d + j] -> coordinates of e_i e_j
  Vector unit;
  std::vector<Vector> comult; // [i] -> coordinates of Delta(e_i), length d*d
  Vector counit;
  Matrix antipode;            // column i = S(e_i)
  std::optional<Matrix> star; // column i = e_i^*  (x^* = star * sigma(x))
};

class HopfAlgebra;
using HopfAlgebraPtr = std::shared_ptr<const HopfAlgebra>;

/// Hopf algebra given by structure constants. Construction only checks table
/// shapes; use verify_hopf() for the axioms.
class HopfAlgebra {
public:
  explicit HopfAlgebra(HopfTables tables);

  const FieldPtr &field() const { return t_.field; }
  const Field &k() const { return *t_.field; }
  std::size_t dim() const { return t_.dim; }
  const HopfTables &tables() const { return t_; }
  const Vector &unit() const { return t_.unit; }
  const Vector &counit_vector() const { return t_.counit; }
  const Matrix &antipode_matrix() const { return t_.antipode; }
  const std::optional<Matrix> &star_matrix() const { return t_.star; }

  Vector basis_vector(std::size_t i) const { return unit_vector(k(), dim(), i); }

  Vector multiply(const Vector &a, const Vector &b) const;
  Vector comultiply(const Vector &a) const;
  Scalar counit(const Vector &a) const;
  Vector antipode(const Vector &a) const { return t_.antipode * a; }

  /// Matrix of y -> a y.
  Matrix left_mult_matrix(const Vector &a) const;
  /// Matrix of y -> y a.
  Matrix right_mult_matrix(const Vector &a) const;
  /// (d*d) x d matrix with column i = Delta(e_i).
  Matrix comult_matrix() const;
  /// d x (d*d) matrix sending e_i (x) e_j to e_i e_j.
  Matrix mult_matrix() const;
  /// Product in H (x) H of two tensor-coordinate vectors.
  Vector tensor_multiply(const Vector &x, const Vector &y) const;

  bool is_commutative() const;
  bool is_cocommutative() const;

  /// Same algebra with a different (or no) *-structure.
  HopfAlgebra with_star(std::optional<Matrix> star) const;

  bool same_structure(const HopfAlgebra &other) const;

private:
  struct MultTerm {
    std::size_t k;
    Scalar c;
  };
  struct ComultTerm {
    std::size_t j, k;
    Scalar c;
  };

  HopfTables t_;
  std::vector<std::vector<MultTerm>> mult_terms_;
  std::vector<std::vector<ComultTerm>> comult_terms_;
};

/// Per-axiom outcome; `witness` holds the first failing basis indices.
struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool passed() const;
  /// Name of the first failing axiom, empty if all pass.
  std::string first_failure() const;
};

/// Checks every axiom family (does not stop at the first failure).
AxiomReport verify_hopf(const HopfAlgebra &h);

HopfAlgebraPtr group_algebra(const GroupTable &g, FieldPtr field = Field::rationals());
/// Functions on a finite group (basis of point indicators).
HopfAlgebraPtr dual_group_algebra(const GroupTable &g, FieldPtr field = Field::rationals());
/// The 4-dimensional Sweedler algebra on the basis (1, g, x, gx).
HopfAlgebraPtr sweedler(FieldPtr field = Field::rationals());

/// Smallest t >= 1 with S^t = id. Throws MathError past `cap` (default 4 d^2).
std::size_t antipode_order(const HopfAlgebra &h, std::optional<std::size_t> cap = {});
Matrix antipode_power(const HopfAlgebra &h, std::size_t power);

struct HopfIdealReport {
  bool left_ideal = true;
  bool right_ideal = true;
  bool counit = true;
  bool antipode = true;
  bool coideal = true;

  bool passed() const { return left_ideal && right_ideal && counit && antipode && coideal; }
};

HopfIdealReport is_hopf_ideal(const HopfAlgebra &h, const Subspace &j);
/// Delta(u) in J (x) H + H (x) J for every u in `u`.
bool is_coideal_image(const HopfAlgebra &h, const Subspace &u, const Subspace &j);

struct HopfQuotient {
  HopfAlgebraPtr algebra;
  Matrix projection; // dim(H/J) x d
  Matrix section;    // d x dim(H/J)
};

/// H/J on the complement of J's pivot coordinates. The *-structure is kept
/// when J is *-stable. Throws MathError if J is not a Hopf ideal.
HopfQuotient quotient_hopf(const HopfAlgebraPtr &h, const Subspace &j);

/// Linear form on H.
struct Functional {
  Vector coeffs;
};

Scalar evaluate(const Field &f, const Functional &phi, const Vector &x);

/// The phi with (id (x) phi) Delta(x) = phi(x) 1 and phi(1) = 1. Throws
/// MathError when no normalizable invariant functional exists.
Functional haar_functional(const HopfAlgebra &h);
bool is_left_invariant(const HopfAlgebra &h, const Functional &phi);
/// (phi (x) id) Delta(x) = phi(x) 1
bool is_right_invariant(const HopfAlgebra &h, const Functional &phi);

bool grouplike_check(const HopfAlgebra &h, const Vector &v);
/// P_{g,1} = {x : Delta(x) = x (x) 1 + g (x) x}. Throws MathError when g is
/// not group-like.
Subspace skew_primitives(const HopfAlgebra &h, const Vector &g);

/// True when the algebra map is a character (multiplicative, phi(1) = 1).
bool is_character(const HopfAlgebra &h, const Functional &phi);

struct HopfMapReport {
  bool multiplicative = true;
  bool unital = true;
  bool comultiplicative = true;
  bool counital = true;
  bool antipode = true;

  bool passed() const { return multiplicative && unital && comultiplicative && counital && antipode; }
};

/// Checks that the matrix p (target.dim x source.dim) is a Hopf algebra map.
HopfMapReport check_hopf_map(const HopfAlgebra &source, const HopfAlgebra &target, const Matrix &p);

} // namespace hopf
