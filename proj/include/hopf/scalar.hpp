#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

using Rational = mpq_class;

/// Thrown for malformed input: bad encodings, shape mismatches, objects
/// that fail their defining checks.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an algebraic precondition is violated (division by zero,
/// field mismatch, a subspace that is not a Hopf ideal, ...).
class MathError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational &q);

/// Element of K = Q[x]/(p(x)), stored as the coefficients of 1, x, ..., x^{m-1}.
/// Always kept reduced, so two scalars of one field are equal iff their
/// coefficient vectors are equal.
struct Scalar {
  std::vector<Rational> coeffs;

  bool operator==(const Scalar &) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A simple extension of Q with an optional involution sigma (given by the
/// image of the generator). Immutable once created.
class Field {
public:
  /// `min_poly` lists coefficients from the constant term upwards and must be
  /// monic. Throws MathError for reducible polynomials or a bad involution.
  static FieldPtr create(std::vector<Rational> min_poly,
                         std::optional<std::vector<Rational>> conj_image = {});
  static FieldPtr rationals();

  std::size_t degree() const { return degree_; }
  const std::vector<Rational> &min_poly() const { return min_poly_; }
  const std::optional<Scalar> &conj_image() const { return conj_image_; }
  bool has_involution() const { return conj_image_.has_value(); }
  /// False when the degree is above 4; such polynomials are accepted but not
  /// proven irreducible.
  bool irreducibility_verified() const { return irreducibility_verified_; }
  /// True when the fixed field of sigma is Q (so sigma-Hermitian forms have
  /// rational diagonals and their signature is decidable).
  bool fixed_field_is_rationals() const { return fixed_field_is_q_; }

  bool same_as(const Field &other) const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_rational(const Rational &q) const;
  Scalar from_int(long v) const { return from_rational(Rational(v)); }
  Scalar generator() const;
  /// Builds a reduced scalar from an arbitrary-length coefficient list.
  Scalar from_coeffs(std::vector<Rational> coeffs) const;

  bool is_zero(const Scalar &a) const;
  bool is_one(const Scalar &a) const;
  /// Rational value if `a` lies in Q.
  std::optional<Rational> as_rational(const Scalar &a) const;

  Scalar add(const Scalar &a, const Scalar &b) const;
  Scalar sub(const Scalar &a, const Scalar &b) const;
  Scalar neg(const Scalar &a) const;
  Scalar mul(const Scalar &a, const Scalar &b) const;
  Scalar inv(const Scalar &a) const;
  Scalar div(const Scalar &a, const Scalar &b) const;
  /// acc += a * b
  void add_mul(Scalar &acc, const Scalar &a, const Scalar &b) const;
  /// Image under sigma; identity when no involution was given.
  Scalar conj(const Scalar &a) const;

  std::vector<std::string> encode(const Scalar &a) const;
  Scalar decode(const std::vector<std::string> &coeffs) const;
  std::string to_string(const Scalar &a) const;

private:
  Field() = default;

  Scalar reduce(std::vector<Rational> poly) const;

  std::size_t degree_ = 1;
  std::vector<Rational> min_poly_;
  std::optional<Scalar> conj_image_;
  // Powers sigma(x)^k for k < degree, used to apply sigma linearly.
  std::vector<Scalar> conj_powers_;
  // x^k mod p for degree <= k < 2*degree - 1.
  std::vector<std::vector<Rational>> high_powers_;
  bool irreducibility_verified_ = true;
  bool fixed_field_is_q_ = true;
};

/// Checks irreducibility over Q: rational roots for any degree, quadratic
/// factor search for degree 4. Returns nullopt when the degree is above 4.
std::optional<bool> is_irreducible_over_q(const std::vector<Rational> &monic_poly);

} // namespace hopf
