#pragma once

#include "hopf/representation.hpp"

#include <optional>
#include <vector>

namespace hopf {

enum class ImageAlgorithm { fixpoint, words };

const char *to_string(ImageAlgorithm a);

/// Largest Hopf ideal I_pi inside Ker(pi) together with how it was found.
struct HopfImageResult {
  Subspace ideal;
  bool inner_faithful = false;
  ImageAlgorithm algorithm = ImageAlgorithm::fixpoint;
  std::size_t iterations = 0;
  std::optional<std::size_t> words_processed;
  bool stabilized = false;
  /// dim J after the start step and after each refinement pass.
  std::vector<std::size_t> dimension_chain;
};

struct IdealSearchOptions {
  /// Also shrink to the largest two-sided ideal (needed when the start is
  /// not already an ideal).
  bool enforce_ideal = false;
  /// Also require J^* = J, using the algebra's star matrix.
  bool star_stable = false;
  std::optional<std::size_t> antipode_cap;
};

/// Largest Hopf ideal (or Hopf *-ideal) contained in `start`, by the
/// decreasing iteration
///   J <- J cap Delta^{-1}(J (x) H + H (x) J) cap S^{-1}(J)
/// from start cap Ker(eps) cap S^{-k}(start), k < ord(S).
HopfImageResult largest_hopf_ideal_in(const HopfAlgebra &h, const Subspace &start,
                                      const IdealSearchOptions &opts = {});

HopfImageResult hopf_image_fixpoint(const Representation &pi, std::optional<std::size_t> antipode_cap = {});

/// Intersection of Ker(pi^w) over words w in alpha_0..alpha_{t-1} of length
/// <= max_len, breadth first in length-lexicographic order. Stops as soon as
/// the running intersection is a Hopf ideal, which then equals I_pi.
HopfImageResult hopf_image_words(const Representation &pi, std::size_t max_len,
                                 std::optional<std::size_t> antipode_cap = {});

bool inner_faithful(const Representation &pi);

struct HopfImage {
  HopfQuotient quotient;
  Representation factored; // representation of quotient.algebra
  Subspace ideal;
};

/// H / I_pi with pi factored through it.
HopfImage hopf_image_quotient(const Representation &pi);

/// Representation of H/J induced by pi, which must vanish on J.
Representation factor_through(const Representation &pi, const HopfQuotient &q);

} // namespace hopf
