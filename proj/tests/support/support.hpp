#pragma once

#include "hopf/corpus.hpp"
#include "hopf/star.hpp"

#include <doctest.h>

#include <random>

namespace test {

using namespace hopf;

inline std::vector<Rational> q(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v)
    out.emplace_back(x);
  return out;
}

inline Vector vec(const Field &f, std::initializer_list<long> v) {
  Vector out;
  for (long x : v)
    out.push_back(f.from_int(x));
  return out;
}

inline Subspace span(const FieldPtr &f, std::size_t n, std::vector<Vector> vs) {
  return Subspace::span(f, n, std::move(vs));
}

/// Random scalar with small numerators/denominators.
inline Scalar random_scalar(const Field &f, std::mt19937 &rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < f.degree(); ++i)
    c.emplace_back(num(rng), den(rng));
  for (auto &x : c)
    x.canonicalize();
  return f.from_coeffs(c);
}

inline Matrix random_matrix(const FieldPtr &f, std::size_t r, std::size_t c, std::mt19937 &rng, int zero_percent = 30) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<int> pct(0, 99);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (pct(rng) >= zero_percent)
        m(i, j) = random_scalar(*f, rng);
  return m;
}

} // namespace test
