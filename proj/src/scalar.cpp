#include "hopf/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace hopf {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

// Returns (quotient, remainder) of a / b over Q; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly &b) {
  trim(a);
  Poly q;
  if (a.size() < b.size())
    return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational &lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational factor = a.back() / lead;
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return {q, a};
}

Poly poly_mul(const Poly &a, const Poly &b) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_sub(Poly a, const Poly &b) {
  if (a.size() < b.size())
    a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] -= b[i];
  trim(a);
  return a;
}

mpz_class lcm_of_denominators(const Poly &p) {
  mpz_class l = 1;
  for (const auto &c : p)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i * i != n)
        large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const Poly &p, const Rational &x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

bool has_rational_root(const Poly &monic) {
  // Clear denominators; candidates are +-u/v with u | a_0, v | a_m.
  mpz_class l = lcm_of_denominators(monic);
  std::vector<mpz_class> ints;
  for (const auto &c : monic) {
    Rational scaled = c * l;
    ints.push_back(scaled.get_num());
  }
  if (ints.front() == 0)
    return true;
  for (const auto &u : positive_divisors(ints.front())) {
    for (const auto &v : positive_divisors(ints.back())) {
      Rational cand(u, v);
      cand.canonicalize();
      if (evaluate(monic, cand) == 0 || evaluate(monic, -cand) == 0)
        return true;
    }
  }
  return false;
}

// Monic quartic with integer coefficients (constant term first), no rational
// roots. By Gauss's lemma any factorization is into monic integer quadratics.
bool has_quadratic_factor(const std::vector<mpz_class> &c) {
  const mpz_class &d = c[0], &cc = c[1], &b = c[2], &a = c[3];
  for (const auto &pos : positive_divisors(d)) {
    for (int sign : {1, -1}) {
      mpz_class q = pos * sign;
      mpz_class s = d / q;
      if (s != q) {
        mpz_class num = cc - q * a, den = s - q;
        if (num % den != 0)
          continue;
        mpz_class p = num / den, r = a - p;
        if (p * r + q + s == b && p * s + q * r == cc)
          return true;
      } else {
        if (cc != q * a)
          continue;
        mpz_class disc = a * a - 4 * (b - 2 * q);
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t()))
          continue;
        mpz_class root = sqrt(disc);
        if ((a + root) % 2 == 0)
          return true;
      }
    }
  }
  return false;
}

bool valid_rational_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-')
    ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0)
    return false;
  if (i == s.size())
    return true;
  if (s[i] != '/')
    return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  return digits > 0 && i == s.size();
}

} // namespace

Rational parse_rational(std::string_view text) {
  if (!valid_rational_text(text))
    throw InputError("malformed rational '" + std::string(text) + "'");
  auto slash = text.find('/');
  mpz_class num(std::string(text.substr(0, slash)), 10);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = mpz_class(std::string(text.substr(slash + 1)), 10);
    if (den == 0)
      throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational &q) { return q.get_str(10); }

std::optional<bool> is_irreducible_over_q(const std::vector<Rational> &monic_poly) {
  std::size_t deg = monic_poly.size() - 1;
  if (deg <= 1)
    return true;
  if (deg > 4)
    return std::nullopt;
  if (has_rational_root(monic_poly))
    return false;
  if (deg < 4)
    return true;
  mpz_class l = lcm_of_denominators(monic_poly);
  // y = l*x turns p into a monic integer polynomial.
  std::vector<mpz_class> ints(5);
  mpz_class power = 1;
  for (std::size_t k = 0; k <= 4; ++k) {
    // coefficient of y^k is a_k * l^(4-k)
    mpz_class lp;
    mpz_pow_ui(lp.get_mpz_t(), l.get_mpz_t(), 4 - k);
    Rational scaled = monic_poly[k] * lp;
    ints[k] = scaled.get_num();
  }
  return !has_quadratic_factor(ints);
}

FieldPtr Field::rationals() {
  static const FieldPtr q = create({Rational(0), Rational(1)});
  return q;
}

FieldPtr Field::create(std::vector<Rational> min_poly,
                       std::optional<std::vector<Rational>> conj_image) {
  trim(min_poly);
  if (min_poly.size() < 2)
    throw MathError("minimal polynomial must have degree >= 1");
  if (min_poly.back() != 1)
    throw MathError("minimal polynomial must be monic");

  auto irreducible = is_irreducible_over_q(min_poly);
  if (irreducible.has_value() && !*irreducible)
    throw MathError("minimal polynomial is reducible over Q");

  std::shared_ptr<Field> f(new Field());
  f->degree_ = min_poly.size() - 1;
  f->min_poly_ = min_poly;
  f->irreducibility_verified_ = irreducible.has_value();

  const std::size_t m = f->degree_;
  Poly xk(m + 1, Rational(0));
  xk[m] = 1;
  for (std::size_t k = m; k + 1 < 2 * m; ++k) {
    auto [q, r] = poly_divmod(xk, min_poly);
    r.resize(m, Rational(0));
    f->high_powers_.push_back(r);
    xk.insert(xk.begin(), Rational(0));
  }

  if (conj_image) {
    Scalar c = f->from_coeffs(*conj_image);
    // p(c) must vanish in K.
    Scalar acc = f->zero();
    for (auto it = min_poly.rbegin(); it != min_poly.rend(); ++it)
      acc = f->add(f->mul(acc, c), f->from_rational(*it));
    if (!f->is_zero(acc))
      throw MathError("conj_image is not a root of the minimal polynomial");
    f->conj_image_ = c;
    Scalar power = f->one();
    for (std::size_t k = 0; k < m; ++k) {
      f->conj_powers_.push_back(power);
      power = f->mul(power, c);
    }
    if (f->conj(c) != f->generator())
      throw MathError("involution does not have order <= 2");
    // Fixed field is Q iff sigma - id has nullity 1 on Q^m. Column k of
    // sigma is conj_powers_[k]; eliminate over Q.
    std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(m));
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < m; ++i)
        rows[i][k] = f->conj_powers_[k].coeffs[i] - (i == k ? 1 : 0);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < m; ++col) {
      std::size_t piv = rank;
      while (piv < m && rows[piv][col] == 0)
        ++piv;
      if (piv == m)
        continue;
      std::swap(rows[piv], rows[rank]);
      for (std::size_t i = 0; i < m; ++i) {
        if (i == rank || rows[i][col] == 0)
          continue;
        Rational factor = rows[i][col] / rows[rank][col];
        for (std::size_t j = col; j < m; ++j)
          rows[i][j] -= factor * rows[rank][j];
      }
      ++rank;
    }
    f->fixed_field_is_q_ = (m - rank) == 1;
  } else {
    f->fixed_field_is_q_ = m == 1;
  }
  return f;
}

bool Field::same_as(const Field &other) const {
  return this == &other ||
         (min_poly_ == other.min_poly_ && conj_image_ == other.conj_image_);
}

Scalar Field::zero() const { return Scalar{std::vector<Rational>(degree_, Rational(0))}; }

Scalar Field::one() const { return from_rational(1); }

Scalar Field::from_rational(const Rational &q) const {
  Scalar s = zero();
  s.coeffs[0] = q;
  return s;
}

Scalar Field::generator() const {
  if (degree_ == 1)
    return from_rational(-min_poly_[0]);
  Scalar s = zero();
  s.coeffs[1] = 1;
  return s;
}

Scalar Field::from_coeffs(std::vector<Rational> coeffs) const { return reduce(std::move(coeffs)); }

Scalar Field::reduce(std::vector<Rational> poly) const {
  if (poly.size() <= degree_) {
    poly.resize(degree_, Rational(0));
    return Scalar{std::move(poly)};
  }
  if (poly.size() > 2 * degree_ - 1) {
    auto [q, r] = poly_divmod(std::move(poly), min_poly_);
    r.resize(degree_, Rational(0));
    return Scalar{std::move(r)};
  }
  Scalar out{std::vector<Rational>(poly.begin(), poly.begin() + degree_)};
  for (std::size_t k = degree_; k < poly.size(); ++k) {
    if (poly[k] == 0)
      continue;
    const auto &hp = high_powers_[k - degree_];
    for (std::size_t i = 0; i < degree_; ++i)
      out.coeffs[i] += poly[k] * hp[i];
  }
  return out;
}

bool Field::is_zero(const Scalar &a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](const Rational &c) { return c == 0; });
}

bool Field::is_one(const Scalar &a) const {
  if (a.coeffs[0] != 1)
    return false;
  return std::all_of(a.coeffs.begin() + 1, a.coeffs.end(), [](const Rational &c) { return c == 0; });
}

std::optional<Rational> Field::as_rational(const Scalar &a) const {
  for (std::size_t i = 1; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] != 0)
      return std::nullopt;
  return a.coeffs[0];
}

Scalar Field::add(const Scalar &a, const Scalar &b) const {
  Scalar r = a;
  for (std::size_t i = 0; i < degree_; ++i)
    r.coeffs[i] += b.coeffs[i];
  return r;
}

Scalar Field::sub(const Scalar &a, const Scalar &b) const {
  Scalar r = a;
  for (std::size_t i = 0; i < degree_; ++i)
    r.coeffs[i] -= b.coeffs[i];
  return r;
}

Scalar Field::neg(const Scalar &a) const {
  Scalar r = a;
  for (auto &c : r.coeffs)
    c = -c;
  return r;
}

Scalar Field::mul(const Scalar &a, const Scalar &b) const {
  if (degree_ == 1)
    return Scalar{{a.coeffs[0] * b.coeffs[0]}};
  std::vector<Rational> prod(2 * degree_ - 1, Rational(0));
  for (std::size_t i = 0; i < degree_; ++i) {
    if (a.coeffs[i] == 0)
      continue;
    for (std::size_t j = 0; j < degree_; ++j)
      if (b.coeffs[j] != 0)
        prod[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return reduce(std::move(prod));
}

void Field::add_mul(Scalar &acc, const Scalar &a, const Scalar &b) const {
  if (degree_ == 1) {
    if (a.coeffs[0] != 0 && b.coeffs[0] != 0)
      acc.coeffs[0] += a.coeffs[0] * b.coeffs[0];
    return;
  }
  Scalar p = mul(a, b);
  for (std::size_t i = 0; i < degree_; ++i)
    acc.coeffs[i] += p.coeffs[i];
}

Scalar Field::inv(const Scalar &a) const {
  if (is_zero(a))
    throw MathError("division by zero");
  if (degree_ == 1)
    return Scalar{{1 / a.coeffs[0]}};
  // Extended Euclid: track s with s*a = r (mod p).
  Poly r0 = min_poly_, r1 = a.coeffs;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty())
      throw MathError("element is not invertible (minimal polynomial is reducible)");
  }
  Rational c = r1[0];
  for (auto &v : s1)
    v /= c;
  return reduce(std::move(s1));
}

Scalar Field::div(const Scalar &a, const Scalar &b) const { return mul(a, inv(b)); }

Scalar Field::conj(const Scalar &a) const {
  if (!conj_image_)
    return a;
  Scalar r = zero();
  for (std::size_t k = 0; k < degree_; ++k) {
    if (a.coeffs[k] == 0)
      continue;
    for (std::size_t i = 0; i < degree_; ++i)
      r.coeffs[i] += a.coeffs[k] * conj_powers_[k].coeffs[i];
  }
  return r;
}

std::vector<std::string> Field::encode(const Scalar &a) const {
  std::vector<std::string> out;
  out.reserve(a.coeffs.size());
  for (const auto &c : a.coeffs)
    out.push_back(format_rational(c));
  return out;
}

Scalar Field::decode(const std::vector<std::string> &coeffs) const {
  if (coeffs.empty() || coeffs.size() > degree_)
    throw InputError("scalar must have between 1 and " + std::to_string(degree_) +
                     " coefficients, got " + std::to_string(coeffs.size()));
  std::vector<Rational> c;
  for (const auto &s : coeffs)
    c.push_back(parse_rational(s));
  return reduce(std::move(c));
}

std::string Field::to_string(const Scalar &a) const {
  if (degree_ == 1)
    return format_rational(a.coeffs[0]);
  std::string out;
  for (std::size_t k = 0; k < degree_; ++k) {
    if (a.coeffs[k] == 0)
      continue;
    std::string term = format_rational(a.coeffs[k]);
    if (k > 0)
      term += k == 1 ? "*x" : "*x^" + std::to_string(k);
    if (!out.empty() && term[0] != '-')
      out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

} // namespace hopf
