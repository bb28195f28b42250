#include "hopf/hopf_algebra.hpp"

#include <algorithm>

namespace hopf {

HopfAlgebra::HopfAlgebra(HopfTables tables) : t_(std::move(tables)) {
  const std::size_t d = t_.dim;
  if (!t_.field)
    throw InputError("algebra has no field");
  if (d == 0)
    throw InputError("algebra dimension must be positive");
  if (t_.mult.size() != d * d)
    throw InputError("mult table must have d*d entries");
  for (const auto &v : t_.mult)
    if (v.size() != d)
      throw InputError("mult entries must be d-vectors");
  if (t_.unit.size() != d)
    throw InputError("unit must be a d-vector");
  if (t_.comult.size() != d)
    throw InputError("comult table must have d entries");
  for (const auto &v : t_.comult)
    if (v.size() != d * d)
      throw InputError("comult entries must be d x d");
  if (t_.counit.size() != d)
    throw InputError("counit must be a d-vector");
  if (t_.antipode.rows() != d || t_.antipode.cols() != d)
    throw InputError("antipode must be d x d");
  if (t_.star && (t_.star->rows() != d || t_.star->cols() != d))
    throw InputError("star must be d x d");

  const Field &f = *t_.field;
  mult_terms_.resize(d * d);
  for (std::size_t ij = 0; ij < d * d; ++ij)
    for (std::size_t k = 0; k < d; ++k)
      if (!f.is_zero(t_.mult[ij][k]))
        mult_terms_[ij].push_back({k, t_.mult[ij][k]});
  comult_terms_.resize(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t jk = 0; jk < d * d; ++jk)
      if (!f.is_zero(t_.comult[i][jk]))
        comult_terms_[i].push_back({jk / d, jk % d, t_.comult[i][jk]});
}

Vector HopfAlgebra::multiply(const Vector &a, const Vector &b) const {
  const Field &f = k();
  const std::size_t d = dim();
  Vector out(d, f.zero());
  for (std::size_t i = 0; i < d; ++i) {
    if (f.is_zero(a[i]))
      continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (f.is_zero(b[j]))
        continue;
      Scalar ab = f.mul(a[i], b[j]);
      for (const auto &t : mult_terms_[i * d + j])
        f.add_mul(out[t.k], ab, t.c);
    }
  }
  return out;
}

Vector HopfAlgebra::comultiply(const Vector &a) const {
  const Field &f = k();
  const std::size_t d = dim();
  Vector out(d * d, f.zero());
  for (std::size_t i = 0; i < d; ++i) {
    if (f.is_zero(a[i]))
      continue;
    for (const auto &t : comult_terms_[i])
      f.add_mul(out[t.j * d + t.k], a[i], t.c);
  }
  return out;
}

Scalar HopfAlgebra::counit(const Vector &a) const {
  const Field &f = k();
  Scalar s = f.zero();
  for (std::size_t i = 0; i < dim(); ++i)
    f.add_mul(s, a[i], t_.counit[i]);
  return s;
}

Matrix HopfAlgebra::left_mult_matrix(const Vector &a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j)
    cols.push_back(multiply(a, basis_vector(j)));
  return Matrix::from_columns(field(), dim(), cols);
}

Matrix HopfAlgebra::right_mult_matrix(const Vector &a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j)
    cols.push_back(multiply(basis_vector(j), a));
  return Matrix::from_columns(field(), dim(), cols);
}

Matrix HopfAlgebra::comult_matrix() const { return Matrix::from_columns(field(), dim() * dim(), t_.comult); }

Matrix HopfAlgebra::mult_matrix() const { return Matrix::from_columns(field(), dim(), t_.mult); }

Vector HopfAlgebra::tensor_multiply(const Vector &x, const Vector &y) const {
  const Field &f = k();
  const std::size_t d = dim();
  Vector out(d * d, f.zero());
  for (std::size_t jk = 0; jk < d * d; ++jk) {
    if (f.is_zero(x[jk]))
      continue;
    const std::size_t j = jk / d, kk = jk % d;
    for (std::size_t lm = 0; lm < d * d; ++lm) {
      if (f.is_zero(y[lm]))
        continue;
      const std::size_t l = lm / d, m = lm % d;
      Scalar c = f.mul(x[jk], y[lm]);
      for (const auto &left : mult_terms_[j * d + l])
        for (const auto &right : mult_terms_[kk * d + m])
          f.add_mul(out[left.k * d + right.k], c, f.mul(left.c, right.c));
    }
  }
  return out;
}

bool HopfAlgebra::is_commutative() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (t_.mult[i * d + j] != t_.mult[j * d + i])
        return false;
  return true;
}

bool HopfAlgebra::is_cocommutative() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = j + 1; l < d; ++l)
        if (t_.comult[i][j * d + l] != t_.comult[i][l * d + j])
          return false;
  return true;
}

HopfAlgebra HopfAlgebra::with_star(std::optional<Matrix> star) const {
  HopfTables t = t_;
  t.star = std::move(star);
  return HopfAlgebra(std::move(t));
}

bool HopfAlgebra::same_structure(const HopfAlgebra &other) const {
  return this == &other ||
         (field()->same_as(*other.field()) && t_.dim == other.t_.dim && t_.mult == other.t_.mult &&
          t_.unit == other.t_.unit && t_.comult == other.t_.comult && t_.counit == other.t_.counit &&
          t_.antipode == other.t_.antipode);
}

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck &c) { return c.passed; });
}

std::string AxiomReport::first_failure() const {
  for (const auto &c : checks)
    if (!c.passed)
      return c.name;
  return {};
}

namespace {

void fail(AxiomCheck &c, std::vector<std::size_t> witness) {
  if (c.passed) {
    c.passed = false;
    c.witness = std::move(witness);
  }
}

} // namespace

AxiomReport verify_hopf(const HopfAlgebra &h) {
  const Field &f = h.k();
  const std::size_t d = h.dim();
  const auto &t = h.tables();
  auto e = [&](std::size_t i) { return h.basis_vector(i); };

  AxiomCheck assoc{"associativity", true, {}}, unit{"unit", true, {}}, coassoc{"coassociativity", true, {}}, counit{"counit", true, {}},
      delta_mult{"comultiplication_multiplicative", true, {}}, eps_mult{"counit_multiplicative", true, {}},
      antipode{"antipode", true, {}}, antipode_inv{"antipode_invertible", true, {}};

  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vector &ab = t.mult[a * d + b];
      for (std::size_t c = 0; c < d && assoc.passed; ++c)
        if (h.multiply(ab, e(c)) != h.multiply(e(a), t.mult[b * d + c]))
          fail(assoc, {a, b, c});
    }

  for (std::size_t a = 0; a < d; ++a)
    if (h.multiply(h.unit(), e(a)) != e(a) || h.multiply(e(a), h.unit()) != e(a))
      fail(unit, {a});

  for (std::size_t a = 0; a < d; ++a) {
    const Vector &da = t.comult[a];
    Vector left(d * d * d, f.zero()), right(d * d * d, f.zero());
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar &c = da[j * d + k];
        if (f.is_zero(c))
          continue;
        // (Delta (x) id): Delta(e_j) (x) e_k ; (id (x) Delta): e_j (x) Delta(e_k)
        for (std::size_t pq = 0; pq < d * d; ++pq) {
          if (!f.is_zero(t.comult[j][pq]))
            f.add_mul(left[pq * d + k], c, t.comult[j][pq]);
          if (!f.is_zero(t.comult[k][pq]))
            f.add_mul(right[j * d * d + pq], c, t.comult[k][pq]);
        }
      }
    if (left != right)
      fail(coassoc, {a});

    Vector l2(d, f.zero()), r2(d, f.zero());
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar &c = da[j * d + k];
        if (f.is_zero(c))
          continue;
        f.add_mul(l2[j], c, t.counit[k]);
        f.add_mul(r2[k], c, t.counit[j]);
      }
    if (l2 != e(a) || r2 != e(a))
      fail(counit, {a});
  }

  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d && delta_mult.passed; ++b)
      if (h.comultiply(t.mult[a * d + b]) != h.tensor_multiply(t.comult[a], t.comult[b]))
        fail(delta_mult, {a, b});
  if (h.comultiply(h.unit()) != kron(f, h.unit(), h.unit()))
    fail(delta_mult, {});

  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (h.counit(t.mult[a * d + b]) != f.mul(t.counit[a], t.counit[b]))
        fail(eps_mult, {a, b});
  if (!f.is_one(h.counit(h.unit())))
    fail(eps_mult, {});

  for (std::size_t a = 0; a < d; ++a) {
    Vector left(d, f.zero()), right(d, f.zero());
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar &c = t.comult[a][j * d + k];
        if (f.is_zero(c))
          continue;
        Vector sl = h.multiply(h.antipode(e(j)), e(k));
        Vector sr = h.multiply(e(j), h.antipode(e(k)));
        for (std::size_t i = 0; i < d; ++i) {
          f.add_mul(left[i], c, sl[i]);
          f.add_mul(right[i], c, sr[i]);
        }
      }
    Vector expected = scale(f, t.counit[a], h.unit());
    if (left != expected || right != expected)
      fail(antipode, {a});
  }

  if (rank(t.antipode) != d)
    fail(antipode_inv, {});

  return AxiomReport{{assoc, unit, coassoc, counit, delta_mult, eps_mult, antipode, antipode_inv}};
}

HopfAlgebraPtr group_algebra(const GroupTable &g, FieldPtr field) {
  const Field &f = *field;
  const std::size_t d = g.order();
  HopfTables t;
  t.field = field;
  t.dim = d;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      t.mult.push_back(unit_vector(f, d, g.mul(a, b)));
  t.unit = unit_vector(f, d, 0);
  for (std::size_t a = 0; a < d; ++a)
    t.comult.push_back(unit_vector(f, d * d, a * d + a));
  t.counit = Vector(d, f.one());
  t.antipode = Matrix(field, d, d);
  for (std::size_t a = 0; a < d; ++a)
    t.antipode(g.inverse(a), a) = f.one();
  t.star = t.antipode;
  return std::make_shared<const HopfAlgebra>(std::move(t));
}

HopfAlgebraPtr dual_group_algebra(const GroupTable &g, FieldPtr field) {
  const Field &f = *field;
  const std::size_t d = g.order();
  HopfTables t;
  t.field = field;
  t.dim = d;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      t.mult.push_back(a == b ? unit_vector(f, d, a) : zero_vector(f, d));
  t.unit = Vector(d, f.one());
  t.comult.assign(d, zero_vector(f, d * d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      t.comult[g.mul(a, b)][a * d + b] = f.one();
  t.counit = unit_vector(f, d, 0);
  t.antipode = Matrix(field, d, d);
  for (std::size_t a = 0; a < d; ++a)
    t.antipode(g.inverse(a), a) = f.one();
  t.star = Matrix::identity(field, d);
  return std::make_shared<const HopfAlgebra>(std::move(t));
}

HopfAlgebraPtr sweedler(FieldPtr field) {
  const Field &f = *field;
  enum : std::size_t { one = 0, g = 1, x = 2, gx = 3 };
  const std::size_t d = 4;
  auto e = [&](std::size_t i, long c = 1) { return scale(f, f.from_int(c), unit_vector(f, d, i)); };
  Vector zero = zero_vector(f, d);

  HopfTables t;
  t.field = field;
  t.dim = d;
  t.mult = {
      e(one), e(g),      e(x),  e(gx),   // 1 * _
      e(g),   e(one),    e(gx), e(x),    // g * _
      e(x),   e(gx, -1), zero,  zero,    // x * _   (xg = -gx)
      e(gx),  e(x, -1),  zero,  zero,    // gx * _  (gxg = -x)
  };
  t.unit = e(one);
  auto tensor = [&](std::size_t a, std::size_t b) { return unit_vector(f, d * d, a * d + b); };
  t.comult = {
      tensor(one, one),
      tensor(g, g),
      add(f, tensor(x, one), tensor(g, x)),
      add(f, tensor(gx, g), tensor(one, gx)),
  };
  t.counit = {f.one(), f.one(), f.zero(), f.zero()};
  std::vector<Vector> s_cols = {e(one), e(g), e(gx, -1), e(x)};
  t.antipode = Matrix::from_columns(field, d, s_cols);
  return std::make_shared<const HopfAlgebra>(std::move(t));
}

Matrix antipode_power(const HopfAlgebra &h, std::size_t power) {
  Matrix p = Matrix::identity(h.field(), h.dim());
  for (std::size_t i = 0; i < power; ++i)
    p = h.antipode_matrix() * p;
  return p;
}

std::size_t antipode_order(const HopfAlgebra &h, std::optional<std::size_t> cap) {
  const std::size_t limit = cap.value_or(4 * h.dim() * h.dim());
  const Matrix id = Matrix::identity(h.field(), h.dim());
  Matrix p = h.antipode_matrix();
  for (std::size_t t = 1; t <= limit; ++t) {
    if (p == id)
      return t;
    p = h.antipode_matrix() * p;
  }
  throw MathError("antipode order exceeds cap " + std::to_string(limit));
}

bool is_coideal_image(const HopfAlgebra &h, const Subspace &u, const Subspace &j) {
  if (j.is_full())
    return true;
  const std::size_t d = h.dim();
  const Matrix a = j.annihilator();
  const Matrix at = a.transpose();
  for (const auto &v : u.basis()) {
    Vector dv = h.comultiply(v);
    Matrix m(h.field(), d, d);
    for (std::size_t i = 0; i < d * d; ++i)
      m(i / d, i % d) = dv[i];
    // (A (x) A) vec(M) = vec(A M A^T)
    if (!(a * m * at).is_zero())
      return false;
  }
  return true;
}

HopfIdealReport is_hopf_ideal(const HopfAlgebra &h, const Subspace &j) {
  if (j.ambient_dim() != h.dim())
    throw InputError("ideal ambient dimension " + std::to_string(j.ambient_dim()) +
                     " does not match algebra dimension " + std::to_string(h.dim()));
  const Field &f = h.k();
  HopfIdealReport r;
  for (const auto &u : j.basis()) {
    for (std::size_t i = 0; i < h.dim(); ++i) {
      Vector e = h.basis_vector(i);
      if (r.left_ideal && !j.contains(h.multiply(e, u)))
        r.left_ideal = false;
      if (r.right_ideal && !j.contains(h.multiply(u, e)))
        r.right_ideal = false;
    }
    if (!f.is_zero(h.counit(u)))
      r.counit = false;
    if (r.antipode && !j.contains(h.antipode(u)))
      r.antipode = false;
  }
  r.coideal = is_coideal_image(h, j, j);
  return r;
}

HopfQuotient quotient_hopf(const HopfAlgebraPtr &h, const Subspace &j) {
  if (!is_hopf_ideal(*h, j).passed())
    throw MathError("subspace is not a Hopf ideal");
  const Field &f = h->k();
  const std::size_t d = h->dim();
  QuotientMap q = quotient_map(j);
  const Matrix &p = q.projection;
  const std::size_t n = q.complement.size();
  const auto &t = h->tables();

  HopfTables out;
  out.field = h->field();
  out.dim = n;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out.mult.push_back(p * t.mult[q.complement[a] * d + q.complement[b]]);
  out.unit = p * t.unit;
  const Matrix pp = p.kron(p);
  for (std::size_t a = 0; a < n; ++a)
    out.comult.push_back(pp * t.comult[q.complement[a]]);
  for (std::size_t a = 0; a < n; ++a)
    out.counit.push_back(t.counit[q.complement[a]]);
  out.antipode = p * t.antipode * q.section;
  if (t.star) {
    bool stable = true;
    for (const auto &u : j.basis())
      if (!j.contains(*t.star * conj(f, u)))
        stable = false;
    if (stable)
      out.star = p * *t.star * q.section;
  }
  return {std::make_shared<const HopfAlgebra>(std::move(out)), q.projection, q.section};
}

Scalar evaluate(const Field &f, const Functional &phi, const Vector &x) {
  Scalar s = f.zero();
  for (std::size_t i = 0; i < x.size(); ++i)
    f.add_mul(s, phi.coeffs[i], x[i]);
  return s;
}

Functional haar_functional(const HopfAlgebra &h) {
  const Field &f = h.k();
  const std::size_t d = h.dim();
  const auto &t = h.tables();
  // Unknowns phi_k; equation (i, j): sum_k c_ijk phi_k - phi_i unit_j = 0.
  Matrix sys(h.field(), d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k)
        sys(i * d + j, k) = t.comult[i][j * d + k];
      sys(i * d + j, i) = f.sub(sys(i * d + j, i), t.unit[j]);
    }
  Subspace sol = kernel(sys);
  for (const auto &v : sol.basis()) {
    Scalar at_one = evaluate(f, Functional{v}, t.unit);
    if (!f.is_zero(at_one))
      return Functional{scale(f, f.inv(at_one), v)};
  }
  throw MathError("no invariant functional with phi(1) != 0 (integral vanishes on the unit)");
}

bool is_left_invariant(const HopfAlgebra &h, const Functional &phi) {
  const Field &f = h.k();
  const std::size_t d = h.dim();
  for (std::size_t i = 0; i < d; ++i) {
    Vector lhs(d, f.zero());
    const Vector &di = h.tables().comult[i];
    for (std::size_t jk = 0; jk < d * d; ++jk)
      if (!f.is_zero(di[jk]))
        f.add_mul(lhs[jk / d], di[jk], phi.coeffs[jk % d]);
    if (lhs != scale(f, phi.coeffs[i], h.unit()))
      return false;
  }
  return true;
}

bool is_right_invariant(const HopfAlgebra &h, const Functional &phi) {
  const Field &f = h.k();
  const std::size_t d = h.dim();
  for (std::size_t i = 0; i < d; ++i) {
    Vector lhs(d, f.zero());
    const Vector &di = h.tables().comult[i];
    for (std::size_t jk = 0; jk < d * d; ++jk)
      if (!f.is_zero(di[jk]))
        f.add_mul(lhs[jk % d], di[jk], phi.coeffs[jk / d]);
    if (lhs != scale(f, phi.coeffs[i], h.unit()))
      return false;
  }
  return true;
}

bool grouplike_check(const HopfAlgebra &h, const Vector &v) {
  if (v.size() != h.dim())
    throw InputError("group-like candidate has wrong dimension");
  return h.k().is_one(h.counit(v)) && h.comultiply(v) == kron(h.k(), v, v);
}

Subspace skew_primitives(const HopfAlgebra &h, const Vector &g) {
  if (!grouplike_check(h, g))
    throw MathError("element is not group-like");
  const Field &f = h.k();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Vector e = h.basis_vector(i);
    Vector c = sub(f, h.comultiply(e), kron(f, e, h.unit()));
    cols.push_back(sub(f, c, kron(f, g, e)));
  }
  return kernel(Matrix::from_columns(h.field(), h.dim() * h.dim(), cols));
}

bool is_character(const HopfAlgebra &h, const Functional &phi) {
  const Field &f = h.k();
  const std::size_t d = h.dim();
  if (phi.coeffs.size() != d || !f.is_one(evaluate(f, phi, h.unit())))
    return false;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (evaluate(f, phi, h.tables().mult[a * d + b]) != f.mul(phi.coeffs[a], phi.coeffs[b]))
        return false;
  return true;
}

HopfMapReport check_hopf_map(const HopfAlgebra &source, const HopfAlgebra &target, const Matrix &p) {
  if (p.rows() != target.dim() || p.cols() != source.dim())
    throw InputError("Hopf map matrix has wrong shape");
  const std::size_t d = source.dim();
  const auto &t = source.tables();
  HopfMapReport r;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < d; ++i)
    images.push_back(p.column(i));
  for (std::size_t a = 0; a < d && r.multiplicative; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (p * t.mult[a * d + b] != target.multiply(images[a], images[b])) {
        r.multiplicative = false;
        break;
      }
  r.unital = p * t.unit == target.unit();
  const Matrix pp = p.kron(p);
  for (std::size_t a = 0; a < d; ++a) {
    if (pp * t.comult[a] != target.comultiply(images[a]))
      r.comultiplicative = false;
    if (target.counit(images[a]) != t.counit[a])
      r.counital = false;
  }
  r.antipode = p * t.antipode == target.antipode_matrix() * p;
  return r;
}

} // namespace hopf
