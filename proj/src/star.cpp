#include "hopf/star.hpp"

namespace hopf {

namespace {

void require_star_shape(const HopfAlgebra &h, const StarStructure &star) {
  if (star.star_matrix.rows() != h.dim() || star.star_matrix.cols() != h.dim())
    throw InputError("star matrix must be d x d");
}

Matrix identity_form(const Representation &pi) { return Matrix::identity(pi.algebra()->field(), pi.dim()); }

} // namespace

Vector apply_star(const HopfAlgebra &h, const StarStructure &star, const Vector &x) {
  return star.star_matrix * conj(h.k(), x);
}

StarReport verify_star(const HopfAlgebra &h, const StarStructure &star) {
  require_star_shape(h, star);
  const Field &f = h.k();
  const std::size_t d = h.dim();
  const Matrix &x = star.star_matrix;
  const auto &t = h.tables();
  StarReport r;
  const Matrix id = Matrix::identity(h.field(), d);
  r.involutive = x * x.conj() == id;

  std::vector<Vector> starred;
  for (std::size_t i = 0; i < d; ++i)
    starred.push_back(x.column(i));
  for (std::size_t a = 0; a < d && r.antimultiplicative; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (apply_star(h, star, t.mult[a * d + b]) != h.multiply(starred[b], starred[a])) {
        r.antimultiplicative = false;
        break;
      }
  const Matrix xx = x.kron(x);
  for (std::size_t a = 0; a < d; ++a) {
    if (h.comultiply(starred[a]) != xx * conj(f, t.comult[a]))
      r.comultiplicative = false;
    if (h.counit(starred[a]) != f.conj(t.counit[a]))
      r.counit = false;
  }
  const Matrix &s = h.antipode_matrix();
  r.antipode = s * x * s.conj() * x.conj() == id;
  return r;
}

Subspace star_ideal_closure(const HopfAlgebra &h, const StarStructure &star, const Subspace &j) {
  require_star_shape(h, star);
  std::vector<Vector> all = j.basis();
  for (const auto &u : j.basis())
    all.push_back(apply_star(h, star, u));
  return Subspace::span(h.field(), h.dim(), std::move(all));
}

bool is_hermitian(const SesquilinearForm &form) { return form.gram.adjoint() == form.gram; }

const char *to_string(Positivity p) {
  switch (p) {
  case Positivity::positive_definite:
    return "positive_definite";
  case Positivity::positive_semidefinite:
    return "positive_semidefinite";
  case Positivity::not_positive:
    return "not_positive";
  case Positivity::undecidable:
    return "undecidable";
  }
  return "undecidable";
}

Positivity positivity(const SesquilinearForm &form) {
  const Field &f = *form.gram.field();
  if (!f.fixed_field_is_rationals() || !is_hermitian(form))
    return Positivity::undecidable;
  Matrix g = form.gram;
  const std::size_t n = g.rows();
  std::vector<bool> alive(n, true);
  std::size_t positive_pivots = 0;
  for (;;) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i] && !f.is_zero(g(i, i))) {
        piv = i;
        break;
      }
    if (piv == n) {
      // All remaining diagonal entries vanish: semidefinite iff the rest is 0.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (alive[i] && alive[j] && !f.is_zero(g(i, j)))
            return Positivity::not_positive;
      break;
    }
    auto diag = f.as_rational(g(piv, piv));
    if (!diag)
      return Positivity::undecidable;
    if (*diag < 0)
      return Positivity::not_positive;
    ++positive_pivots;
    alive[piv] = false;
    Scalar inv = f.inv(g(piv, piv));
    for (std::size_t j = 0; j < n; ++j) {
      if (!alive[j] || f.is_zero(g(j, piv)))
        continue;
      Scalar factor = f.mul(g(j, piv), inv);
      for (std::size_t k = 0; k < n; ++k)
        if (alive[k] && !f.is_zero(g(piv, k)))
          g(j, k) = f.sub(g(j, k), f.mul(factor, g(piv, k)));
    }
  }
  return positive_pivots == n ? Positivity::positive_definite : Positivity::positive_semidefinite;
}

bool is_star_rep(const Representation &pi, const StarStructure &star, const std::optional<SesquilinearForm> &form) {
  const HopfAlgebra &h = *pi.algebra();
  require_star_shape(h, star);
  const Matrix g = form ? form->gram : identity_form(pi);
  if (g.rows() != pi.dim() || g.cols() != pi.dim())
    throw InputError("form dimension does not match the representation");
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (g * pi.image(star.star_matrix.column(i)) != pi[i].adjoint() * g)
      return false;
  return true;
}

InnerUnitaryResult inner_unitary(const Representation &pi, const StarStructure &star,
                                 const std::optional<SesquilinearForm> &form) {
  const HopfAlgebra &h = *pi.algebra();
  if (!verify_star(h, star).passed())
    throw MathError("star structure fails the Hopf *-algebra axioms");
  if (!verify_rep(pi).passed())
    throw MathError("not a representation");
  if (!is_star_rep(pi, star, form))
    throw MathError("representation is not a *-representation");
  HopfAlgebra hs = h.with_star(star.star_matrix);
  IdealSearchOptions opts;
  opts.star_stable = true;
  InnerUnitaryResult r;
  r.largest_star_ideal = largest_hopf_ideal_in(hs, rep_kernel(pi), opts);
  r.inner_unitary = r.largest_star_ideal.ideal.is_zero();
  return r;
}

Functional convolution_inverse(const HopfAlgebra &h, const Functional &phi) {
  const Field &f = h.k();
  const std::size_t d = h.dim();
  Functional inv{zero_vector(f, d)};
  for (std::size_t i = 0; i < d; ++i)
    inv.coeffs[i] = evaluate(f, phi, h.antipode_matrix().column(i));
  for (std::size_t i = 0; i < d; ++i) {
    Scalar s = f.zero();
    const Vector &di = h.tables().comult[i];
    for (std::size_t jk = 0; jk < d * d; ++jk)
      if (!f.is_zero(di[jk]))
        f.add_mul(s, di[jk], f.mul(phi.coeffs[jk / d], inv.coeffs[jk % d]));
    if (s != h.counit_vector()[i])
      throw MathError("phi o S is not the convolution inverse of phi");
  }
  return inv;
}

bool check_regular_antipode(const HopfAlgebra &h, const RegularAntipodeWitness &w) {
  if (w.m == 0)
    throw InputError("m must be at least 1");
  if (w.phi.coeffs.size() != h.dim() || !is_character(h, w.phi))
    throw MathError("phi is not a character");
  if (!grouplike_check(h, w.a))
    throw MathError("a is not group-like");
  const Field &f = h.k();
  const std::size_t d = h.dim();
  const Functional phi_inv = convolution_inverse(h, w.phi);
  const Vector a_inv = h.antipode(w.a);
  const Matrix s2m = antipode_power(h, 2 * w.m);

  // R(y) = (id (x) phi^{-1}) Delta(y)
  auto right = [&](std::size_t y) {
    Vector out = zero_vector(f, d);
    const Vector &dy = h.tables().comult[y];
    for (std::size_t pq = 0; pq < d * d; ++pq)
      if (!f.is_zero(dy[pq]))
        f.add_mul(out[pq / d], dy[pq], phi_inv.coeffs[pq % d]);
    return out;
  };
  std::vector<Vector> right_cols;
  for (std::size_t y = 0; y < d; ++y)
    right_cols.push_back(right(y));

  for (std::size_t x = 0; x < d; ++x) {
    Vector conv = zero_vector(f, d);
    const Vector &dx = h.tables().comult[x];
    for (std::size_t jk = 0; jk < d * d; ++jk) {
      if (f.is_zero(dx[jk]))
        continue;
      Scalar c = f.mul(dx[jk], w.phi.coeffs[jk / d]);
      if (!f.is_zero(c))
        conv = add(f, conv, scale(f, c, right_cols[jk % d]));
    }
    Vector rhs = h.multiply(h.multiply(w.a, conv), a_inv);
    if (rhs != s2m.column(x))
      return false;
  }
  return true;
}

Representation augment_regular(const Representation &pi, const RegularAntipodeWitness &w) {
  const HopfAlgebra &h = *pi.algebra();
  if (!check_regular_antipode(h, w))
    throw MathError("regular antipode witness does not satisfy the identity");
  Functional phi_inv = convolution_inverse(h, w.phi);
  return product_rep(product_rep(pi, character_rep(pi.algebra(), w.phi)), character_rep(pi.algebra(), phi_inv));
}

ConditionalExpectation conditional_expectation(const SubalgebraEmbedding &emb, const HopfAlgebra &target,
                                               const Matrix &p) {
  const HopfAlgebra &h = *emb.big;
  const Field &f = h.k();
  const std::size_t d = h.dim();
  Functional haar = haar_functional(target);
  Vector psi = zero_vector(f, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t c = 0; c < target.dim(); ++c)
      f.add_mul(psi[k], haar.coeffs[c], p(c, k));

  ConditionalExpectation ce;
  ce.map = Matrix(h.field(), d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Vector &di = h.tables().comult[i];
    for (std::size_t jk = 0; jk < d * d; ++jk)
      if (!f.is_zero(di[jk]))
        f.add_mul(ce.map(jk / d, i), di[jk], psi[jk % d]);
  }
  const Matrix &e = ce.map;
  ce.idempotent = e * e == e;
  ce.fixes_subalgebra = e * emb.inclusion == emb.inclusion;
  ce.image_is_subalgebra = column_space(e) == emb.basis;
  ce.bimodule = true;
  for (const auto &a : emb.basis.basis())
    for (std::size_t i = 0; i < d && ce.bimodule; ++i) {
      Vector x = h.basis_vector(i);
      if (e * h.multiply(a, x) != h.multiply(a, e * x) || e * h.multiply(x, a) != h.multiply(e * x, a))
        ce.bimodule = false;
    }
  return ce;
}

UnitaryInduction unitary_induction(const SubalgebraEmbedding &emb, const Representation &rho,
                                   const SesquilinearForm &v_form) {
  const HopfAlgebra &h = *emb.big;
  const Field &f = h.k();
  if (!h.star_matrix())
    throw InputError("algebra has no *-structure");
  if (!emb.small->star_matrix())
    throw InputError("subalgebra is not a *-subalgebra");
  const StarStructure star{*h.star_matrix()};
  const StarStructure small_star{*emb.small->star_matrix()};
  if (!verify_star(h, star).passed())
    throw MathError("star structure fails the Hopf *-algebra axioms");
  if (!same_algebra(rho.algebra(), emb.small))
    throw InputError("rho must be a representation of the subalgebra");
  if (!is_hermitian(v_form))
    throw MathError("form on V is not Hermitian");
  if (!is_star_rep(rho, small_star, v_form))
    throw MathError("rho is not a *-representation for the given form");

  HopfQuotient q = quotient_by_subalgebra(emb);
  ConditionalExpectation ce = conditional_expectation(emb, *q.algebra, q.projection);
  if (!ce.passed())
    throw MathError("conditional expectation is not a projection onto A");

  const std::size_t d = h.dim(), n = rho.dim();
  auto rho_of = [&](const Vector &in_a) {
    auto c = solve(emb.inclusion, in_a);
    if (!c)
      throw MathError("conditional expectation left the subalgebra");
    return v_form.gram * rho.image(*c);
  };

  Matrix gram(h.field(), d * n, d * n);
  for (std::size_t y = 0; y < d; ++y) {
    Vector ystar = apply_star(h, star, h.basis_vector(y));
    for (std::size_t x = 0; x < d; ++x) {
      Matrix r = rho_of(ce.map * h.multiply(ystar, h.basis_vector(x)));
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
          gram(y * n + w, x * n + v) = r(w, v);
    }
  }

  UnitaryInduction out{trivial_rep(emb.big), {}, gram, 0, false, false, false, Positivity::undecidable,
                       trivial_rep(emb.big), {}, false, false, false};
  out.hermitian = is_hermitian(SesquilinearForm{gram});
  Subspace radical = kernel(gram);
  out.gram_rank = d * n - radical.dim();
  const Matrix id_n = Matrix::identity(h.field(), n);
  std::vector<Matrix> actions;
  for (std::size_t i = 0; i < d; ++i)
    actions.push_back(h.left_mult_matrix(h.basis_vector(i)).kron(id_n));
  out.radical_invariant = true;
  for (const auto &act : actions)
    for (const auto &u : radical.basis())
      if (!radical.contains(act * u))
        out.radical_invariant = false;

  QuotientMap qm = quotient_map(radical);
  std::vector<Matrix> mats;
  for (const auto &act : actions)
    mats.push_back(qm.projection * act * qm.section);
  out.induced = Representation(emb.big, qm.complement.size(), std::move(mats));
  out.form = SesquilinearForm{qm.section.adjoint() * gram * qm.section};

  std::vector<Vector> one_tensor;
  for (std::size_t v = 0; v < n; ++v)
    one_tensor.push_back(kron(f, h.unit(), unit_vector(f, n, v)));
  const Matrix j = Matrix::from_columns(h.field(), d * n, one_tensor);
  out.isometric = j.adjoint() * gram * j == v_form.gram;
  out.positivity = positivity(SesquilinearForm{gram});

  out.theta = product_rep(pullback_rep(emb.big, q.projection, regular_rep(q.algebra)), out.induced);
  if (q.algebra->star_matrix()) {
    const HopfAlgebra &hq = *q.algebra;
    Functional phi = haar_functional(hq);
    StarStructure qstar{*hq.star_matrix()};
    Matrix gns(hq.field(), hq.dim(), hq.dim());
    for (std::size_t b = 0; b < hq.dim(); ++b) {
      Vector bstar = apply_star(hq, qstar, hq.basis_vector(b));
      for (std::size_t a = 0; a < hq.dim(); ++a)
        gns(b, a) = evaluate(f, phi, hq.multiply(bstar, hq.basis_vector(a)));
    }
    out.theta_form = SesquilinearForm{direct_sum(gns, out.form.gram)};
    out.theta_star_rep = is_star_rep(out.theta, star, out.theta_form);
  } else {
    out.theta_form = SesquilinearForm{direct_sum(Matrix::identity(h.field(), q.algebra->dim()), out.form.gram)};
  }

  IdealSearchOptions opts;
  opts.star_stable = true;
  out.rho_inner_unitary = largest_hopf_ideal_in(*emb.small, rep_kernel(rho), opts).ideal.is_zero();
  out.theta_inner_unitary = largest_hopf_ideal_in(h, rep_kernel(out.theta), opts).ideal.is_zero();
  return out;
}

} // namespace hopf
