#include "hopf/extensions.hpp"

namespace hopf {

EmbeddingReport check_embedding(const HopfAlgebra &big, const HopfAlgebra &small, const Matrix &inclusion) {
  if (inclusion.rows() != big.dim() || inclusion.cols() != small.dim())
    throw InputError("inclusion must be dim(big) x dim(small)");
  const std::size_t m = small.dim();
  const auto &t = small.tables();
  EmbeddingReport r;
  r.injective = rank(inclusion) == m;
  r.unit = inclusion * small.unit() == big.unit();
  std::vector<Vector> img;
  for (std::size_t a = 0; a < m; ++a)
    img.push_back(inclusion.column(a));
  for (std::size_t a = 0; a < m && r.multiplicative; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (inclusion * t.mult[a * m + b] != big.multiply(img[a], img[b])) {
        r.multiplicative = false;
        break;
      }
  const Matrix ii = inclusion.kron(inclusion);
  for (std::size_t a = 0; a < m; ++a) {
    if (ii * t.comult[a] != big.comultiply(img[a]))
      r.comultiplicative = false;
    if (big.counit(img[a]) != t.counit[a])
      r.counital = false;
  }
  r.antipode = big.antipode_matrix() * inclusion == inclusion * small.antipode_matrix();
  return r;
}

SubalgebraEmbedding make_embedding(HopfAlgebraPtr big, HopfAlgebraPtr small, Matrix inclusion) {
  EmbeddingReport r = check_embedding(*big, *small, inclusion);
  if (!r.injective)
    throw InputError("inclusion is not injective");
  if (!r.unit)
    throw InputError("inclusion does not preserve the unit");
  if (!r.multiplicative)
    throw InputError("inclusion is not multiplicative");
  if (!r.comultiplicative)
    throw InputError("inclusion is not comultiplicative");
  if (!r.counital)
    throw InputError("inclusion does not preserve the counit");
  if (!r.antipode)
    throw InputError("inclusion does not commute with the antipode");
  Subspace basis = column_space(inclusion);
  return {std::move(big), std::move(small), std::move(inclusion), std::move(basis)};
}

SubalgebraEmbedding subalgebra_from_subspace(const HopfAlgebraPtr &big, const Subspace &a) {
  if (a.ambient_dim() != big->dim())
    throw InputError("subspace does not live in the algebra");
  const Field &f = big->k();
  const std::size_t m = a.dim();
  const auto &piv = a.pivots();
  auto coords = [&](const Vector &v) {
    Vector c;
    for (std::size_t r = 0; r < m; ++r)
      c.push_back(v[piv[r]]);
    Vector back = zero_vector(f, big->dim());
    for (std::size_t r = 0; r < m; ++r)
      back = add(f, back, scale(f, c[r], a.basis()[r]));
    if (back != v)
      throw MathError("subspace is not closed under the Hopf operations");
    return c;
  };

  HopfTables t;
  t.field = big->field();
  t.dim = m;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      t.mult.push_back(coords(big->multiply(a.basis()[x], a.basis()[y])));
  t.unit = coords(big->unit());
  const std::size_t d = big->dim();
  for (std::size_t x = 0; x < m; ++x) {
    Vector dx = big->comultiply(a.basis()[x]);
    Vector c(m * m, f.zero());
    Vector back(d * d, f.zero());
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s) {
        c[r * m + s] = dx[piv[r] * d + piv[s]];
        if (!f.is_zero(c[r * m + s]))
          back = add(f, back, scale(f, c[r * m + s], kron(f, a.basis()[r], a.basis()[s])));
      }
    if (back != dx)
      throw MathError("subspace is not a subcoalgebra");
    t.comult.push_back(std::move(c));
  }
  for (std::size_t x = 0; x < m; ++x)
    t.counit.push_back(big->counit(a.basis()[x]));
  std::vector<Vector> s_cols;
  for (std::size_t x = 0; x < m; ++x)
    s_cols.push_back(coords(big->antipode(a.basis()[x])));
  t.antipode = Matrix::from_columns(t.field, m, s_cols);
  if (big->star_matrix()) {
    std::vector<Vector> star_cols;
    bool stable = true;
    for (std::size_t x = 0; x < m && stable; ++x) {
      Vector img = *big->star_matrix() * conj(f, a.basis()[x]);
      if (!a.contains(img))
        stable = false;
      else
        star_cols.push_back(coords(img));
    }
    if (stable)
      t.star = Matrix::from_columns(t.field, m, star_cols);
  }
  Matrix inclusion = a.basis_matrix().transpose();
  auto small = std::make_shared<const HopfAlgebra>(std::move(t));
  return {big, small, std::move(inclusion), a};
}

bool adjoint_stability(const SubalgebraEmbedding &emb) {
  const HopfAlgebra &h = *emb.big;
  const Field &f = h.k();
  const std::size_t d = h.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const Vector &di = h.tables().comult[i];
    for (const auto &y : emb.basis.basis()) {
      Vector left = zero_vector(f, d), right = zero_vector(f, d);
      for (std::size_t jk = 0; jk < d * d; ++jk) {
        if (f.is_zero(di[jk]))
          continue;
        Vector ej = h.basis_vector(jk / d), ek = h.basis_vector(jk % d);
        left = add(f, left, scale(f, di[jk], h.multiply(h.multiply(ej, y), h.antipode(ek))));
        right = add(f, right, scale(f, di[jk], h.multiply(h.multiply(h.antipode(ej), y), ek)));
      }
      if (!emb.basis.contains(left) || !emb.basis.contains(right))
        return false;
    }
  }
  return true;
}

PlusIdeal plus_ideal(const SubalgebraEmbedding &emb) {
  const HopfAlgebra &h = *emb.big;
  Matrix eps(h.field(), 1, h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    eps(0, i) = h.counit_vector()[i];
  Subspace aplus = restricted_kernel(emb.basis, eps);
  std::vector<Vector> left, right;
  for (const auto &a : aplus.basis())
    for (std::size_t i = 0; i < h.dim(); ++i) {
      left.push_back(h.multiply(a, h.basis_vector(i)));
      right.push_back(h.multiply(h.basis_vector(i), a));
    }
  PlusIdeal p;
  p.left = Subspace::span(h.field(), h.dim(), std::move(left));
  p.right = Subspace::span(h.field(), h.dim(), std::move(right));
  p.report = is_hopf_ideal(h, p.left);
  return p;
}

HopfQuotient quotient_by_subalgebra(const SubalgebraEmbedding &emb) {
  PlusIdeal p = plus_ideal(emb);
  if (!p.report.passed())
    throw MathError("A^+ H is not a Hopf ideal (is the subalgebra normal?)");
  return quotient_hopf(emb.big, p.left);
}

Subspace coinvariants(const HopfAlgebra &h, const HopfAlgebra &target, const Matrix &p) {
  if (!check_hopf_map(h, target, p).passed())
    throw MathError("projection is not a Hopf algebra map");
  const Field &f = h.k();
  const std::size_t d = h.dim(), e = target.dim();
  const Matrix idp = Matrix::identity(h.field(), d).kron(p);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < d; ++i) {
    Vector lhs = idp * h.tables().comult[i];
    cols.push_back(sub(f, lhs, kron(f, h.basis_vector(i), target.unit())));
  }
  return kernel(Matrix::from_columns(h.field(), d * e, cols));
}

ExactSequenceReport check_exact_sequence(const SubalgebraEmbedding &emb, const HopfAlgebra &target, const Matrix &p) {
  const HopfAlgebra &h = *emb.big;
  const Field &f = h.k();
  ExactSequenceReport r;
  r.injective_surjective = rank(emb.inclusion) == emb.small->dim() && rank(p) == target.dim();
  const Matrix pi = p * emb.inclusion;
  r.composite_is_counit = true;
  for (std::size_t a = 0; a < emb.small->dim(); ++a)
    if (pi.column(a) != scale(f, emb.small->counit_vector()[a], target.unit()))
      r.composite_is_counit = false;
  PlusIdeal plus = plus_ideal(emb);
  r.kernel_is_plus_ideal = kernel(p) == plus.right;
  if (check_hopf_map(h, target, p).passed())
    r.coinvariants_equal = coinvariants(h, target, p) == emb.basis;
  return r;
}

InducedModule induced_module(const SubalgebraEmbedding &emb, const Representation &rho) {
  if (!same_algebra(rho.algebra(), emb.small))
    throw InputError("rho must be a representation of the subalgebra");
  if (!verify_rep(rho).passed())
    throw MathError("rho is not a representation");
  const HopfAlgebra &h = *emb.big;
  const Field &f = h.k();
  const std::size_t d = h.dim(), n = rho.dim(), m = emb.small->dim();
  auto coord = [n](std::size_t x, std::size_t v) { return x * n + v; };

  std::vector<Vector> rels;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t a = 0; a < m; ++a) {
      Vector xa = h.multiply(h.basis_vector(x), emb.inclusion.column(a));
      for (std::size_t v = 0; v < n; ++v) {
        Vector rel = zero_vector(f, d * n);
        for (std::size_t y = 0; y < d; ++y)
          if (!f.is_zero(xa[y]))
            rel[coord(y, v)] = f.add(rel[coord(y, v)], xa[y]);
        for (std::size_t w = 0; w < n; ++w)
          rel[coord(x, w)] = f.sub(rel[coord(x, w)], rho[a](w, v));
        rels.push_back(std::move(rel));
      }
    }
  InducedModule out{0, Subspace::span(h.field(), d * n, std::move(rels)), {}, {}, trivial_rep(emb.big)};
  QuotientMap q = quotient_map(out.relations);
  out.dim = q.complement.size();
  out.projection = q.projection;
  out.section = q.section;
  const Matrix id_n = Matrix::identity(h.field(), n);
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < d; ++i)
    mats.push_back(q.projection * h.left_mult_matrix(h.basis_vector(i)).kron(id_n) * q.section);
  out.rep = Representation(emb.big, out.dim, std::move(mats));
  return out;
}

ExtensionRep extension_rep(const SubalgebraEmbedding &emb, const Representation &rho) {
  if (!adjoint_stability(emb))
    throw MathError("subalgebra is not normal");
  HopfQuotient q = quotient_by_subalgebra(emb);
  InducedModule ind = induced_module(emb, rho);
  Representation regular = pullback_rep(emb.big, q.projection, regular_rep(q.algebra));
  Representation theta = product_rep(regular, ind.rep);
  return {std::move(theta), std::move(q), std::move(ind), emb.small->is_commutative()};
}

GlueResult glueing_rep(const HopfAlgebraPtr &h, const Subspace &i1, const Subspace &i2, const Representation &rho1,
                       const Representation &rho2) {
  HopfQuotient q1 = quotient_hopf(h, i1);
  HopfQuotient q2 = quotient_hopf(h, i2);
  if (!same_algebra(rho1.algebra(), q1.algebra) || !same_algebra(rho2.algebra(), q2.algebra))
    throw InputError("rho_k must be representations of H/I_k");
  if (!verify_rep(rho1).passed() || !verify_rep(rho2).passed())
    throw MathError("rho_k is not a representation");
  Representation rep =
      product_rep(pullback_rep(h, q1.projection, rho1), pullback_rep(h, q2.projection, rho2));
  bool hypothesis = largest_hopf_ideal_in(*h, intersect(i1, i2)).ideal.is_zero();
  return {std::move(rep), std::move(q1), std::move(q2), hypothesis};
}

bool cotensor_injectivity(const HopfAlgebraPtr &h, const Subspace &i1, const Subspace &i2) {
  HopfQuotient q1 = quotient_hopf(h, i1);
  HopfQuotient q2 = quotient_hopf(h, i2);
  Matrix theta = q1.projection.kron(q2.projection) * h->comult_matrix();
  return rank(theta) == h->dim();
}

} // namespace hopf
