#include "support.hpp"

using namespace test;

namespace {

Matrix diag(const FieldPtr &f, std::vector<Scalar> d) {
  Matrix m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

StarStructure star_of(const HopfAlgebra &h) { return StarStructure{*h.star_matrix()}; }

Subspace star_image(const HopfAlgebra &h, const Subspace &j) {
  std::vector<Vector> vs;
  for (const auto &u : j.basis())
    vs.push_back(apply_star(h, star_of(h), u));
  return Subspace::span(h.field(), h.dim(), vs);
}

struct S3Setup {
  GroupTable table = corpus::symmetric3();
  HopfAlgebraPtr h = group_algebra(table, corpus::cyclotomic3());
  SubalgebraEmbedding a3 = corpus::subgroup_subalgebra(h, {0, 3, 4});
  Representation omega() const {
    const Field &f = a3.small->k();
    Scalar w = f.generator();
    return Representation(a3.small, 1, {diag(a3.small->field(), {f.one()}), diag(a3.small->field(), {w}),
                                        diag(a3.small->field(), {f.mul(w, w)})});
  }
};

} // namespace

TEST_CASE("star structures") {
  for (const auto &e : corpus::groups()) {
    INFO(e.name);
    CHECK(verify_star(*e.algebra, star_of(*e.algebra)).passed());
    CHECK(verify_star(*e.dual, star_of(*e.dual)).passed());
  }
  auto z2 = group_algebra(corpus::cyclic(2));
  const Field &f = z2->k();
  // g^* = -g breaks eps(x^*) = sigma(eps(x))
  StarStructure bad{diag(z2->field(), {f.one(), f.from_int(-1)})};
  auto r = verify_star(*z2, bad);
  CHECK(!r.counit);
  CHECK(!r.passed());
  // 2 * identity is not involutive
  auto r2 = verify_star(*z2, StarStructure{Matrix::identity(z2->field(), 2).scaled(f.from_int(2))});
  CHECK(!r2.involutive);
}

TEST_CASE("star ideal closure") {
  auto h = group_algebra(corpus::cyclic(3));
  const Field &f = h->k();
  StarStructure st = star_of(*h);
  Subspace j = span(h->field(), 3, {vec(f, {-1, 1, 0})});
  CHECK(star_ideal_closure(*h, st, j) == span(h->field(), 3, {vec(f, {-1, 1, 0}), vec(f, {-1, 0, 1})}));
  Subspace aug = rep_kernel(trivial_rep(h));
  CHECK(star_ideal_closure(*h, st, aug) == aug);
  CHECK(star_ideal_closure(*h, st, Subspace::zero(h->field(), 3)).is_zero());
}

TEST_CASE("closure of Hopf ideals is a Hopf *-ideal") {
  for (const auto &e : corpus::groups()) {
    const HopfAlgebra &h = *e.algebra;
    const Matrix &s = h.antipode_matrix();
    Matrix s_inv = antipode_power(h, antipode_order(h) - 1);
    for (const auto &n : e.table.normal_subgroups()) {
      Subspace j = corpus::group_oracle_ideal(h, e.table, n);
      Subspace c = star_ideal_closure(h, star_of(h), j);
      CHECK(is_hopf_ideal(h, c).passed());
      CHECK(star_image(h, c) == c);
      // S(J^*) = S^{-1}(J)^*
      CHECK(image(s, star_image(h, j)) == star_image(h, image(s_inv, j)));
    }
  }
}

TEST_CASE("positivity") {
  auto q = Field::rationals();
  const Field &f = *q;
  CHECK(positivity({diag(q, {f.one(), f.from_int(2)})}) == Positivity::positive_definite);
  CHECK(positivity({diag(q, {f.one(), f.zero()})}) == Positivity::positive_semidefinite);
  CHECK(positivity({diag(q, {f.one(), f.from_int(-1)})}) == Positivity::not_positive);
  Matrix off(q, 2, 2);
  off(0, 1) = f.one();
  off(1, 0) = f.one();
  CHECK(positivity({off}) == Positivity::not_positive);
  // [[2, 1], [1, 1]] has leading minors 2, 1
  Matrix m(q, 2, 2);
  m(0, 0) = f.from_int(2);
  m(0, 1) = m(1, 0) = m(1, 1) = f.one();
  CHECK(positivity({m}) == Positivity::positive_definite);
  // [[1, i], [-i, 1]] is singular and semidefinite over Q(i)
  auto g = corpus::gaussian();
  Matrix h(g, 2, 2);
  h(0, 0) = h(1, 1) = g->one();
  h(0, 1) = g->generator();
  h(1, 0) = g->neg(g->generator());
  CHECK(is_hermitian({h}));
  CHECK(positivity({h}) == Positivity::positive_semidefinite);
  auto z = corpus::cyclotomic5();
  CHECK(positivity({Matrix::identity(z, 2)}) == Positivity::undecidable);
  CHECK(to_string(Positivity::not_positive) == std::string("not_positive"));
}

TEST_CASE("inner unitarity on unitary group representations") {
  for (const auto &e : corpus::representations()) {
    if (e.kind == corpus::RepKind::other)
      continue;
    INFO(e.name);
    const HopfAlgebra &h = *e.rep.algebra();
    REQUIRE(is_star_rep(e.rep, star_of(h)));
    InnerUnitaryResult r = inner_unitary(e.rep, star_of(h));
    bool faithful = inner_faithful(e.rep);
    CHECK(r.inner_unitary == faithful);
    if (faithful)
      CHECK(r.inner_unitary);
    const Subspace &j = r.largest_star_ideal.ideal;
    CHECK(is_hopf_ideal(h, j).passed());
    CHECK(star_image(h, j) == j);
    CHECK(rep_kernel(e.rep).contains(j));
  }
}

TEST_CASE("non-unitary representations and forms") {
  GroupTable d4 = corpus::dihedral4();
  auto h = group_algebra(d4);
  const Field &f = h->k();
  Scalar o = f.zero(), l = f.one(), m = f.from_int(-1);
  Matrix r(h->field(), 2, 2), s = diag(h->field(), {l, m});
  r(0, 1) = m;
  r(1, 0) = l;
  Matrix p = Matrix::identity(h->field(), 2), p_inv = Matrix::identity(h->field(), 2);
  p(0, 1) = l;
  p_inv(0, 1) = m;
  Representation conj = corpus::rep_from_generators(h, d4, {1, 4}, {p * r * p_inv, p * s * p_inv});
  CHECK(!is_star_rep(conj, star_of(*h)));
  CHECK_THROWS_AS(inner_unitary(conj, star_of(*h)), MathError);
  SesquilinearForm g{p_inv.adjoint() * p_inv};
  CHECK(is_star_rep(conj, star_of(*h), g));
  CHECK(positivity(g) == Positivity::positive_definite);
  CHECK(inner_unitary(conj, star_of(*h), g).inner_unitary);
  (void)o;
}

TEST_CASE("regular antipode witnesses") {
  auto z3 = group_algebra(corpus::cyclic(3));
  Functional eps{z3->counit_vector()};
  CHECK(check_regular_antipode(*z3, {z3->unit(), eps, 1}));

  auto sw = sweedler();
  const Field &f = sw->k();
  Functional e{sw->counit_vector()};
  CHECK(check_regular_antipode(*sw, {sw->basis_vector(1), e, 1}));
  CHECK(!check_regular_antipode(*sw, {sw->unit(), e, 1}));
  // the character g -> -1 also works with a = 1: (phi * id * phi^-1)(x) = -x
  Functional sign{vec(f, {1, -1, 0, 0})};
  CHECK(is_character(*sw, sign));
  CHECK(convolution_inverse(*sw, sign).coeffs == vec(f, {1, -1, 0, 0}));
  CHECK(check_regular_antipode(*sw, {sw->unit(), sign, 1}));
  CHECK(check_regular_antipode(*sw, {sw->basis_vector(1), e, 3}));
  CHECK_THROWS_AS(check_regular_antipode(*sw, {sw->basis_vector(2), e, 1}), MathError);
  CHECK_THROWS_AS(check_regular_antipode(*sw, {sw->unit(), Functional{vec(f, {1, 2, 0, 0})}, 1}), MathError);
}

TEST_CASE("augmented representation") {
  auto sw = sweedler();
  Functional e{sw->counit_vector()};
  Representation pi = corpus::sweedler_rep2(sw);
  Representation aug = augment_regular(pi, {sw->basis_vector(1), e, 1});
  CHECK(aug.dim() == 4);
  CHECK(verify_rep(aug).passed());
  CHECK(inner_faithful(aug));
  CHECK_THROWS_AS(augment_regular(pi, {sw->unit(), e, 1}), MathError);

  for (const auto &r : corpus::representations()) {
    if (r.kind != corpus::RepKind::group_algebra)
      continue;
    const auto &h = r.rep.algebra();
    Representation a = augment_regular(r.rep, {h->unit(), Functional{h->counit_vector()}, 1});
    CHECK(a.dim() == r.rep.dim() + 2);
    // pi (+) eps (+) eps
    CHECK(rep_kernel(a) == intersect(rep_kernel(r.rep), rep_kernel(trivial_rep(h))));
  }
}

TEST_CASE("conditional expectation") {
  S3Setup s;
  HopfQuotient q = quotient_by_subalgebra(s.a3);
  ConditionalExpectation e = conditional_expectation(s.a3, *q.algebra, q.projection);
  CHECK(e.passed());
  CHECK(e.bimodule);
  for (std::size_t g = 0; g < 6; ++g) {
    bool in_a3 = g == 0 || g == 3 || g == 4;
    CHECK(e.map * s.h->basis_vector(g) == (in_a3 ? s.h->basis_vector(g) : zero_vector(s.h->k(), 6)));
  }

  auto all = corpus::subgroup_subalgebra(s.h, {0, 1, 2, 3, 4, 5});
  HopfQuotient qa = quotient_by_subalgebra(all);
  CHECK(conditional_expectation(all, *qa.algebra, qa.projection).map == Matrix::identity(s.h->field(), 6));

  // A = k1: E = 1 * phi_H
  for (const auto &g : corpus::groups()) {
    for (const auto &h : {g.algebra, g.dual}) {
      auto unit = subalgebra_from_subspace(h, span(h->field(), h->dim(), {h->unit()}));
      HopfQuotient qu = quotient_by_subalgebra(unit);
      ConditionalExpectation ce = conditional_expectation(unit, *qu.algebra, qu.projection);
      Functional phi = haar_functional(*h);
      for (std::size_t x = 0; x < h->dim(); ++x)
        CHECK(ce.map.column(x) == scale(h->k(), phi.coeffs[x], h->unit()));
    }
  }
}

TEST_CASE("unitary induction from A3 to S3") {
  S3Setup s;
  Representation rho = s.omega();
  SesquilinearForm v{Matrix::identity(s.h->field(), 1)};
  REQUIRE(is_star_rep(rho, StarStructure{*s.a3.small->star_matrix()}, v));
  UnitaryInduction u = unitary_induction(s.a3, rho, v);
  CHECK(u.gram.rows() == 6);
  CHECK(u.gram_rank == 2);
  CHECK(u.induced.dim() == 2);
  CHECK(u.induced.dim() == induced_module(s.a3, rho).dim);
  CHECK(u.hermitian);
  CHECK(u.isometric);
  CHECK(u.radical_invariant);
  CHECK(u.positivity == Positivity::positive_semidefinite);
  CHECK(positivity(u.form) == Positivity::positive_definite);
  CHECK(verify_rep(u.induced).passed());
  CHECK(is_star_rep(u.induced, star_of(*s.h), u.form));
  CHECK(u.theta_star_rep);
  CHECK(u.rho_inner_unitary);
  CHECK(u.theta_inner_unitary);
}

TEST_CASE("unitary induction degenerate cases") {
  S3Setup s;
  // A = H: induced is rho with its form
  auto all = corpus::subgroup_subalgebra(s.h, {0, 1, 2, 3, 4, 5});
  auto reps = corpus::representations();
  for (const auto &r : reps) {
    if (r.name != "S3:standard")
      continue;
    Representation rho(all.small, 2, r.rep.matrices());
    SesquilinearForm v{Matrix::identity(s.h->field(), 2)};
    UnitaryInduction u = unitary_induction(all, rho, v);
    CHECK(u.gram_rank == 2);
    CHECK(u.induced.dim() == 2);
    CHECK(u.isometric);
    CHECK(positivity(u.form) == Positivity::positive_definite);
  }
  // A = k1 in a group algebra: regular representation with the standard form
  auto unit = corpus::subgroup_subalgebra(s.h, {0});
  UnitaryInduction u = unitary_induction(unit, trivial_rep(unit.small), {Matrix::identity(s.h->field(), 1)});
  CHECK(u.gram == Matrix::identity(s.h->field(), 6));
  CHECK(u.induced.matrices() == regular_rep(s.h).matrices());
  CHECK(u.form.gram == Matrix::identity(s.h->field(), 6));
}
