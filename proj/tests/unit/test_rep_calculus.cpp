#include "support.hpp"

using namespace test;

namespace {

Matrix diag(const FieldPtr &f, std::vector<Scalar> d) {
  Matrix m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

// Brute-force faithfulness of a group representation.
bool faithful_on_group(const GroupTable &g, const Representation &pi) {
  return corpus::group_kernel(g, pi).size() == 1;
}

} // namespace

TEST_CASE("sweedler 2-dim representation") {
  auto h = sweedler();
  const Field &f = h->k();
  Representation pi = corpus::sweedler_rep2(h);
  CHECK(verify_rep(pi).passed());
  CHECK(rep_kernel(pi) == span(h->field(), 4, {vec(f, {0, 0, 1, -1})}));

  // x -> E21 breaks xg = -gx
  std::vector<Matrix> mats = pi.matrices();
  mats[2] = mats[2].transpose();
  mats[3] = mats[2];
  CHECK(!verify_rep(Representation(h, 2, mats)).passed());
}

TEST_CASE("regular and trivial representations") {
  for (const auto &e : corpus::groups()) {
    for (const auto &h : {e.algebra, e.dual}) {
      Representation reg = regular_rep(h);
      CHECK(verify_rep(reg).passed());
      CHECK(reg.dim() == h->dim());
      CHECK(rep_kernel(reg).is_zero());
      Representation triv = trivial_rep(h);
      CHECK(verify_rep(triv).passed());
      CHECK(rep_kernel(triv).dim() == h->dim() - 1);
      // dual of the trivial module is trivial
      CHECK(dual_rep(triv).matrices() == triv.matrices());
    }
  }
}

TEST_CASE("group algebra dual is inverse transpose") {
  for (const auto &r : corpus::representations()) {
    if (r.kind != corpus::RepKind::group_algebra)
      continue;
    Representation du = dual_rep(r.rep);
    const FieldPtr &f = r.rep.algebra()->field();
    for (std::size_t g = 0; g < r.group->order(); ++g) {
      // inverse transpose: du(g) * pi(g)^T = I
      CHECK(du[g] * r.rep[g].transpose() == Matrix::identity(f, r.rep.dim()));
    }
  }
}

TEST_CASE("kernel of the dual is the S-preimage of the kernel") {
  for (const auto &r : corpus::representations()) {
    INFO(r.name);
    const HopfAlgebra &h = *r.rep.algebra();
    CHECK(rep_kernel(dual_rep(r.rep)) == preimage(h.antipode_matrix(), rep_kernel(r.rep)));
  }
}

TEST_CASE("tensor products") {
  auto reps = corpus::representations();
  for (const auto &r : reps) {
    INFO(r.name);
    Representation t = tensor_rep(r.rep, trivial_rep(r.rep.algebra()));
    CHECK(t.matrices() == r.rep.matrices());
    Representation t2 = tensor_rep(trivial_rep(r.rep.algebra()), r.rep);
    CHECK(t2.matrices() == r.rep.matrices());
  }
  // characters multiply
  GroupTable z6 = corpus::cyclic(6);
  auto rf = corpus::cyclic_field(6);
  auto h = group_algebra(z6, rf.field);
  const Field &f = *rf.field;
  Representation a = corpus::rep_from_generators(h, z6, {1}, {diag(rf.field, {rf.zeta})});
  Representation b = corpus::rep_from_generators(h, z6, {1}, {diag(rf.field, {f.mul(rf.zeta, rf.zeta)})});
  Representation ab = tensor_rep(a, b);
  for (std::size_t g = 0; g < 6; ++g)
    CHECK(ab[g](0, 0) == f.mul(a[g](0, 0), b[g](0, 0)));

  auto sw = sweedler();
  Representation pi = corpus::sweedler_rep2(sw);
  Representation pp = tensor_rep(pi, pi);
  CHECK(pp.dim() == 4);
  CHECK(verify_rep(pp).passed());
}

TEST_CASE("product representations intersect kernels") {
  auto reps = corpus::representations();
  for (std::size_t i = 0; i + 1 < reps.size(); ++i) {
    const auto &a = reps[i].rep, &b = reps[i + 1].rep;
    if (!same_algebra(a.algebra(), b.algebra()))
      continue;
    Representation p = product_rep(a, b);
    CHECK(verify_rep(p).passed());
    CHECK(rep_kernel(p) == intersect(rep_kernel(a), rep_kernel(b)));
    CHECK(rep_kernel(product_rep(a, a)) == rep_kernel(a));
  }
  // Z6: characters through the Z2 and Z3 quotients, codimension 1 each and 2 together
  GroupTable z6 = corpus::cyclic(6);
  auto rf = corpus::cyclic_field(6);
  auto h = group_algebra(z6, rf.field);
  const Field &f = *rf.field;
  Scalar z3 = f.mul(rf.zeta, rf.zeta), z2 = f.mul(z3, rf.zeta);
  Representation c2 = corpus::rep_from_generators(h, z6, {1}, {diag(rf.field, {z2})});
  Representation c3 = corpus::rep_from_generators(h, z6, {1}, {diag(rf.field, {z3})});
  CHECK(rep_kernel(c2).dim() == 5);
  CHECK(rep_kernel(c3).dim() == 5);
  CHECK(rep_kernel(product_rep(c2, c3)).dim() == 4);
  CHECK_THROWS(product_rep(c2, trivial_rep(sweedler())));
}

TEST_CASE("words") {
  auto sw = sweedler();
  Representation pi = corpus::sweedler_rep2(sw);
  CHECK(word_rep(pi, Word{}).matrices() == trivial_rep(sw).matrices());
  CHECK(word_rep(pi, Word{{0}}).matrices() == pi.matrices());
  Representation w01 = word_rep(pi, Word{{0, 1}});
  CHECK(w01.dim() == 4);
  CHECK(verify_rep(w01).passed());
  for (std::size_t k = 0; k < 6; ++k) {
    Representation it = pi;
    for (std::size_t j = 0; j < k; ++j)
      it = dual_rep(it);
    CHECK(word_rep(pi, Word{{k}}).matrices() == it.matrices());
    CHECK(iterated_dual(pi, k).matrices() == it.matrices());
  }
  // alpha_k and alpha_{k+4} agree since S^4 = id
  CHECK(word_rep(pi, Word{{1}}).matrices() == word_rep(pi, Word{{5}}).matrices());
  CHECK(reduce_word(Word{{5, 4, 7}}, 4) == Word{{1, 0, 3}});
  CHECK(to_string(Word{}) == "1");
}

TEST_CASE("pointed criterion") {
  GroupTable z3 = corpus::cyclic(3);
  auto rf = corpus::cyclic_field(3);
  auto h = group_algebra(z3, rf.field);
  std::vector<Vector> basis;
  for (std::size_t g = 0; g < 3; ++g)
    basis.push_back(h->basis_vector(g));
  Representation omega = corpus::rep_from_generators(h, z3, {1}, {diag(rf.field, {rf.zeta})});
  CHECK(pointed_criterion(omega, basis));
  CHECK(!pointed_criterion(trivial_rep(h), basis));

  auto sw = sweedler();
  CHECK(pointed_criterion(corpus::sweedler_rep2(sw), {sw->basis_vector(0), sw->basis_vector(1)}));
  CHECK_THROWS_AS(pointed_criterion(corpus::sweedler_rep2(sw), {sw->basis_vector(2)}), MathError);

  // on group algebras it matches brute-force faithfulness
  for (const auto &r : corpus::representations()) {
    if (r.kind != corpus::RepKind::group_algebra)
      continue;
    INFO(r.name);
    std::vector<Vector> gl;
    for (std::size_t g = 0; g < r.group->order(); ++g)
      gl.push_back(r.rep.algebra()->basis_vector(g));
    CHECK(pointed_criterion(r.rep, gl) == faithful_on_group(*r.group, r.rep));
  }
}
