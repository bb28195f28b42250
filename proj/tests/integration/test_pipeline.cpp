#include "support.hpp"

#include "hopf/io.hpp"

using namespace test;
using hopf::io::Json;

namespace {

// serialize, parse back, and re-verify as a file-based user would
HopfAlgebraPtr through_json(const HopfAlgebra &h) {
  auto back = io::algebra_from_json(Json::parse(io::algebra_to_json(h).dump()));
  REQUIRE(verify_hopf(*back).passed());
  return back;
}

} // namespace

TEST_CASE("corpus representations survive serialization") {
  for (const auto &r : corpus::representations()) {
    INFO(r.name);
    HopfAlgebraPtr h = through_json(*r.rep.algebra());
    Representation pi = io::rep_from_json(h, Json::parse(io::rep_to_json(r.rep).dump()));
    HopfImageResult a = hopf_image_fixpoint(r.rep), b = hopf_image_fixpoint(pi);
    CHECK(a.ideal == io::subspace_from_json(h->field(), h->dim(), Json::parse(io::to_json(b.ideal).dump())));
  }
}

TEST_CASE("hopf image, quotient and re-image") {
  for (const auto &r : corpus::representations()) {
    INFO(r.name);
    HopfImage img = hopf_image_quotient(r.rep);
    HopfAlgebraPtr q = through_json(*img.quotient.algebra);
    CHECK(q->dim() == r.rep.algebra()->dim() - img.ideal.dim());
    // the projection is a Hopf map and pi factors through it
    CHECK(check_hopf_map(*r.rep.algebra(), *img.quotient.algebra, img.quotient.projection).passed());
    for (std::size_t x = 0; x < r.rep.algebra()->dim(); ++x) {
      Vector px = img.quotient.projection.column(x);
      Matrix acc(r.rep.algebra()->field(), r.rep.dim(), r.rep.dim());
      for (std::size_t i = 0; i < px.size(); ++i)
        acc = acc + img.factored[i].scaled(px[i]);
      CHECK(acc == r.rep[x]);
    }
  }
}

TEST_CASE("extension pipeline for every normal subgroup with a faithful character") {
  // k[G] over the corpus field, N normal and abelian, rho a faithful character of N
  // taken from the corpus characters of the cyclic group of the same order
  for (const auto &e : corpus::groups()) {
    for (const auto &n : e.table.normal_subgroups()) {
      auto emb = corpus::subgroup_subalgebra(e.algebra, n);
      if (n.size() == 1 || n.size() == e.table.order() || !emb.small->is_commutative())
        continue;
      // regular rep of the subalgebra is faithful; theta must then be inner faithful
      Representation rho = regular_rep(emb.small);
      INFO(e.name << " |N|=" << n.size());
      ExtensionRep ext = extension_rep(emb, rho);
      CHECK(verify_rep(ext.theta).passed());
      CHECK(inner_faithful(ext.theta));
      CHECK(check_exact_sequence(emb, *ext.quotient.algebra, ext.quotient.projection).passed());
    }
  }
}

TEST_CASE("star data flows through the quotient") {
  GroupTable s3 = corpus::symmetric3();
  auto h = group_algebra(s3, corpus::cyclotomic3());
  auto a3 = corpus::subgroup_subalgebra(h, {0, 3, 4});
  HopfQuotient q = quotient_by_subalgebra(a3);
  HopfAlgebraPtr qq = through_json(*q.algebra);
  REQUIRE(qq->star_matrix());
  CHECK(verify_star(*qq, StarStructure{*qq->star_matrix()}).passed());
  // p(x^*) = p(x)^*
  for (std::size_t x = 0; x < 6; ++x) {
    Vector lhs = q.projection * apply_star(*h, StarStructure{*h->star_matrix()}, h->basis_vector(x));
    Vector rhs = apply_star(*qq, StarStructure{*qq->star_matrix()}, q.projection * h->basis_vector(x));
    CHECK(lhs == rhs);
  }
}
