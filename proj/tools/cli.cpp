#include "cli.hpp"

#include "hopf/corpus.hpp"
#include "hopf/io.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <deque>
#include <functional>
#include <iomanip>
#include <sstream>

namespace hopf::cli {

namespace {

using io::Json;

constexpr const char *kVersion = HOPFIMG_VERSION;

std::string sha256_hex(const std::string &data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

// Collects the inputs of one command so the report can carry their hashes.
class Session {
public:
  const io::LoadedFile &load(const std::string &path) {
    files_.push_back(io::load(path));
    return files_.back();
  }

  /// Inline JSON text, or a path when the text does not parse.
  Json json_arg(const std::string &text) {
    Json j = Json::parse(text, nullptr, false);
    if (!j.is_discarded()) {
      inline_.push_back(text);
      return j;
    }
    return load(text).json;
  }

  HopfAlgebraPtr algebra(const std::string &path) {
    const auto &f = load(path);
    HopfAlgebraPtr h;
    try {
      h = io::algebra_from_json(f.json);
    } catch (const InputError &e) {
      throw InputError(path + ": " + e.what());
    }
    validate(*h, path);
    return h;
  }

  static void validate(const HopfAlgebra &h, const std::string &what) {
    auto rep = verify_hopf(h);
    if (!rep.passed())
      throw InputError(what + ": axiom " + rep.first_failure() + " fails");
    if (h.star_matrix() && !verify_star(h, StarStructure{*h.star_matrix()}).passed())
      throw InputError(what + ": star structure fails the Hopf *-algebra axioms");
  }

  Representation rep(const HopfAlgebraPtr &h, const std::string &path) {
    const auto &f = load(path);
    try {
      Representation r = io::rep_from_json(h, f.json);
      if (!verify_rep(r).passed())
        throw InputError("matrices do not define a representation");
      return r;
    } catch (const InputError &e) {
      throw InputError(path + ": " + e.what());
    }
  }

  Subspace subspace(const HopfAlgebra &h, const std::string &path) {
    const auto &f = load(path);
    try {
      return io::subspace_from_json(h.field(), h.dim(), f.json);
    } catch (const InputError &e) {
      throw InputError(path + ": " + e.what());
    }
  }

  SubalgebraEmbedding embedding(const std::string &path) {
    const auto &f = load(path);
    try {
      SubalgebraEmbedding emb = io::embedding_from_file(f);
      validate(*emb.big, path + " (big)");
      validate(*emb.small, path + " (small)");
      return emb;
    } catch (const InputError &e) {
      throw InputError(path + ": " + e.what());
    }
  }

  SesquilinearForm form(const Field &, const FieldPtr &fp, std::size_t n, const std::string &path) {
    if (path.empty())
      return SesquilinearForm{Matrix::identity(fp, n)};
    const auto &f = load(path);
    return SesquilinearForm{io::matrix_from_json(fp, f.json, n, n, "form")};
  }

  Json header(const std::string &command) const {
    Json inputs = Json::array();
    std::string all;
    for (const auto &f : files_) {
      std::string h = sha256_hex(f.content);
      inputs.push_back(Json{{"path", f.path.string()}, {"sha256", h}});
      all += h;
    }
    for (const auto &t : inline_) {
      std::string h = sha256_hex(t);
      inputs.push_back(Json{{"inline", t}, {"sha256", h}});
      all += h;
    }
    return {{"tool", "hopfimg"}, {"version", kVersion}, {"command", command}, {"inputs", inputs},
            {"input_hash", sha256_hex(all)}};
  }

private:
  std::deque<io::LoadedFile> files_;
  std::vector<std::string> inline_;
};

Json result_json(const HopfImageResult &r) {
  Json j{{"algorithm", to_string(r.algorithm)},
         {"ideal_dim", r.ideal.dim()},
         {"ideal", io::to_json(r.ideal)},
         {"inner_faithful", r.inner_faithful},
         {"iterations", r.iterations},
         {"stabilized", r.stabilized},
         {"dimension_chain", r.dimension_chain}};
  if (r.words_processed)
    j["words_processed"] = *r.words_processed;
  return j;
}

Json hopf_ideal_json(const HopfIdealReport &r) {
  return {{"left_ideal", r.left_ideal}, {"right_ideal", r.right_ideal}, {"counit", r.counit},
          {"antipode", r.antipode},     {"coideal", r.coideal},         {"passed", r.passed()}};
}

FieldPtr named_field(const std::string &name) {
  if (name == "Q")
    return Field::rationals();
  if (name == "Q(omega)")
    return corpus::cyclotomic3();
  if (name == "Q(i)")
    return corpus::gaussian();
  if (name == "Q(zeta5)")
    return corpus::cyclotomic5();
  throw InputError("--field: unknown field " + name + " (expected Q, Q(omega), Q(i), Q(zeta5))");
}

struct Command {
  std::string name;
  std::function<int(Session &, Json &)> action;
};

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact Hopf images and inner faithfulness of representations", "hopfimg"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Command cmd;
  auto bind = [&](CLI::App *sub, std::function<int(Session &, Json &)> f) {
    sub->callback([&cmd, sub, f] { cmd = {sub->get_name(), f}; });
  };

  // check
  std::string alg_path, rep_path;
  auto *check = app.add_subcommand("check", "Verify the Hopf algebra axioms");
  check->add_option("algebra", alg_path)->required();
  bind(check, [&](Session &s, Json &rep) {
    const auto &f = s.load(alg_path);
    HopfAlgebraPtr h = io::algebra_from_json(f.json);
    auto r = verify_hopf(*h);
    Json axioms = Json::object();
    for (const auto &c : r.checks) {
      Json e{{"passed", c.passed}};
      if (!c.passed)
        e["witness"] = c.witness;
      axioms[c.name] = e;
    }
    rep["dim"] = h->dim();
    rep["axioms"] = axioms;
    rep["passed"] = r.passed();
    if (!r.passed())
      rep["first_failure"] = r.first_failure();
    bool ok = r.passed();
    if (h->star_matrix()) {
      auto sr = verify_star(*h, StarStructure{*h->star_matrix()});
      rep["star"] = {{"involutive", sr.involutive},   {"antimultiplicative", sr.antimultiplicative},
                     {"comultiplicative", sr.comultiplicative}, {"counit", sr.counit},
                     {"antipode", sr.antipode},       {"passed", sr.passed()}};
      ok = ok && sr.passed();
    }
    if (!r.passed())
      err << "axiom failed: " << r.first_failure() << "\n";
    return ok ? 0 : 1;
  });

  // gen
  auto *gen = app.add_subcommand("gen", "Generate corpus objects");
  gen->require_subcommand(1);
  std::string table_path, group_name, field_name = "Q";
  auto group_from = [&](Session &s) {
    if (!table_path.empty() == !group_name.empty())
      throw InputError("give exactly one of --table or --name");
    if (!table_path.empty())
      return io::group_from_json(s.load(table_path).json);
    auto g = corpus::named_group(group_name);
    if (!g)
      throw InputError("--name: unknown group " + group_name);
    return *g;
  };
  for (const char *kind : {"group-algebra", "dual-group-algebra"}) {
    auto *sub = gen->add_subcommand(kind, std::string("Structure constants of the ") + kind);
    sub->add_option("--table", table_path, "Group table file");
    sub->add_option("--name", group_name, "Built-in group: Z1..Z9, S3, D4, Q8");
    sub->add_option("--field", field_name, "Q, Q(omega), Q(i) or Q(zeta5)");
    const bool dual = std::string(kind) == "dual-group-algebra";
    bind(sub, [&, dual](Session &s, Json &rep) {
      GroupTable g = group_from(s);
      FieldPtr f = named_field(field_name);
      rep["algebra"] = io::algebra_to_json(dual ? *dual_group_algebra(g, f) : *group_algebra(g, f));
      return 0;
    });
  }
  auto *gsw = gen->add_subcommand("sweedler", "Sweedler's 4-dimensional Hopf algebra");
  gsw->add_option("--field", field_name);
  bind(gsw, [&](Session &, Json &rep) {
    rep["algebra"] = io::algebra_to_json(*sweedler(named_field(field_name)));
    return 0;
  });
  auto *gtab = gen->add_subcommand("table", "Multiplication table of a built-in group");
  gtab->add_option("--name", group_name)->required();
  bind(gtab, [&](Session &s, Json &rep) {
    rep["table"] = io::group_to_json(group_from(s));
    return 0;
  });

  // rep-check
  auto *repcheck = app.add_subcommand("rep-check", "Verify a representation and report its kernel");
  repcheck->add_option("algebra", alg_path)->required();
  repcheck->add_option("rep", rep_path)->required();
  bind(repcheck, [&](Session &s, Json &rep) {
    HopfAlgebraPtr h = s.algebra(alg_path);
    const auto &f = s.load(rep_path);
    Representation pi = io::rep_from_json(h, f.json);
    auto r = verify_rep(pi);
    rep["multiplicative"] = r.multiplicative;
    rep["unital"] = r.unital;
    rep["passed"] = r.passed();
    if (!r.passed()) {
      rep["witness"] = r.witness;
      return 1;
    }
    rep["kernel"] = io::to_json(rep_kernel(pi));
    return 0;
  });

  // image
  std::string algorithm = "fixpoint";
  std::size_t max_len = 0;
  auto *image = app.add_subcommand("image", "Largest Hopf ideal inside the kernel of a representation");
  image->add_option("algebra", alg_path)->required();
  image->add_option("rep", rep_path)->required();
  image->add_option("--alg", algorithm)->check(CLI::IsMember({"fixpoint", "words"}));
  image->add_option("--max-len", max_len, "Longest word for --alg words (default: dim H)")
      ->check(CLI::PositiveNumber);
  bind(image, [&](Session &s, Json &rep) {
    HopfAlgebraPtr h = s.algebra(alg_path);
    Representation pi = s.rep(h, rep_path);
    HopfImageResult r = algorithm == "words" ? hopf_image_words(pi, max_len ? max_len : h->dim())
                                             : hopf_image_fixpoint(pi);
    rep.update(result_json(r));
    rep["image_dim"] = h->dim() - r.ideal.dim();
    return r.stabilized ? 0 : 1;
  });

  auto *inner = app.add_subcommand("inner-faithful", "Decide inner faithfulness");
  inner->add_option("algebra", alg_path)->required();
  inner->add_option("rep", rep_path)->required();
  bind(inner, [&](Session &s, Json &rep) {
    HopfAlgebraPtr h = s.algebra(alg_path);
    HopfImageResult r = hopf_image_fixpoint(s.rep(h, rep_path));
    rep["inner_faithful"] = r.inner_faithful;
    rep["ideal_dim"] = r.ideal.dim();
    return r.inner_faithful ? 0 : 1;
  });

  // quotient
  std::string ideal_path, ideal2_path, rep2_path, form_path;
  auto *quot = app.add_subcommand("quotient", "Quotient by a Hopf ideal");
  quot->add_option("algebra", alg_path)->required();
  quot->add_option("--ideal", ideal_path)->required();
  bind(quot, [&](Session &s, Json &rep) {
    HopfAlgebraPtr h = s.algebra(alg_path);
    Subspace j = s.subspace(*h, ideal_path);
    auto r = is_hopf_ideal(*h, j);
    rep["hopf_ideal"] = hopf_ideal_json(r);
    if (!r.passed())
      return 1;
    HopfQuotient q = quotient_hopf(h, j);
    rep["algebra"] = io::algebra_to_json(*q.algebra);
    rep["projection"] = io::to_json(q.projection);
    rep["dim"] = q.algebra->dim();
    return 0;
  });

  // extend
  std::string emb_path;
  auto *extend = app.add_subcommand("extend", "Extension representation along a normal Hopf subalgebra");
  extend->add_option("algebra", alg_path)->required();
  extend->add_option("--subalgebra", emb_path)->required();
  extend->add_option("--rep", rep_path)->required();
  bind(extend, [&](Session &s, Json &rep) {
    HopfAlgebraPtr h = s.algebra(alg_path);
    SubalgebraEmbedding emb = s.embedding(emb_path);
    if (!emb.big->same_structure(*h))
      throw InputError(emb_path + ": big algebra differs from " + alg_path);
    emb.big = h;
    Representation rho = s.rep(emb.small, rep_path);
    rep["normal"] = adjoint_stability(emb);
    if (!rep["normal"].get<bool>())
      throw InputError(emb_path + ": subalgebra is not normal");
    ExtensionRep ext = extension_rep(emb, rho);
    HopfImageResult r = hopf_image_fixpoint(ext.theta);
    rep["subalgebra_commutative"] = ext.subalgebra_commutative;
    if (!ext.subalgebra_commutative)
      err << "warning: subalgebra is not commutative; inner faithfulness is not guaranteed\n";
    rep["quotient_dim"] = ext.quotient.algebra->dim();
    rep["induced_dim"] = ext.induced.dim;
    rep["rho_inner_faithful"] = hopf_image_fixpoint(rho).inner_faithful;
    rep["theta"] = io::rep_to_json(ext.theta);
    rep["inner_faithful"] = r.inner_faithful;
    rep["ideal_dim"] = r.ideal.dim();
    return r.inner_faithful ? 0 : 1;
  });

  // glue
  auto *glue = app.add_subcommand("glue", "Product of representations of two Hopf quotients");
  glue->add_option("algebra", alg_path)->required();
  glue->add_option("--ideal1", ideal_path)->required();
  glue->add_option("--ideal2", ideal2_path)->required();
  glue->add_option("--rep1", rep_path)->required();
  glue->add_option("--rep2", rep2_path)->required();
  bind(glue, [&](Session &s, Json &rep) {
    HopfAlgebraPtr h = s.algebra(alg_path);
    Subspace i1 = s.subspace(*h, ideal_path), i2 = s.subspace(*h, ideal2_path);
    for (const auto *j : {&i1, &i2})
      if (!is_hopf_ideal(*h, *j).passed())
        throw InputError((j == &i1 ? ideal_path : ideal2_path) + ": not a Hopf ideal");
    HopfQuotient q1 = quotient_hopf(h, i1), q2 = quotient_hopf(h, i2);
    Representation r1 = s.rep(q1.algebra, rep_path), r2 = s.rep(q2.algebra, rep2_path);
    GlueResult g = glueing_rep(h, i1, i2, r1, r2);
    HopfImageResult r = hopf_image_fixpoint(g.rep);
    rep["hypothesis_holds"] = g.hypothesis_holds;
    rep["rep1_inner_faithful"] = hopf_image_fixpoint(r1).inner_faithful;
    rep["rep2_inner_faithful"] = hopf_image_fixpoint(r2).inner_faithful;
    rep["rep"] = io::rep_to_json(g.rep);
    rep["inner_faithful"] = r.inner_faithful;
    rep["ideal_dim"] = r.ideal.dim();
    return r.inner_faithful ? 0 : 1;
  });

  auto *cot = app.add_subcommand("cotensor", "Injectivity of x -> pi1(x1) (x) pi2(x2)");
  cot->add_option("algebra", alg_path)->required();
  cot->add_option("--ideal1", ideal_path)->required();
  cot->add_option("--ideal2", ideal2_path)->required();
  bind(cot, [&](Session &s, Json &rep) {
    HopfAlgebraPtr h = s.algebra(alg_path);
    Subspace i1 = s.subspace(*h, ideal_path), i2 = s.subspace(*h, ideal2_path);
    for (const auto *j : {&i1, &i2})
      if (!is_hopf_ideal(*h, *j).passed())
        throw InputError((j == &i1 ? ideal_path : ideal2_path) + ": not a Hopf ideal");
    bool inj = cotensor_injectivity(h, i1, i2);
    rep["injective"] = inj;
    return inj ? 0 : 1;
  });

  std::string target = "quotient";
  auto *exact = app.add_subcommand("exact-check", "Exactness of k -> A -> H -> H//A -> k");
  exact->add_option("subalgebra", emb_path)->required();
  exact->add_option("--target", target, "quotient (H//A) or counit (H -> k)")
      ->check(CLI::IsMember({"quotient", "counit"}));
  bind(exact, [&](Session &s, Json &rep) {
    SubalgebraEmbedding emb = s.embedding(emb_path);
    HopfQuotient q = target == "quotient" ? quotient_by_subalgebra(emb)
                                          : quotient_hopf(emb.big, kernel(Matrix::from_rows(
                                                                        emb.big->field(), emb.big->dim(),
                                                                        std::vector<Vector>{emb.big->counit_vector()})));
    auto r = check_exact_sequence(emb, *q.algebra, q.projection);
    rep["normal"] = adjoint_stability(emb);
    rep["target_dim"] = q.algebra->dim();
    rep["conditions"] = {{"injective_surjective", r.injective_surjective},
                         {"composite_is_counit", r.composite_is_counit},
                         {"kernel_is_plus_ideal", r.kernel_is_plus_ideal},
                         {"coinvariants_equal", r.coinvariants_equal}};
    rep["passed"] = r.passed();
    return r.passed() ? 0 : 1;
  });

  // star-check
  auto *starc = app.add_subcommand("star-check", "Verify the *-structure (and optionally a *-representation)");
  starc->add_option("algebra", alg_path)->required();
  starc->add_option("--rep", rep_path);
  starc->add_option("--form", form_path);
  bind(starc, [&](Session &s, Json &rep) {
    const auto &f = s.load(alg_path);
    HopfAlgebraPtr h = io::algebra_from_json(f.json);
    auto ax = verify_hopf(*h);
    if (!ax.passed())
      throw InputError(alg_path + ": axiom " + ax.first_failure() + " fails");
    if (!h->star_matrix())
      throw InputError(alg_path + ".star: missing");
    StarStructure star{*h->star_matrix()};
    auto r = verify_star(*h, star);
    rep["star"] = {{"involutive", r.involutive},   {"antimultiplicative", r.antimultiplicative},
                   {"comultiplicative", r.comultiplicative}, {"counit", r.counit},
                   {"antipode", r.antipode},       {"passed", r.passed()}};
    bool ok = r.passed();
    if (!rep_path.empty()) {
      Representation pi = s.rep(h, rep_path);
      SesquilinearForm g = s.form(h->k(), h->field(), pi.dim(), form_path);
      bool sr = is_star_rep(pi, star, g);
      rep["star_rep"] = sr;
      rep["form_hermitian"] = is_hermitian(g);
      rep["form_positivity"] = to_string(positivity(g));
      ok = ok && sr;
    }
    return ok ? 0 : 1;
  });

  auto *iu = app.add_subcommand("inner-unitary", "Largest Hopf *-ideal inside the kernel is zero");
  iu->add_option("algebra", alg_path)->required();
  iu->add_option("rep", rep_path)->required();
  iu->add_option("--form", form_path);
  bind(iu, [&](Session &s, Json &rep) {
    HopfAlgebraPtr h = s.algebra(alg_path);
    if (!h->star_matrix())
      throw InputError(alg_path + ".star: missing");
    Representation pi = s.rep(h, rep_path);
    SesquilinearForm g = s.form(h->k(), h->field(), pi.dim(), form_path);
    StarStructure star{*h->star_matrix()};
    if (!is_star_rep(pi, star, g))
      throw InputError(rep_path + ": not a *-representation for the form");
    auto r = inner_unitary(pi, star, g);
    rep["inner_unitary"] = r.inner_unitary;
    rep["ideal_dim"] = r.largest_star_ideal.ideal.dim();
    rep["ideal"] = io::to_json(r.largest_star_ideal.ideal);
    rep["inner_faithful"] = hopf_image_fixpoint(pi).inner_faithful;
    return r.inner_unitary ? 0 : 1;
  });

  auto *haar = app.add_subcommand("haar", "Normalized invariant functional");
  haar->add_option("algebra", alg_path)->required();
  bind(haar, [&](Session &s, Json &rep) {
    HopfAlgebraPtr h = s.algebra(alg_path);
    Functional phi = haar_functional(*h);
    rep["haar"] = io::to_json(h->k(), phi.coeffs);
    rep["left_invariant"] = is_left_invariant(*h, phi);
    rep["right_invariant"] = is_right_invariant(*h, phi);
    return 0;
  });

  auto *ce = app.add_subcommand("cond-exp", "Conditional expectation onto a normal Hopf subalgebra");
  ce->add_option("subalgebra", emb_path)->required();
  bind(ce, [&](Session &s, Json &rep) {
    SubalgebraEmbedding emb = s.embedding(emb_path);
    HopfQuotient q = quotient_by_subalgebra(emb);
    ConditionalExpectation e = conditional_expectation(emb, *q.algebra, q.projection);
    rep["map"] = io::to_json(e.map);
    rep["idempotent"] = e.idempotent;
    rep["fixes_subalgebra"] = e.fixes_subalgebra;
    rep["image_is_subalgebra"] = e.image_is_subalgebra;
    rep["bimodule"] = e.bimodule;
    rep["passed"] = e.passed();
    return e.passed() ? 0 : 1;
  });

  auto *ui = app.add_subcommand("unitary-induce", "Unitary induction of a *-representation of A");
  ui->add_option("subalgebra", emb_path)->required();
  ui->add_option("--rep", rep_path)->required();
  ui->add_option("--form", form_path, "Form on V (default: identity)");
  bind(ui, [&](Session &s, Json &rep) {
    SubalgebraEmbedding emb = s.embedding(emb_path);
    Representation rho = s.rep(emb.small, rep_path);
    SesquilinearForm g = s.form(emb.small->k(), emb.small->field(), rho.dim(), form_path);
    UnitaryInduction u = unitary_induction(emb, rho, g);
    rep["gram"] = io::to_json(u.gram);
    rep["gram_rank"] = u.gram_rank;
    rep["induced"] = io::rep_to_json(u.induced);
    rep["form"] = io::to_json(u.form.gram);
    rep["hermitian"] = u.hermitian;
    rep["isometric"] = u.isometric;
    rep["radical_invariant"] = u.radical_invariant;
    rep["positivity"] = to_string(u.positivity);
    rep["theta_star_rep"] = u.theta_star_rep;
    rep["rho_inner_unitary"] = u.rho_inner_unitary;
    rep["theta_inner_unitary"] = u.theta_inner_unitary;
    bool ok = u.hermitian && u.isometric && u.radical_invariant && u.theta_star_rep &&
              (!u.rho_inner_unitary || u.theta_inner_unitary);
    if (u.positivity == Positivity::undecidable)
      err << "note: positivity is undecidable over this field; Hermitian-only mode\n";
    else if (u.positivity == Positivity::not_positive)
      ok = false;
    rep["passed"] = ok;
    return ok ? 0 : 1;
  });

  std::string grouplike_arg, character_arg;
  std::size_t m = 1;
  auto *aug = app.add_subcommand("augment", "pi (+) phi (+) phi^-1 for a regular-antipode witness");
  aug->add_option("algebra", alg_path)->required();
  aug->add_option("rep", rep_path)->required();
  aug->add_option("--grouplike", grouplike_arg, "Vector (inline JSON or file)")->required();
  aug->add_option("--character", character_arg, "Functional (inline JSON or file)")->required();
  aug->add_option("--m", m)->check(CLI::PositiveNumber);
  bind(aug, [&](Session &s, Json &rep) {
    HopfAlgebraPtr h = s.algebra(alg_path);
    Representation pi = s.rep(h, rep_path);
    RegularAntipodeWitness w{io::vector_from_json(h->k(), s.json_arg(grouplike_arg), h->dim(), "grouplike"),
                             io::functional_from_json(h->k(), h->dim(), s.json_arg(character_arg), "character"), m};
    if (!grouplike_check(*h, w.a))
      throw InputError("grouplike: not a group-like element");
    if (!is_character(*h, w.phi))
      throw InputError("character: not an algebra character");
    bool holds = check_regular_antipode(*h, w);
    rep["witness_valid"] = holds;
    if (!holds)
      return 1;
    Representation aug_rep = augment_regular(pi, w);
    HopfImageResult r = hopf_image_fixpoint(aug_rep);
    rep["rep"] = io::rep_to_json(aug_rep);
    rep["inner_faithful"] = r.inner_faithful;
    rep["ideal_dim"] = r.ideal.dim();
    return 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Session session;
  Json report;
  int code = 2;
  try {
    Json body = Json::object();
    code = cmd.action(session, body);
    report = session.header(cmd.name);
    report.update(body);
  } catch (const InputError &e) {
    report = session.header(cmd.name);
    report["error"] = e.what();
    err << "input error: " << e.what() << "\n";
    code = 2;
  } catch (const MathError &e) {
    report = session.header(cmd.name);
    report["error"] = e.what();
    err << "error: " << e.what() << "\n";
    code = 1;
  }
  report["exit_code"] = code;
  out << report.dump(2) << "\n";
  return code;
}

} // namespace hopf::cli
