#include "support.hpp"

#include "cli.hpp"
#include "hopf/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace test;
using hopf::io::Json;

namespace {

const std::string data = DATA_DIR;

struct Outcome {
  int code;
  std::string text;
  Json json;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "hopfimg");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = hopf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  Json j = Json::parse(out.str(), nullptr, false);
  return {code, out.str(), j, err.str()};
}

std::string file(const std::string &name) { return data + "/" + name; }

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("hopf_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string write(const std::string &name, const Json &j) const {
    std::ofstream(path / name) << j.dump(1);
    return (path / name).string();
  }
};

} // namespace

TEST_CASE("report header") {
  Outcome o = run({"check", file("sweedler.json")});
  CHECK(o.code == 0);
  CHECK(o.json["tool"] == "hopfimg");
  CHECK(o.json["command"] == "check");
  CHECK(o.json["exit_code"] == 0);
  CHECK(o.json["passed"] == true);
  REQUIRE(o.json["inputs"].size() == 1);
  // sha256 of an empty concatenation differs from that of a file
  CHECK(o.json["inputs"][0]["sha256"].get<std::string>().size() == 64);
  CHECK(o.json["input_hash"].get<std::string>().size() == 64);
}

TEST_CASE("exit codes") {
  Outcome broken = run({"check", file("broken.json")});
  CHECK(broken.code == 1);
  CHECK(broken.json["passed"] == false);
  CHECK(broken.json["first_failure"] == "associativity");

  CHECK(run({"rep-check", file("sweedler.json"), file("rep2d_bad.json")}).code == 1);
  CHECK(run({"rep-check", file("sweedler.json"), file("rep2d.json")}).code == 0);

  Outcome missing = run({"check", file("nope.json")});
  CHECK(missing.code == 2);
  CHECK(missing.json["error"].get<std::string>().find("cannot open") != std::string::npos);

  // an algebra failing the axioms is an input error for commands that need one
  Outcome bad_alg = run({"image", file("broken.json"), file("rep2d.json")});
  CHECK(bad_alg.code == 2);
  CHECK(bad_alg.json["error"].get<std::string>().find("associativity") != std::string::npos);

  CHECK(run({"image", file("s3.json")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"haar", file("sweedler.json")}).code == 1);
}

TEST_CASE("hopf image commands") {
  for (const char *alg : {"fixpoint", "words"}) {
    Outcome o = run({"image", file("s3.json"), file("sign.json"), "--alg", alg});
    CHECK(o.code == 0);
    CHECK(o.json["ideal_dim"] == 4);
    CHECK(o.json["image_dim"] == 2);
    CHECK(o.json["inner_faithful"] == false);
  }
  // words capped at length 0 is rejected, length 1 may not certify
  CHECK(run({"image", file("sweedler.json"), file("rep2d.json"), "--alg", "words", "--max-len", "0"}).code == 2);

  Outcome fi = run({"image", file("sweedler.json"), file("rep2d.json")});
  Outcome wo = run({"image", file("sweedler.json"), file("rep2d.json"), "--alg", "words"});
  CHECK(fi.json["ideal"] == wo.json["ideal"]);
  CHECK(fi.json["ideal_dim"] == 0);

  CHECK(run({"inner-faithful", file("sweedler.json"), file("rep2d.json")}).code == 0);
  Outcome nf = run({"inner-faithful", file("s3.json"), file("sign.json")});
  CHECK(nf.code == 1);
  CHECK(nf.json["inner_faithful"] == false);
}

TEST_CASE("determinism") {
  std::vector<std::vector<std::string>> cmds{
      {"image", file("s3.json"), file("sign.json")},
      {"image", file("sweedler.json"), file("rep2d.json"), "--alg", "words"},
      {"unitary-induce", file("a3_in_s3.json"), "--rep", file("omega_char.json")},
      {"gen", "group-algebra", "--name", "Q8", "--field", "Q(i)"},
  };
  for (const auto &c : cmds) {
    Outcome a = run(c), b = run(c);
    CHECK(a.text == b.text);
    CHECK(!a.json.is_discarded());
  }
}

TEST_CASE("generated algebras feed back in") {
  TempDir tmp;
  Outcome g = run({"gen", "group-algebra", "--name", "S3"});
  REQUIRE(g.code == 0);
  std::string alg = tmp.write("s3.json", g.json["algebra"]);
  CHECK(run({"check", alg}).code == 0);
  // the generated file has the same structure as the shipped one
  CHECK(hopf::io::algebra_from_json(g.json["algebra"])
            ->same_structure(*hopf::io::algebra_from_json(hopf::io::load(file("s3.json")).json)));
  Outcome i = run({"image", alg, file("sign.json")});
  CHECK(i.json["ideal_dim"] == 4);

  Outcome d = run({"gen", "dual-group-algebra", "--table", file("s3_table.json")});
  REQUIRE(d.code == 0);
  std::string dual = tmp.write("c_s3.json", d.json["algebra"]);
  CHECK(run({"check", dual}).code == 0);
  CHECK(run({"haar", dual}).json["haar"][0] == "1/6");

  CHECK(run({"gen", "group-algebra", "--name", "S3", "--table", file("s3_table.json")}).code == 2);
  CHECK(run({"gen", "group-algebra", "--name", "A5"}).code == 2);
  CHECK(run({"gen", "sweedler", "--field", "R"}).code == 2);
  CHECK(run({"gen", "table", "--name", "D4"}).json["table"]["order"] == 8);
}

TEST_CASE("quotients, glueing and cotensor") {
  Outcome q = run({"quotient", file("z6_omega.json"), "--ideal", file("ideal_z2.json")});
  CHECK(q.code == 0);
  CHECK(q.json["dim"] == 2);
  CHECK(q.json["hopf_ideal"]["passed"] == true);

  CHECK(run({"cotensor", file("z6_omega.json"), "--ideal1", file("ideal_z2.json"), "--ideal2",
             file("ideal_z3.json")})
            .json["injective"] == true);
  Outcome same = run({"cotensor", file("z6_omega.json"), "--ideal1", file("ideal_z2.json"), "--ideal2",
                      file("ideal_z2.json")});
  CHECK(same.code == 1);

  // characters of the two quotients, written from the quotient algebras the CLI reports
  TempDir tmp;
  Outcome q3 = run({"quotient", file("z6_omega.json"), "--ideal", file("ideal_z3.json")});
  auto h2 = hopf::io::algebra_from_json(q.json["algebra"]);
  auto h3 = hopf::io::algebra_from_json(q3.json["algebra"]);
  REQUIRE(h2->dim() == 2);
  REQUIRE(h3->dim() == 3);
  // a character of k[Z_n] is determined by the image of the generator; the
  // quotient basis is the image of group elements 0..n-1, so evaluate by
  // pushing the Z6 character through the projection instead
  auto h6 = hopf::io::algebra_from_json(hopf::io::load(file("z6_omega.json")).json);
  const Field &f = h6->k();
  Scalar w = f.generator();
  auto character = [&](const HopfAlgebraPtr &quot, const Json &proj, Scalar z) {
    Matrix p = hopf::io::matrix_from_json(h6->field(), proj, quot->dim(), 6, "p");
    std::vector<Matrix> mats(quot->dim(), Matrix(h6->field(), 1, 1));
    Scalar cur = f.one();
    for (std::size_t g = 0; g < 6; ++g) {
      Vector col = p.column(g);
      // group elements map to basis vectors of the quotient
      for (std::size_t i = 0; i < quot->dim(); ++i)
        if (col[i] == f.one())
          mats[i](0, 0) = cur;
      cur = f.mul(cur, z);
    }
    return Representation(quot, 1, mats);
  };
  Representation r2 = character(h2, q.json["projection"], f.from_int(-1));
  Representation r3 = character(h3, q3.json["projection"], w);
  REQUIRE(verify_rep(r2).passed());
  REQUIRE(verify_rep(r3).passed());
  std::string p2 = tmp.write("r2.json", hopf::io::rep_to_json(r2));
  std::string p3 = tmp.write("r3.json", hopf::io::rep_to_json(r3));
  std::string t3 = tmp.write("t3.json", hopf::io::rep_to_json(trivial_rep(h3)));
  Outcome g = run({"glue", file("z6_omega.json"), "--ideal1", file("ideal_z2.json"), "--ideal2",
                   file("ideal_z3.json"), "--rep1", p2, "--rep2", p3});
  CHECK(g.code == 0);
  CHECK(g.json["inner_faithful"] == true);
  CHECK(g.json["hypothesis_holds"] == true);
  Outcome gt = run({"glue", file("z6_omega.json"), "--ideal1", file("ideal_z2.json"), "--ideal2",
                    file("ideal_z3.json"), "--rep1", p2, "--rep2", t3});
  CHECK(gt.code == 1);
  CHECK(gt.json["inner_faithful"] == false);
}

TEST_CASE("extensions and star commands") {
  Outcome e = run({"extend", file("s3_omega.json"), "--subalgebra", file("a3_in_s3.json"), "--rep",
                   file("omega_char.json")});
  CHECK(e.code == 0);
  CHECK(e.json["inner_faithful"] == true);
  CHECK(e.json["induced_dim"] == 2);
  CHECK(e.json["quotient_dim"] == 2);

  Outcome x = run({"exact-check", file("a3_in_s3.json")});
  CHECK(x.code == 0);
  CHECK(x.json["passed"] == true);
  Outcome xc = run({"exact-check", file("a3_in_s3.json"), "--target", "counit"});
  CHECK(xc.code == 1);
  CHECK(xc.json["conditions"]["kernel_is_plus_ideal"] == false);

  Outcome c = run({"cond-exp", file("a3_in_s3.json")});
  CHECK(c.code == 0);
  CHECK(c.json["bimodule"] == true);

  Outcome u = run({"unitary-induce", file("a3_in_s3.json"), "--rep", file("omega_char.json")});
  CHECK(u.code == 0);
  CHECK(u.json["gram_rank"] == 2);
  CHECK(u.json["positivity"] == "positive_semidefinite");
  CHECK(u.json["theta_inner_unitary"] == true);

  CHECK(run({"star-check", file("s3_omega.json")}).code == 0);
  CHECK(run({"star-check", file("s3_omega.json"), "--rep", file("sign.json")}).code == 2); // field mismatch
  CHECK(run({"star-check", file("sweedler.json")}).code == 2);                               // no star
  Outcome iu = run({"inner-unitary", file("s3.json"), file("sign.json")});
  CHECK(iu.code == 1);
  CHECK(iu.json["inner_unitary"] == false);
  CHECK(iu.json["ideal_dim"] == 4);

  Outcome a = run({"augment", file("sweedler.json"), file("rep2d.json"), "--grouplike", R"(["0","1","0","0"])",
                   "--character", R"(["1","1","0","0"])"});
  CHECK(a.code == 0);
  CHECK(a.json["witness_valid"] == true);
  CHECK(a.json["inner_faithful"] == true);
  CHECK(a.json["inputs"].size() == 4);
  Outcome a1 = run({"augment", file("sweedler.json"), file("rep2d.json"), "--grouplike", R"(["1","0","0","0"])",
                    "--character", R"(["1","1","0","0"])"});
  CHECK(a1.code == 1);
  CHECK(a1.json["witness_valid"] == false);
  CHECK(run({"augment", file("sweedler.json"), file("rep2d.json"), "--grouplike", R"(["0","0","1","0"])",
             "--character", R"(["1","1","0","0"])"})
            .code == 2);
}
