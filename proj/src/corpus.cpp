#include "hopf/corpus.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace hopf::corpus {

namespace {

using Table = std::vector<std::vector<std::size_t>>;

Matrix square(const FieldPtr &f, std::vector<std::vector<Scalar>> rows) {
  Matrix m(f, rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c)
      m(r, c) = rows[r][c];
  return m;
}

Matrix diag(const FieldPtr &f, const std::vector<Scalar> &d) {
  Matrix m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

Scalar power(const Field &f, const Scalar &z, std::size_t k) {
  Scalar r = f.one();
  for (std::size_t i = 0; i < k; ++i)
    r = f.mul(r, z);
  return r;
}

std::vector<Rational> q(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v)
    out.emplace_back(x);
  return out;
}

} // namespace

GroupTable cyclic(std::size_t n) {
  if (n == 0)
    throw InputError("cyclic group of order 0");
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = (a + b) % n;
  return GroupTable(std::move(t));
}

GroupTable symmetric3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Table t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t x = 0; x < 3; ++x)
        c[x] = perms[a][perms[b][x]];
      t[a][b] = std::find(perms.begin(), perms.end(), c) - perms.begin();
    }
  return GroupTable(std::move(t));
}

GroupTable dihedral4() {
  Table t(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      std::size_t a = x % 4, e = x / 4, b = y % 4, f = y / 4;
      std::size_t k = e == 0 ? (a + b) % 4 : (a + 4 - b) % 4;
      t[x][y] = k + 4 * ((e + f) % 2);
    }
  return GroupTable(std::move(t));
}

GroupTable quaternion8() {
  // unit products u*v = sign * w for u, v in {1, i, j, k}
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  Table t(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      std::size_t u = x / 2, v = y / 2;
      int s = sign[u][v] * (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1);
      t[x][y] = 2 * unit[u][v] + (s < 0 ? 1 : 0);
    }
  return GroupTable(std::move(t));
}

FieldPtr cyclotomic3() {
  static const FieldPtr f = Field::create(q({1, 1, 1}), q({-1, -1}));
  return f;
}

FieldPtr gaussian() {
  static const FieldPtr f = Field::create(q({1, 0, 1}), q({0, -1}));
  return f;
}

FieldPtr cyclotomic5() {
  static const FieldPtr f = Field::create(q({1, 1, 1, 1, 1}), q({-1, -1, -1, -1}));
  return f;
}

RootOfUnity cyclic_field(std::size_t n) {
  switch (n) {
  case 1:
    return {Field::rationals(), Field::rationals()->one()};
  case 2:
    return {Field::rationals(), Field::rationals()->from_int(-1)};
  case 3:
    return {cyclotomic3(), cyclotomic3()->generator()};
  case 4:
    return {gaussian(), gaussian()->generator()};
  case 5:
    return {cyclotomic5(), cyclotomic5()->generator()};
  case 6: // 1 + omega is a primitive 6th root of unity
    return {cyclotomic3(), cyclotomic3()->from_coeffs(q({1, 1}))};
  default:
    throw InputError("no built-in field for roots of unity of order " + std::to_string(n));
  }
}

Representation rep_from_generators(const HopfAlgebraPtr &h, const GroupTable &g,
                                   const std::vector<std::size_t> &generators, const std::vector<Matrix> &images) {
  if (generators.size() != images.size() || images.empty())
    throw InputError("need one image per generator");
  if (h->dim() != g.order())
    throw InputError("algebra dimension differs from the group order");
  const std::size_t n = images.front().rows();
  std::vector<std::optional<Matrix>> mats(g.order());
  mats[0] = Matrix::identity(h->field(), n);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < generators.size(); ++s) {
      std::size_t y = g.mul(x, generators[s]);
      Matrix m = *mats[x] * images[s];
      if (!mats[y]) {
        mats[y] = std::move(m);
        queue.push_back(y);
      } else if (!(*mats[y] == m)) {
        throw InputError("generator images do not respect the group relations");
      }
    }
  }
  std::vector<Matrix> out;
  for (auto &m : mats) {
    if (!m)
      throw InputError("generators do not generate the group");
    out.push_back(std::move(*m));
  }
  Representation rep(h, n, std::move(out));
  if (!verify_rep(rep).passed())
    throw InputError("generator images do not respect the group relations");
  return rep;
}

std::vector<std::size_t> group_kernel(const GroupTable &g, const Representation &pi) {
  std::vector<std::size_t> out;
  const Matrix id = Matrix::identity(pi.algebra()->field(), pi.dim());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (pi[x] == id)
      out.push_back(x);
  return out;
}

Subspace group_oracle_ideal(const HopfAlgebra &h, const GroupTable &g, const std::vector<std::size_t> &normal) {
  const Field &f = h.k();
  std::vector<Vector> vs;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t n : normal) {
      std::size_t y = g.mul(x, n);
      if (y != x)
        vs.push_back(sub(f, h.basis_vector(x), h.basis_vector(y)));
    }
  return Subspace::span(h.field(), h.dim(), std::move(vs));
}

SubalgebraEmbedding subgroup_subalgebra(const HopfAlgebraPtr &big, const std::vector<std::size_t> &elements) {
  std::vector<Vector> vs;
  for (std::size_t x : elements)
    vs.push_back(big->basis_vector(x));
  return subalgebra_from_subspace(big, Subspace::span(big->field(), big->dim(), std::move(vs)));
}

Representation sweedler_rep2(const HopfAlgebraPtr &h) {
  const FieldPtr &fp = h->field();
  const Field &f = *fp;
  Scalar o = f.zero(), l = f.one(), m = f.from_int(-1);
  std::vector<Matrix> mats{square(fp, {{l, o}, {o, l}}), square(fp, {{l, o}, {o, m}}), square(fp, {{o, l}, {o, o}}),
                           square(fp, {{o, l}, {o, o}})};
  // gx = diag(1,-1) E12 = E12
  return Representation(h, 2, std::move(mats));
}

std::vector<GroupEntry> groups() {
  std::vector<GroupEntry> out;
  for (std::size_t n = 2; n <= 6; ++n) {
    GroupTable t = cyclic(n);
    auto field = cyclic_field(n).field;
    out.push_back({"Z" + std::to_string(n), t, group_algebra(t, field), dual_group_algebra(t)});
  }
  GroupTable s3 = symmetric3(), d4 = dihedral4(), q8 = quaternion8();
  out.push_back({"S3", s3, group_algebra(s3, cyclotomic3()), dual_group_algebra(s3)});
  out.push_back({"D4", d4, group_algebra(d4), dual_group_algebra(d4)});
  out.push_back({"Q8", q8, group_algebra(q8, gaussian()), dual_group_algebra(q8)});
  return out;
}

std::optional<GroupTable> named_group(const std::string &name) {
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '1' && name[1] <= '9')
    return cyclic(static_cast<std::size_t>(name[1] - '0'));
  if (name == "S3")
    return symmetric3();
  if (name == "D4")
    return dihedral4();
  if (name == "Q8")
    return quaternion8();
  return std::nullopt;
}

std::vector<RepEntry> representations() {
  std::vector<RepEntry> out;
  auto add_group = [&](const GroupEntry &e, std::string name, const std::vector<std::size_t> &gens,
                       const std::vector<Matrix> &imgs) {
    out.push_back({e.name + ":" + std::move(name), rep_from_generators(e.algebra, e.table, gens, imgs),
                   RepKind::group_algebra, e.table});
  };

  for (const auto &e : groups()) {
    const FieldPtr &fp = e.algebra->field();
    const Field &f = *fp;
    Scalar o = f.zero(), l = f.one(), m = f.from_int(-1);
    if (e.name[0] == 'Z') {
      const std::size_t n = e.table.order();
      Scalar z = cyclic_field(n).zeta;
      for (std::size_t j = 0; j < n; ++j)
        add_group(e, "chi" + std::to_string(j), {1}, {diag(fp, {power(f, z, j)})});
      // a faithful and a non-faithful diagonal pair
      add_group(e, "diag(1,z)", {1}, {diag(fp, {l, z})});
      if (n % 2 == 0)
        add_group(e, "diag(1,-1)", {1}, {diag(fp, {l, m})});
      if (n == 6) {
        add_group(e, "diag(-1,w)", {1}, {diag(fp, {m, power(f, z, 2)})});
        add_group(e, "diag(1,w^2)", {1}, {diag(fp, {l, power(f, z, 4)})});
      }
    } else if (e.name == "S3") {
      // generators: 3-cycle at index 3, transposition at index 2
      Scalar w = f.generator(), w2 = f.mul(w, w);
      add_group(e, "trivial", {3, 2}, {diag(fp, {l}), diag(fp, {l})});
      add_group(e, "sign", {3, 2}, {diag(fp, {l}), diag(fp, {m})});
      add_group(e, "standard", {3, 2}, {diag(fp, {w, w2}), square(fp, {{o, l}, {l, o}})});
      add_group(e, "trivial+sign", {3, 2}, {diag(fp, {l, l}), diag(fp, {l, m})});
    } else if (e.name == "D4") {
      // r at index 1, s at index 4
      for (int a : {1, -1})
        for (int b : {1, -1})
          add_group(e, std::string("chi(") + (a > 0 ? "+" : "-") + "," + (b > 0 ? "+" : "-") + ")", {1, 4},
                    {diag(fp, {f.from_int(a)}), diag(fp, {f.from_int(b)})});
      add_group(e, "standard", {1, 4}, {square(fp, {{o, m}, {l, o}}), diag(fp, {l, m})});
      add_group(e, "chi(-,+)+chi(+,-)", {1, 4}, {diag(fp, {m, l}), diag(fp, {l, m})});
    } else if (e.name == "Q8") {
      // i at index 2, j at index 4
      Scalar iota = f.generator();
      for (int a : {1, -1})
        for (int b : {1, -1})
          add_group(e, std::string("chi(") + (a > 0 ? "+" : "-") + "," + (b > 0 ? "+" : "-") + ")", {2, 4},
                    {diag(fp, {f.from_int(a)}), diag(fp, {f.from_int(b)})});
      add_group(e, "standard", {2, 4}, {diag(fp, {iota, f.neg(iota)}), square(fp, {{o, m}, {l, o}})});
    }
  }

  // evaluation characters delta_h -> [h = g] of the function algebras
  for (const auto &e : groups()) {
    if (e.name != "S3" && e.name != "Z4" && e.name != "D4")
      continue;
    const auto &h = e.dual;
    const Field &f = h->k();
    const std::size_t d = h->dim();
    for (std::size_t g = 0; g < d; ++g) {
      std::vector<Matrix> mats;
      for (std::size_t x = 0; x < d; ++x)
        mats.push_back(diag(h->field(), {x == g ? f.one() : f.zero()}));
      out.push_back({"C(" + e.name + "):ev" + std::to_string(g), Representation(h, 1, std::move(mats)),
                     RepKind::dual_group_algebra, std::nullopt});
    }
    std::vector<Matrix> mats;
    for (std::size_t x = 0; x < d; ++x)
      mats.push_back(diag(h->field(), {x == 1 ? f.one() : f.zero(), x == 2 ? f.one() : f.zero()}));
    out.push_back({"C(" + e.name + "):ev1+ev2", Representation(h, 2, std::move(mats)), RepKind::dual_group_algebra,
                   std::nullopt});
  }

  auto sw = sweedler();
  const Field &f = sw->k();
  out.push_back({"sweedler:rep2", sweedler_rep2(sw), RepKind::other, std::nullopt});
  out.push_back({"sweedler:trivial", trivial_rep(sw), RepKind::other, std::nullopt});
  {
    std::vector<Matrix> mats;
    for (long v : {1, -1, 0, 0})
      mats.push_back(diag(sw->field(), {f.from_int(v)}));
    out.push_back({"sweedler:g->-1", Representation(sw, 1, std::move(mats)), RepKind::other, std::nullopt});
  }
  out.push_back({"sweedler:regular", regular_rep(sw), RepKind::other, std::nullopt});
  return out;
}

} // namespace hopf::corpus
