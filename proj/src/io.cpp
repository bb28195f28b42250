#include "hopf/io.hpp"

#include <fstream>
#include <sstream>

namespace hopf::io {

namespace {

std::string at(const std::string &where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const Json &member(const Json &j, const char *key, const std::string &where) {
  if (!j.is_object())
    throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(where + (where.empty() ? "" : ".") + key + ": missing");
  return *it;
}

const Json &array_of(const Json &j, std::size_t n, const std::string &where) {
  if (!j.is_array())
    throw InputError(where + ": expected an array");
  if (j.size() != n)
    throw InputError(where + ": expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::size_t count_of(const Json &j, const std::string &where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw InputError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<Rational> rationals(const Json &j, const std::string &where) {
  if (!j.is_array())
    throw InputError(where + ": expected an array of rational strings");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      throw InputError(at(where, i) + ": expected a rational string");
    try {
      out.push_back(parse_rational(j[i].get<std::string>()));
    } catch (const InputError &e) {
      throw InputError(at(where, i) + ": " + e.what());
    }
  }
  return out;
}

} // namespace

LoadedFile load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError(path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  LoadedFile f{path, buf.str(), {}};
  try {
    f.json = Json::parse(f.content);
  } catch (const Json::parse_error &e) {
    throw InputError(path.string() + ": invalid JSON: " + e.what());
  }
  return f;
}

Json to_json(const Field &f, const Scalar &s) {
  auto enc = f.encode(s);
  if (f.degree() == 1)
    return enc.front();
  return Json(enc);
}

Json to_json(const Field &f, const Vector &v) {
  Json out = Json::array();
  for (const auto &s : v)
    out.push_back(to_json(f, s));
  return out;
}

Json to_json(const Matrix &m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    out.push_back(to_json(*m.field(), m.row(r)));
  return out;
}

Json to_json(const Subspace &s) {
  Json basis = Json::array();
  for (const auto &v : s.basis())
    basis.push_back(to_json(*s.field(), v));
  return {{"ambient_dim", s.ambient_dim()}, {"basis", basis}};
}

Json field_to_json(const Field &f) {
  Json mp = Json::array();
  for (const auto &c : f.min_poly())
    mp.push_back(format_rational(c));
  Json out{{"min_poly", mp}};
  if (f.conj_image())
    out["conj_image"] = f.encode(*f.conj_image());
  return out;
}

Json algebra_to_json(const HopfAlgebra &h) {
  const Field &f = h.k();
  const auto &t = h.tables();
  const std::size_t d = h.dim();
  Json mult = Json::array(), comult = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d; ++j)
      row.push_back(to_json(f, t.mult[i * d + j]));
    mult.push_back(row);
    Json m = Json::array();
    for (std::size_t j = 0; j < d; ++j)
      m.push_back(to_json(f, Vector(t.comult[i].begin() + j * d, t.comult[i].begin() + (j + 1) * d)));
    comult.push_back(m);
  }
  Json out{{"field", field_to_json(f)}, {"dim", d},           {"mult", mult},
           {"unit", to_json(f, t.unit)}, {"comult", comult}, {"counit", to_json(f, t.counit)},
           {"antipode", to_json(t.antipode)}};
  if (t.star)
    out["star"] = to_json(*t.star);
  return out;
}

Json group_to_json(const GroupTable &g) { return {{"order", g.order()}, {"table", g.table()}}; }

Json rep_to_json(const Representation &pi) {
  Json mats = Json::array();
  for (const auto &m : pi.matrices())
    mats.push_back(to_json(m));
  return {{"dim", pi.dim()}, {"matrices", mats}};
}

Scalar scalar_from_json(const Field &f, const Json &j, const std::string &where) {
  std::vector<std::string> coeffs;
  if (j.is_string()) {
    coeffs.push_back(j.get<std::string>());
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_string())
        throw InputError(at(where, i) + ": expected a rational string");
      coeffs.push_back(j[i].get<std::string>());
    }
  } else {
    throw InputError(where + ": expected a scalar (string or array of strings)");
  }
  if (coeffs.size() != f.degree())
    throw InputError(where + ": scalar needs " + std::to_string(f.degree()) + " coefficients");
  try {
    return f.decode(coeffs);
  } catch (const InputError &e) {
    throw InputError(where + ": " + e.what());
  }
}

Vector vector_from_json(const Field &f, const Json &j, std::size_t n, const std::string &where) {
  array_of(j, n, where);
  Vector v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(scalar_from_json(f, j[i], at(where, i)));
  return v;
}

Matrix matrix_from_json(const FieldPtr &f, const Json &j, std::size_t rows, std::size_t cols,
                        const std::string &where) {
  array_of(j, rows, where);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector row = vector_from_json(*f, j[r], cols, at(where, r));
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = std::move(row[c]);
  }
  return m;
}

Matrix square_from_json(const FieldPtr &f, const Json &j, const std::string &where) {
  if (!j.is_array())
    throw InputError(where + ": expected a matrix");
  return matrix_from_json(f, j, j.size(), j.size(), where);
}

FieldPtr field_from_json(const Json &j) {
  auto mp = rationals(member(j, "min_poly", "field"), "field.min_poly");
  std::optional<std::vector<Rational>> conj;
  if (j.contains("conj_image"))
    conj = rationals(j["conj_image"], "field.conj_image");
  try {
    return Field::create(std::move(mp), std::move(conj));
  } catch (const std::runtime_error &e) {
    throw InputError(std::string("field: ") + e.what());
  }
}

HopfAlgebraPtr algebra_from_json(const Json &j) {
  HopfTables t;
  t.field = j.is_object() && j.contains("field") ? field_from_json(j["field"]) : Field::rationals();
  const Field &f = *t.field;
  const std::size_t d = count_of(member(j, "dim", ""), "dim");
  if (d == 0)
    throw InputError("dim: must be positive");
  t.dim = d;
  const Json &mult = array_of(member(j, "mult", ""), d, "mult");
  for (std::size_t a = 0; a < d; ++a) {
    array_of(mult[a], d, at("mult", a));
    for (std::size_t b = 0; b < d; ++b)
      t.mult.push_back(vector_from_json(f, mult[a][b], d, at(at("mult", a), b)));
  }
  t.unit = vector_from_json(f, member(j, "unit", ""), d, "unit");
  const Json &comult = array_of(member(j, "comult", ""), d, "comult");
  for (std::size_t a = 0; a < d; ++a) {
    Matrix m = matrix_from_json(t.field, comult[a], d, d, at("comult", a));
    Vector v;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        v.push_back(m(r, c));
    t.comult.push_back(std::move(v));
  }
  t.counit = vector_from_json(f, member(j, "counit", ""), d, "counit");
  t.antipode = matrix_from_json(t.field, member(j, "antipode", ""), d, d, "antipode");
  if (j.contains("star") && !j["star"].is_null())
    t.star = matrix_from_json(t.field, j["star"], d, d, "star");
  return std::make_shared<const HopfAlgebra>(std::move(t));
}

GroupTable group_from_json(const Json &j) {
  const std::size_t n = count_of(member(j, "order", ""), "order");
  const Json &tab = array_of(member(j, "table", ""), n, "table");
  std::vector<std::vector<std::size_t>> table(n);
  for (std::size_t a = 0; a < n; ++a) {
    array_of(tab[a], n, at("table", a));
    for (std::size_t b = 0; b < n; ++b)
      table[a].push_back(count_of(tab[a][b], at(at("table", a), b)));
  }
  return GroupTable(std::move(table));
}

Representation rep_from_json(const HopfAlgebraPtr &h, const Json &j) {
  const std::size_t n = count_of(member(j, "dim", ""), "dim");
  const Json &mats = array_of(member(j, "matrices", ""), h->dim(), "matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < h->dim(); ++i)
    out.push_back(matrix_from_json(h->field(), mats[i], n, n, at("matrices", i)));
  return Representation(h, n, std::move(out));
}

Subspace subspace_from_json(const FieldPtr &f, std::size_t ambient, const Json &j) {
  const Json *basis = &j;
  if (j.is_object()) {
    std::size_t amb = count_of(member(j, "ambient_dim", ""), "ambient_dim");
    if (amb != ambient)
      throw InputError("ambient_dim: expected " + std::to_string(ambient));
    basis = &member(j, "basis", "");
  }
  if (!basis->is_array())
    throw InputError("basis: expected an array of vectors");
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < basis->size(); ++i)
    vs.push_back(vector_from_json(*f, (*basis)[i], ambient, at("basis", i)));
  return Subspace::span(f, ambient, std::move(vs));
}

Functional functional_from_json(const Field &f, std::size_t d, const Json &j, const std::string &where) {
  return Functional{vector_from_json(f, j, d, where)};
}

SubalgebraEmbedding embedding_from_file(const LoadedFile &file) {
  const Json &j = file.json;
  auto resolve = [&](const char *key) {
    const Json &p = member(j, key, "");
    if (!p.is_string())
      throw InputError(std::string(key) + ": expected a path");
    std::filesystem::path path = p.get<std::string>();
    if (path.is_relative())
      path = file.path.parent_path() / path;
    return algebra_from_json(load(path).json);
  };
  HopfAlgebraPtr big = resolve("big"), small = resolve("small");
  if (!big->field()->same_as(*small->field()))
    throw InputError("small: field differs from big");
  Matrix inc = matrix_from_json(big->field(), member(j, "inclusion", ""), big->dim(), small->dim(), "inclusion");
  return make_embedding(big, small, std::move(inc));
}

} // namespace hopf::io
