#pragma once

#include "hopf/star.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

// JSON encodings. A scalar is an array of rational strings ("a" or "a/b"),
// one per coefficient; over Q a bare string is accepted and written.
namespace hopf::io {

using Json = nlohmann::json;

struct LoadedFile {
  std::filesystem::path path;
  std::string content;
  Json json;
};

/// Reads and parses a JSON file; InputError on I/O or syntax problems.
LoadedFile load(const std::filesystem::path &path);

Json to_json(const Field &f, const Scalar &s);
Json to_json(const Field &f, const Vector &v);
Json to_json(const Matrix &m);
Json to_json(const Subspace &s);
Json field_to_json(const Field &f);
Json algebra_to_json(const HopfAlgebra &h);
Json group_to_json(const GroupTable &g);
Json rep_to_json(const Representation &pi);

// Parsers. `where` names the JSON location in error messages.
Scalar scalar_from_json(const Field &f, const Json &j, const std::string &where);
Vector vector_from_json(const Field &f, const Json &j, std::size_t n, const std::string &where);
Matrix matrix_from_json(const FieldPtr &f, const Json &j, std::size_t rows, std::size_t cols, const std::string &where);
/// Square matrix of any size.
Matrix square_from_json(const FieldPtr &f, const Json &j, const std::string &where);
FieldPtr field_from_json(const Json &j);
/// Checks shapes only; run verify_hopf for the axioms.
HopfAlgebraPtr algebra_from_json(const Json &j);
GroupTable group_from_json(const Json &j);
Representation rep_from_json(const HopfAlgebraPtr &h, const Json &j);
/// {"ambient_dim": d, "basis": [vectors]} or a bare list of vectors.
Subspace subspace_from_json(const FieldPtr &f, std::size_t ambient, const Json &j);
Functional functional_from_json(const Field &f, std::size_t d, const Json &j, const std::string &where);

/// {"big": path, "small": path, "inclusion": matrix}, paths relative to the
/// embedding file. Validated with make_embedding.
SubalgebraEmbedding embedding_from_file(const LoadedFile &file);

} // namespace hopf::io
