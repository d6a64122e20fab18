#pragma once

// JSON encodings. Scalars are strings in the text grammar of scalar.hpp
// ("3/2-1/3*i"); integers are accepted on input as well.
//
//   KElement    {"n": 2, "lambda": "0", "mu": "0", "alpha": ["1", "-i"]}
//   Derivation  {"n": 2, "a": [...], "b": [[...], [...]]}
//   form file   {"schema": 1, "n": 2, "g": "inner", "kind": "left_hermitian",
//                "h": [[KElement, ...], ...]}
//
// "kind" is optional (left_hermitian by default). An element of h may omit
// "n", which then defaults to the file's n. Parse failures throw ParseError
// naming the location, e.g. "h[0][1].alpha[2]: ...".

#include <json.hpp>
#include <string>

#include "ncg/connection.hpp"
#include "ncg/derivation.hpp"
#include "ncg/hermitian.hpp"
#include "ncg/kronecker.hpp"
#include "ncg/torus.hpp"

namespace ncg {

using Json = nlohmann::ordered_json;

Json to_json(const GR& x);
Json to_json(const KElement& a);
Json to_json(const Derivation& d);
Json to_json(const Matrix<GR>& m);
Json to_json(const TorusElement& x);

GR gaussian_from_json(const Json& j, const std::string& where);
KElement kelement_from_json(const Json& j, const std::string& where, int default_n = 0);
Derivation derivation_from_json(const Json& j, const std::string& where);

struct FormFile {
  int n = 1;
  std::string g;
  FormKind kind = FormKind::LeftHermitian;
  std::vector<std::vector<KElement>> h;
};

FormFile form_file_from_json(const Json& j);
// Reads and parses; throws ParseError for unreadable files and bad JSON.
FormFile read_form_file(const std::string& path);
Json to_json(const FormFile& f);

FormKind form_kind_from_string(const std::string& s);

}  // namespace ncg
