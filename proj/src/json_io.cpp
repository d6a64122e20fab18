#include "ncg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ncg/error.hpp"

namespace ncg {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where.empty() ? what : where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string at(const std::string& where, const char* key) { return where.empty() ? key : where + "." + key; }

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

int int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::vector<GR> vector_from_json(const Json& j, const std::string& where, std::size_t size) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != size) fail(where, "expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
  std::vector<GR> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(gaussian_from_json(j[i], at(where, i)));
  return out;
}

}  // namespace

Json to_json(const GR& x) { return to_string(x); }

Json to_json(const KElement& a) {
  Json alpha = Json::array();
  for (const auto& c : a.alpha) alpha.push_back(to_json(c));
  return Json{{"n", a.n}, {"lambda", to_json(a.lambda)}, {"mu", to_json(a.mu)}, {"alpha", alpha}};
}

Json to_json(const Derivation& d) {
  Json a = Json::array();
  for (const auto& c : d.a) a.push_back(to_json(c));
  Json b = Json::array();
  for (const auto& row : d.b) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(to_json(c));
    b.push_back(r);
  }
  return Json{{"n", d.n}, {"a", a}, {"b", b}};
}

Json to_json(const Matrix<GR>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const TorusElement& x) { return to_string(x); }

GR gaussian_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return GR(Rational(j.get<long>()));
  if (!j.is_string()) fail(where, "expected a scalar string such as \"3/2-1/3*i\"");
  try {
    return parse_gaussian(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

KElement kelement_from_json(const Json& j, const std::string& where, int default_n) {
  if (!j.is_object()) fail(where, "expected an object");
  const int n = j.contains("n") ? int_from_json(j["n"], at(where, "n")) : default_n;
  if (n < 1) fail(at(where, "n"), "number of arrows must be at least 1");
  const GR lambda = gaussian_from_json(field(j, "lambda", where), at(where, "lambda"));
  const GR mu = gaussian_from_json(field(j, "mu", where), at(where, "mu"));
  auto alpha = vector_from_json(field(j, "alpha", where), at(where, "alpha"), static_cast<std::size_t>(n));
  return KElement(n, lambda, mu, std::move(alpha));
}

Derivation derivation_from_json(const Json& j, const std::string& where) {
  const int n = int_from_json(field(j, "n", where), at(where, "n"));
  if (n < 1) fail(at(where, "n"), "number of arrows must be at least 1");
  const auto size = static_cast<std::size_t>(n);
  auto a = vector_from_json(field(j, "a", where), at(where, "a"), size);
  const Json& jb = field(j, "b", where);
  const std::string wb = at(where, "b");
  if (!jb.is_array() || jb.size() != size) fail(wb, "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<GR>> b;
  for (std::size_t i = 0; i < size; ++i) b.push_back(vector_from_json(jb[i], at(wb, i), size));
  return Derivation(n, std::move(a), std::move(b));
}

FormKind form_kind_from_string(const std::string& s) {
  for (auto k : {FormKind::LeftHermitian, FormKind::StarBimodule, FormKind::RightHermitian})
    if (to_string(k) == s) return k;
  throw ParseError("unknown form kind \"" + s + "\" (expected left_hermitian, star_bimodule or right_hermitian)");
}

FormFile form_file_from_json(const Json& j) {
  FormFile f;
  const Json& schema = field(j, "schema", "");
  if (!schema.is_number_integer() || schema.get<int>() != 1) fail("schema", "unsupported schema, expected 1");
  f.n = int_from_json(field(j, "n", ""), "n");
  if (f.n < 1) fail("n", "number of arrows must be at least 1");
  const Json& g = field(j, "g", "");
  if (!g.is_string()) fail("g", "expected one of \"der\", \"inner\", \"tilde\"");
  f.g = g.get<std::string>();
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) fail("kind", "expected a string");
    try {
      f.kind = form_kind_from_string(j["kind"].get<std::string>());
    } catch (const ParseError& e) {
      fail("kind", e.what());
    }
  }
  const Json& h = field(j, "h", "");
  if (!h.is_array()) fail("h", "expected an array of rows");
  for (std::size_t a = 0; a < h.size(); ++a) {
    const std::string wa = at("h", a);
    if (!h[a].is_array()) fail(wa, "expected an array");
    std::vector<KElement> row;
    for (std::size_t b = 0; b < h[a].size(); ++b) {
      KElement x = kelement_from_json(h[a][b], at(wa, b), f.n);
      if (x.n != f.n) fail(at(at(wa, b), "n"), "expected " + std::to_string(f.n) + " arrows, got " + std::to_string(x.n));
      row.push_back(std::move(x));
    }
    f.h.push_back(std::move(row));
  }
  return f;
}

FormFile read_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open form file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
  return form_file_from_json(j);
}

Json to_json(const FormFile& f) {
  Json h = Json::array();
  for (const auto& row : f.h) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    h.push_back(r);
  }
  return Json{{"schema", 1}, {"n", f.n}, {"g", f.g}, {"kind", to_string(f.kind)}, {"h", h}};
}

}  // namespace ncg
