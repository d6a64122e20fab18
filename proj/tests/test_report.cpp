#include <doctest.h>

#include "ncg/error.hpp"
#include "ncg/lc_solver.hpp"
#include "ncg/report.hpp"

#ifndef NCG_TEST_DATA
#define NCG_TEST_DATA "tests/data"
#endif

using namespace ncg;

namespace {

std::string data_file(const std::string& name) { return std::string(NCG_TEST_DATA) + "/" + name; }

bool statuses_all(const Json& j, const std::string& status) {
  for (const auto& r : j["results"])
    if (r["status"] != status) return false;
  return !j["results"].empty();
}

Matrix<GR> half_identity(std::size_t size) { return GR(make_rational(1, 2)) * Matrix<GR>::identity(size); }

}  // namespace

TEST_SUITE("report") {

TEST_CASE("scalars and elements round trip through JSON") {
  Rng rng(seed_from_env());
  for (int t = 0; t < 100; ++t) {
    const GR x = random_gaussian(rng);
    CHECK(gaussian_from_json(to_json(x), "x") == x);
    const int n = 1 + t % 4;
    const KElement a = random_kelement(rng, n);
    CHECK(kelement_from_json(to_json(a), "a") == a);
    const Json text = Json::parse(to_json(a).dump());
    CHECK(kelement_from_json(text, "a") == a);
  }
  CHECK(gaussian_from_json(Json(7), "x") == GR(7));
  CHECK(gaussian_from_json(Json("3/2-1/3*i"), "x") == GR(make_rational(3, 2), make_rational(-1, 3)));
}

TEST_CASE("form files round trip") {
  const FormFile f = read_form_file(data_file("inner2_rho.json"));
  CHECK(f.n == 2);
  CHECK(f.g == "inner");
  CHECK(f.kind == FormKind::LeftHermitian);
  REQUIRE(f.h.size() == 3);
  const FormFile back = form_file_from_json(to_json(f));
  CHECK(back.h == f.h);
  CHECK(back.kind == f.kind);
}

TEST_CASE("parse errors name their location") {
  CHECK_THROWS_WITH_AS(read_form_file(data_file("bad_shape.json")), doctest::Contains("h[1][1].alpha: expected 2 entries, got 3"),
                       ParseError);
  CHECK_THROWS_WITH_AS(read_form_file(data_file("bad_json.json")), doctest::Contains("invalid JSON"), ParseError);
  CHECK_THROWS_AS(read_form_file(data_file("missing.json")), ParseError);
  CHECK_THROWS_WITH_AS(gaussian_from_json(Json(true), "h[0][0].lambda"), doctest::Contains("h[0][0].lambda"), ParseError);
  CHECK_THROWS_WITH_AS(gaussian_from_json(Json("1/0"), "mu"), doctest::Contains("mu"), ParseError);
  CHECK_THROWS_AS(form_file_from_json(Json{{"schema", 2}}), ParseError);
  CHECK_THROWS_WITH_AS(form_file_from_json(Json{{"schema", 1}, {"n", 2}}), doctest::Contains("missing field \"g\""), ParseError);
  CHECK_THROWS_AS(form_kind_from_string("sideways"), ParseError);
}

TEST_CASE("output is deterministic") {
  const std::string a = dump(cmd_kn_info(3, 11).to_json(), false);
  const std::string b = dump(cmd_kn_info(3, 11).to_json(), false);
  CHECK(a == b);
  CHECK(dump(cmd_calculus(2, "tilde", 5).to_json(), true) == dump(cmd_calculus(2, "tilde", 5).to_json(), true));
  CHECK(dump(cmd_torus_verify(3).to_json(), false) == dump(cmd_torus_verify(3).to_json(), false));
}

TEST_CASE("kn-info") {
  const Json two = cmd_kn_info(2, 1).to_json();
  CHECK(two["command"] == "kn-info");
  CHECK(two["version"] == kVersion);
  CHECK(two["data"]["dimAlgebra"] == 4);
  CHECK(two["data"]["dimCenter"] == 1);
  CHECK(two["data"]["dimDer"] == 6);
  CHECK(two["data"]["dimInner"] == 3);
  CHECK(two["data"]["dimTilde"] == 2);
  CHECK(statuses_all(two, "pass"));
  const Json one = cmd_kn_info(1, 1).to_json();
  CHECK(one["data"]["dimDer"] == 2);
  CHECK(one["data"]["dimInner"] == 2);
  CHECK(statuses_all(one, "pass"));
  CHECK_THROWS_AS(cmd_kn_info(0, 1), UsageError);
}

TEST_CASE("calculus") {
  const Json tilde = cmd_calculus(3, "tilde", 2).to_json();
  CHECK(tilde["data"]["dim_omega1"] == 3);
  CHECK(tilde["data"]["connected"] == false);
  CHECK(tilde["data"]["relations"].size() == 1);
  CHECK(statuses_all(tilde, "pass"));
  const Json der = cmd_calculus(3, "der", 2).to_json();
  CHECK(der["data"]["dim_omega1"] == 4);
  CHECK(der["data"]["connected"] == true);
  CHECK(der["data"]["h1_dim"] == 0);
  CHECK(statuses_all(der, "pass"));
  CHECK(statuses_all(cmd_calculus(2, "inner", 2).to_json(), "pass"));
  CHECK_THROWS_AS(cmd_calculus(2, "outer", 2), UsageError);
}

TEST_CASE("lc-solve on form files") {
  const FormFile der = read_form_file(data_file("der2_zero.json"));
  const Json u = cmd_lc_solve(der, "der2_zero.json", std::nullopt, std::nullopt, false).to_json();
  CHECK(u["data"]["status"] == "unique");
  CHECK(u["data"]["kernel_dim"] == 0);
  CHECK(statuses_all(u, "pass"));

  const FormFile inner = read_form_file(data_file("inner2_rho.json"));
  const Json fam = cmd_lc_solve(inner, "inner2_rho.json", 2, std::string("inner"), false).to_json();
  CHECK(fam["data"]["status"] == "family");
  CHECK(fam["data"]["kernel_dim"] == 8);
  CHECK(statuses_all(fam, "pass"));
  CHECK(cmd_lc_solve(inner, "inner2_rho.json", std::nullopt, std::nullopt, true).to_json()["data"]["kernel_dim"] == 4);
  const LieSubalgebra gi = lie_by_name("inner", 2);
  CHECK(solve_levi_civita(gi, make_form(gi, inner.kind, inner.h), true).contains(inner_closed_form(gi, half_identity(3))));

  const FormFile tilde = read_form_file(data_file("tilde2_lambda.json"));
  const Json t = cmd_lc_solve(tilde, "tilde2_lambda.json", std::nullopt, std::nullopt, false).to_json();
  CHECK(t["data"]["kernel_dim"] == 2);
  CHECK(statuses_all(t, "pass"));
  const LieSubalgebra gt = lie_by_name("tilde", 2);
  CHECK(solve_levi_civita(gt, make_form(gt, tilde.kind, tilde.h), false).contains(tilde_closed_form(gt, half_identity(2))));

  CHECK_THROWS_AS(cmd_lc_solve(inner, "inner2_rho.json", 3, std::nullopt, false), UsageError);
  CHECK_THROWS_AS(cmd_lc_solve(inner, "inner2_rho.json", std::nullopt, std::string("der"), false), UsageError);
  CHECK_THROWS_AS(cmd_lc_solve(read_form_file(data_file("bad_axiom.json")), "bad_axiom.json", std::nullopt, std::nullopt, false),
                  AxiomViolation);
}

TEST_CASE("torus commands") {
  const Report v = cmd_torus_verify(seed_from_env());
  CHECK(v.all_pass());
  CHECK(v.exit_code() == 0);
  CHECK(v.results().size() >= 50);
  const Json c = cmd_torus_cohomology(3).to_json();
  CHECK(c["data"]["h0"] == 1);
  CHECK(c["data"]["h1"] == 2);
  CHECK(c["data"]["h2"] == 1);
  CHECK(c["results"][0]["residual"] == "0");
  CHECK_THROWS_AS(cmd_torus_cohomology(0), UsageError);
}

TEST_CASE("report envelope") {
  Report r("demo");
  r.check("a", true);
  CHECK(r.exit_code() == 0);
  r.check_residuals("b", {{"x", "1"}});
  CHECK(r.exit_code() == 1);
  r.error("c", "broken");
  const Json j = r.to_json();
  CHECK(j.dump() ==
        R"({"command":"demo","inputs":{},"data":{},"results":[{"name":"a","status":"pass"},{"name":"b","status":"fail","residual":"x = 1"},{"name":"c","status":"error","residual":"broken"}],"version":"0.1.0"})");
}

}  // TEST_SUITE
