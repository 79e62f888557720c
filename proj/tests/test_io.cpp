#include <doctest.h>

#include "einstab/criteria.hpp"
#include "einstab/errors.hpp"
#include "einstab/json_io.hpp"
#include "einstab/model.hpp"
#include "support.hpp"

using namespace einstab;
using namespace einstab::testing;

TEST_CASE("space form specs parse and build") {
  const ManifoldSpec spec =
      parse_manifold_spec_text(R"({"type":"space_form","dim":6,"curvature":1.0})");
  const ManifoldModel m = build_model(spec);
  CHECK(m.name == "S^6");
  CHECK(m.dim == 6);
  CHECK(m.mu == doctest::Approx(5.0));
}

TEST_CASE("product specs parse and build") {
  const ManifoldSpec spec = parse_manifold_spec_text(
      R"({"type":"product","factors":[{"type":"space_form","dim":2,"curvature":1.0},
          {"type":"space_form","dim":2,"curvature":1.0}],"auto_rescale":false})");
  const ManifoldModel m = build_model(spec);
  CHECK(m.dim == 4);
  CHECK(m.product_dims.value() == std::pair<int, int>{2, 2});
}

TEST_CASE("missing volume on nonpositive curvature names the field") {
  try {
    parse_manifold_spec_text(R"({"type":"space_form","dim":4,"curvature":-1.0})");
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(e.path() == "volume");
  }
}

TEST_CASE("nested errors carry the factor path") {
  try {
    parse_manifold_spec_text(
        R"({"type":"product","factors":[{"type":"space_form","dim":2,"curvature":1.0},
            {"type":"space_form","dim":4,"curvature":-2.0}]})");
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(e.path() == "factors[1].volume");
  }
}

TEST_CASE("unknown fields and types are rejected with paths") {
  try {
    parse_manifold_spec_text(R"({"type":"space_form","dim":4,"curvature":1.0,"vol":2})");
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(e.path() == "vol");
  }
  try {
    parse_manifold_spec_text(R"({"type":"banana"})");
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(e.path() == "type");
  }
  CHECK_THROWS_AS(parse_manifold_spec_text("not json at all"), input_error);
}

TEST_CASE("custom specs round-trip through json") {
  const ManifoldModel s4 = make_space_form(4, 1.0);
  Json doc;
  doc["type"] = "custom";
  doc["name"] = "my model";
  doc["dim"] = 4;
  doc["curvature"] = s4.curvature.v;
  doc["volume"] = 2.5;
  doc["euler_char"] = 2;
  const ManifoldSpec spec = parse_manifold_spec(doc);
  const ManifoldModel m = build_model(spec);
  CHECK(m.name == "my model");
  CHECK(m.mu == doctest::Approx(3.0));
  CHECK(m.volume == 2.5);

  const Json echo = manifold_spec_to_json(spec);
  CHECK(echo["type"] == "custom");
  CHECK(echo["curvature"].size() == 256);
}

TEST_CASE("json dumps are byte-stable and carry 17 significant digits") {
  Json j;
  j["pi_cubed"] = 31.006276680299816;  // needs all 17 digits
  j["exact"] = 2.0;
  j["list"] = {1.5, -0.0, 1e-300};
  const std::string a = dump_json(j);
  const std::string b = dump_json(j);
  CHECK(a == b);
  CHECK(a.find("31.006276680299816") != std::string::npos);
  const Json back = Json::parse(a);
  CHECK(back["pi_cubed"].get<double>() == 31.006276680299816);
  CHECK(back["list"][2].get<double>() == 1e-300);
}

TEST_CASE("stability reports serialize every criterion") {
  const ManifoldModel s6 = make_space_form(6, 1.0);
  const StabilityReport rep = evaluate_all(s6);
  const Json j = stability_report_json(rep);
  CHECK(j["overall"] == "StrictlyStable");
  CHECK(j["criteria"].size() == rep.criteria.size());
  bool saw_thm16 = false;
  for (const auto& c : j["criteria"])
    if (c["id"] == "thm_1_6") {
      saw_thm16 = true;
      CHECK(c["margin"].get<double>() > 0.0);
    }
  CHECK(saw_thm16);
  CHECK(j["witness"].is_null());

  const ManifoldModel s2 = make_space_form(2, 1.0);
  const Json unstable = stability_report_json(evaluate_all(make_product(s2, s2)));
  CHECK(unstable["overall"] == "Unstable");
  CHECK(unstable["witness"]["quadratic_form_value"].get<double>() ==
        doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("report envelope embeds version, seed and tolerances") {
  Json spec_echo;
  spec_echo["type"] = "cpn";
  spec_echo["complex_dim"] = 2;
  const Json env = report_envelope("check", 42, &spec_echo);
  CHECK(env["tool"]["name"] == "einstab");
  CHECK(env["tool"]["version"].is_string());
  CHECK(env["seed"] == 42);
  CHECK(env["spec"]["complex_dim"] == 2);
  CHECK(env["tolerances"].contains("criterion_equality_rel"));
}
