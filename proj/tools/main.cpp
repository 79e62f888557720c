// Command-line front end: parse manifold specs, run validations, stability
// criteria and Euler-characteristic computations, emit structured reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "einstab/criteria.hpp"
#include "einstab/errors.hpp"
#include "einstab/gauss_bonnet.hpp"
#include "einstab/json_io.hpp"
#include "einstab/kahler.hpp"
#include "einstab/selftest.hpp"
#include "einstab/version.hpp"

namespace {

using einstab::Json;

constexpr double kPi = 3.14159265358979323846;

std::string read_spec_text(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw einstab::input_error("cannot open spec file '" + path + "'", "spec");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedSpec {
  Json echo;
  einstab::ManifoldSpec spec;
  einstab::ManifoldModel model;
};

LoadedSpec load_spec(const std::string& path) {
  const std::string text = read_spec_text(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw einstab::input_error(std::string("malformed JSON: ") + e.what(), "(document)");
  }
  LoadedSpec out;
  out.echo = doc;
  out.spec = einstab::parse_manifold_spec(doc);
  out.model = einstab::build_model(out.spec);
  return out;
}

Json describe_body(const einstab::ManifoldModel& model, std::uint64_t seed) {
  Json j;
  j["model"] = einstab::model_summary_json(model);
  j["validation"] = einstab::validation_report_json(einstab::validate(model));
  if (model.dim >= 3) {
    j["spectra"] = einstab::spectral_summary_json(
        einstab::eigen_functions(model, einstab::kDefaultSectionalSamples, seed));
  } else {
    j["spectra"] = nullptr;
  }
  if (model.complex_structure)
    j["kahler_spectra"] = einstab::kahler_spectra_json(einstab::kahler_spectra(model));
  return j;
}

int cmd_describe(const std::string& spec_path, std::uint64_t seed, bool human) {
  const LoadedSpec loaded = load_spec(spec_path);
  Json doc = einstab::report_envelope("describe", seed, &loaded.echo);
  const Json body = describe_body(loaded.model, seed);
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
  if (human) {
    std::cout << "model: " << loaded.model.name << "\n"
              << einstab::dump_json(body);
  } else {
    std::cout << einstab::dump_json(doc);
  }
  return 0;
}

int cmd_check(const std::string& spec_path, const std::vector<std::string>& criteria,
              std::uint64_t seed, bool human) {
  const LoadedSpec loaded = load_spec(spec_path);
  einstab::EvaluateOptions opts;
  opts.seed = seed;
  opts.criteria_filter = criteria;
  const einstab::StabilityReport rep = einstab::evaluate_all(loaded.model, opts);

  if (human) {
    std::cout << einstab::human_stability_report(loaded.model, rep);
    return 0;
  }
  Json doc = einstab::report_envelope("check", seed, &loaded.echo);
  doc["model"] = einstab::model_summary_json(loaded.model);
  doc["validation"] = einstab::validation_report_json(einstab::validate(loaded.model));
  doc["spectra"] = einstab::spectral_summary_json(
      einstab::eigen_functions(loaded.model, einstab::kDefaultSectionalSamples, seed));
  if (loaded.model.complex_structure)
    doc["kahler_spectra"] =
        einstab::kahler_spectra_json(einstab::kahler_spectra(loaded.model));
  doc["report"] = einstab::stability_report_json(rep);
  std::cout << einstab::dump_json(doc);
  return 0;
}

int cmd_gauss_bonnet(const std::string& spec_path, std::uint64_t seed, bool human) {
  const LoadedSpec loaded = load_spec(spec_path);
  const einstab::ManifoldModel& m = loaded.model;

  einstab::GaussBonnetReport rep;
  if (m.dim == 2) {
    rep.dim = 2;
    rep.mu = m.mu;
    rep.chi_expected = m.euler_char;
    rep.riemann_norm_sq = m.curvature.norm_sq();
    const double scal = 2.0 * m.mu;
    rep.chi_explicit = scal * m.volume / (4.0 * kPi);
    rep.chi_pfaffian = einstab::chi_from_pfaffian(m);
    rep.grad_weyl_sq_integral = m.is_symmetric ? std::optional<double>(0.0) : std::nullopt;
  } else if (m.dim == 4) {
    rep = einstab::euler_dim4(m);
  } else if (m.dim == 6) {
    rep = einstab::euler_dim6(m, einstab::spec_grad_weyl_sq(loaded.spec));
  } else {
    throw einstab::input_error(
        "gauss-bonnet supports dimensions 2, 4 and 6 (got " + std::to_string(m.dim) + ")",
        "dim");
  }

  if (human) {
    std::cout << einstab::human_gauss_bonnet_report(m, rep);
    return 0;
  }
  Json doc = einstab::report_envelope("gauss_bonnet", seed, &loaded.echo);
  doc["model"] = einstab::model_summary_json(m);
  doc["validation"] = einstab::validation_report_json(einstab::validate(m));
  doc["report"] = einstab::gauss_bonnet_report_json(rep);
  std::cout << einstab::dump_json(doc);
  return 0;
}

int cmd_list_catalog(bool human) {
  using einstab::ManifoldSpec;
  std::vector<ManifoldSpec> entries;
  for (int n = 2; n <= 6; ++n) entries.push_back({einstab::SpaceFormSpec{n, 1.0, {}}});
  entries.push_back({einstab::SpaceFormSpec{4, 0.0, 1.0}});
  entries.push_back({einstab::SpaceFormSpec{4, -1.0, 1.0}});
  for (int m = 1; m <= 3; ++m) entries.push_back({einstab::CpnSpec{m}});
  {
    einstab::ProductSpec s2xs2;
    s2xs2.factors.push_back({einstab::SpaceFormSpec{2, 1.0, {}}});
    s2xs2.factors.push_back({einstab::SpaceFormSpec{2, 1.0, {}}});
    entries.push_back({std::move(s2xs2)});
    einstab::ProductSpec s3xs3;
    s3xs3.factors.push_back({einstab::SpaceFormSpec{3, 1.0, {}}});
    s3xs3.factors.push_back({einstab::SpaceFormSpec{3, 1.0, {}}});
    entries.push_back({std::move(s3xs3)});
    einstab::ProductSpec s2xs4;
    s2xs4.factors.push_back({einstab::SpaceFormSpec{2, 1.0, {}}});
    s2xs4.factors.push_back({einstab::SpaceFormSpec{4, 1.0, {}}});
    s2xs4.auto_rescale = true;
    entries.push_back({std::move(s2xs4)});
  }

  Json list = Json::array();
  for (const auto& spec : entries) {
    const einstab::ManifoldModel model = einstab::build_model(spec);
    Json e;
    e["name"] = model.name;
    e["dim"] = model.dim;
    e["mu"] = model.mu;
    e["volume"] = model.volume;
    e["spec"] = einstab::manifold_spec_to_json(spec);
    list.push_back(std::move(e));
  }

  if (human) {
    for (const auto& e : list)
      std::cout << e["name"].get<std::string>() << "  (dim " << e["dim"].get<int>()
                << ", mu " << e["mu"].get<double>() << ")\n";
    return 0;
  }
  Json doc = einstab::report_envelope("list_catalog", 0, nullptr);
  doc["catalog"] = std::move(list);
  std::cout << einstab::dump_json(doc);
  return 0;
}

int cmd_selftest(std::uint64_t seed, bool human) {
  const einstab::SelftestResult res = einstab::run_selftest(seed);
  if (human) {
    for (const auto& c : res.checks)
      std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  (worst "
                << c.worst_residual << ", tol " << c.tolerance << ")\n";
    std::cout << res.passed << " passed, " << res.failed << " failed\n";
  } else {
    Json doc = einstab::report_envelope("selftest", seed, nullptr);
    Json checks = Json::array();
    for (const auto& c : res.checks) {
      Json e;
      e["name"] = c.name;
      e["passed"] = c.passed;
      e["worst_residual"] = c.worst_residual;
      e["tolerance"] = c.tolerance;
      checks.push_back(std::move(e));
    }
    doc["checks"] = std::move(checks);
    doc["passed"] = res.passed;
    doc["failed"] = res.failed;
    std::cout << einstab::dump_json(doc);
  }
  return res.failed == 0 ? 0 : 2;
}

void print_error(const char* kind, const std::string& message, const std::string& path) {
  Json e;
  e["error"] = kind;
  e["message"] = message;
  if (!path.empty()) e["path"] = path;
  std::string line;
  // single-line rendering for machine consumption
  line = e.dump();
  std::cerr << line << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability criteria and Euler characteristics for homogeneous "
               "Einstein manifolds"};
  app.set_version_flag("--version", std::string(einstab::kVersion));
  app.require_subcommand(1);

  std::string spec_path;
  std::uint64_t seed = einstab::kDefaultSeed;
  bool human = false;
  std::vector<std::string> criteria;

  auto add_common = [&](CLI::App* sub, bool with_spec, bool with_criteria) {
    if (with_spec)
      sub->add_option("--spec", spec_path, "spec file path (default: standard input)");
    sub->add_option("--seed", seed, "seed for sampled quantities");
    sub->add_flag("--human", human, "human-readable rendering instead of JSON");
    if (with_criteria)
      sub->add_option("--criteria", criteria,
                      "comma-separated criterion ids (default: all applicable)")
          ->delimiter(',');
  };

  CLI::App* list_cmd = app.add_subcommand("list-catalog", "list built-in models");
  add_common(list_cmd, false, false);
  CLI::App* describe_cmd =
      app.add_subcommand("describe", "validate a spec and print model data");
  add_common(describe_cmd, true, false);
  CLI::App* check_cmd = app.add_subcommand("check", "evaluate the stability criteria");
  add_common(check_cmd, true, true);
  CLI::App* gb_cmd =
      app.add_subcommand("gauss-bonnet", "Euler characteristic computations");
  add_common(gb_cmd, true, false);
  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "run the seeded property suite");
  add_common(selftest_cmd, false, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (list_cmd->parsed()) return cmd_list_catalog(human);
    if (describe_cmd->parsed()) return cmd_describe(spec_path, seed, human);
    if (check_cmd->parsed()) return cmd_check(spec_path, criteria, seed, human);
    if (gb_cmd->parsed()) return cmd_gauss_bonnet(spec_path, seed, human);
    if (selftest_cmd->parsed()) return cmd_selftest(seed, human);
  } catch (const einstab::input_error& e) {
    print_error("input", e.what(), e.path());
    return 1;
  } catch (const einstab::numeric_error& e) {
    print_error("numeric", e.what(), "");
    return 2;
  } catch (const std::exception& e) {
    print_error("internal", e.what(), "");
    return 2;
  }
  return 0;
}
