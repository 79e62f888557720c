#include "einstab/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "einstab/errors.hpp"
#include "einstab/version.hpp"

namespace einstab {

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void escape_string(const std::string& s, std::string& out) {
  out += '"';
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void dump_value(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<size_t>(depth) * 2, ' ');
  const std::string pad_in(static_cast<size_t>(depth + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad_in;
        escape_string(it.key(), out);
        out += ": ";
        dump_value(it.value(), out, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out += pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        out += pad_in;
        dump_value(j[i], out, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out += pad + "]";
      return;
    }
    case Json::value_t::string:
      escape_string(j.get_ref<const std::string&>(), out);
      return;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case Json::value_t::number_integer: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(j.get<int64_t>()));
      out += buf;
      return;
    }
    case Json::value_t::number_unsigned: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%llu",
                    static_cast<unsigned long long>(j.get<uint64_t>()));
      out += buf;
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x))
        throw numeric_error("report serialization hit a non-finite number");
      out += format_double(x);
      return;
    }
    default:
      out += "null";
      return;
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw input_error("spec error at '" + path + "': " + msg, path);
}

std::string join_path(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

const Json& require_field(const Json& obj, const std::string& key,
                          const std::string& prefix) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(join_path(prefix, key), "missing required field");
  return *it;
}

double require_number(const Json& obj, const std::string& key, const std::string& prefix) {
  const Json& v = require_field(obj, key, prefix);
  if (!v.is_number()) fail(join_path(prefix, key), "expected a number");
  return v.get<double>();
}

int require_int(const Json& obj, const std::string& key, const std::string& prefix) {
  const Json& v = require_field(obj, key, prefix);
  if (!v.is_number_integer()) fail(join_path(prefix, key), "expected an integer");
  return v.get<int>();
}

std::vector<double> require_number_array(const Json& obj, const std::string& key,
                                         const std::string& prefix) {
  const Json& v = require_field(obj, key, prefix);
  if (!v.is_array()) fail(join_path(prefix, key), "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number())
      fail(join_path(prefix, key) + "[" + std::to_string(i) + "]", "expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> allowed,
                         const std::string& prefix) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok) fail(join_path(prefix, it.key()), "unknown field");
  }
}

ManifoldSpec parse_spec_impl(const Json& doc, const std::string& prefix) {
  if (!doc.is_object()) fail(prefix.empty() ? "(root)" : prefix, "expected an object");
  const Json& type = require_field(doc, "type", prefix);
  if (!type.is_string()) fail(join_path(prefix, "type"), "expected a string");
  const std::string tag = type.get<std::string>();

  ManifoldSpec spec;
  if (tag == "space_form") {
    reject_unknown_keys(doc, {"type", "dim", "curvature", "volume"}, prefix);
    SpaceFormSpec s;
    s.dim = require_int(doc, "dim", prefix);
    s.curvature = require_number(doc, "curvature", prefix);
    if (doc.contains("volume")) {
      if (!doc["volume"].is_number()) fail(join_path(prefix, "volume"), "expected a number");
      s.volume = doc["volume"].get<double>();
    }
    if (s.curvature <= 0.0 && !s.volume)
      fail(join_path(prefix, "volume"),
           "required for non-positive curvature (compact quotient volume)");
    spec.value = s;
  } else if (tag == "cpn") {
    reject_unknown_keys(doc, {"type", "complex_dim"}, prefix);
    CpnSpec s;
    s.complex_dim = require_int(doc, "complex_dim", prefix);
    spec.value = s;
  } else if (tag == "product") {
    reject_unknown_keys(doc, {"type", "factors", "auto_rescale"}, prefix);
    ProductSpec s;
    const Json& factors = require_field(doc, "factors", prefix);
    if (!factors.is_array() || factors.size() < 2)
      fail(join_path(prefix, "factors"), "expected an array of at least two specs");
    for (size_t i = 0; i < factors.size(); ++i)
      s.factors.push_back(parse_spec_impl(
          factors[i], join_path(prefix, "factors[" + std::to_string(i) + "]")));
    if (doc.contains("auto_rescale")) {
      if (!doc["auto_rescale"].is_boolean())
        fail(join_path(prefix, "auto_rescale"), "expected a boolean");
      s.auto_rescale = doc["auto_rescale"].get<bool>();
    }
    spec.value = std::move(s);
  } else if (tag == "custom") {
    reject_unknown_keys(doc,
                        {"type", "name", "dim", "curvature", "volume", "euler_char",
                         "complex_structure", "grad_weyl_sq"},
                        prefix);
    CustomSpec s;
    s.dim = require_int(doc, "dim", prefix);
    s.curvature = require_number_array(doc, "curvature", prefix);
    s.volume = require_number(doc, "volume", prefix);
    if (doc.contains("euler_char")) s.euler_char = require_int(doc, "euler_char", prefix);
    if (doc.contains("complex_structure"))
      s.complex_structure = require_number_array(doc, "complex_structure", prefix);
    if (doc.contains("grad_weyl_sq")) s.grad_weyl_sq = require_number(doc, "grad_weyl_sq", prefix);
    if (doc.contains("name")) {
      if (!doc["name"].is_string()) fail(join_path(prefix, "name"), "expected a string");
      s.name = doc["name"].get<std::string>();
    }
    spec.value = std::move(s);
  } else {
    fail(join_path(prefix, "type"),
         "unknown spec type '" + tag + "' (expected space_form, cpn, product or custom)");
  }
  return spec;
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  dump_value(j, out, 0);
  out += '\n';
  return out;
}

ManifoldSpec parse_manifold_spec(const Json& doc) { return parse_spec_impl(doc, ""); }

ManifoldSpec parse_manifold_spec_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("malformed JSON: ") + e.what(), "(document)");
  }
  return parse_manifold_spec(doc);
}

Json manifold_spec_to_json(const ManifoldSpec& spec) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        Json j;
        if constexpr (std::is_same_v<T, SpaceFormSpec>) {
          j["type"] = "space_form";
          j["dim"] = s.dim;
          j["curvature"] = s.curvature;
          if (s.volume) j["volume"] = *s.volume;
        } else if constexpr (std::is_same_v<T, CpnSpec>) {
          j["type"] = "cpn";
          j["complex_dim"] = s.complex_dim;
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          j["type"] = "product";
          j["factors"] = Json::array();
          for (const auto& f : s.factors) j["factors"].push_back(manifold_spec_to_json(f));
          j["auto_rescale"] = s.auto_rescale;
        } else {
          j["type"] = "custom";
          if (s.name) j["name"] = *s.name;
          j["dim"] = s.dim;
          j["curvature"] = s.curvature;
          j["volume"] = s.volume;
          if (s.euler_char) j["euler_char"] = *s.euler_char;
          if (s.complex_structure) j["complex_structure"] = *s.complex_structure;
          if (s.grad_weyl_sq) j["grad_weyl_sq"] = *s.grad_weyl_sq;
        }
        return j;
      },
      spec.value);
}

Json model_summary_json(const ManifoldModel& m) {
  Json j;
  j["name"] = m.name;
  j["dim"] = m.dim;
  j["mu"] = m.mu;
  j["volume"] = m.volume;
  if (m.euler_char)
    j["euler_char"] = *m.euler_char;
  else
    j["euler_char"] = nullptr;
  j["kahler"] = m.complex_structure.has_value();
  j["symmetric_space"] = m.is_symmetric;
  if (m.product_dims) j["product_dims"] = {m.product_dims->first, m.product_dims->second};
  return j;
}

Json validation_report_json(const ValidationReport& rep) {
  Json j;
  j["ok"] = rep.ok();
  j["checks"] = Json::array();
  for (const auto& c : rep.checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["residual"] = c.residual;
    e["tolerance"] = c.tolerance;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

Json spectral_summary_json(const SpectralSummary& s) {
  Json j;
  j["r_sup"] = s.r_sup;
  j["w_sup"] = s.w_sup;
  j["w_lq"] = s.w_lq;
  j["sectional_min"] = s.sectional_min;
  j["sectional_max"] = s.sectional_max;
  return j;
}

Json kahler_spectra_json(const KahlerSpectra& s) {
  Json j;
  j["b_sup"] = s.b_sup;
  j["bplus_sup"] = s.bplus_sup;
  j["b_lq"] = s.b_lq;
  return j;
}

Json criterion_report_json(const CriterionReport& r) {
  Json j;
  j["id"] = r.id;
  j["applicable"] = r.applicable;
  j["threshold"] = r.threshold;
  j["measured"] = r.measured;
  j["margin"] = r.margin;
  j["strict"] = r.strict;
  j["contribution"] = to_string(r.contribution);
  j["advisory"] = r.advisory;
  if (r.lower_bound)
    j["lower_bound"] = *r.lower_bound;
  else
    j["lower_bound"] = nullptr;
  if (r.yamabe) j["yamabe"] = *r.yamabe;
  j["note"] = r.note;
  return j;
}

Json stability_report_json(const StabilityReport& rep) {
  Json j;
  j["model"] = rep.model_name;
  j["overall"] = to_string(rep.overall);
  j["criteria"] = Json::array();
  for (const auto& c : rep.criteria) j["criteria"].push_back(criterion_report_json(c));
  if (rep.witness) {
    Json w;
    w["quadratic_form_value"] = rep.witness->quadratic_form_value;
    w["direction"] = Json::array();
    const Sym2& h = rep.witness->direction;
    for (int i = 0; i < h.dim; ++i) {
      Json row = Json::array();
      for (int k = 0; k < h.dim; ++k) row.push_back(h(i, k));
      w["direction"].push_back(std::move(row));
    }
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json gauss_bonnet_report_json(const GaussBonnetReport& rep) {
  Json j;
  j["dim"] = rep.dim;
  j["chi_pfaffian"] = rep.chi_pfaffian;
  j["chi_explicit"] = rep.chi_explicit;
  if (rep.chi_expected)
    j["chi_expected"] = *rep.chi_expected;
  else
    j["chi_expected"] = nullptr;
  if (rep.chi_sakai) j["chi_sakai"] = *rep.chi_sakai;
  if (rep.chi_einstein_form) j["chi_einstein_form"] = *rep.chi_einstein_form;
  if (rep.dim == 6)
    j["chi_weyl_form"] = rep.chi_weyl_form ? Json(*rep.chi_weyl_form) : Json(nullptr);
  if (rep.berger_nonnegative) j["berger_nonnegative"] = *rep.berger_nonnegative;

  Json c;
  c["weyl_norm_sq"] = rep.weyl_norm_sq;
  c["scalar_part_norm_sq"] = rep.scalar_part_norm_sq;
  c["traceless_ricci_norm_sq"] = rep.traceless_ricci_norm_sq;
  c["riemann_norm_sq"] = rep.riemann_norm_sq;
  c["mu"] = rep.mu;
  c["c1"] = rep.c1;
  c["c2"] = rep.c2;
  c["tr_what3"] = rep.tr_what3;
  if (rep.grad_weyl_sq_integral)
    c["grad_weyl_sq_integral"] = *rep.grad_weyl_sq_integral;
  else
    c["grad_weyl_sq_integral"] = nullptr;
  j["components"] = std::move(c);
  return j;
}

Json tolerances_json() {
  Json j;
  j["curvature_symmetry_abs"] = 1e-12;
  j["bianchi_abs"] = 1e-10;
  j["einstein_condition_abs"] = 1e-10;
  j["kahler_identity_abs"] = 1e-10;
  j["criterion_equality_rel"] = 1e-12;
  j["eigensolver_offdiagonal_normalized"] = 1e-14;
  j["eigensolver_reconstruction_rel"] = 1e-10;
  j["sectional_refinement_steps"] = 50;
  return j;
}

Json report_envelope(const std::string& command, std::uint64_t seed, const Json* spec_echo) {
  Json j;
  Json tool;
  tool["name"] = kToolName;
  tool["version"] = kVersion;
  j["tool"] = std::move(tool);
  j["command"] = command;
  j["seed"] = seed;
  if (spec_echo) j["spec"] = *spec_echo;
  j["tolerances"] = tolerances_json();
  return j;
}

std::string human_stability_report(const ManifoldModel& m, const StabilityReport& rep) {
  std::ostringstream os;
  os << "model: " << m.name << "  (dim " << m.dim << ", mu " << format_double(m.mu)
     << ", volume " << format_double(m.volume) << ")\n";
  os << "overall verdict: " << to_string(rep.overall) << "\n";
  if (rep.witness)
    os << "instability witness: quadratic form value "
       << format_double(rep.witness->quadratic_form_value) << " per unit norm\n";
  os << "criteria:\n";
  for (const auto& c : rep.criteria) {
    os << "  " << c.id;
    if (!c.applicable) {
      os << ": not applicable (" << c.note << ")\n";
      continue;
    }
    os << ": measured " << format_double(c.measured) << " vs threshold "
       << format_double(c.threshold) << ", margin " << format_double(c.margin) << " -> "
       << to_string(c.contribution);
    if (c.advisory) os << " [advisory]";
    if (c.lower_bound) os << ", spectral lower bound " << format_double(*c.lower_bound);
    if (!c.note.empty()) os << " (" << c.note << ")";
    os << "\n";
  }
  return os.str();
}

std::string human_gauss_bonnet_report(const ManifoldModel& m, const GaussBonnetReport& rep) {
  std::ostringstream os;
  os << "model: " << m.name << "  (dim " << m.dim << ")\n";
  os << "chi (pfaffian):    " << format_double(rep.chi_pfaffian) << "\n";
  os << "chi (explicit):    " << format_double(rep.chi_explicit) << "\n";
  if (rep.chi_einstein_form)
    os << "chi (einstein form): " << format_double(*rep.chi_einstein_form) << "\n";
  if (rep.chi_weyl_form)
    os << "chi (weyl form):   " << format_double(*rep.chi_weyl_form) << "\n";
  if (rep.chi_expected) os << "chi (expected):    " << *rep.chi_expected << "\n";
  if (rep.berger_nonnegative)
    os << "berger nonnegativity: " << (*rep.berger_nonnegative ? "holds" : "VIOLATED") << "\n";
  return os.str();
}

}  // namespace einstab
