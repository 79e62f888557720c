#ifndef EINSTAB_JSON_IO_HPP
#define EINSTAB_JSON_IO_HPP

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "einstab/criteria.hpp"
#include "einstab/gauss_bonnet.hpp"
#include "einstab/kahler.hpp"
#include "einstab/model.hpp"
#include "einstab/spectra.hpp"

namespace einstab {

// Key order is part of the report contract, hence ordered_json throughout.
using Json = nlohmann::ordered_json;

/// Deterministic serializer: two-space indentation, insertion key order,
/// floating-point numbers with 17 significant digits.
std::string dump_json(const Json& j);

/// Parses a manifold spec document.  Throws input_error with the path of
/// the first offending field on malformed input.
ManifoldSpec parse_manifold_spec(const Json& doc);
ManifoldSpec parse_manifold_spec_text(const std::string& text);

Json manifold_spec_to_json(const ManifoldSpec& spec);

// Report fragments.
Json model_summary_json(const ManifoldModel& m);
Json validation_report_json(const ValidationReport& rep);
Json spectral_summary_json(const SpectralSummary& s);
Json kahler_spectra_json(const KahlerSpectra& s);
Json criterion_report_json(const CriterionReport& r);
Json stability_report_json(const StabilityReport& rep);
Json gauss_bonnet_report_json(const GaussBonnetReport& rep);

/// Fixed numeric tolerances used by the checks, echoed into every report.
Json tolerances_json();

/// Envelope shared by all CLI reports: tool version, command, seed and the
/// spec echo (omitted for commands without a spec).
Json report_envelope(const std::string& command, std::uint64_t seed,
                     const Json* spec_echo);

// Plain-text renderings for the --human flag.
std::string human_stability_report(const ManifoldModel& m, const StabilityReport& rep);
std::string human_gauss_bonnet_report(const ManifoldModel& m, const GaussBonnetReport& rep);

}  // namespace einstab

#endif
