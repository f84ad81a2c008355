#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "spinchain/revival_analysis.hpp"

namespace spinchain::io {

/// Shortest 17-significant-digit decimal form ("%.17g"): round-trips
/// exactly in double precision.
std::string format_double(double x);

// CSV writers. Fixed headers; one value per cell at full precision;
// cells whose index is outside a list's range stay empty.
std::string profile_csv(const CouplingProfile& profile);        // n,j1,j2,b
std::string state_csv(const StateVector& state);                // n,re,im,prob
std::string scan_csv(const FidelityScan& fs);                   // t,mu_sq,nu_sq,leakage
std::string report_csv(const VerificationReport& report);

// JSON documents, all of the shape {"spec": {...}, "result": ...}.
nlohmann::ordered_json spec_json(const ChainSpec& spec);
nlohmann::ordered_json profile_json(const ChainSpec& spec, const CouplingProfile& profile);
nlohmann::ordered_json state_json(const ChainSpec& spec, int initial_site, double t,
                                  const StateVector& state);
nlohmann::ordered_json scan_json(const ChainSpec& spec, const FidelityScan& fs);
nlohmann::ordered_json prediction_json(const ChainSpec& spec, const RevivalPrediction& prediction);
nlohmann::ordered_json report_json(const ChainSpec& spec, const RevivalPrediction& prediction,
                                   const VerificationReport& report);

}  // namespace spinchain::io
