#include "spinchain/io.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace spinchain::io {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string profile_csv(const CouplingProfile& profile) {
  const Eigen::Index n_max = profile.b.size() - 1;
  std::string out = "n,j1,j2,b\n";
  for (Eigen::Index n = 0; n <= n_max; ++n) {
    out += std::to_string(n);
    out += ',';
    if (n >= 1) out += format_double(profile.j1(n - 1));
    out += ',';
    if (n >= 2) out += format_double(profile.j2(n - 2));
    out += ',';
    out += format_double(profile.b(n));
    out += '\n';
  }
  return out;
}

std::string state_csv(const StateVector& state) {
  std::string out = "n,re,im,prob\n";
  for (Eigen::Index n = 0; n < state.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += format_double(state(n).real());
    out += ',';
    out += format_double(state(n).imag());
    out += ',';
    out += format_double(std::norm(state(n)));
    out += '\n';
  }
  return out;
}

std::string scan_csv(const FidelityScan& fs) {
  std::string out = "t,mu_sq,nu_sq,leakage\n";
  for (std::size_t i = 0; i < fs.times.size(); ++i) {
    out += format_double(fs.times[i]);
    out += ',';
    out += format_double(fs.mu_sq[i]);
    out += ',';
    out += format_double(fs.nu_sq[i]);
    out += ',';
    out += format_double(fs.leakage[i]);
    out += '\n';
  }
  return out;
}

std::string report_csv(const VerificationReport& report) {
  std::string out = "predicted_time,mu_sq,nu_sq,leakage,phase_re,achieved_fidelity,pass\n";
  out += format_double(report.predicted_time);
  out += ',';
  out += format_double(report.mu_sq);
  out += ',';
  out += format_double(report.nu_sq);
  out += ',';
  out += format_double(report.leakage);
  out += ',';
  out += format_double(report.phase_re);
  out += ',';
  out += format_double(report.achieved_fidelity);
  out += ',';
  out += report.pass ? "true" : "false";
  out += '\n';
  return out;
}

nlohmann::ordered_json spec_json(const ChainSpec& spec) {
  return {{"N", spec.n_max}, {"alpha", spec.alpha.str()}, {"beta", spec.beta.str()}};
}

nlohmann::ordered_json profile_json(const ChainSpec& spec, const CouplingProfile& profile) {
  nlohmann::ordered_json result;
  result["j1"] = std::vector<double>(profile.j1.begin(), profile.j1.end());
  result["j2"] = std::vector<double>(profile.j2.begin(), profile.j2.end());
  result["b"] = std::vector<double>(profile.b.begin(), profile.b.end());
  return {{"spec", spec_json(spec)}, {"result", result}};
}

nlohmann::ordered_json state_json(const ChainSpec& spec, int initial_site, double t,
                                  const StateVector& state) {
  nlohmann::ordered_json result;
  result["initial_site"] = initial_site;
  result["t"] = t;
  std::vector<double> re(state.size());
  std::vector<double> im(state.size());
  std::vector<double> prob(state.size());
  for (Eigen::Index n = 0; n < state.size(); ++n) {
    re[n] = state(n).real();
    im[n] = state(n).imag();
    prob[n] = std::norm(state(n));
  }
  result["re"] = re;
  result["im"] = im;
  result["prob"] = prob;
  return {{"spec", spec_json(spec)}, {"result", result}};
}

nlohmann::ordered_json scan_json(const ChainSpec& spec, const FidelityScan& fs) {
  nlohmann::ordered_json result;
  result["t"] = fs.times;
  result["mu_sq"] = fs.mu_sq;
  result["nu_sq"] = fs.nu_sq;
  result["leakage"] = fs.leakage;
  return {{"spec", spec_json(spec)}, {"result", result}};
}

namespace {

nlohmann::ordered_json prediction_body(const ChainSpec& spec, const RevivalPrediction& prediction) {
  nlohmann::ordered_json body;
  body["kind"] = to_string(prediction.kind);
  if (prediction.kind == RevivalKind::None) {
    body["time"] = nullptr;
    body["time_multiple_of_pi_over_beta"] = nullptr;
  } else {
    body["time"] = prediction.time(spec.beta.value());
    body["time_multiple_of_pi_over_beta"] = prediction.time_multiple.str();
  }
  body["certificate"] = nlohmann::ordered_json{{"p", prediction.certificate.p},
                                               {"q", prediction.certificate.q},
                                               {"N", prediction.certificate.n_max},
                                               {"p_odd", prediction.certificate.p_odd},
                                               {"q_odd", prediction.certificate.q_odd},
                                               {"N_odd", prediction.certificate.n_odd},
                                               {"rule", prediction.certificate.rule}};
  body["phase_note"] = prediction.phase_note;
  return body;
}

}  // namespace

nlohmann::ordered_json prediction_json(const ChainSpec& spec, const RevivalPrediction& prediction) {
  return {{"spec", spec_json(spec)}, {"result", prediction_body(spec, prediction)}};
}

nlohmann::ordered_json report_json(const ChainSpec& spec, const RevivalPrediction& prediction,
                                   const VerificationReport& report) {
  nlohmann::ordered_json verification{
      {"predicted_time", report.predicted_time},
      {"mu_sq", report.mu_sq},
      {"nu_sq", report.nu_sq},
      {"leakage", report.leakage},
      {"phase_re", report.phase_re},
      {"achieved_fidelity", report.achieved_fidelity},
      {"pass", report.pass},
  };
  nlohmann::ordered_json result;
  result["prediction"] = prediction_body(spec, prediction);
  result["verification"] = verification;
  return {{"spec", spec_json(spec)}, {"result", result}};
}

}  // namespace spinchain::io
