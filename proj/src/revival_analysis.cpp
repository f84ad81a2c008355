#include "spinchain/revival_analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spinchain/krawtchouk.hpp"

namespace spinchain {

namespace {

void check_n_max(int n_max) {
  if (n_max < 1 || n_max > kMaxChainIndex)
    throw std::domain_error("revival predictor: N outside [1, " +
                            std::to_string(kMaxChainIndex) + "]");
}

ParityCertificate make_certificate(const Rational& ratio, int n_max, std::string rule) {
  ParityCertificate cert;
  cert.p = ratio.num();
  cert.q = ratio.den();
  cert.n_max = n_max;
  cert.p_odd = (cert.p % 2) != 0;
  cert.q_odd = (cert.q % 2) != 0;
  cert.n_odd = (n_max % 2) != 0;
  cert.rule = std::move(rule);
  return cert;
}

Rational ratio_of(const ChainSpec& spec) {
  if (spec.beta.is_zero())
    throw std::domain_error("revival prediction requires beta != 0 (times are in units of pi/beta)");
  return spec.alpha / spec.beta;
}

}  // namespace

const char* to_string(RevivalKind kind) {
  switch (kind) {
    case RevivalKind::PST:
      return "PST";
    case RevivalKind::BalancedFR:
      return "BalancedFR";
    default:
      return "None";
  }
}

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::PST:
      return "PST";
    case EventKind::BalancedFR:
      return "BalancedFR";
    default:
      return "Return";
  }
}

double RevivalPrediction::time(double beta) const {
  if (beta == 0.0 || !std::isfinite(beta))
    throw std::domain_error("RevivalPrediction::time: beta must be finite and nonzero");
  return time_multiple.value() * std::numbers::pi / std::abs(beta);
}

RevivalPrediction predict_pst(const Rational& ratio, int n_max) {
  check_n_max(n_max);
  RevivalPrediction prediction;
  prediction.ratio = ratio;
  prediction.n_max = n_max;

  const long long p = ratio.num();
  const long long q = ratio.den();
  if (p == 0) {
    prediction.kind = RevivalKind::PST;
    prediction.time_multiple = Rational(1);
    prediction.certificate = make_certificate(ratio, n_max, "NN model (alpha = 0): PST at T = pi/beta for every N");
    return prediction;
  }
  if (p % 2 == 0) {
    prediction.kind = RevivalKind::PST;
    prediction.time_multiple = Rational(q);
    prediction.certificate = make_certificate(ratio, n_max, "p even: PST at T = q pi/beta for every N");
    return prediction;
  }
  if ((q - n_max) % 2 == 0) {
    prediction.kind = RevivalKind::PST;
    prediction.time_multiple = Rational(q);
    prediction.certificate = make_certificate(ratio, n_max, "p odd and q, N of equal parity: PST at T = q pi/beta");
  } else {
    prediction.kind = RevivalKind::None;
    prediction.time_multiple = Rational(0);
    prediction.certificate = make_certificate(ratio, n_max, "p odd but q, N of opposite parity: no PST (perfect return at q pi/beta instead)");
  }
  return prediction;
}

RevivalPrediction predict_balanced_fr(const Rational& ratio, int n_max) {
  check_n_max(n_max);
  RevivalPrediction prediction;
  prediction.ratio = ratio;
  prediction.n_max = n_max;
  prediction.kind = RevivalKind::None;
  prediction.time_multiple = Rational(0);

  const long long p = ratio.num();
  const long long q = ratio.den();
  if (p == 0) {
    prediction.certificate = make_certificate(ratio, n_max, "NN model (alpha = 0): end-to-end FR cannot happen");
    return prediction;
  }
  if (p % 2 == 0) {
    prediction.certificate = make_certificate(ratio, n_max, "p even: no balanced FR");
    return prediction;
  }
  if ((q - n_max) % 2 != 0) {
    prediction.certificate = make_certificate(ratio, n_max, "q, N of opposite parity: no balanced FR");
    return prediction;
  }
  prediction.kind = RevivalKind::BalancedFR;
  prediction.time_multiple = Rational(q, 2);
  prediction.certificate = make_certificate(ratio, n_max, "p odd and q, N of equal parity: balanced FR first at tau = q pi/(2 beta)");
  return prediction;
}

RevivalPrediction predict_pst(const ChainSpec& spec) { return predict_pst(ratio_of(spec), spec.n_max); }

RevivalPrediction predict_balanced_fr(const ChainSpec& spec) {
  return predict_balanced_fr(ratio_of(spec), spec.n_max);
}

FidelityScan scan(const ChainSpec& spec, double t_max, int n_steps) {
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::domain_error("scan: t_max must be positive and finite");
  if (n_steps < 2) throw std::domain_error("scan: n_steps must be at least 2");

  const SpectralData sd = spectral_decomposition(spec);
  const double dt = t_max / (n_steps - 1);

  FidelityScan fs;
  fs.times.resize(n_steps);
  fs.mu_sq.resize(n_steps);
  fs.nu_sq.resize(n_steps);
  fs.leakage.resize(n_steps);
  for (int i = 0; i < n_steps; ++i) {
    const double t = i + 1 == n_steps ? t_max : i * dt;
    const EndAmplitudes ea = end_amplitudes(sd, t);
    fs.times[i] = t;
    fs.mu_sq[i] = ea.mu_sq();
    fs.nu_sq[i] = ea.nu_sq();
    fs.leakage[i] = ea.leakage();
  }
  return fs;
}

namespace {

enum class Flag { NoEvent, PST, BalancedFR, Return };

Flag classify(double mu_sq, double nu_sq, double leakage, double tol) {
  if (!(leakage < tol)) return Flag::NoEvent;
  if (nu_sq > 1.0 - tol) return Flag::PST;
  if (mu_sq > 1.0 - tol) return Flag::Return;
  if (std::abs(mu_sq - 0.5) < tol && std::abs(nu_sq - 0.5) < tol) return Flag::BalancedFR;
  return Flag::NoEvent;
}

// Merit used to pick the representative of a merged run: the closer to
// the ideal fidelity of its kind, the larger.
double merit(Flag flag, double mu_sq, double nu_sq) {
  switch (flag) {
    case Flag::PST:
      return nu_sq;
    case Flag::Return:
      return mu_sq;
    default:
      return -(std::abs(mu_sq - 0.5) + std::abs(nu_sq - 0.5));
  }
}

EventKind to_event_kind(Flag flag) {
  switch (flag) {
    case Flag::PST:
      return EventKind::PST;
    case Flag::Return:
      return EventKind::Return;
    default:
      return EventKind::BalancedFR;
  }
}

}  // namespace

std::vector<RevivalEvent> detect_revivals(const FidelityScan& fs, double tol) {
  if (!(tol > 0.0) || tol > 0.1) throw std::domain_error("detect_revivals: tol outside (0, 0.1]");

  std::vector<RevivalEvent> events;
  Flag run_flag = Flag::NoEvent;
  std::size_t run_best = 0;

  const std::size_t n = fs.times.size();
  for (std::size_t i = 0; i <= n; ++i) {
    const Flag flag =
        i < n ? classify(fs.mu_sq[i], fs.nu_sq[i], fs.leakage[i], tol) : Flag::NoEvent;

    if (flag == run_flag && flag != Flag::NoEvent) {
      if (merit(flag, fs.mu_sq[i], fs.nu_sq[i]) > merit(flag, fs.mu_sq[run_best], fs.nu_sq[run_best]))
        run_best = i;
      continue;
    }
    // The plateau around t = 0 merges to the initial condition itself
    // and is not a revival; anything with a later representative is.
    if (run_flag != Flag::NoEvent && fs.times[run_best] != 0.0)
      events.push_back({fs.times[run_best], to_event_kind(run_flag), fs.mu_sq[run_best],
                        fs.nu_sq[run_best]});
    run_flag = flag;
    run_best = i;
  }
  return events;
}

VerificationReport verify_prediction(const ChainSpec& spec, const RevivalPrediction& prediction,
                                     double tol) {
  if (prediction.kind == RevivalKind::None)
    throw std::invalid_argument("verify_prediction: nothing to verify for a None prediction");
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw std::invalid_argument("verify_prediction: tol must be positive");
  if (ratio_of(spec) != prediction.ratio || spec.n_max != prediction.n_max)
    throw std::invalid_argument(
        "verify_prediction: spec does not reduce to the prediction's ratio and N");

  VerificationReport report;
  report.predicted_time = prediction.time(spec.beta.value());
  const EndAmplitudes ea = end_amplitudes(spec, report.predicted_time);
  report.mu_sq = ea.mu_sq();
  report.nu_sq = ea.nu_sq();
  report.leakage = ea.leakage();
  const double mod = std::abs(ea.mu) * std::abs(ea.nu);
  report.phase_re = mod > 0.0 ? std::abs((ea.nu * std::conj(ea.mu)).real()) / mod : 0.0;

  if (prediction.kind == RevivalKind::PST) {
    report.achieved_fidelity = report.nu_sq;
    report.pass = report.nu_sq > 1.0 - tol;
  } else {
    report.achieved_fidelity = report.mu_sq + report.nu_sq;
    report.pass = report.leakage < tol && std::abs(report.mu_sq - 0.5) < tol;
  }
  return report;
}

}  // namespace spinchain
