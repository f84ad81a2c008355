#pragma once

#include <string>
#include <vector>

#include "spinchain/spectral_dynamics.hpp"

namespace spinchain {

enum class RevivalKind { None, PST, BalancedFR };

[[nodiscard]] const char* to_string(RevivalKind kind);

/// The parity facts a prediction rests on.
struct ParityCertificate {
  long long p = 0;
  long long q = 1;
  int n_max = 0;
  bool p_odd = false;
  bool q_odd = false;
  bool n_odd = false;
  std::string rule;  ///< which condition fired, in words
};

/// Outcome of the exact-arithmetic predictors.
///
/// All revival times are exact rational multiples of pi/beta
/// (q for PST, q/2 for balanced FR), so the time is stored as that
/// multiple; time(beta) resolves the real instant for a concrete beta.
/// The global phase phi of the revived state is free and deliberately
/// not part of the prediction.
struct RevivalPrediction {
  RevivalKind kind = RevivalKind::None;
  Rational time_multiple;  ///< t = time_multiple * pi / beta; 0 for None
  Rational ratio;          ///< alpha/beta = p/q as used by the predictor
  int n_max = 0;
  ParityCertificate certificate;
  std::string phase_note = "global phase phi unconstrained";

  /// Real revival time for a chain with the given beta (nonzero).
  /// Uses |beta|: flipping the sign of both couplings conjugates the
  /// propagator and leaves every fidelity unchanged.
  [[nodiscard]] double time(double beta) const;
};

/// PST happens iff alpha/beta = p/q is rational with, when p is odd,
/// q and N of equal parity; the minimal time is q pi / beta (p = 0 is
/// the NN model with T = pi/beta).
RevivalPrediction predict_pst(const Rational& ratio, int n_max);

/// Balanced fractional revival (|mu|^2 = |nu|^2 = 1/2) happens iff p is
/// odd and q, N have equal parity, first at q pi / (2 beta). In
/// particular it never happens in the NN model (p = 0).
RevivalPrediction predict_balanced_fr(const Rational& ratio, int n_max);

/// Convenience overloads deriving the reduced ratio from the chain
/// spec. Throw std::domain_error when beta = 0 (every revival time is
/// in units of pi/beta).
RevivalPrediction predict_pst(const ChainSpec& spec);
RevivalPrediction predict_balanced_fr(const ChainSpec& spec);

/// End-amplitude fidelities on a uniform time grid (both endpoints
/// included).
struct FidelityScan {
  std::vector<double> times;
  std::vector<double> mu_sq;
  std::vector<double> nu_sq;
  std::vector<double> leakage;
};

/// Evaluates end_amplitudes on n_steps points covering [0, t_max].
FidelityScan scan(const ChainSpec& spec, double t_max, int n_steps);

enum class EventKind { PST, BalancedFR, Return };

[[nodiscard]] const char* to_string(EventKind kind);

struct RevivalEvent {
  double time = 0.0;
  EventKind kind = EventKind::Return;
  double mu_sq = 0.0;
  double nu_sq = 0.0;
};

/// Flags grid times with leakage < tol where |nu|^2 > 1-tol (PST),
/// |mu|^2 > 1-tol (Return), or both ends within tol of 1/2
/// (BalancedFR). Runs of consecutive grid points of the same kind are
/// merged to the point of extremal fidelity; a run whose best point is
/// t = 0 is the initial condition and not reported. tol must lie in
/// (0, 0.1].
std::vector<RevivalEvent> detect_revivals(const FidelityScan& fs, double tol = 1e-6);

/// Closes the predict -> simulate loop for one prediction.
struct VerificationReport {
  double predicted_time = 0.0;
  double mu_sq = 0.0;
  double nu_sq = 0.0;
  double leakage = 0.0;
  /// |Re(nu conj(mu))| / (|mu||nu|); ~0 at a genuine FR instant where
  /// the end amplitudes are relatively imaginary.
  double phase_re = 0.0;
  double achieved_fidelity = 0.0;
  bool pass = false;
};

/// Evaluates the end amplitudes at the predicted time. PST passes iff
/// |nu|^2 > 1 - tol; BalancedFR passes iff leakage < tol and
/// ||mu|^2 - 1/2| < tol. The spec must reduce to the prediction's
/// ratio and N, otherwise std::invalid_argument.
VerificationReport verify_prediction(const ChainSpec& spec, const RevivalPrediction& prediction,
                                     double tol = 1e-7);

}  // namespace spinchain
