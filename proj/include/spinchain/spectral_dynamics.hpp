#pragma once

#include <Eigen/Dense>
#include <complex>

#include "spinchain/chain_model.hpp"

namespace spinchain {

/// Complex amplitudes over the N+1 single-excitation basis states.
using StateVector = Eigen::VectorXcd;

/// Exact spectral decomposition of H = alpha J^2 + beta J.
///
/// Built analytically from the Krawtchouk eigenbasis of J — no
/// numerical eigensolver is involved. Immutable after construction.
struct SpectralData {
  int n_max = 0;
  Eigen::VectorXd grid;      ///< x_s = s - N/2
  Eigen::VectorXd energies;  ///< E_s = alpha x_s^2 + beta x_s
  Eigen::VectorXd weights;   ///< w_s = C(N,s)/2^N
  Eigen::MatrixXd eigvecs;   ///< orthonormal; column s has eigenvalue E_s
};

SpectralData spectral_decomposition(const ChainSpec& spec);

/// e^{-iHt} applied to an arbitrary state, via the spectral sum.
StateVector propagate_state(const SpectralData& sd, const StateVector& state, double t);

/// e^{-iHt} |initial_site>. Amplitude at site n is
///   sum_s w_s chi_{site}(x_s) chi_n(x_s) e^{-i E_s t}.
StateVector propagate(const SpectralData& sd, int initial_site, double t);
StateVector propagate(const ChainSpec& spec, int initial_site, double t);

/// End-of-chain amplitudes of e^{-iHt}|0>:
///   mu = <0|psi(t)> = sum_s w_s e^{-i E_s t}
///   nu = <N|psi(t)> = sum_s w_s (-1)^{N+s} e^{-i E_s t}
/// computed directly from the two closed-form sums.
struct EndAmplitudes {
  std::complex<double> mu;
  std::complex<double> nu;

  [[nodiscard]] double mu_sq() const { return std::norm(mu); }
  [[nodiscard]] double nu_sq() const { return std::norm(nu); }
  /// Probability weight on the interior sites 1..N-1.
  [[nodiscard]] double leakage() const { return 1.0 - mu_sq() - nu_sq(); }
};

EndAmplitudes end_amplitudes(const SpectralData& sd, double t);
EndAmplitudes end_amplitudes(const ChainSpec& spec, double t);

/// Independent verification path: e^{-iHt}|initial_site> by
/// scaling-and-squaring of the truncated Taylor series on the dense
/// Hamiltonian. Makes no use of the Krawtchouk decomposition.
///
/// The step is halved until ||Ht/2^k||_1 < 0.5 and the series is
/// truncated at term 20; internal arithmetic runs in long double so the
/// k squarings do not eat into the 1e-9 agreement budget.
StateVector propagate_oracle(const ChainSpec& spec, int initial_site, double t);

}  // namespace spinchain
