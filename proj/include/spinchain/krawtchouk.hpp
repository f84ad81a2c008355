#pragma once

#include <Eigen/Dense>

namespace spinchain {

/// Hard cap on the chain length index N. Everything stays dense
/// ((N+1)x(N+1) at most), and the stated accuracy targets are guaranteed
/// for N <= 40; larger N up to the cap are computed without a tolerance
/// promise.
inline constexpr int kMaxChainIndex = 100;

/// Normalized Krawtchouk polynomials chi_n evaluated on the spectral
/// grid x_s = s - N/2, together with the symmetric binomial weights
/// w_s = C(N, s) / 2^N.
///
/// values(n, s) = chi_n(x_s). The matrix O with O(n, s) =
/// sqrt(w_s) * values(n, s) is orthogonal; its columns are the
/// eigenvectors of the hopping operator J with eigenvalues x_s.
struct KrawtchoukTable {
  int n_max = 0;
  Eigen::VectorXd weights;  ///< w_s, s = 0..N; sums to 1
  Eigen::VectorXd grid;     ///< x_s = s - N/2
  Eigen::MatrixXd values;   ///< values(n, s) = chi_n(x_s)
};

/// Binomial weight w_s = C(N, s) / 2^N, computed by the multiplicative
/// ratio w_{s+1}/w_s = (N-s)/(s+1) seeded at w_0 = 2^{-N}, so no
/// factorial ever overflows (valid through N = kMaxChainIndex).
double weight(int n_max, int s);

/// chi_n(x_s) for 0 <= n, s <= N.
///
/// Evaluated by the three-term recurrence
///   J_{n+1} chi_{n+1}(x) = x chi_n(x) - J_n chi_{n-1}(x)
/// run on the stable half n <= N/2 only; values with n > N/2 come from
/// the exact reflection chi_{N-n}(x_s) = (-1)^{N+s} chi_n(x_s). The
/// full-range recurrence loses ~5 digits at N = 40 on the descent past
/// the mid-table peak, the reflected form does not. In particular
/// chi_N(x_s) = (-1)^{N+s} holds exactly.
double chi(int n_max, int n, int s);

/// The full (N+1)x(N+1) table for a chain of length index N >= 1.
KrawtchoukTable krawtchouk_table(int n_max);

/// Orthonormal eigenvector matrix of J: O(n, s) = sqrt(w_s) chi_n(x_s),
/// column s belonging to eigenvalue x_s.
Eigen::MatrixXd eigenvector_matrix(int n_max);

}  // namespace spinchain
