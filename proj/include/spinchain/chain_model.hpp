#pragma once

#include <Eigen/Dense>

#include "spinchain/rational.hpp"

namespace spinchain {

/// Single-excitation Hamiltonians are real symmetric pentadiagonal
/// matrices on the N+1 occupation basis states |n>.
using HamiltonianMatrix = Eigen::MatrixXd;

/// Chain of N+1 sites with NN couplings J_n^(1) = beta * J_n, NNN
/// couplings J_n^(2) = alpha * J_{n-1} J_n and fields
/// B_n = alpha * (J_n^2 + J_{n+1}^2), where J_n = sqrt(n(N-n+1))/2.
///
/// alpha and beta are exact rationals; they are converted to floating
/// point only when a matrix is built.
struct ChainSpec {
  int n_max;       ///< length index N >= 1 (N+1 sites)
  Rational alpha;  ///< NNN strength
  Rational beta;   ///< NN strength (nonzero required for revival predictions)

  ChainSpec(int n_max, Rational alpha, Rational beta);
};

/// J_n = sqrt(n(N-n+1))/2 for 0 <= n <= N+1; exactly 0 at the
/// boundaries n = 0 and n = N+1.
double nn_coupling(int n_max, int n);

/// Realized coupling arrays:
///   j1[k] = beta * J_{k+1},          k = 0..N-1  (bond k <-> k+1)
///   j2[k] = alpha * J_{k+1} J_{k+2}, k = 0..N-2  (bond k <-> k+2)
///   b[k]  = alpha * (J_k^2 + J_{k+1}^2), k = 0..N
/// All three lists are palindromic (mirror symmetry of the chain).
struct CouplingProfile {
  Eigen::VectorXd j1;
  Eigen::VectorXd j2;  ///< empty for N = 1
  Eigen::VectorXd b;
};

CouplingProfile coupling_profile(const ChainSpec& spec);

/// The (N+1)x(N+1) single-excitation Hamiltonian. Satisfies
/// H = alpha * J^2 + beta * J entrywise.
HamiltonianMatrix build_hamiltonian(const ChainSpec& spec);

/// The hopping operator J: symmetric tridiagonal, zero diagonal,
/// off-diagonal J_1..J_N. Its spectrum is {s - N/2 : s = 0..N}.
HamiltonianMatrix build_j_operator(int n_max);

}  // namespace spinchain
