#include "spinchain/chain_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinchain/krawtchouk.hpp"

namespace spinchain {

ChainSpec::ChainSpec(int n_max_, Rational alpha_, Rational beta_)
    : n_max(n_max_), alpha(alpha_), beta(beta_) {
  if (n_max < 1 || n_max > kMaxChainIndex)
    throw std::domain_error("ChainSpec: N = " + std::to_string(n_max) + " outside [1, " +
                            std::to_string(kMaxChainIndex) + "]");
}

double nn_coupling(int n_max, int n) {
  if (n < 0 || n > n_max + 1)
    throw std::domain_error("nn_coupling: n = " + std::to_string(n) + " outside [0, N+1]");
  if (n == 0 || n == n_max + 1) return 0.0;
  return 0.5 * std::sqrt(static_cast<double>(n) * static_cast<double>(n_max - n + 1));
}

CouplingProfile coupling_profile(const ChainSpec& spec) {
  const int n_max = spec.n_max;
  const double alpha = spec.alpha.value();
  const double beta = spec.beta.value();

  CouplingProfile profile;
  profile.j1.resize(n_max);
  profile.j2.resize(n_max > 1 ? n_max - 1 : 0);
  profile.b.resize(n_max + 1);

  for (int n = 1; n <= n_max; ++n) profile.j1(n - 1) = beta * nn_coupling(n_max, n);
  for (int n = 2; n <= n_max; ++n)
    profile.j2(n - 2) = alpha * nn_coupling(n_max, n - 1) * nn_coupling(n_max, n);
  for (int n = 0; n <= n_max; ++n) {
    const double jn = nn_coupling(n_max, n);
    const double jn1 = nn_coupling(n_max, n + 1);
    profile.b(n) = alpha * (jn * jn + jn1 * jn1);
  }
  return profile;
}

HamiltonianMatrix build_hamiltonian(const ChainSpec& spec) {
  const int dim = spec.n_max + 1;
  const CouplingProfile profile = coupling_profile(spec);

  HamiltonianMatrix h = HamiltonianMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) h(n, n) = profile.b(n);
  for (int n = 0; n + 1 < dim; ++n) h(n, n + 1) = h(n + 1, n) = profile.j1(n);
  for (int n = 0; n + 2 < dim; ++n) h(n, n + 2) = h(n + 2, n) = profile.j2(n);
  return h;
}

HamiltonianMatrix build_j_operator(int n_max) {
  if (n_max < 1 || n_max > kMaxChainIndex)
    throw std::domain_error("build_j_operator: N outside [1, " +
                            std::to_string(kMaxChainIndex) + "]");
  const int dim = n_max + 1;
  HamiltonianMatrix j = HamiltonianMatrix::Zero(dim, dim);
  for (int n = 1; n <= n_max; ++n) j(n, n - 1) = j(n - 1, n) = nn_coupling(n_max, n);
  return j;
}

}  // namespace spinchain
