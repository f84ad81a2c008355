#include "spinchain/spectral_dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinchain/krawtchouk.hpp"

namespace spinchain {

namespace {

void check_site(int n_max, int site) {
  if (site < 0 || site > n_max)
    throw std::domain_error("propagate: site = " + std::to_string(site) + " outside [0, N]");
}

void check_time(double t) {
  if (!std::isfinite(t)) throw std::domain_error("propagate: time must be finite");
}

}  // namespace

SpectralData spectral_decomposition(const ChainSpec& spec) {
  const KrawtchoukTable table = krawtchouk_table(spec.n_max);
  const double alpha = spec.alpha.value();
  const double beta = spec.beta.value();

  SpectralData sd;
  sd.n_max = spec.n_max;
  sd.grid = table.grid;
  sd.weights = table.weights;
  sd.energies = alpha * table.grid.cwiseProduct(table.grid) + beta * table.grid;
  sd.eigvecs = table.values * table.weights.cwiseSqrt().asDiagonal();
  return sd;
}

StateVector propagate_state(const SpectralData& sd, const StateVector& state, double t) {
  check_time(t);
  if (state.size() != sd.n_max + 1)
    throw std::domain_error("propagate_state: state dimension mismatch");
  const int dim = sd.n_max + 1;

  // Eigenbasis coefficients, phase advance, back-transform; real and
  // imaginary parts ride through the real orthogonal matrix separately.
  const Eigen::VectorXd cr = sd.eigvecs.transpose() * state.real();
  const Eigen::VectorXd ci = sd.eigvecs.transpose() * state.imag();
  Eigen::VectorXd pr(dim);
  Eigen::VectorXd pi(dim);
  for (int s = 0; s < dim; ++s) {
    const double c = std::cos(sd.energies(s) * t);
    const double m = -std::sin(sd.energies(s) * t);
    pr(s) = c * cr(s) - m * ci(s);
    pi(s) = c * ci(s) + m * cr(s);
  }
  const Eigen::VectorXd re = sd.eigvecs * pr;
  const Eigen::VectorXd im = sd.eigvecs * pi;

  StateVector out(dim);
  for (int n = 0; n < dim; ++n) out(n) = {re(n), im(n)};
  return out;
}

StateVector propagate(const SpectralData& sd, int initial_site, double t) {
  check_site(sd.n_max, initial_site);
  StateVector basis = StateVector::Zero(sd.n_max + 1);
  basis(initial_site) = 1.0;
  return propagate_state(sd, basis, t);
}

StateVector propagate(const ChainSpec& spec, int initial_site, double t) {
  return propagate(spectral_decomposition(spec), initial_site, t);
}

EndAmplitudes end_amplitudes(const SpectralData& sd, double t) {
  check_time(t);
  EndAmplitudes ea{{0.0, 0.0}, {0.0, 0.0}};
  for (int s = 0; s <= sd.n_max; ++s) {
    const std::complex<double> phase{std::cos(sd.energies(s) * t),
                                     -std::sin(sd.energies(s) * t)};
    const std::complex<double> term = sd.weights(s) * phase;
    ea.mu += term;
    ea.nu += (sd.n_max + s) % 2 == 0 ? term : -term;
  }
  return ea;
}

EndAmplitudes end_amplitudes(const ChainSpec& spec, double t) {
  return end_amplitudes(spectral_decomposition(spec), t);
}

StateVector propagate_oracle(const ChainSpec& spec, int initial_site, double t) {
  check_site(spec.n_max, initial_site);
  check_time(t);

  using Cld = std::complex<long double>;
  using MatrixXcld = Eigen::Matrix<Cld, Eigen::Dynamic, Eigen::Dynamic>;
  const int dim = spec.n_max + 1;

  const HamiltonianMatrix h = build_hamiltonian(spec);
  MatrixXcld a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a(r, c) = Cld(0.0L, -static_cast<long double>(h(r, c)) * t);

  long double norm1 = 0.0L;
  for (int c = 0; c < dim; ++c) {
    long double col = 0.0L;
    for (int r = 0; r < dim; ++r) col += std::abs(a(r, c));
    norm1 = std::max(norm1, col);
  }
  int squarings = 0;
  while (norm1 >= 0.5L) {
    norm1 /= 2.0L;
    ++squarings;
  }
  a /= std::exp2(static_cast<long double>(squarings));

  // Taylor series through term 20, then undo the scaling by squaring.
  MatrixXcld sum = MatrixXcld::Identity(dim, dim);
  MatrixXcld term = MatrixXcld::Identity(dim, dim);
  for (int k = 1; k <= 20; ++k) {
    term = (term * a).eval();
    term /= static_cast<long double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = (sum * sum).eval();

  StateVector out(dim);
  for (int n = 0; n < dim; ++n)
    out(n) = {static_cast<double>(sum(n, initial_site).real()),
              static_cast<double>(sum(n, initial_site).imag())};
  return out;
}

}  // namespace spinchain
