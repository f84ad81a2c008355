#include "spinchain/krawtchouk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinchain/chain_model.hpp"

namespace spinchain {

namespace {

void check_n_max(int n_max, int lowest) {
  if (n_max < lowest || n_max > kMaxChainIndex)
    throw std::domain_error("krawtchouk: N = " + std::to_string(n_max) + " outside [" +
                            std::to_string(lowest) + ", " + std::to_string(kMaxChainIndex) + "]");
}

}  // namespace

double weight(int n_max, int s) {
  check_n_max(n_max, 0);
  if (s < 0 || s > n_max)
    throw std::domain_error("krawtchouk: weight index s = " + std::to_string(s) +
                            " outside [0, N]");
  double w = std::ldexp(1.0, -n_max);  // w_0 = 2^{-N}, exact
  for (int k = 0; k < s; ++k) w *= static_cast<double>(n_max - k) / static_cast<double>(k + 1);
  return w;
}

double chi(int n_max, int n, int s) {
  check_n_max(n_max, 0);
  if (n < 0 || n > n_max || s < 0 || s > n_max)
    throw std::domain_error("krawtchouk: chi index out of range");

  const double x = s - n_max / 2.0;
  const bool reflect = n > n_max - n;
  const int stop = reflect ? n_max - n : n;

  double prev = 0.0;  // chi_{-1}
  double cur = 1.0;   // chi_0
  for (int k = 0; k < stop; ++k) {
    const double next = (x * cur - nn_coupling(n_max, k) * prev) / nn_coupling(n_max, k + 1);
    prev = cur;
    cur = next;
  }
  if (reflect && (n_max + s) % 2 != 0) cur = -cur;
  return cur;
}

KrawtchoukTable krawtchouk_table(int n_max) {
  check_n_max(n_max, 1);
  const int dim = n_max + 1;

  KrawtchoukTable table;
  table.n_max = n_max;
  table.grid.resize(dim);
  table.weights.resize(dim);
  table.values.resize(dim, dim);

  table.weights(0) = std::ldexp(1.0, -n_max);
  for (int s = 0; s < n_max; ++s) {
    table.grid(s) = s - n_max / 2.0;
    table.weights(s + 1) =
        table.weights(s) * static_cast<double>(n_max - s) / static_cast<double>(s + 1);
  }
  table.grid(n_max) = n_max / 2.0;

  // Recurrence rows 0..N/2, reflected rows above.
  const int half = n_max / 2;
  table.values.row(0).setOnes();
  table.values.row(1) = table.grid.transpose() / nn_coupling(n_max, 1);
  for (int n = 1; n < half; ++n) {
    table.values.row(n + 1) = (table.grid.transpose().cwiseProduct(table.values.row(n)) -
                               nn_coupling(n_max, n) * table.values.row(n - 1)) /
                              nn_coupling(n_max, n + 1);
  }
  for (int n = half + 1; n <= n_max; ++n) {
    for (int s = 0; s <= n_max; ++s) {
      const double v = table.values(n_max - n, s);
      table.values(n, s) = (n_max + s) % 2 == 0 ? v : -v;
    }
  }
  return table;
}

Eigen::MatrixXd eigenvector_matrix(int n_max) {
  const KrawtchoukTable table = krawtchouk_table(n_max);
  return table.values * table.weights.cwiseSqrt().asDiagonal();
}

}  // namespace spinchain
