#include "prym/local.hpp"

#include <stdexcept>

namespace prym {

BlowupLocalType blowup_local_type(int zero_node_count, int infty_node_count,
                                  bool lambda_zero, bool mu_zero) {
  if (zero_node_count < 0 || infty_node_count < 0)
    throw std::invalid_argument("node counts must be nonnegative");
  if (lambda_zero && mu_zero)
    throw std::invalid_argument("at most one gluing eigenvalue can degenerate");
  return BlowupLocalType{zero_node_count + (lambda_zero ? 1 : 0),
                         infty_node_count + (mu_zero ? 1 : 0)};
}

std::vector<std::vector<Rational>> ramification_hessian(
    const std::vector<Rational>& Q) {
  const int g = (int)Q.size();
  if (g < 1) throw std::invalid_argument("need at least one coordinate");
  // Truncated expansion of prod (z_i^2 + Q_i) up to total degree two:
  // constant c, linear part l, quadratic part q (only z_i^2 can appear,
  // but the multiplication is kept general).
  Rational c = 1;
  std::vector<Rational> l(g, 0);
  std::vector<std::vector<Rational>> q(g, std::vector<Rational>(g, 0));
  for (int i = 0; i < g; ++i) {
    for (auto& row : q)
      for (auto& v : row) v *= Q[i];
    for (auto& v : l) v *= Q[i];
    q[i][i] += c;  // the z_i^2 factor lifts the constant term
    c *= Q[i];
  }
  // F subtracts prod Q_i, which only shifts the constant term; the Hessian
  // reads off the degree-two part.
  std::vector<std::vector<Rational>> H(g, std::vector<Rational>(g, 0));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) H[i][j] = q[i][j] * (i == j ? 2 : 1) + q[j][i] * (i == j ? 0 : 1);
  return H;
}

Rational hessian_determinant(const std::vector<std::vector<Rational>>& H) {
  // exact Gaussian elimination with partial pivoting by nonzero entry
  auto m = H;
  const int n = (int)m.size();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
    }
  }
  return det;
}

CharacteristicCycle cc_cycle(int g, const std::vector<std::string>& point_labels) {
  if (g < 4) throw std::invalid_argument("isolated singular points require g >= 4");
  CharacteristicCycle cc;
  int mult = 1 - ((g % 2 == 0) ? 1 : -1);  // 1 - (-1)^g
  for (const auto& label : point_labels) cc.point_multiplicities.emplace_back(label, mult);
  return cc;
}

int milnor_parity(int g) {
  if (g < 1) throw std::invalid_argument("g must be positive");
  return (g % 2 == 1) ? 1 : -1;  // (-1)^{g-1}
}

}  // namespace prym
