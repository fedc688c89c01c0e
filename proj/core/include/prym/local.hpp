#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prym/rational.hpp"

namespace prym {

// Local type of the blow-up of xy = st at a theta point lying over nodes.
// k (resp. l) counts independent vanishing directions at the 0-side
// (resp. inf-side): node count plus one when the corresponding gluing
// eigenvalue degenerates.
struct BlowupLocalType {
  int k = 0;
  int l = 0;
  bool smooth() const { return k == 0 || l == 0; }
};

// lambda_zero / mu_zero flag a degenerate eigenvalue on the respective side;
// both degenerating at once is rejected.
BlowupLocalType blowup_local_type(int zero_node_count, int infty_node_count,
                                  bool lambda_zero, bool mu_zero);

// Hessian at 0 of F(z) = prod_i (z_i^2 + Q_i) - prod_i Q_i, computed by
// expanding the product truncated at total degree two. Equals
// diag(2 prod_{j != i} Q_j); in particular det = 2^g (prod Q_i)^{g-1}.
std::vector<std::vector<Rational>> ramification_hessian(
    const std::vector<Rational>& Q);

Rational hessian_determinant(const std::vector<std::vector<Rational>>& H);

// Characteristic-cycle data of the theta divisor: the smooth stratum enters
// with multiplicity one and each isolated point stratum with multiplicity
// 1 - (-1)^g (0 for even g, 2 for odd g).
struct CharacteristicCycle {
  int base_multiplicity = 1;
  std::vector<std::pair<std::string, int>> point_multiplicities;
};

CharacteristicCycle cc_cycle(int g, const std::vector<std::string>& point_labels);

// Parity sign (-1)^{g-1} of the local Milnor contribution; the point
// multiplicity above equals 1 + milnor_parity(g).
int milnor_parity(int g);

}  // namespace prym
