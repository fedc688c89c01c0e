#pragma once

#include <string>
#include <vector>

#include "prym/intersection.hpp"  // CaseTag
#include "prym/rational.hpp"

namespace prym {

// A cycle of n hyperelliptic components N_1..N_n; component N_i has genus
// d_i and is glued to its neighbours at the tau-fixed points P_i^0, P_i^inf
// (node i joins P_{i-1}^inf to P_i^0, indices mod n).
struct CyclicCurveConfig {
  std::vector<int> d;  // per-component half branch degrees (= genera), d_i >= 1

  int n() const { return (int)d.size(); }
  int g() const;  // total genus sum d_i
  void validate() const;
};

// Per-component normal form of a line bundle restriction:
//   L|N_i = k_i * delta_i + O(a_i^0 P_i^0 + a_i^inf P_i^inf + D_i)
// with D_i tau-simple of degree d_i - 2k_i - a_i^0 - a_i^inf.
// `present` = false models h^0(N_i, L|N_i) = 0 (component carries no sections).
struct ComponentShape {
  bool present = true;
  int k = 0;
  int a0 = 0;
  int ainf = 0;
};

struct LineBundleShape {
  std::vector<ComponentShape> comps;
};

// One nonzero gluing scalar per node; node i uses lambda[i-1].
struct GluingData {
  std::vector<Rational> lambda;
  void validate(int n) const;
};

// Cyclic order predicate: j lies in the forward interval from i to k,
// open/closed at the ends according to the strict flags. All indices 1..n.
bool cyclic_less(int i, int j, int k, int n, bool left_strict, bool right_strict);

// Four-index chain i R1 j R2 k R3 l around the cycle (at most one full turn);
// strict[m] demands a strictly positive forward step at link m.
bool cyclic_chain4(int i, int j, int k, int l, int n, bool s1, bool s2, bool s3);

// Degree-budget validity: every present component satisfies
// 2 k_i + a_i^0 + a_i^inf <= d_i (so that D_i has nonnegative degree).
bool shape_valid(const CyclicCurveConfig& cfg, const LineBundleShape& shape);

// h^0 of the glued bundle for one explicit gluing: sections of component i
// are polynomials of degree <= k_i, ev_i^0(p) = (1-a_i^0) p(0),
// ev_i^inf(p) = (1-a_i^inf) [top coefficient]; node condition
// ev_{i-1}^inf(s_{i-1}) * lambda_i = ev_i^0(s_i). Exact rational elimination.
int h0_exact(const CyclicCurveConfig& cfg, const LineBundleShape& shape,
             const GluingData& glue);

// Generic value of h0_exact: the same system with the lambdas as independent
// transcendentals, eliminated over the rational-function field Q(lambda).
int h0_generic(const CyclicCurveConfig& cfg, const LineBundleShape& shape);

// Marking/segment decomposition behind the combinatorial count; exposed for
// the CLI explanation output.
struct H0Decomposition {
  std::vector<int> base;                      // per-component max(0, k+a0+ainf-1)
  std::vector<std::string> marks;             // "deleted", "", "0", "inf", "0inf"
  std::vector<std::pair<int, int>> segments;  // (start, end), 1-based
  bool cycle_configuration;  // all components present, unmarked (k=0, a=0)
};

H0Decomposition h0_decompose(const CyclicCurveConfig& cfg,
                             const LineBundleShape& shape);

// Combinatorial h^0: sum of base contributions, plus one section per
// admissible segment, plus one whole-cycle section when the all-unmarked
// configuration applies and the gluing is special (cycle product = 1).
int h0_combinatorial(const CyclicCurveConfig& cfg, const LineBundleShape& shape,
                     bool special_cycle);

// Dimension in Pic(C) of the locus of bundles with this shape:
// sum over present components of (d_i - 2k_i - a_i^0 - a_i^inf) plus 1 for
// the free gluing torus (0 when the stratum needs a special gluing).
// Throws std::invalid_argument if some free degree is negative.
int stratum_dim(const CyclicCurveConfig& cfg, const LineBundleShape& shape,
                bool needs_special_gluing);

// All budget-valid shapes (including absent components).
std::vector<LineBundleShape> enumerate_shapes(const CyclicCurveConfig& cfg);

// Maximum stratum_dim over shapes with h^0 >= r+1 (generic gluing, or
// special gluing for the whole-cycle configuration); -1 if no shape
// qualifies (empty Brill-Noether locus).
int martens_max_dim(const CyclicCurveConfig& cfg, int r);

// One irreducible family of the theta-divisor singular locus.
struct StratumDescriptor {
  std::string family;        // "A", "B", "B'", "C", "C'", "A_k", "B_k"
  std::vector<int> indices;  // component indices of the marked points
  int k = 0;                 // multiplicity parameter for A_k/B_k
  int dim_picN = 0;
  bool exceptional = false;  // true for B', C'
};

// Families of Sing(Theta) strata for the given configuration:
//   A : 2 delta points                     (i <= j)
//   B : P_i^0 + P_k^inf + delta_j          (i <=c j <=c k, cyclic)
//   B': P_i^inf + P_k^0 + delta_j          (i <c j <c k)
//   C : P_i^0 + P_j^inf + P_k^0 + P_l^inf  (i <=c j <c k <=c l, i != k, j != l)
//   C': P_i^0 + P_j^0 + P_k^inf + P_l^inf  (i <c j <=c k <c l)
// each over a residual symmetric product of degree g-4 (skipped if negative).
std::vector<StratumDescriptor> sing_strata(const CyclicCurveConfig& cfg);

// Multiplicity-k refinements for the two named configurations
// (d = (g) and d = (1, g-1)).
std::vector<StratumDescriptor> sing_k_strata(int g, CaseTag c, int k);

// Shape text round-trip, e.g.
// "n=2; d=1,4; comp1: k=0,a0=1,ainf=0; comp2: k=0,a0=0,ainf=1"
// (an absent component prints/parses as "compI: absent").
std::pair<CyclicCurveConfig, LineBundleShape> parse_shape_text(const std::string& s);
std::string format_shape_text(const CyclicCurveConfig& cfg,
                              const LineBundleShape& shape);

}  // namespace prym
