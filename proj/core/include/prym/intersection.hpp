#pragma once

#include <utility>
#include <vector>

#include "prym/ring.hpp"

namespace prym {

// The two curve configurations: a single hyperelliptic component ("g") and
// an elliptic component glued to a genus g-1 component ("1g-1").
enum class CaseTag { DG, D1G };

const char* case_name(CaseTag c);          // "g" / "1g-1"
CaseTag parse_case(const std::string& s);  // inverse of case_name

// Ambient ring on the symmetric-product side: generators x_i (class of the
// divisor N_{i,d_i-1}), theta_i (pulled-back polarization), h (hyperplane of
// the canonical system), h' (relative hyperplane, h'^2 = 0).
// For D1G the elliptic factor is handled with theta1 identified with x1, so
// only x1 (truncation 1) appears for component 1.
SpacePtr symmetric_side_space(int g, CaseTag c);

// Target of the Abel map pushforward: theta_i, h, h' on Pic x |omega_C|.
SpacePtr picbar_space(int g, CaseTag c);

// Prym side after restriction: xi (polarization of P, dim g) and h
// (hyperplane of |omega_N| = P^{g-1}).
SpacePtr prym_space(int g);

// c_r of the evaluation bundle on component i:
//   c_r = sum_k C(r,k) x_i^k theta_i^{r-k} / (r-k)!
// `space` must carry generators x<i> and theta<i>.
ClassExpr eval_bundle_chern(int i, int r, SpacePtr space);

// Pushforward along the Abel map, component degrees `dims`: linear operator
// with x_i^a * M  |->  theta_i^a / a! * M (theta_i, h, h' pass through).
// Every x-generator of the source must map to a theta-generator of `target`;
// any other source generator must exist in `target` by name.
ClassExpr abel_pushforward(const ClassExpr& e, const std::vector<int>& dims,
                           SpacePtr target);

// Conormal class sum_{r=0}^{g} h^r c_{g-r} of the total evaluation bundle
// (for D1G: c_{g-r} = 2 x1 c_{g-r-1}(E2) + c_{g-r}(E2)).
ClassExpr conormal_class_symmetric(int g, CaseTag c);

// Multiplication by the class of the exceptional center's normal direction:
// (sum_i x_i + h') * e.
ClassExpr tnd_pullback(const ClassExpr& e, CaseTag c);

// Class supported over the blow-up center, subtracted before pushforward:
//   DG:  x1^2           * sum_r h^r c_{g-r-1}
//   D1G: (2 x1 x2+x2^2) * sum_r h^r c_{g-r-1}(E2)
ClassExpr center_correction(int g, CaseTag c);

// Closed form of the pushed-forward class on picbar_space (mod h'^2).
ClassExpr closed_form_theta(int g, CaseTag c);

struct PipelineReport {
  int g;
  CaseTag case_tag;
  ClassExpr derived;        // operator-chain result
  ClassExpr closed;         // closed_form_theta
  bool match;               // derived == closed in the h'-truncated ring
  ClassExpr restricted;     // restrict_to_prym(derived)
  std::vector<std::pair<int, Rational>> mather;  // (r, coeff of h^r xi^{g-r})
};

PipelineReport chern_mather_theta_pipeline(int g, CaseTag c);

// Restriction to the Prym variety: h' -> 0, then each h^r coefficient must
// be a scalar multiple of a power of the total polarization (theta1 for DG,
// theta1+theta2 for D1G); that power maps to xi and h^r shifts to h^{r-1}
// (h^0 terms drop). Throws std::runtime_error if a coefficient is not
// proportional to the required polarization power.
ClassExpr restrict_to_prym(const ClassExpr& e, int g);

// Coefficients (r, coeff of h^r xi^{g-r}) for r = 0..g-1 of the restricted
// Chern-Mather class.
std::vector<std::pair<int, Rational>> chern_mather_xi(int g, CaseTag c);

// Degree of the Gauss map: g! times the r = 0 Chern-Mather coefficient.
Int gauss_degree(int g);

}  // namespace prym
