#include "prym/intersection.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace prym {

namespace {
std::string xname(int i) { return "x" + std::to_string(i); }
std::string tname(int i) { return "theta" + std::to_string(i); }
}  // namespace

const char* case_name(CaseTag c) { return c == CaseTag::DG ? "g" : "1g-1"; }

CaseTag parse_case(const std::string& s) {
  if (s == "g") return CaseTag::DG;
  if (s == "1g-1") return CaseTag::D1G;
  throw std::invalid_argument("unknown case: '" + s + "' (expected 'g' or '1g-1')");
}

SpacePtr symmetric_side_space(int g, CaseTag c) {
  if (g < 2) throw std::invalid_argument("g must be at least 2");
  if (c == CaseTag::DG)
    return Space::make({{"x1", g}, {"theta1", g}, {"h", g}, {"h'", 1}}, 2 * g + 1);
  return Space::make(
      {{"x1", 1}, {"x2", g - 1}, {"theta2", g - 1}, {"h", g}, {"h'", 1}},
      2 * g + 1);
}

SpacePtr picbar_space(int g, CaseTag c) {
  if (g < 2) throw std::invalid_argument("g must be at least 2");
  if (c == CaseTag::DG)
    return Space::make({{"theta1", g}, {"h", g}, {"h'", 1}}, 2 * g + 1);
  return Space::make({{"theta1", 1}, {"theta2", g - 1}, {"h", g}, {"h'", 1}},
                     2 * g + 1);
}

SpacePtr prym_space(int g) {
  if (g < 2) throw std::invalid_argument("g must be at least 2");
  return Space::make({{"xi", g}, {"h", g - 1}}, 2 * g - 1);
}

ClassExpr eval_bundle_chern(int i, int r, SpacePtr space) {
  if (r < 0) throw std::invalid_argument("negative Chern index");
  ClassExpr x = ClassExpr::generator(space, xname(i));
  ClassExpr th = ClassExpr::generator(space, tname(i));
  ClassExpr sum = ClassExpr::zero(space);
  for (int k = 0; k <= r; ++k)
    sum = sum + x.pow(k) * th.pow(r - k) * (binomial(r, k) / factorial(r - k));
  return sum;
}

ClassExpr abel_pushforward(const ClassExpr& e, const std::vector<int>& dims,
                           SpacePtr target) {
  const SpacePtr& src = e.space();
  const auto& gens = src->generators();
  // Map each source generator to a target index; x_i merges into theta_i.
  std::vector<std::size_t> dest(gens.size());
  std::vector<bool> is_x(gens.size(), false);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string& n = gens[i].name;
    if (n.rfind("x", 0) == 0 && n.size() > 1 && std::isdigit((unsigned char)n[1])) {
      int comp = std::stoi(n.substr(1));
      if (comp < 1 || comp > (int)dims.size())
        throw std::invalid_argument("no pushforward rule for generator " + n);
      dest[i] = target->index_of(tname(comp));
      is_x[i] = true;
    } else {
      dest[i] = target->index_of(n);
    }
  }
  ClassExpr result(target);
  for (const auto& [exps, c] : e.terms()) {
    ClassExpr::Exponents out(target->size(), 0);
    Rational coeff = c;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      out[dest[i]] += exps[i];
      if (is_x[i]) coeff /= factorial(exps[i]);
    }
    result = result + ClassExpr::monomial(target, out, coeff);
  }
  return result;
}

ClassExpr conormal_class_symmetric(int g, CaseTag c) {
  SpacePtr sp = symmetric_side_space(g, c);
  ClassExpr h = ClassExpr::generator(sp, "h");
  ClassExpr sum = ClassExpr::zero(sp);
  if (c == CaseTag::DG) {
    for (int r = 0; r <= g; ++r)
      sum = sum + h.pow(r) * eval_bundle_chern(1, g - r, sp);
  } else {
    ClassExpr x1 = ClassExpr::generator(sp, "x1");
    for (int r = 0; r <= g; ++r) {
      ClassExpr cr = eval_bundle_chern(2, g - r, sp);
      if (g - r - 1 >= 0)
        cr = cr + x1 * eval_bundle_chern(2, g - r - 1, sp) * Rational(2);
      sum = sum + h.pow(r) * cr;
    }
  }
  return sum;
}

ClassExpr tnd_pullback(const ClassExpr& e, CaseTag c) {
  SpacePtr sp = e.space();
  ClassExpr f = ClassExpr::generator(sp, "x1") + ClassExpr::generator(sp, "h'");
  if (c == CaseTag::D1G) f = f + ClassExpr::generator(sp, "x2");
  return f * e;
}

ClassExpr center_correction(int g, CaseTag c) {
  SpacePtr sp = symmetric_side_space(g, c);
  ClassExpr h = ClassExpr::generator(sp, "h");
  ClassExpr sum = ClassExpr::zero(sp);
  int comp = (c == CaseTag::DG) ? 1 : 2;
  for (int r = 0; r <= g; ++r)
    if (g - r - 1 >= 0) sum = sum + h.pow(r) * eval_bundle_chern(comp, g - r - 1, sp);
  ClassExpr front = ClassExpr::zero(sp);
  if (c == CaseTag::DG) {
    front = ClassExpr::generator(sp, "x1", 2);
  } else {
    ClassExpr x1 = ClassExpr::generator(sp, "x1");
    ClassExpr x2 = ClassExpr::generator(sp, "x2");
    front = x1 * x2 * Rational(2) + x2 * x2;
  }
  return front * sum;
}

ClassExpr closed_form_theta(int g, CaseTag c) {
  SpacePtr sp = picbar_space(g, c);
  ClassExpr h = ClassExpr::generator(sp, "h");
  ClassExpr hp = ClassExpr::generator(sp, "h'");
  ClassExpr theta_tot = ClassExpr::generator(sp, "theta1");
  if (c == CaseTag::D1G) theta_tot = theta_tot + ClassExpr::generator(sp, "theta2");
  ClassExpr sum = ClassExpr::zero(sp);
  for (int r = 0; r <= g; ++r) {
    int m = g - r;
    sum = sum + h.pow(r) * (theta_tot + hp).pow(m + 1) *
                    (binomial(2 * m, m) / factorial(m + 1));
  }
  if (c == CaseTag::D1G) {
    // Correction supported on theta1 h': 2 C(2m-2, m) theta2^{m-1}/(m-1)!.
    ClassExpr th1 = ClassExpr::generator(sp, "theta1");
    ClassExpr th2 = ClassExpr::generator(sp, "theta2");
    for (int r = 0; r + 1 <= g; ++r) {
      int m = g - r;
      sum = sum - h.pow(r) * hp * th1 * th2.pow(m - 1) *
                      (Rational(2) * binomial(2 * m - 2, m) / factorial(m - 1));
    }
  }
  return sum;
}

ClassExpr restrict_to_prym(const ClassExpr& e, int g) {
  SpacePtr sp = e.space();
  bool two_factor = sp->has("theta2");
  // Step 1: kill h'.
  ClassExpr flat =
      e.substitute({{"h'", ClassExpr::zero(sp)}}, sp);
  // Step 2/3: per h-power, match against a power of the total polarization.
  ClassExpr theta_tot = ClassExpr::generator(sp, "theta1");
  if (two_factor) theta_tot = theta_tot + ClassExpr::generator(sp, "theta2");
  std::size_t hi = sp->index_of("h");

  SpacePtr target = prym_space(g);
  ClassExpr result = ClassExpr::zero(target);
  for (int r = 1; r <= sp->generators()[hi].truncation.value_or(g); ++r) {
    // Collect the h^r slice and its theta-degree.
    ClassExpr slice = ClassExpr::zero(sp);
    long deg = -1;
    for (const auto& [exps, c] : flat.terms()) {
      if (exps[hi] != (int)r) continue;
      ClassExpr::Exponents bare = exps;
      bare[hi] = 0;
      long d = 0;
      for (int v : bare) d += v;
      if (deg >= 0 && d != deg)
        throw std::runtime_error("h-slice not homogeneous in the polarizations");
      deg = d;
      slice = slice + ClassExpr::monomial(sp, bare, c);
    }
    if (slice.is_zero()) continue;
    ClassExpr power = theta_tot.pow((int)deg);
    if (power.is_zero())
      throw std::runtime_error("nonzero slice against vanishing polarization power");
    const auto& [pe, pc] = *power.terms().begin();
    Rational scale = slice.coefficient(pe) / pc;
    if (!(power * scale == slice))
      throw std::runtime_error(
          "restriction is not a polynomial in the total polarization");
    result = result + ClassExpr::generator(target, "h", r - 1) *
                          ClassExpr::generator(target, "xi", (int)deg) * scale;
  }
  return result;
}

PipelineReport chern_mather_theta_pipeline(int g, CaseTag c) {
  std::vector<int> dims =
      (c == CaseTag::DG) ? std::vector<int>{g} : std::vector<int>{1, g - 1};
  ClassExpr upstairs =
      tnd_pullback(conormal_class_symmetric(g, c), c) - center_correction(g, c);
  ClassExpr derived = abel_pushforward(upstairs, dims, picbar_space(g, c));
  ClassExpr closed = closed_form_theta(g, c);
  ClassExpr restricted = restrict_to_prym(derived, g);
  PipelineReport rep{g, c, derived, closed, derived == closed, restricted, {}};
  SpacePtr psp = restricted.space();
  for (int r = 0; r <= g - 1; ++r)
    rep.mather.emplace_back(
        r, restricted.coefficient({{"h", r}, {"xi", g - r}}));
  return rep;
}

std::vector<std::pair<int, Rational>> chern_mather_xi(int g, CaseTag c) {
  return chern_mather_theta_pipeline(g, c).mather;
}

Int gauss_degree(int g) {
  Rational d = chern_mather_xi(g, CaseTag::DG)[0].second * factorial(g);
  if (denominator(d) != 1)
    throw std::runtime_error("Gauss degree is not an integer");
  return numerator(d);
}

}  // namespace prym
