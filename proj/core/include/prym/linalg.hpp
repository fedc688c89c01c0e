#pragma once

#include <map>
#include <vector>

#include "prym/rational.hpp"

namespace prym {

// Sparse multivariate polynomial over Q in a fixed number of variables
// (the gluing parameters lambda_1..lambda_n). Only what exact Gaussian
// elimination over the fraction field needs.
class MPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MPoly(int nvars) : nvars_(nvars) {}
  static MPoly constant(int nvars, const Rational& c);
  static MPoly variable(int nvars, int index);  // lambda_{index+1}

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  bool operator==(const MPoly& o) const = default;

 private:
  void add_term(const Exponents& e, const Rational& c);
  int nvars_;
  std::map<Exponents, Rational> terms_;
};

// Fraction of MPolys; denominators are never tested for sign or reduced,
// only for being nonzero, which is all rank computation requires.
class RatFn {
 public:
  explicit RatFn(int nvars)
      : num_(MPoly(nvars)), den_(MPoly::constant(nvars, Rational(1))) {}
  RatFn(MPoly num, MPoly den);

  static RatFn constant(int nvars, const Rational& c) {
    return RatFn(MPoly::constant(nvars, c), MPoly::constant(nvars, Rational(1)));
  }
  static RatFn variable(int nvars, int index) {
    return RatFn(MPoly::variable(nvars, index), MPoly::constant(nvars, Rational(1)));
  }

  bool is_zero() const { return num_.is_zero(); }
  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator/(const RatFn& o) const;

 private:
  MPoly num_, den_;
};

// Row rank by fraction-aware Gaussian elimination; works for any exact
// field element with is_zero()/+/-/*//.
int rank_rational(std::vector<std::vector<Rational>> m);
int rank_ratfn(std::vector<std::vector<RatFn>> m);

}  // namespace prym
