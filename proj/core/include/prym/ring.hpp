#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prym/rational.hpp"

namespace prym {

// One multiplicative generator of a truncated polynomial ring. A generator
// models a degree-2 cohomology class; `truncation` is the largest exponent
// that survives (x^{truncation+1} = 0), or nullopt for no per-generator bound.
struct Generator {
  std::string name;
  std::optional<int> truncation;

  bool operator==(const Generator&) const = default;
};

class Space;
using SpacePtr = std::shared_ptr<const Space>;

// Descriptor of an ambient space: an ordered generator list plus a bound on
// total degree (the complex dimension of the space; monomials of total
// exponent sum exceeding it vanish). The generator order is fixed at
// construction and indexes the dense exponent vectors of ClassExpr.
class Space {
 public:
  static SpacePtr make(std::vector<Generator> gens, int total_dimension);

  const std::vector<Generator>& generators() const { return gens_; }
  int total_dimension() const { return total_dim_; }
  std::size_t size() const { return gens_.size(); }

  bool has(const std::string& name) const;
  // Index of a generator in the exponent-vector order; throws if absent.
  std::size_t index_of(const std::string& name) const;

  bool operator==(const Space& other) const {
    return gens_ == other.gens_ && total_dim_ == other.total_dim_;
  }

 private:
  Space(std::vector<Generator> gens, int total_dimension);
  std::vector<Generator> gens_;
  int total_dim_;
};

// Element of the truncated polynomial ring over Q attached to a Space.
// Immutable value semantics; all operations return new objects and apply
// the truncation rules eagerly, so every ClassExpr is in normal form.
class ClassExpr {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  explicit ClassExpr(SpacePtr space);  // zero

  static ClassExpr zero(SpacePtr space) { return ClassExpr(std::move(space)); }
  static ClassExpr constant(SpacePtr space, const Rational& c);
  static ClassExpr generator(SpacePtr space, const std::string& name, int exp = 1);
  static ClassExpr monomial(SpacePtr space, const Exponents& exps, const Rational& c);

  const SpacePtr& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ClassExpr operator+(const ClassExpr& other) const;
  ClassExpr operator-(const ClassExpr& other) const;
  ClassExpr operator-() const;
  ClassExpr operator*(const ClassExpr& other) const;
  ClassExpr operator*(const Rational& c) const;
  ClassExpr pow(int e) const;

  bool operator==(const ClassExpr& other) const;

  // Coefficient of one monomial, given as a dense exponent vector or as a
  // name->exponent map (unlisted generators get exponent 0).
  Rational coefficient(const Exponents& exps) const;
  Rational coefficient(const std::map<std::string, int>& monomial) const;

  // Ring homomorphism into `target` determined by `rules`; generators
  // without a rule are carried over by name and must exist in the target.
  ClassExpr substitute(const std::map<std::string, ClassExpr>& rules,
                       SpacePtr target) const;

  // Canonical text form: terms sorted lexicographically by exponent vector,
  // each "p/q * g1^e1 g2^e2 ..." (zero exponents omitted); "0" when empty.
  std::string to_text() const;

 private:
  void add_term(const Exponents& exps, const Rational& c);
  void require_same_space(const ClassExpr& other) const;

  SpacePtr space_;
  TermMap terms_;
};

inline ClassExpr operator*(const Rational& c, const ClassExpr& e) { return e * c; }

}  // namespace prym
