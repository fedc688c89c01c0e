#include "prym/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace prym {

Space::Space(std::vector<Generator> gens, int total_dimension)
    : gens_(std::move(gens)), total_dim_(total_dimension) {
  if (total_dim_ < 0) throw std::invalid_argument("negative total dimension");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].truncation && *gens_[i].truncation < 0)
      throw std::invalid_argument("negative truncation exponent");
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i].name == gens_[j].name)
        throw std::invalid_argument("duplicate generator name: " + gens_[i].name);
  }
}

SpacePtr Space::make(std::vector<Generator> gens, int total_dimension) {
  return SpacePtr(new Space(std::move(gens), total_dimension));
}

bool Space::has(const std::string& name) const {
  for (const auto& g : gens_)
    if (g.name == name) return true;
  return false;
}

std::size_t Space::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  throw std::invalid_argument("unknown generator: " + name);
}

ClassExpr::ClassExpr(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw std::invalid_argument("null space");
}

ClassExpr ClassExpr::constant(SpacePtr space, const Rational& c) {
  ClassExpr e(std::move(space));
  e.add_term(Exponents(e.space_->size(), 0), c);
  return e;
}

ClassExpr ClassExpr::generator(SpacePtr space, const std::string& name, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  ClassExpr e(std::move(space));
  Exponents exps(e.space_->size(), 0);
  exps[e.space_->index_of(name)] = exp;
  e.add_term(exps, Rational(1));
  return e;
}

ClassExpr ClassExpr::monomial(SpacePtr space, const Exponents& exps, const Rational& c) {
  ClassExpr e(std::move(space));
  if (exps.size() != e.space_->size())
    throw std::invalid_argument("exponent vector length mismatch");
  e.add_term(exps, c);
  return e;
}

void ClassExpr::add_term(const Exponents& exps, const Rational& c) {
  if (c == 0) return;
  long total = 0;
  const auto& gens = space_->generators();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw std::invalid_argument("negative exponent");
    if (gens[i].truncation && exps[i] > *gens[i].truncation) return;
    total += exps[i];
  }
  if (total > space_->total_dimension()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ClassExpr::require_same_space(const ClassExpr& other) const {
  if (!(*space_ == *other.space_))
    throw std::invalid_argument("operands live on different spaces");
}

ClassExpr ClassExpr::operator+(const ClassExpr& other) const {
  require_same_space(other);
  ClassExpr r = *this;
  for (const auto& [e, c] : other.terms_) r.add_term(e, c);
  return r;
}

ClassExpr ClassExpr::operator-() const {
  ClassExpr r(space_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ClassExpr ClassExpr::operator-(const ClassExpr& other) const { return *this + (-other); }

ClassExpr ClassExpr::operator*(const ClassExpr& other) const {
  require_same_space(other);
  ClassExpr r(space_);
  Exponents sum(space_->size(), 0);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      r.add_term(sum, ca * cb);
    }
  }
  return r;
}

ClassExpr ClassExpr::operator*(const Rational& c) const {
  ClassExpr r(space_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

ClassExpr ClassExpr::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  ClassExpr acc = ClassExpr::constant(space_, Rational(1));
  ClassExpr base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

bool ClassExpr::operator==(const ClassExpr& other) const {
  return *space_ == *other.space_ && terms_ == other.terms_;
}

Rational ClassExpr::coefficient(const Exponents& exps) const {
  if (exps.size() != space_->size())
    throw std::invalid_argument("exponent vector length mismatch");
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ClassExpr::coefficient(const std::map<std::string, int>& monomial) const {
  Exponents exps(space_->size(), 0);
  for (const auto& [name, e] : monomial) exps[space_->index_of(name)] = e;
  return coefficient(exps);
}

ClassExpr ClassExpr::substitute(const std::map<std::string, ClassExpr>& rules,
                                SpacePtr target) const {
  for (const auto& [name, image] : rules) {
    (void)space_->index_of(name);  // rule keys must name source generators
    if (!(*image.space() == *target))
      throw std::invalid_argument("substitution image not on target space");
  }
  ClassExpr result(target);
  const auto& gens = space_->generators();
  for (const auto& [exps, c] : terms_) {
    ClassExpr term = ClassExpr::constant(target, c);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      auto it = rules.find(gens[i].name);
      ClassExpr factor = (it != rules.end())
                             ? it->second
                             : ClassExpr::generator(target, gens[i].name);
      term = term * factor.pow(exps[i]);
    }
    result = result + term;
  }
  return result;
}

std::string ClassExpr::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  const auto& gens = space_->generators();
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rational_str(c);
    bool any = false;
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > 0) {
        os << (any ? " " : " * ") << gens[i].name << "^" << exps[i];
        any = true;
      }
  }
  return os.str();
}

}  // namespace prym
