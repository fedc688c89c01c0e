#include "prym/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace prym {

MPoly MPoly::constant(int nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index");
  MPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(nvars_);
  Exponents sum(nvars_, 0);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) sum[i] = ea[i] + eb[i];
      r.add_term(sum, ca * cb);
    }
  return r;
}

RatFn::RatFn(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
}

RatFn RatFn::operator+(const RatFn& o) const {
  return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFn RatFn::operator-(const RatFn& o) const {
  return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFn RatFn::operator*(const RatFn& o) const {
  return RatFn(num_ * o.num_, den_ * o.den_);
}
RatFn RatFn::operator/(const RatFn& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  return RatFn(num_ * o.den_, den_ * o.num_);
}

namespace {

inline bool entry_is_zero(const Rational& x) { return x == 0; }
inline bool entry_is_zero(const RatFn& x) { return x.is_zero(); }

template <class F>
int rank_impl(std::vector<std::vector<F>>& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && entry_is_zero(m[pivot][col])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (entry_is_zero(m[r][col])) continue;
      F factor = m[r][col] / m[row][col];
      for (std::size_t c2 = col; c2 < cols; ++c2)
        m[r][c2] = m[r][c2] - factor * m[row][c2];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_rational(std::vector<std::vector<Rational>> m) { return rank_impl(m); }
int rank_ratfn(std::vector<std::vector<RatFn>> m) { return rank_impl(m); }

}  // namespace prym
