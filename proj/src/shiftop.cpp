#include "xoph/shiftop.hpp"

#include <stdexcept>

#include "xoph/errors.hpp"

namespace xoph {

ShiftOp::ShiftOp(Terms terms) {
  for (auto& [k, a] : terms) add_term(k, std::move(a));
}

ShiftOp ShiftOp::term(int offset, RatFun coeff) {
  ShiftOp out;
  out.add_term(offset, std::move(coeff));
  return out;
}

void ShiftOp::add_term(int offset, RatFun coeff) {
  if (coeff.var() != Var::n) throw std::invalid_argument("shift operator coefficients must be in n");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(offset, std::move(coeff));
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

RatFun ShiftOp::coeff(int offset) const {
  auto it = terms_.find(offset);
  return it == terms_.end() ? RatFun(Var::n) : it->second;
}

int ShiftOp::min_offset() const {
  if (terms_.empty()) throw std::logic_error("zero shift operator has no offsets");
  return terms_.begin()->first;
}

int ShiftOp::max_offset() const {
  if (terms_.empty()) throw std::logic_error("zero shift operator has no offsets");
  return terms_.rbegin()->first;
}

ShiftOp& ShiftOp::operator+=(const ShiftOp& o) {
  for (const auto& [k, a] : o.terms_) add_term(k, a);
  return *this;
}

ShiftOp& ShiftOp::operator-=(const ShiftOp& o) {
  for (const auto& [k, a] : o.terms_) add_term(k, -a);
  return *this;
}

ShiftOp& ShiftOp::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, a] : terms_) a *= c;
  return *this;
}

ShiftOp compose(const ShiftOp& q, const ShiftOp& r) {
  ShiftOp::Terms acc;
  for (const auto& [j, a] : q.terms()) {
    for (const auto& [k, b] : r.terms()) {
      RatFun c = a * b.shifted(Rat(j));
      auto [it, inserted] = acc.try_emplace(j + k, std::move(c));
      if (!inserted) it->second += c;
    }
  }
  return ShiftOp(std::move(acc));
}

ShiftOp operator*(const ShiftOp& q, const ShiftOp& r) { return compose(q, r); }

ShiftOp pow(const ShiftOp& q, unsigned e) {
  ShiftOp out = ShiftOp::identity();
  for (unsigned i = 0; i < e; ++i) out = compose(out, q);
  return out;
}

ShiftOp conjugate(const ShiftOp& q, int m) {
  if (m == 0) return q;
  return compose(compose(ShiftOp::shift(-m), q), ShiftOp::shift(m));
}

Poly apply(const ShiftOp& q, const PolyFamily& family, long n0) {
  Poly out(Var::x);
  for (const auto& [k, a] : q.terms()) {
    auto value = a(Rat(n0));
    if (!value) throw PoleAtIndex(k, n0);
    if (*value == 0) continue;
    out += family(n0 + k) * *value;
  }
  return out;
}

}  // namespace xoph
