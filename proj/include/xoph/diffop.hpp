#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <vector>

#include "xoph/errors.hpp"
#include "xoph/ratfun.hpp"

namespace xoph {

/// Coefficient rings a differential operator in x may live over.
template <class C>
concept DiffCoeff = std::same_as<C, Poly> || std::same_as<C, RatFun>;

/// Linear differential operator sum_j c_j(x) d^j/dx^j in normal form
/// (multiplications to the left of derivatives).
///
/// The coefficient ring is part of the type: DiffOp<Poly> is the Weyl algebra
/// C[x, d], DiffOp<RatFun> its localisation. The highest stored coefficient is
/// always nonzero; the zero operator stores nothing and has order -1.
template <DiffCoeff C>
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static DiffOp multiplication(C c) { return DiffOp(std::vector<C>{std::move(c)}); }
  static DiffOp identity() { return multiplication(C(Poly::constant(Var::x, 1))); }
  static DiffOp scalar(const Rat& c) { return multiplication(C(Poly::constant(Var::x, c))); }
  /// d^order/dx^order.
  static DiffOp derivation(std::size_t order = 1) {
    std::vector<C> cs(order + 1, C(Poly(Var::x)));
    cs[order] = C(Poly::constant(Var::x, 1));
    return DiffOp(std::move(cs));
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<C>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of d^j; zero beyond the order.
  C coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : C(Poly(Var::x)); }

  DiffOp& operator+=(const DiffOp& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(Poly(Var::x)));
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    trim();
    return *this;
  }
  DiffOp& operator-=(const DiffOp& o) { return *this += -o; }
  DiffOp& operator*=(const Rat& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator-(DiffOp a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend DiffOp operator*(DiffOp a, const Rat& c) { return a *= c; }
  friend DiffOp operator*(const Rat& c, DiffOp a) { return a *= c; }
  friend bool operator==(const DiffOp& a, const DiffOp& b) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

using PolyDiffOp = DiffOp<Poly>;
using RatDiffOp = DiffOp<RatFun>;

/// Q o R, brought to normal form with the Leibniz rule
/// d^i o b = sum_s C(i, s) b^(s) d^(i-s).
template <DiffCoeff C>
DiffOp<C> compose(const DiffOp<C>& q, const DiffOp<C>& r) {
  if (q.is_zero() || r.is_zero()) return {};
  const std::size_t qn = q.coeffs().size();
  const std::size_t rn = r.coeffs().size();

  // derivs[j][s] = s-th derivative of r's j-th coefficient
  std::vector<std::vector<C>> derivs(rn);
  for (std::size_t j = 0; j < rn; ++j) {
    derivs[j].reserve(qn);
    derivs[j].push_back(r.coeffs()[j]);
    for (std::size_t s = 1; s < qn; ++s) derivs[j].push_back(derivative(derivs[j].back()));
  }

  std::vector<C> out(qn + rn - 1, C(Poly(Var::x)));
  for (std::size_t i = 0; i < qn; ++i) {
    const C& a = q.coeffs()[i];
    if (a.is_zero()) continue;
    for (std::size_t s = 0; s <= i; ++s) {
      const Rat binom(binomial(i, s));
      for (std::size_t j = 0; j < rn; ++j) {
        if (derivs[j][s].is_zero()) continue;
        out[i - s + j] += a * derivs[j][s] * binom;
      }
    }
  }
  return DiffOp<C>(std::move(out));
}

template <DiffCoeff C>
DiffOp<C> operator*(const DiffOp<C>& q, const DiffOp<C>& r) {
  return compose(q, r);
}

/// sum_j c_j p^(j). Polynomial operators return a polynomial, rational
/// operators a reduced rational function.
template <DiffCoeff C>
C apply(const DiffOp<C>& q, const Poly& p) {
  C out{Poly(Var::x)};
  Poly dp = p;
  for (const auto& c : q.coeffs()) {
    if (dp.is_zero()) break;
    if (!c.is_zero()) out += c * C(dp);
    dp = derivative(dp);
  }
  return out;
}

inline RatDiffOp to_rational(const PolyDiffOp& q) {
  std::vector<RatFun> cs(q.coeffs().begin(), q.coeffs().end());
  return RatDiffOp(std::move(cs));
}

/// Checked cast into C[x, d]. Throws DenominatorNotCleared if a coefficient
/// is not a polynomial.
inline PolyDiffOp to_polynomial(const RatDiffOp& q) {
  std::vector<Poly> cs;
  cs.reserve(q.coeffs().size());
  for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
    const RatFun& c = q.coeffs()[j];
    if (!c.is_polynomial()) {
      throw DenominatorNotCleared("coefficient of d^" + std::to_string(j) + " is not a polynomial");
    }
    cs.push_back(c.num());
  }
  return PolyDiffOp(std::move(cs));
}

}  // namespace xoph
