#pragma once

#include <optional>

#include "xoph/poly.hpp"

namespace xoph {

/// Quotient of two polynomials in one variable, always stored reduced:
/// gcd(num, den) = 1 and den monic. Equal functions therefore have equal
/// representations and operator== is structural.
class RatFun {
 public:
  explicit RatFun(Var v = Var::x) : num_(v), den_(Poly::constant(v, 1)) {}
  RatFun(Poly p);  // NOLINT(google-explicit-constructor): polynomials embed in the field
  /// Throws std::domain_error when den is zero.
  RatFun(Poly num, Poly den);

  static RatFun constant(Var v, const Rat& c) { return RatFun(Poly::constant(v, c)); }

  Var var() const noexcept { return num_.var(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  /// Value at a point, or std::nullopt at a pole.
  std::optional<Rat> operator()(const Rat& at) const;
  /// r(v + s).
  RatFun shifted(const Rat& s) const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  RatFun& operator*=(const Rat& c);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend RatFun operator*(RatFun a, const Rat& c) { return a *= c; }
  friend RatFun operator*(const Rat& c, RatFun a) { return a *= c; }
  friend RatFun operator-(RatFun a);

  friend bool operator==(const RatFun& a, const RatFun& b) = default;

 private:
  struct Reduced {};
  RatFun(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  Poly num_;
  Poly den_;
};

RatFun derivative(const RatFun& r);

}  // namespace xoph
