#pragma once

#include <functional>
#include <map>

#include "xoph/ratfun.hpp"

namespace xoph {

/// Difference operator sum_k a_k(n) Theta^k, where Theta f(n) = f(n + 1) and
/// negative powers are allowed. Coefficients are rational functions in n kept
/// to the left of the shifts; zero coefficients are never stored, so two
/// operators are equal iff their term maps are.
class ShiftOp {
 public:
  using Terms = std::map<int, RatFun>;

  ShiftOp() = default;
  explicit ShiftOp(Terms terms);

  /// a(n) Theta^offset.
  static ShiftOp term(int offset, RatFun coeff);
  static ShiftOp shift(int offset) { return term(offset, RatFun::constant(Var::n, 1)); }
  static ShiftOp identity() { return shift(0); }
  static ShiftOp multiplication(RatFun coeff) { return term(0, std::move(coeff)); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of Theta^offset; zero if absent.
  RatFun coeff(int offset) const;
  int min_offset() const;
  int max_offset() const;

  ShiftOp& operator+=(const ShiftOp& o);
  ShiftOp& operator-=(const ShiftOp& o);
  ShiftOp& operator*=(const Rat& c);

  friend ShiftOp operator+(ShiftOp a, const ShiftOp& b) { return a += b; }
  friend ShiftOp operator-(ShiftOp a, const ShiftOp& b) { return a -= b; }
  friend ShiftOp operator*(ShiftOp a, const Rat& c) { return a *= c; }
  friend ShiftOp operator*(const Rat& c, ShiftOp a) { return a *= c; }
  friend ShiftOp operator-(ShiftOp a) { return a *= Rat(-1); }
  friend bool operator==(const ShiftOp& a, const ShiftOp& b) = default;

 private:
  void add_term(int offset, RatFun coeff);

  Terms terms_;
};

/// Q o R using a(n) Theta^j o b(n) Theta^k = a(n) b(n + j) Theta^(j + k).
ShiftOp compose(const ShiftOp& q, const ShiftOp& r);
ShiftOp operator*(const ShiftOp& q, const ShiftOp& r);
ShiftOp pow(const ShiftOp& q, unsigned e);

/// Theta^(-m) o q o Theta^m.
ShiftOp conjugate(const ShiftOp& q, int m);

/// A family of polynomials in x indexed by an integer n.
using PolyFamily = std::function<Poly(long)>;

/// sum_k a_k(n0) family(n0 + k). Throws PoleAtIndex if some a_k has a pole at
/// n0, even when the matching family member vanishes.
Poly apply(const ShiftOp& q, const PolyFamily& family, long n0);

}  // namespace xoph
