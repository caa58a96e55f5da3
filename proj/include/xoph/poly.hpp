#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "xoph/rational.hpp"

namespace xoph {

/// Which indeterminate a polynomial is written in. Polynomials in x act on
/// functions; polynomials in n are coefficients of shift operators.
enum class Var { x, n };

char var_name(Var v) noexcept;

/// Dense univariate polynomial with exact rational coefficients.
///
/// coeffs()[i] is the coefficient of v^i. Trailing zeros are never stored, so
/// the zero polynomial has an empty coefficient vector and degree -1.
/// Arithmetic between polynomials in different variables throws
/// std::invalid_argument.
class Poly {
 public:
  explicit Poly(Var v = Var::x) : var_(v) {}
  Poly(Var v, std::vector<Rat> coeffs);

  static Poly constant(Var v, const Rat& c);
  static Poly monomial(Var v, const Rat& c, std::size_t degree);
  /// The polynomial v + shift.
  static Poly linear(Var v, const Rat& shift);

  Var var() const noexcept { return var_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  std::span<const Rat> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of v^i; zero beyond the degree.
  const Rat& operator[](std::size_t i) const;
  const Rat& leading() const;

  Rat operator()(const Rat& at) const;
  /// p(v + s).
  Poly shifted(const Rat& s) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  void require_same_var(const Poly& o) const;

  Var var_;
  std::vector<Rat> coeffs_;
};

Poly derivative(const Poly& p);
Poly derivative(const Poly& p, unsigned order);
/// Antiderivative with zero constant term.
Poly integrate0(const Poly& p);

/// Euclidean division; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// The quotient when b divides a exactly, otherwise std::nullopt.
std::optional<Poly> try_divide_exact(const Poly& a, const Poly& b);
/// As try_divide_exact, but throws NotDivisible.
Poly divide_exact(const Poly& a, const Poly& b);

Poly monic(const Poly& p);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
Poly pow(const Poly& p, unsigned e);

/// Scales p to integer coefficients with content 1 and positive leading
/// coefficient.
Poly primitive_part(const Poly& p);

/// Rising factorial (n + shift)(n + shift + 1)...(n + shift + count - 1) in n.
Poly pochhammer(long shift, unsigned count);

}  // namespace xoph
