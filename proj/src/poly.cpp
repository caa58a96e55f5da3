#include "xoph/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "xoph/errors.hpp"

namespace xoph {

namespace {
const Rat kZero{0};
}

char var_name(Var v) noexcept { return v == Var::x ? 'x' : 'n'; }

Poly::Poly(Var v, std::vector<Rat> coeffs) : var_(v), coeffs_(std::move(coeffs)) {
  // Callers may build mpq values from raw num/den pairs.
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::constant(Var v, const Rat& c) { return Poly(v, {c}); }

Poly Poly::monomial(Var v, const Rat& c, std::size_t degree) {
  if (c == 0) return Poly(v);
  std::vector<Rat> cs(degree + 1);
  cs[degree] = c;
  return Poly(v, std::move(cs));
}

Poly Poly::linear(Var v, const Rat& shift) { return Poly(v, {shift, Rat(1)}); }

const Rat& Poly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const Rat& Poly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

Rat Poly::operator()(const Rat& at) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::shifted(const Rat& s) const {
  if (s == 0 || is_constant()) return *this;
  // Taylor shift by repeated synthetic division.
  std::vector<Rat> c = coeffs_;
  const std::size_t m = c.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = m - 1; j > i; --j) c[j - 1] += s * c[j];
  }
  return Poly(var_, std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::require_same_var(const Poly& o) const {
  if (var_ != o.var_) throw std::invalid_argument("polynomials in different variables");
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_var(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_var(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_var(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.var_);
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.var_, std::move(out));
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return Poly(p.var());
  std::vector<Rat> out(p.degree());
  for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p[i] * i;
  return Poly(p.var(), std::move(out));
}

Poly derivative(const Poly& p, unsigned order) {
  Poly out = p;
  for (unsigned i = 0; i < order && !out.is_zero(); ++i) out = derivative(out);
  return out;
}

Poly integrate0(const Poly& p) {
  if (p.is_zero()) return p;
  std::vector<Rat> out(p.degree() + 2);
  for (int i = 0; i <= p.degree(); ++i) out[i + 1] = p[i] / (i + 1);
  return Poly(p.var(), std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.var() != b.var()) throw std::invalid_argument("polynomials in different variables");
  if (a.degree() < b.degree()) return {Poly(a.var()), a};

  std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rat> quo(a.degree() - b.degree() + 1);
  const int db = b.degree();
  const Rat& lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rat q = rem[k + db] / lead;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * b[j];
    quo[k] = std::move(q);
  }
  rem.resize(db);
  return {Poly(a.var(), std::move(quo)), Poly(a.var(), std::move(rem))};
}

std::optional<Poly> try_divide_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return std::move(q);
}

Poly divide_exact(const Poly& a, const Poly& b) {
  auto q = try_divide_exact(a, b);
  if (!q) throw NotDivisible("polynomial division leaves a remainder");
  return *std::move(q);
}

Poly monic(const Poly& p) {
  if (p.is_zero() || p.leading() == 1) return p;
  return p * Rat(1 / p.leading());
}

Poly gcd(Poly a, Poly b) {
  // Euclid on primitive integer remainders keeps coefficient growth in check.
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : primitive_part(r);
  }
  return monic(a);
}

Poly pow(const Poly& p, unsigned e) {
  Poly out = Poly::constant(p.var(), 1);
  Poly base = p;
  while (e) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return out;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  BigInt den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  BigInt num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    BigInt scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading() < 0) scale = -scale;
  return p * scale;
}

Poly pochhammer(long shift, unsigned count) {
  Poly out = Poly::constant(Var::n, 1);
  for (unsigned i = 0; i < count; ++i) out *= Poly::linear(Var::n, Rat(shift + static_cast<long>(i)));
  return out;
}

}  // namespace xoph
