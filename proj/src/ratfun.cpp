#include "xoph/ratfun.hpp"

#include <stdexcept>

namespace xoph {

RatFun::RatFun(Poly p) : num_(std::move(p)), den_(Poly::constant(num_.var(), 1)) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.var() != den_.var()) throw std::invalid_argument("polynomials in different variables");
  reduce();
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.var(), 1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  const Rat lead = den_.leading();
  if (lead != 1) {
    const Rat inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

std::optional<Rat> RatFun::operator()(const Rat& at) const {
  Rat d = den_(at);
  if (d == 0) return std::nullopt;
  return Rat(num_(at) / d);
}

RatFun RatFun::shifted(const Rat& s) const {
  // Translation preserves coprimality and leading coefficients.
  return RatFun(num_.shifted(s), den_.shifted(s), Reduced{});
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) reduce();
    else if (num_.is_zero()) den_ = Poly::constant(num_.var(), 1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel first so the products stay small.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n1 = g1.degree() > 0 ? divide_exact(num_, g1) : num_;
  Poly d2 = g1.degree() > 0 ? divide_exact(o.den_, g1) : o.den_;
  Poly n2 = g2.degree() > 0 ? divide_exact(o.num_, g2) : o.num_;
  Poly d1 = g2.degree() > 0 ? divide_exact(den_, g2) : den_;
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.var(), 1);
    return *this;
  }
  const Rat inv = 1 / den_.leading();
  num_ *= inv;
  den_ *= inv;
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  return *this *= RatFun(o.den_, o.num_);
}

RatFun& RatFun::operator*=(const Rat& c) {
  num_ *= c;
  if (num_.is_zero()) den_ = Poly::constant(num_.var(), 1);
  return *this;
}

RatFun operator-(RatFun a) {
  a.num_ = -a.num_;
  return a;
}

RatFun derivative(const RatFun& r) {
  if (r.is_polynomial()) return RatFun(derivative(r.num()) * Rat(1 / r.den().leading()));
  return RatFun(derivative(r.num()) * r.den() - r.num() * derivative(r.den()), r.den() * r.den());
}

}  // namespace xoph
