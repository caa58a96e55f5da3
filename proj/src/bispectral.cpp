#include "xoph/bispectral.hpp"

#include <stdexcept>

namespace xoph {

namespace {

RatFun n_poly(std::vector<Rat> coeffs) { return RatFun(Poly(Var::n, std::move(coeffs))); }

// (n + shift)_count, with the convention (X)_{-1} = 1 / (X - 1).
RatFun rising(long shift, int count) {
  if (count >= 0) return RatFun(pochhammer(shift, static_cast<unsigned>(count)));
  if (count == -1) return RatFun(Poly::constant(Var::n, 1), Poly::linear(Var::n, Rat(shift - 1)));
  throw std::invalid_argument("rising factorial of length below -1");
}

}  // namespace

ShiftOp delta_op() {
  return ShiftOp::term(1, RatFun::constant(Var::n, Rat(1, 2))) + ShiftOp::term(-1, n_poly({0, 1}));
}

ShiftOp gamma_op() { return ShiftOp::term(-1, n_poly({0, 2})); }

ShiftOp eval_at_delta(const Poly& p) {
  const ShiftOp delta = delta_op();
  ShiftOp acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = compose(acc, delta);
    acc += ShiftOp::multiplication(RatFun::constant(Var::n, p[i]));
  }
  return acc;
}

ShiftOp flat(const PolyDiffOp& q) {
  const ShiftOp gamma = gamma_op();
  ShiftOp out;
  ShiftOp gamma_power = ShiftOp::identity();
  for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
    if (j > 0) gamma_power = compose(gamma_power, gamma);
    if (q.coeffs()[j].is_zero()) continue;
    out += compose(gamma_power, eval_at_delta(q.coeffs()[j]));
  }
  return out;
}

ShiftOp flat(const RatDiffOp& q) { return flat(to_polynomial(q)); }

Poly pi(const Partition& lam) {
  Poly out = Poly::constant(Var::n, 1);
  for (int k : lam.indices()) out *= Poly(Var::n, {Rat(2 * k), Rat(-2)});
  return out;
}

bool is_stabilizer(const Partition& lam, const Poly& f) {
  if (f.var() != Var::x) return false;
  return try_divide_exact(derivative(f), eta(lam)).has_value();
}

Poly minimal_stabilizer(const Partition& lam) { return integrate0(eta(lam)); }

PolyDiffOp bfa(const Partition& lam, const Poly& f) {
  const RatDiffOp fa = compose(RatDiffOp::multiplication(RatFun(f)), to_rational(op_A(lam)));
  return to_polynomial(compose(op_B(lam), fa));
}

Recurrence recurrence(const Partition& lam, const Poly& f) {
  const ShiftOp flat_bfa = flat(bfa(lam, f));
  const RatFun inv_pi(Poly::constant(Var::n, 1), pi(lam));
  const ShiftOp divided = compose(flat_bfa, ShiftOp::multiplication(inv_pi));
  return Recurrence{lam, f, conjugate(divided, lam.weight() - lam.length())};
}

Recurrence one_step_recurrence(int k) {
  if (k < 1) throw std::invalid_argument("one-step recurrence needs k >= 1");
  const RatFun prefactor = n_poly({Rat(1 - 2 * k), 1});
  ShiftOp op;
  for (int j = 0; j <= k + 1; ++j) {
    Rat scale(binomial(k + 1, j) * (BigInt(1) << j));
    op += ShiftOp::term(k + 1 - 2 * j, prefactor * rising(3 - k - j, j - 1) * scale);
  }
  return Recurrence{Partition({k}), hermite(k + 1), std::move(op)};
}

ShiftOp hermite_in_delta(int k) {
  if (k < 0) throw std::invalid_argument("negative Hermite index");
  ShiftOp op;
  for (int j = 0; j <= k; ++j) {
    Rat scale(binomial(k, j) * (BigInt(1) << j));
    op += ShiftOp::term(k - 2 * j, RatFun(pochhammer(1 - j, j)) * scale);
  }
  return op;
}

}  // namespace xoph
