#include <doctest.h>

#include "support.hpp"

using namespace xoph;
using namespace xoph::testing;

namespace {

PolyDiffOp D() { return PolyDiffOp::derivation(); }
PolyDiffOp mul(Poly p) { return PolyDiffOp::multiplication(std::move(p)); }

}  // namespace

TEST_SUITE("diffop") {
  TEST_CASE("Leibniz base case") {
    CHECK(D() * mul(X({0, 1})) == PolyDiffOp({X({1}), X({0, 1})}));
  }

  TEST_CASE("square of a first-order operator") {
    const PolyDiffOp q = D() - mul(X({0, 2}));
    CHECK(q * q == PolyDiffOp({X({-2, 0, 4}), X({0, -4}), X({1})}));
  }

  TEST_CASE("B o f o A for (1,1) has polynomial coefficients") {
    const Partition lam({1, 1});
    const RatDiffOp raw =
        compose(op_B(lam), compose(RatDiffOp::multiplication(RatFun(X({0, 3, 0, 2}))), to_rational(op_A(lam))));
    const PolyDiffOp q = to_polynomial(raw);
    CHECK(q.order() == 4);
    CHECK(q.coeffs()[4] == X({0, 3, 0, 2}));
    CHECK(q.coeffs()[0] == -(X({0, 1}) * X({24, 0, -16})));
  }

  TEST_CASE("application") {
    CHECK(apply(hermite_operator(), hermite(3)) == hermite(3) * Rat(-6));
    Gen g(11);
    for (int i = 0; i < 20; ++i) {
      const Poly p = g.poly(Var::x, 6);
      CHECK(apply(PolyDiffOp::identity(), p) == p);
    }
    const Partition lam({1, 1});
    const Poly h3 = exceptional_hermite(lam, 3);
    CHECK(apply(op_T(lam), h3) == RatFun(h3 * Rat(-2)));
  }

  TEST_CASE("polynomial cast") {
    CHECK_THROWS_AS(to_polynomial(RatDiffOp::multiplication(RatFun(X({1}), X({0, 1})))), DenominatorNotCleared);
    const PolyDiffOp q = PolyDiffOp({X({1, 2}), X({}), X({0, 0, 3})});
    CHECK(to_polynomial(to_rational(q)) == q);
    CHECK(q.order() == 2);
    CHECK(PolyDiffOp().order() == -1);
    CHECK((q - q).is_zero());
  }

  TEST_CASE("composition is associative and bilinear") {
    Gen g(12);
    for (int i = 0; i < 60; ++i) {
      const PolyDiffOp a = g.poly_diffop(3, 4), b = g.poly_diffop(3, 4), c = g.poly_diffop(3, 4);
      const Rat s = g.rat();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * s) * b == (a * b) * s);
      CHECK(a * (b * s) == (a * b) * s);
    }
  }

  TEST_CASE("rational composition is associative") {
    Gen g(13);
    for (int i = 0; i < 15; ++i) {
      const RatDiffOp a = g.rat_diffop(2, 2), b = g.rat_diffop(2, 2), c = g.rat_diffop(2, 2);
      CHECK((a * b) * c == a * (b * c));
    }
  }

  TEST_CASE("composition matches successive application") {
    Gen g(14);
    for (int i = 0; i < 100; ++i) {
      const PolyDiffOp a = g.poly_diffop(3, 4), b = g.poly_diffop(3, 4);
      const Poly p = g.poly(Var::x, 7);
      CHECK(apply(a * b, p) == apply(a, apply(b, p)));
    }
    for (int i = 0; i < 20; ++i) {
      const RatDiffOp a = g.rat_diffop(2, 2), b = g.rat_diffop(2, 2);
      const Poly p = g.poly(Var::x, 5);
      const RatFun lhs = apply(a * b, p);
      RatFun rhs(Var::x);
      const RatFun bp = apply(b, p);
      // a applied to the rational function b(p)
      RatFun d = bp;
      for (const auto& c : a.coeffs()) {
        rhs += c * d;
        d = derivative(d);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_SUITE("shiftop") {
  TEST_CASE("Delta o Gamma") {
    const ShiftOp expected = ShiftOp::term(0, NR({1, 1})) + ShiftOp::term(-2, NR({0, -2, 2}));
    CHECK(delta_op() * gamma_op() == expected);
    CHECK(gamma_op() * delta_op() + ShiftOp::identity() == expected);
  }

  TEST_CASE("inverse shifts cancel") {
    for (int m = -4; m <= 4; ++m) CHECK(ShiftOp::shift(m) * ShiftOp::shift(-m) == ShiftOp::identity());
  }

  TEST_CASE("commutation rule") {
    const RatFun a = NR({1}, {2, 1});
    CHECK(ShiftOp::shift(3) * ShiftOp::multiplication(a) == ShiftOp::term(3, a.shifted(Rat(3))));
  }

  TEST_CASE("normal form") {
    ShiftOp q = ShiftOp::term(2, NR({1, 1})) + ShiftOp::term(2, NR({-1, -1}));
    CHECK(q.is_zero());
    CHECK(q.terms().empty());
    CHECK(ShiftOp::term(5, RatFun(Var::n)).terms().empty());
    CHECK_THROWS_AS(ShiftOp::term(0, RatFun(X({1}))), std::invalid_argument);
    CHECK(ShiftOp::term(1, NR({1, 1})) != ShiftOp::term(2, NR({1, 1})));
  }

  TEST_CASE("application to a family") {
    CHECK(apply(delta_op(), classical_family(), 1) == X({0, 1}) * hermite(1));
    CHECK(apply(ShiftOp(), classical_family(), 4).is_zero());
    const ShiftOp pole = ShiftOp::term(-1, NR({1}, {-2, 1}));
    try {
      (void)apply(pole, classical_family(), 2);
      FAIL("expected a pole");
    } catch (const PoleAtIndex& e) {
      CHECK(e.offset() == -1);
      CHECK(e.index() == 2);
    }
  }

  TEST_CASE("pole is reported even against a vanishing member") {
    const PolyFamily zero = [](long) { return Poly(Var::x); };
    CHECK_THROWS_AS(apply(ShiftOp::term(0, NR({1}, {0, 1})), zero, 0), PoleAtIndex);
  }

  TEST_CASE("conjugation") {
    const RatFun a = NR({3, 1}, {1, 0, 1});
    const ShiftOp q = ShiftOp::term(2, a);
    for (int m = -3; m <= 3; ++m) {
      const ShiftOp direct = ShiftOp::shift(-m) * q * ShiftOp::shift(m);
      CHECK(conjugate(q, m) == direct);
      CHECK(conjugate(q, m) == ShiftOp::term(2, a.shifted(Rat(-m))));
    }
    Gen g(15);
    const ShiftOp r = g.shiftop(4, 3, 2);
    CHECK(conjugate(r, 0) == r);
  }

  TEST_CASE("composition is associative") {
    Gen g(16);
    for (int i = 0; i < 60; ++i) {
      const ShiftOp a = g.shiftop(3, 3, 2), b = g.shiftop(3, 3, 2), c = g.shiftop(3, 3, 2);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }

  TEST_CASE("application respects composition on the classical family") {
    Gen g(17);
    const auto h = classical_family();
    for (int i = 0; i < 20; ++i) {
      // Polynomial coefficients avoid poles at the sample points.
      ShiftOp a, b;
      for (int t = 0; t < 3; ++t) {
        a += ShiftOp::term(static_cast<int>(g.integer(-2, 2)), RatFun(g.poly(Var::n, 2)));
        b += ShiftOp::term(static_cast<int>(g.integer(-2, 2)), RatFun(g.poly(Var::n, 2)));
      }
      const PolyFamily bh = [&](long m) { return apply(b, h, m); };
      for (long n = 0; n <= 15; ++n) CHECK(apply(a * b, h, n) == apply(a, bh, n));
    }
  }
}
