#include "xoph/hermite.hpp"

#include <stdexcept>

namespace xoph {

namespace {

const Poly kX = Poly::monomial(Var::x, 1, 1);

std::vector<Poly> hermite_members(const Partition& lam, int count) {
  std::vector<Poly> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(hermite(lam.indices()[i]));
  return out;
}

// Row i holds the i-th derivatives.
std::vector<std::vector<Poly>> derivative_rows(std::span<const Poly> ps, std::size_t nrows) {
  std::vector<std::vector<Poly>> rows(nrows);
  std::vector<Poly> current(ps.begin(), ps.end());
  for (std::size_t i = 0; i < nrows; ++i) {
    rows[i] = current;
    for (auto& p : current) p = derivative(p);
  }
  return rows;
}

void check_factor_index(const Partition& lam, int j) {
  if (j < 1 || j > lam.length()) throw std::out_of_range("factor index out of range");
}

}  // namespace

Poly hermite(long k) {
  if (k < 0) return Poly(Var::x);
  Poly prev = Poly::constant(Var::x, 1);
  if (k == 0) return prev;
  Poly cur = Poly::monomial(Var::x, 2, 1);
  for (long i = 1; i < k; ++i) {
    Poly next = kX * cur * Rat(2) - prev * Rat(2 * i);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Poly> hermite_table(long kmax) {
  std::vector<Poly> out;
  if (kmax < 0) return out;
  out.push_back(Poly::constant(Var::x, 1));
  if (kmax >= 1) out.push_back(Poly::monomial(Var::x, 2, 1));
  for (long i = 1; i < kmax; ++i) out.push_back(kX * out[i] * Rat(2) - out[i - 1] * Rat(2 * i));
  return out;
}

Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) return Poly::constant(Var::x, 1);

  // Bareiss: every division below is exact in Q[x].
  Rat sign = 1;
  Poly prev = Poly::constant(Var::x, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Poly(Var::x);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return m[n - 1][n - 1] * sign;
}

Poly wronskian(std::span<const Poly> ps) { return determinant(derivative_rows(ps, ps.size())); }

Poly eta(const Partition& lam, std::optional<int> j) {
  const int count = j.value_or(lam.length());
  if (count < 0 || count > lam.length()) throw std::out_of_range("eta truncation out of range");
  const auto hs = hermite_members(lam, count);
  return wronskian(hs);
}

PolyDiffOp hermite_operator() {
  return PolyDiffOp({Poly(Var::x), Poly(Var::x, {0, -2}), Poly::constant(Var::x, 1)});
}

PolyDiffOp op_A(const Partition& lam) {
  const int l = lam.length();
  const auto hs = hermite_members(lam, l);
  const auto rows = derivative_rows(hs, l + 1);

  std::vector<Poly> coeffs;
  coeffs.reserve(l + 1);
  for (int i = 0; i <= l; ++i) {
    std::vector<std::vector<Poly>> minor;
    minor.reserve(l);
    for (int r = 0; r <= l; ++r) {
      if (r != i) minor.push_back(rows[r]);
    }
    Poly c = determinant(std::move(minor));
    coeffs.push_back((i + l) % 2 == 0 ? std::move(c) : -std::move(c));
  }
  return PolyDiffOp(std::move(coeffs));
}

RatDiffOp op_A_factor(const Partition& lam, int j) {
  check_factor_index(lam, j);
  const Poly prev = eta(lam, j - 1);
  const Poly cur = eta(lam, j);
  return RatDiffOp({RatFun(-derivative(cur), prev), RatFun(cur, prev)});
}

PolyDiffOp op_A_factored(const Partition& lam) {
  RatDiffOp acc = RatDiffOp::identity();
  for (int j = 1; j <= lam.length(); ++j) acc = compose(op_A_factor(lam, j), acc);
  return to_polynomial(acc);
}

RatDiffOp op_B_factor(const Partition& lam, int j) {
  check_factor_index(lam, j);
  const Poly prev = eta(lam, j - 1);
  const Poly cur = eta(lam, j);
  return RatDiffOp({RatFun(-(kX * prev * Rat(2) + derivative(prev)), cur), RatFun(prev, cur)});
}

RatDiffOp op_B(const Partition& lam) {
  RatDiffOp acc = RatDiffOp::identity();
  for (int j = 1; j <= lam.length(); ++j) acc = compose(acc, op_B_factor(lam, j));
  return acc;
}

RatDiffOp op_T(const Partition& lam, std::optional<int> j) {
  const Poly e = eta(lam, j);
  const Poly d1 = derivative(e);
  const Poly d2 = derivative(d1);
  return RatDiffOp({RatFun(d2 + kX * d1 * Rat(2), e), RatFun((kX * e + d1) * Rat(-2), e),
                    RatFun::constant(Var::x, 1)});
}

ExceptionalHermite::ExceptionalHermite(const Partition& lam) : lam_(lam), a_(op_A(lam)) {}

Poly ExceptionalHermite::operator()(long n) const {
  const long j = n + lam_.length() - lam_.weight();
  if (j < 0) return Poly(Var::x);
  return apply(a_, hermite(j));
}

Poly exceptional_hermite(const Partition& lam, long n) { return ExceptionalHermite(lam)(n); }

}  // namespace xoph
