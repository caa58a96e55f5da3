#pragma once

// Test-only generators and oracles. The oracles deliberately avoid the code
// paths they check: no Bareiss elimination, no three-term recurrence, no flat.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "xoph/bispectral.hpp"

namespace xoph::testing {

inline Poly X(std::vector<Rat> cs) { return Poly(Var::x, std::move(cs)); }
inline Poly N(std::vector<Rat> cs) { return Poly(Var::n, std::move(cs)); }
inline RatFun NR(std::vector<Rat> num, std::vector<Rat> den = {1}) { return RatFun(N(std::move(num)), N(std::move(den))); }

/// Partitions exercised by the structural properties.
inline std::vector<Partition> test_partitions() {
  return {Partition(), Partition({1}), Partition({2}), Partition({3}), Partition({1, 1}),
          Partition({1, 2}), Partition({2, 2}), Partition({1, 1, 2}), Partition({1, 1, 2, 2})};
}

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rat rat() {
    Rat r(integer(-6, 6), integer(1, 4));
    r.canonicalize();
    return r;
  }

  Rat nonzero_rat() {
    Rat r = 0;
    while (r == 0) r = rat();
    return r;
  }

  Poly poly(Var v, int max_degree) {
    std::vector<Rat> cs(integer(0, max_degree) + 1);
    for (auto& c : cs) c = integer(0, 3) == 0 ? Rat(0) : rat();
    return Poly(v, std::move(cs));
  }

  Poly nonzero_poly(Var v, int max_degree) {
    Poly p(v);
    while (p.is_zero()) p = poly(v, max_degree);
    return p;
  }

  RatFun ratfun(Var v, int max_degree) { return RatFun(poly(v, max_degree), nonzero_poly(v, max_degree)); }

  PolyDiffOp poly_diffop(int max_order, int max_degree) {
    std::vector<Poly> cs(integer(0, max_order) + 1);
    for (auto& c : cs) c = poly(Var::x, max_degree);
    return PolyDiffOp(std::move(cs));
  }

  RatDiffOp rat_diffop(int max_order, int max_degree) {
    std::vector<RatFun> cs(integer(0, max_order) + 1);
    for (auto& c : cs) c = ratfun(Var::x, max_degree);
    return RatDiffOp(std::move(cs));
  }

  ShiftOp shiftop(int max_terms, int max_offset, int max_degree) {
    ShiftOp out;
    const long terms = integer(1, max_terms);
    for (long t = 0; t < terms; ++t) {
      out += ShiftOp::term(static_cast<int>(integer(-max_offset, max_offset)), ratfun(Var::n, max_degree));
    }
    return out;
  }

 private:
  std::mt19937 rng_;
};

/// H_k = k! sum_m (-1)^m (2x)^(k-2m) / (m! (k-2m)!).
inline Poly hermite_explicit(int k) {
  std::vector<Rat> cs(k + 1);
  BigInt kf = 1;
  for (int i = 2; i <= k; ++i) kf *= i;
  for (int m = 0; 2 * m <= k; ++m) {
    BigInt mf = 1, rf = 1;
    for (int i = 2; i <= m; ++i) mf *= i;
    for (int i = 2; i <= k - 2 * m; ++i) rf *= i;
    Rat c(kf, BigInt(mf * rf));
    c.canonicalize();
    c *= Rat(BigInt(1) << (k - 2 * m));
    if (m % 2) c = -c;
    cs[k - 2 * m] = c;
  }
  return X(std::move(cs));
}

/// Determinant by the permutation (Leibniz) expansion.
inline Poly determinant_by_permutations(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total(Var::x);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Poly term = Poly::constant(Var::x, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Poly wronskian_by_permutations(const std::vector<Poly>& ps) {
  std::vector<std::vector<Poly>> m(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (const auto& p : ps) m[i].push_back(derivative(p, static_cast<unsigned>(i)));
  return determinant_by_permutations(m);
}

/// Solves g = sum_m c_m basis[m] for a basis of polynomials with pairwise
/// distinct degrees, by peeling leading terms. std::nullopt if g is not in
/// the span.
inline std::optional<std::vector<Rat>> expand_in_basis(Poly g, const std::vector<Poly>& basis) {
  std::vector<Rat> coeffs(basis.size());
  while (!g.is_zero()) {
    auto it = std::find_if(basis.begin(), basis.end(), [&](const Poly& b) { return b.degree() == g.degree(); });
    if (it == basis.end()) return std::nullopt;
    const Rat c = g.leading() / it->leading();
    coeffs[it - basis.begin()] = c;
    g -= *it * c;
  }
  return coeffs;
}

inline PolyFamily classical_family() {
  return [](long n) { return hermite(n); };
}

}  // namespace xoph::testing
