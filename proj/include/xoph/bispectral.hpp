#pragma once

#include <vector>

#include "xoph/hermite.hpp"
#include "xoph/shiftop.hpp"

namespace xoph {

/// Delta = 1/2 Theta + n Theta^-1, realising multiplication by x on H_n.
ShiftOp delta_op();
/// Gamma = 2n Theta^-1, realising d/dx on H_n.
ShiftOp gamma_op();

/// p(Delta) by Horner's scheme.
ShiftOp eval_at_delta(const Poly& p);

/// The anti-isomorphism C[x, d] -> C[Delta, Gamma], x^i d^j -> Gamma^j Delta^i.
/// flat(Q) acts on the classical family exactly as Q does, and
/// flat(Q o R) = flat(R) o flat(Q).
ShiftOp flat(const PolyDiffOp& q);
/// Rejects operators with non-polynomial coefficients (DenominatorNotCleared).
ShiftOp flat(const RatDiffOp& q);

/// pi(n) = prod_i (2k_i - 2n), the eigenvalue of B o A on H_n.
Poly pi(const Partition& lam);

/// True when eta divides f'; such f multiply the exceptional span into itself.
bool is_stabilizer(const Partition& lam, const Poly& f);
/// The antiderivative of eta vanishing at 0 (degree N + 1, not rescaled).
Poly minimal_stabilizer(const Partition& lam);

/// B o f o A as an operator with polynomial coefficients. Throws
/// DenominatorNotCleared when f is not in the stabilizer.
PolyDiffOp bfa(const Partition& lam, const Poly& f);

/// A difference operator in n with f(x) hhat(n, x) = sum_k a_k(n) hhat(n + k, x).
struct Recurrence {
  Partition partition;
  Poly f{Var::x};
  ShiftOp op;

  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

/// Theta^(l-N) o flat(B o f o A) o 1/pi(n) o Theta^(N-l).
Recurrence recurrence(const Partition& lam, const Poly& f);

/// Closed form for partition (k), f = H_{k+1}:
///   (n - 2k + 1) sum_{j=0}^{k+1} 2^j C(k+1, j) (n + 3 - k - j)_{j-1} Theta^{k+1-2j}
/// with (X)_{-1} = 1 / (X - 1).
Recurrence one_step_recurrence(int k);

/// Closed form of H_k(Delta): sum_j 2^j C(k, j) (n - j + 1)_j Theta^{k - 2j}.
ShiftOp hermite_in_delta(int k);

struct Mismatch {
  long n;
  Poly expected;
  Poly got;
};

struct PoleIncident {
  int offset;
  long n;
};

struct VerificationReport {
  std::vector<long> checked;
  std::vector<Mismatch> failures;
  std::vector<PoleIncident> poles;

  bool verified() const noexcept { return failures.empty(); }
  /// Verified and no index had to be skipped because of a pole.
  bool clean() const noexcept { return failures.empty() && poles.empty(); }
};

/// Checks rec.op applied to the exceptional family against f * hhat(n) at every
/// permitted degree n <= n_max, by exact polynomial comparison. Indices are
/// checked concurrently; the report is ordered by n.
VerificationReport verify_recurrence(const Recurrence& rec, long n_max);

}  // namespace xoph
