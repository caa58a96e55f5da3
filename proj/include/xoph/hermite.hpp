#pragma once

#include <optional>
#include <span>
#include <vector>

#include "xoph/diffop.hpp"
#include "xoph/partition.hpp"

namespace xoph {

/// Physicists' Hermite polynomial H_k; the zero polynomial for k < 0.
Poly hermite(long k);
/// H_0, ..., H_kmax.
std::vector<Poly> hermite_table(long kmax);

/// Determinant of a square matrix over Q[x] (fraction-free elimination).
Poly determinant(std::vector<std::vector<Poly>> rows);

/// det(d^i p_j / dx^i), rows indexed by derivative order. Wr{} = 1.
Poly wronskian(std::span<const Poly> ps);

/// eta_j = Wr{H_k1, ..., H_kj}; the full Wronskian when j is omitted.
Poly eta(const Partition& lam, std::optional<int> j = std::nullopt);

/// T(y) = y'' - 2x y'.
PolyDiffOp hermite_operator();

/// A(y) = Wr{H_k1, ..., H_kl, y}, by cofactor expansion along the y column.
PolyDiffOp op_A(const Partition& lam);
/// A_j = (eta_j / eta_{j-1}) (d - eta_j' / eta_j), 1 <= j <= l.
RatDiffOp op_A_factor(const Partition& lam, int j);
/// A_l o ... o A_1, cast back to polynomial coefficients.
PolyDiffOp op_A_factored(const Partition& lam);

/// B_j = (eta_{j-1} / eta_j) (d - 2x - eta_{j-1}' / eta_{j-1}), 1 <= j <= l.
RatDiffOp op_B_factor(const Partition& lam, int j);
/// B = B_1 o ... o B_l.
RatDiffOp op_B(const Partition& lam);

/// T_j = d^2 - 2(x + eta_j'/eta_j) d + (eta_j''/eta_j + 2x eta_j'/eta_j).
/// j = 0 is the classical operator; the default j = l is the exceptional one.
RatDiffOp op_T(const Partition& lam, std::optional<int> j = std::nullopt);

/// The exceptional Hermite family n -> A(H_{n + l - N}). Members vanish
/// exactly at the degrees missing from the DegreeSet.
class ExceptionalHermite {
 public:
  explicit ExceptionalHermite(const Partition& lam);

  Poly operator()(long n) const;
  const Partition& partition() const noexcept { return lam_; }
  const PolyDiffOp& intertwiner() const noexcept { return a_; }

 private:
  Partition lam_;
  PolyDiffOp a_;
};

Poly exceptional_hermite(const Partition& lam, long n);

}  // namespace xoph
