#pragma once

#include <string>
#include <vector>

#include "xoph/bispectral.hpp"

namespace xoph {

enum class Style { text, latex };

/// Terms in ascending degree, e.g. "4 + 8x^2" or "4 + 8 x^{2}".
std::string render(const Poly& p, Style style = Style::text);

/// A polynomial in n split as c * prod (n + shift)_count * rest, where the
/// runs collect integer roots into maximal strings of consecutive values.
/// Best effort: roots beyond the search bound stay inside rest.
struct FactoredPoly {
  Rat constant;
  struct Run {
    long shift;
    unsigned count;
  };
  std::vector<Run> runs;
  Poly rest{Var::n};  // primitive integer coefficients, no integer roots found
};

FactoredPoly factor_integer_roots(const Poly& p);

/// Rational function in n with Pochhammer runs, e.g. "1/4 (n-2)_2 / (n+1)_2".
std::string render_factored(const RatFun& r, Style style = Style::text);
/// Product of linear factors, e.g. "4(n-1)(n-2)".
std::string render_linear_factors(const Poly& p);

std::string render(const RatFun& r, Style style = Style::text);
/// Descending derivative order, "D" standing for d/dx.
template <DiffCoeff C>
std::string render(const DiffOp<C>& q, Style style = Style::text);
/// Descending offset; coefficients in factored form.
std::string render(const ShiftOp& q, Style style = Style::text);

/// "f(x) hhat(n,x) = a(n) hhat(n+3,x) + ...", descending offset.
std::string render(const Recurrence& rec, Style style = Style::text);

extern template std::string render(const PolyDiffOp&, Style);
extern template std::string render(const RatDiffOp&, Style);

}  // namespace xoph
