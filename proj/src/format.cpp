#include "xoph/format.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace xoph {

namespace {

constexpr long kRootSearchBound = 10000;

std::string rat_latex(const Rat& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

std::string power_text(Var v, int i, Style style) {
  std::string s(1, var_name(v));
  if (i == 1) return s;
  return style == Style::latex ? s + "^{" + std::to_string(i) + "}" : s + "^" + std::to_string(i);
}

// Magnitude of a single term |c| v^i.
std::string term_magnitude(const Rat& a, Var v, int i, Style style) {
  if (i == 0) return style == Style::latex ? rat_latex(a) : to_string(a);
  const std::string var = power_text(v, i, style);
  if (a == 1) return var;
  if (style == Style::latex) return rat_latex(a) + " " + var;
  if (a.get_den() == 1) return to_string(a) + var;
  return to_string(a) + " " + var;
}

void append_signed(std::string& out, bool negative, const std::string& magnitude) {
  if (out.empty()) out = negative ? "-" + magnitude : magnitude;
  else out += (negative ? " - " : " + ") + magnitude;
}

std::string linear_factor(long shift) {
  if (shift == 0) return "n";
  return "(n" + std::string(shift > 0 ? "+" : "-") + std::to_string(shift > 0 ? shift : -shift) + ")";
}

std::string run_text(const FactoredPoly::Run& run, Style style) {
  if (run.count == 1) return linear_factor(run.shift);
  std::string base = run.shift == 0 ? "(n)" : linear_factor(run.shift);
  if (style == Style::latex) return base + "_{" + std::to_string(run.count) + "}";
  return base + "_" + std::to_string(run.count);
}

// Product of runs and leftover, constant excluded. Empty when trivial.
std::string factor_body(const FactoredPoly& fp, Style style, int* factor_count) {
  std::string out;
  int count = 0;
  for (std::size_t i = 0; i < fp.runs.size();) {
    const auto& run = fp.runs[i];
    std::size_t j = i;
    while (j < fp.runs.size() && fp.runs[j].shift == run.shift && fp.runs[j].count == run.count) ++j;
    std::string text = run_text(run, style);
    if (j - i > 1) {
      if (run.count > 1) text = "(" + text + ")";
      text += style == Style::latex ? "^{" + std::to_string(j - i) + "}" : "^" + std::to_string(j - i);
    }
    if (!out.empty()) out += " ";
    out += text;
    ++count;
    i = j;
  }
  if (fp.rest.degree() > 0) {
    if (!out.empty()) out += " ";
    out += style == Style::latex ? "\\left(" + render(fp.rest, style) + "\\right)" : "(" + render(fp.rest, style) + ")";
    ++count;
  }
  if (factor_count) *factor_count = count;
  return out;
}

struct Signed {
  bool negative;
  std::string magnitude;
};

Signed factored_magnitude(const RatFun& r, Style style) {
  if (r.is_zero()) return {false, "0"};
  const FactoredPoly num = factor_integer_roots(r.num());
  const FactoredPoly den = factor_integer_roots(r.den());
  Rat c = num.constant / den.constant;
  const bool negative = c < 0;
  if (negative) c = -c;

  int den_factors = 0;
  const std::string num_body = factor_body(num, style, nullptr);
  const std::string den_body = factor_body(den, style, &den_factors);

  if (style == Style::latex) {
    std::string out = (c == 1 && !(num_body.empty() && den_body.empty())) ? "" : rat_latex(c);
    std::string body = num_body;
    if (!den_body.empty()) body = "\\frac{" + (num_body.empty() ? std::string("1") : num_body) + "}{" + den_body + "}";
    if (!body.empty()) out += (out.empty() ? "" : " ") + body;
    return {negative, out};
  }

  std::string out = (c == 1 && !num_body.empty()) ? "" : to_string(c);
  if (!num_body.empty()) out += (out.empty() ? "" : " ") + num_body;
  if (!den_body.empty()) out += " / " + (den_factors > 1 ? "(" + den_body + ")" : den_body);
  return {negative, out};
}

std::string shift_power(int k, Style style) {
  if (k == 0) return "";
  const std::string sym = style == Style::latex ? "\\Theta" : "Theta";
  if (k == 1) return sym;
  return style == Style::latex ? sym + "^{" + std::to_string(k) + "}" : sym + "^" + std::to_string(k);
}

std::string family_member(int k, Style style) {
  std::string index = "n";
  if (k > 0) index += "+" + std::to_string(k);
  else if (k < 0) index += "-" + std::to_string(-k);
  return (style == Style::latex ? "\\hat{h}(" : "hhat(") + index + ",x)";
}

std::string diff_power(int j, Style style) {
  const std::string sym = style == Style::latex ? "\\partial" : "D";
  if (j == 1) return sym;
  return style == Style::latex ? sym + "^{" + std::to_string(j) + "}" : sym + "^" + std::to_string(j);
}

std::string paren(const std::string& s, Style style) {
  return style == Style::latex ? "\\left(" + s + "\\right)" : "(" + s + ")";
}

}  // namespace

std::string render(const Poly& p, Style style) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rat& c = p[i];
    if (c == 0) continue;
    append_signed(out, c < 0, term_magnitude(abs(c), p.var(), i, style));
  }
  return out;
}

FactoredPoly factor_integer_roots(const Poly& p) {
  FactoredPoly out;
  if (p.is_zero()) {
    out.constant = 0;
    return out;
  }
  Poly work = primitive_part(p);
  std::map<long, unsigned> roots;

  const Poly n_var = Poly::monomial(p.var(), 1, 1);
  while (work.degree() > 0 && work[0] == 0) {
    work = divide_exact(work, n_var);
    ++roots[0];
  }
  if (work.degree() > 0) {
    // Cauchy bound on root size, capped.
    Rat bound = 0;
    for (int i = 0; i < work.degree(); ++i) bound = std::max(bound, Rat(abs(work[i] / work.leading())));
    const long limit = bound >= kRootSearchBound ? kRootSearchBound : bound.get_num().get_si() / bound.get_den().get_si() + 1;
    const BigInt constant_term = work[0].get_num();
    for (long r = 1; r <= limit && work.degree() > 0; ++r) {
      if (mpz_divisible_ui_p(constant_term.get_mpz_t(), static_cast<unsigned long>(r)) == 0) continue;
      for (long root : {r, -r}) {
        while (work.degree() > 0 && work(Rat(root)) == 0) {
          work = divide_exact(work, Poly::linear(p.var(), Rat(-root)));
          ++roots[root];
        }
      }
    }
  }
  out.rest = primitive_part(work);
  out.constant = p.leading() / out.rest.leading();

  // Greedily peel maximal consecutive runs off the root multiset.
  while (!roots.empty()) {
    const long start = roots.begin()->first;
    long end = start;
    while (roots.count(end + 1)) ++end;
    for (long r = start; r <= end; ++r) {
      if (--roots[r] == 0) roots.erase(r);
    }
    out.runs.push_back({-end, static_cast<unsigned>(end - start + 1)});
  }
  std::sort(out.runs.begin(), out.runs.end(), [](const auto& a, const auto& b) {
    return a.shift != b.shift ? a.shift < b.shift : a.count > b.count;
  });
  return out;
}

std::string render_factored(const RatFun& r, Style style) {
  const auto s = factored_magnitude(r, style);
  return s.negative ? "-" + s.magnitude : s.magnitude;
}

std::string render_linear_factors(const Poly& p) {
  if (p.is_zero()) return "0";
  const FactoredPoly fp = factor_integer_roots(p);
  std::vector<long> roots;
  for (const auto& run : fp.runs) {
    for (unsigned i = 0; i < run.count; ++i) roots.push_back(-run.shift - static_cast<long>(i));
  }
  std::sort(roots.begin(), roots.end());
  std::string body;
  for (long r : roots) body += r == 0 ? "n" : linear_factor(-r);
  if (fp.rest.degree() > 0) body += "(" + render(fp.rest) + ")";
  if (body.empty()) return to_string(fp.constant);
  if (fp.constant == 1) return body;
  if (fp.constant == -1) return "-" + body;
  return to_string(fp.constant) + body;
}

std::string render(const RatFun& r, Style style) {
  if (r.is_polynomial()) return render(r.num() * Rat(1 / r.den().leading()), style);
  // Clear denominators so both sides print with coprime integer coefficients.
  BigInt lcm = 1, content = 0;
  for (const Poly* p : {&r.num(), &r.den()})
    for (const Rat& c : p->coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  for (const Poly* p : {&r.num(), &r.den()})
    for (const Rat& c : p->coeffs()) {
      const BigInt scaled = c.get_num() * (lcm / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
  Rat scale(lcm, content);
  scale.canonicalize();
  const std::string num = render(r.num() * scale, style);
  const std::string den = render(r.den() * scale, style);
  if (style == Style::latex) return "\\frac{" + num + "}{" + den + "}";
  const auto nonzero = std::count_if(r.num().coeffs().begin(), r.num().coeffs().end(), [](const Rat& c) { return c != 0; });
  return (nonzero > 1 ? "(" + num + ")" : num) + "/(" + den + ")";
}

template <DiffCoeff C>
std::string render(const DiffOp<C>& q, Style style) {
  if (q.is_zero()) return "0";
  std::string out;
  for (int j = q.order(); j >= 0; --j) {
    const C& c = q.coeffs()[j];
    if (c.is_zero()) continue;
    std::string term = paren(render(c, style), style);
    if (j > 0) term += " " + diff_power(j, style);
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

template std::string render(const PolyDiffOp&, Style);
template std::string render(const RatDiffOp&, Style);

std::string render(const ShiftOp& q, Style style) {
  if (q.is_zero()) return "0";
  std::string out;
  for (auto it = q.terms().rbegin(); it != q.terms().rend(); ++it) {
    const auto [negative, magnitude] = factored_magnitude(it->second, style);
    const std::string power = shift_power(it->first, style);
    std::string term;
    if (power.empty()) term = magnitude;
    else if (magnitude == "1") term = power;
    else term = magnitude + " " + power;
    append_signed(out, negative, term);
  }
  return out;
}

std::string render(const Recurrence& rec, Style style) {
  std::string rhs;
  for (auto it = rec.op.terms().rbegin(); it != rec.op.terms().rend(); ++it) {
    const auto [negative, magnitude] = factored_magnitude(it->second, style);
    const std::string member = family_member(it->first, style);
    append_signed(rhs, negative, magnitude == "1" ? member : magnitude + " " + member);
  }
  if (rhs.empty()) rhs = "0";
  return paren(render(rec.f, style), style) + " " + family_member(0, style) + " = " + rhs;
}

}  // namespace xoph
