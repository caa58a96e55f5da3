#include <algorithm>
#include <future>
#include <thread>
#include <variant>

#include "xoph/bispectral.hpp"
#include "xoph/errors.hpp"

namespace xoph {

namespace {

using Outcome = std::variant<std::monostate, Mismatch, PoleIncident>;

}  // namespace

VerificationReport verify_recurrence(const Recurrence& rec, long n_max) {
  VerificationReport report;
  const DegreeSet degrees(rec.partition);
  report.checked = degrees.members_up_to(n_max);
  if (report.checked.empty()) return report;

  // Every family member any index can reach, computed once and shared.
  const int lo_off = rec.op.is_zero() ? 0 : std::min(0, rec.op.min_offset());
  const int hi_off = rec.op.is_zero() ? 0 : std::max(0, rec.op.max_offset());
  const long first = report.checked.front() + lo_off;
  const long last = report.checked.back() + hi_off;
  const ExceptionalHermite family(rec.partition);
  std::vector<Poly> table;
  table.reserve(last - first + 1);
  for (long m = first; m <= last; ++m) table.push_back(family(m));
  const PolyFamily lookup = [&](long m) { return table[m - first]; };

  const auto check = [&](long n) -> Outcome {
    try {
      Poly got = apply(rec.op, lookup, n);
      Poly expected = rec.f * lookup(n);
      if (got == expected) return std::monostate{};
      return Mismatch{n, std::move(expected), std::move(got)};
    } catch (const PoleAtIndex& e) {
      return PoleIncident{e.offset(), e.index()};
    }
  };

  const std::size_t total = report.checked.size();
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, total);
  std::vector<Outcome> outcomes(total);
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < total; i += workers) outcomes[i] = check(report.checked[i]);
    }));
  }
  for (auto& job : jobs) job.get();

  for (auto& outcome : outcomes) {
    if (auto* m = std::get_if<Mismatch>(&outcome)) report.failures.push_back(std::move(*m));
    else if (auto* p = std::get_if<PoleIncident>(&outcome)) report.poles.push_back(*p);
  }
  return report;
}

}  // namespace xoph
