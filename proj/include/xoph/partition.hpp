#pragma once

#include <string>
#include <vector>

namespace xoph {

/// Non-decreasing sequence of positive integers lambda_1 <= ... <= lambda_l.
///
/// Derived data: length l, weight N = sum of parts, and the strictly
/// increasing index set K with k_i = lambda_i + i - 1 (1-based i). The empty
/// partition is allowed and gives the classical Hermite family.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and non-decreasing.
  explicit Partition(std::vector<int> parts);

  /// Parses "1,1,2,2"; the empty string is the empty partition.
  static Partition parse(const std::string& csv);

  const std::vector<int>& parts() const noexcept { return parts_; }
  const std::vector<int>& indices() const noexcept { return ks_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept { return weight_; }
  bool empty() const noexcept { return parts_.empty(); }
  /// First j parts.
  Partition truncated(int j) const;
  /// Even length with lambda_{2i-1} = lambda_{2i}.
  bool is_even() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> ks_;
  int weight_ = 0;
};

/// Degrees n >= N - l with n + l - N not in K: the degrees at which the
/// exceptional family has a nonzero member. Exactly N nonnegative integers are
/// missing.
class DegreeSet {
 public:
  explicit DegreeSet(const Partition& lam);

  bool contains(long n) const;
  /// The N missing degrees, ascending.
  const std::vector<long>& missing() const noexcept { return missing_; }
  /// Members in [0, up_to], ascending.
  std::vector<long> members_up_to(long up_to) const;

 private:
  long offset_;  // N - l
  std::vector<int> ks_;
  std::vector<long> missing_;
};

DegreeSet degree_set(const Partition& lam);

}  // namespace xoph
