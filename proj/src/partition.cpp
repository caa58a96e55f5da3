#include "xoph/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace xoph {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] < parts_[i - 1]) throw std::invalid_argument("partition parts must be non-decreasing");
    ks_.push_back(parts_[i] + static_cast<int>(i));
    weight_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& csv) {
  std::vector<int> parts;
  if (csv.find_first_not_of(" \t") == std::string::npos) return Partition();
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty partition part in '" + csv + "'");
    int v = 0;
    const char* first = item.data() + b;
    const char* last = item.data() + e + 1;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw std::invalid_argument("bad partition part '" + item + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

Partition Partition::truncated(int j) const {
  if (j < 0 || j > length()) throw std::out_of_range("partition truncation out of range");
  return Partition(std::vector<int>(parts_.begin(), parts_.begin() + j));
}

bool Partition::is_even() const noexcept {
  if (parts_.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < parts_.size(); i += 2) {
    if (parts_[i] != parts_[i + 1]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

DegreeSet::DegreeSet(const Partition& lam)
    : offset_(lam.weight() - lam.length()), ks_(lam.indices()) {
  for (long n = 0; n < offset_; ++n) missing_.push_back(n);
  for (int k : ks_) missing_.push_back(k + offset_);
}

bool DegreeSet::contains(long n) const {
  if (n < offset_) return false;
  const long j = n - offset_;
  return !std::binary_search(ks_.begin(), ks_.end(), static_cast<int>(j));
}

std::vector<long> DegreeSet::members_up_to(long up_to) const {
  std::vector<long> out;
  for (long n = 0; n <= up_to; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

DegreeSet degree_set(const Partition& lam) { return DegreeSet(lam); }

}  // namespace xoph
