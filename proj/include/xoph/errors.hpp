#pragma once

#include <stdexcept>
#include <string>

namespace xoph {

/// Exact polynomial division left a nonzero remainder.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operator expected to have polynomial coefficients kept a rational one.
class DenominatorNotCleared : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A shift-operator coefficient has a pole at the index where it is applied.
class PoleAtIndex : public std::domain_error {
 public:
  PoleAtIndex(int offset, long index)
      : std::domain_error("coefficient of shift offset " + std::to_string(offset) +
                          " has a pole at n = " + std::to_string(index)),
        offset_(offset),
        index_(index) {}

  int offset() const noexcept { return offset_; }
  long index() const noexcept { return index_; }

 private:
  int offset_;
  long index_;
};

}  // namespace xoph
