#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

/// Spatial dimension n >= 2.
class Dim {
 public:
  explicit Dim(int n) : n_(n) {
    if (n < 2) {
      throw std::domain_error("dimension must be >= 2, got " + std::to_string(n));
    }
  }

  int value() const noexcept { return n_; }
  double as_double() const noexcept { return static_cast<double>(n_); }
  /// n/2, the exponent that appears in every Weyl-type term.
  double half() const noexcept { return 0.5 * n_; }

  friend bool operator==(Dim a, Dim b) noexcept { return a.n_ == b.n_; }

 private:
  int n_;
};

}  // namespace weyl
