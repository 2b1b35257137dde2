#pragma once

// Special functions: Bessel J_nu of real order, its positive zeros, Gamma,
// and the unit-ball / semiclassical constants built from them.
//
// Everything here is a pure function of its arguments.

#include <stdexcept>
#include <vector>

#include "weyl/dim.hpp"

namespace weyl {

/// Bessel order nu >= -1/2.
class Order {
 public:
  explicit Order(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Index p >= 1 of a positive zero.
class ZeroIndex {
 public:
  explicit ZeroIndex(long p);
  long value() const noexcept { return p_; }

 private:
  long p_;
};

/// Raised when an iteration (continued fraction, root bracketing) fails.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BesselValue {
  double value;       // J_nu(x)
  double derivative;  // J_nu'(x)
};

/// J_nu(x) for x >= 0.
double bessel_j(Order order, double x);

/// J_nu(x) together with J_nu'(x); x > 0.
BesselValue bessel_j_with_derivative(Order order, double x);

/// p-th positive zero j_{nu,p}.
double bessel_zero(Order order, ZeroIndex index);

/// All positive zeros of J_nu that are <= limit, in increasing order.
std::vector<double> bessel_zeros_below(Order order, double limit);

/// Gamma(x) for x > 0 (Lanczos, g = 7).
double gamma(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// C_n = pi^{n/2} / Gamma(n/2 + 1).
double unit_ball_volume(Dim n);

/// L_n^cl = C_n / (2 pi)^n.
double semiclassical_constant(Dim n);

}  // namespace weyl
