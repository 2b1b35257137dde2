#include "weyl/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace weyl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;

// Below this argument the ascending series is used directly; the worst
// cancellation there is I_0(2)/J_0(2) ~ 10.
constexpr double kSeriesLimit = 2.0;

// Consecutive zeros of J_nu are more than 2.5 apart for every nu >= -1/2,
// so a unit step never hides a pair of sign changes.
constexpr double kScanStep = 1.0;

// Above this argument the Hankel expansion is tried first.
constexpr double kHankelLimit = 25.0;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double z) {
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    a += kLanczos[i] / (z + static_cast<double>(i));
  }
  return a;
}

BesselValue series(double nu, double x) {
  const double half = 0.5 * x;
  const double q = -half * half;
  double term = nu + 1.0 <= 170.0
                    ? std::pow(half, nu) / gamma(nu + 1.0)
                    : std::exp(nu * std::log(half) - log_gamma(nu + 1.0));
  const double first = std::abs(term);
  double sum = term;
  double dsum = nu * term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * (nu + k));
    sum += term;
    dsum += (nu + 2.0 * k) * term;
    if (std::abs(term) <= 0.25 * kEps * std::max(std::abs(sum), first)) {
      break;
    }
  }
  return {sum, dsum / x};
}

// Steed's method: CF1 gives J'_nu/J_nu, downward recurrence carries the
// unnormalised pair to an order mu <~ x, CF2 gives (J'+iY')/(J+iY) at mu,
// and the Wronskian fixes the scale. Requires nu >= 0, x >= 2.
BesselValue steed(double nu, double x) {
  const long max_iter = 10000 + 4 * static_cast<long>(x);
  const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
  const double xmu = nu - nl;
  const double xmu2 = xmu * xmu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  int isign = 1;
  double h = std::max(nu * xi, kFpMin);
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  long i = 0;
  for (; i < max_iter; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b - 1.0 / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) <= kEps) break;
  }
  if (i >= max_iter) {
    throw ConvergenceError("bessel_j: CF1 did not converge at x=" + std::to_string(x));
  }

  double rjl = isign * kFpMin;
  double rjpl = h * rjl;
  const double rjl1 = rjl;
  const double rjp1 = rjpl;
  double fact = nu * xi;
  for (int l = nl - 1; l >= 0; --l) {
    const double rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
  }
  if (rjl == 0.0) rjl = kEps;
  const double f = rjpl / rjl;

  double a = 0.25 - xmu2;
  double p = -0.5 * xi;
  double q = 1.0;
  const double br = 2.0 * x;
  double bi = 2.0;
  double fct = a * xi / (p * p + q * q);
  double cr = br + q * fct;
  double ci = bi + p * fct;
  double den = br * br + bi * bi;
  double dr = br / den;
  double di = -bi / den;
  double dlr = cr * dr - ci * di;
  double dli = cr * di + ci * dr;
  double temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  for (i = 1; i < max_iter; ++i) {
    a += 2.0 * static_cast<double>(i);
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < kFpMin) dr = kFpMin;
    fct = a / (cr * cr + ci * ci);
    cr = br + cr * fct;
    ci = bi - ci * fct;
    if (std::abs(cr) + std::abs(ci) < kFpMin) cr = kFpMin;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::abs(dlr - 1.0) + std::abs(dli) <= kEps) break;
  }
  if (i >= max_iter) {
    throw ConvergenceError("bessel_j: CF2 did not converge at x=" + std::to_string(x));
  }

  const double gam = (p - f) / q;
  const double rjmu = std::copysign(std::sqrt(w / ((p - f) * gam + q)), rjl);
  const double scale = rjmu / rjl;
  return {rjl1 * scale, rjp1 * scale};
}

// Hankel asymptotic expansion of J_nu alone. Returns false if the series
// starts to grow before its terms drop below eps. The phase is formed as
// cos x cos phi + sin x sin phi so that x - phi is never rounded.
bool hankel_value(double nu, double x, double& out) {
  const double mu = 4.0 * nu * nu;
  double P = 1.0, Q = 0.0, t = 1.0;
  bool converged = false;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = t * (mu - odd * odd) / (8.0 * k * x);
    if (std::abs(next) > std::abs(t) && k > 1) break;
    t = next;
    switch (k % 4) {
      case 1: Q += t; break;
      case 2: P -= t; break;
      case 3: Q -= t; break;
      default: P += t; break;
    }
    if (std::abs(t) < 0.5 * kEps) {
      converged = true;
      break;
    }
  }
  if (!converged) return false;
  const double phi = (0.5 * nu + 0.25) * kPi;
  const double c = std::cos(x), s = std::sin(x);
  const double cos_chi = c * std::cos(phi) + s * std::sin(phi);
  const double sin_chi = s * std::cos(phi) - c * std::sin(phi);
  out = std::sqrt(2.0 / (kPi * x)) * (P * cos_chi - Q * sin_chi);
  return true;
}

bool hankel(double nu, double x, BesselValue& out) {
  double j = 0.0, j_up = 0.0;
  if (!hankel_value(nu, x, j) || !hankel_value(nu + 1.0, x, j_up)) return false;
  out = {j, nu / x * j - j_up};
  return true;
}

BesselValue evaluate(double nu, double x) {
  if (x < kSeriesLimit) {
    return series(nu, x);
  }
  if (BesselValue v; x >= kHankelLimit && hankel(nu, x, v)) {
    return v;
  }
  if (nu >= 0.0) {
    return steed(nu, x);
  }
  // -1/2 <= nu < 0: step down one order from nu + 1.
  const BesselValue up = steed(nu + 1.0, x);
  const double value = up.derivative + (nu + 1.0) / x * up.value;
  return {value, nu / x * value - up.value};
}

double mcmahon(double nu, long p) {
  const double beta = (static_cast<double>(p) + 0.5 * nu - 0.25) * kPi;
  const double mu = 4.0 * nu * nu;
  const double e = 8.0 * beta;
  const double e3 = e * e * e;
  return beta - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e3) -
         32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * e3 * e * e);
}

// Safeguarded Newton on a sign-change bracket [lo, hi].
double refine_zero(double nu, double lo, double hi, double f_lo, double guess) {
  double xl = f_lo < 0.0 ? lo : hi;
  double xh = f_lo < 0.0 ? hi : lo;
  double rts = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
  double dxold = hi - lo;
  double dx = dxold;
  BesselValue v = evaluate(nu, rts);
  for (int it = 0; it < 200; ++it) {
    const double f = v.value;
    const double df = v.derivative;
    if (f == 0.0) return rts;
    if ((((rts - xh) * df - f) * ((rts - xl) * df - f) > 0.0) ||
        (std::abs(2.0 * f) > std::abs(dxold * df))) {
      dxold = dx;
      dx = 0.5 * (xh - xl);
      rts = xl + dx;
      if (xl == rts) return rts;
    } else {
      dxold = dx;
      dx = f / df;
      const double previous = rts;
      rts -= dx;
      if (previous == rts) return rts;
    }
    if (std::abs(dx) < 2.0 * kEps * std::abs(rts)) return rts;
    v = evaluate(nu, rts);
    if (v.value < 0.0) {
      xl = rts;
    } else {
      xh = rts;
    }
  }
  throw ConvergenceError("bessel_zero: Newton/bisection did not converge");
}

// Walks the positive zeros of J_nu in increasing order up to `limit`,
// calling visit(zero) until it returns false.
template <class Visit>
void scan_zeros(double nu, double limit, Visit&& visit) {
  double a = std::max(nu, 0.5);
  double fa = evaluate(nu, a).value;
  while (a < limit) {
    const double b = std::min(a + kScanStep, limit);
    const double fb = evaluate(nu, b).value;
    double root = std::numeric_limits<double>::quiet_NaN();
    if (fb == 0.0) {
      root = b;
    } else if (fa * fb < 0.0) {
      root = refine_zero(nu, a, b, fa, 0.5 * (a + b));
    }
    if (!std::isnan(root) && !visit(root)) return;
    a = b;
    fa = fb;
  }
}

}  // namespace

Order::Order(double value) : value_(value) {
  if (!(value >= -0.5)) {
    throw std::domain_error("Bessel order must be >= -1/2");
  }
}

ZeroIndex::ZeroIndex(long p) : p_(p) {
  if (p < 1) {
    throw std::domain_error("zero index must be >= 1");
  }
}

double bessel_j(Order order, double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("bessel_j: x must be >= 0");
  }
  const double nu = order.value();
  if (x == 0.0) {
    if (nu < 0.0) throw std::domain_error("bessel_j: J_nu(0) is infinite for nu < 0");
    return nu == 0.0 ? 1.0 : 0.0;
  }
  return evaluate(nu, x).value;
}

BesselValue bessel_j_with_derivative(Order order, double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("bessel_j_with_derivative: x must be > 0");
  }
  return evaluate(order.value(), x);
}

double bessel_zero(Order order, ZeroIndex index) {
  const double nu = order.value();
  const long p = index.value();
  const double beta = (static_cast<double>(p) + 0.5 * nu - 0.25) * kPi;

  if (beta >= std::max(4.0 * nu * nu, 10.0)) {
    const double guess = mcmahon(nu, p);
    const double lo = guess - 1.0;
    const double hi = guess + 1.0;
    const double f_lo = evaluate(nu, lo).value;
    const double f_hi = evaluate(nu, hi).value;
    if (f_lo * f_hi < 0.0) {
      return refine_zero(nu, lo, hi, f_lo, guess);
    }
  }

  const double cap = (static_cast<double>(p) + 0.5 * nu + 1.0) * kPi + 2.0;
  long seen = 0;
  double found = std::numeric_limits<double>::quiet_NaN();
  scan_zeros(nu, cap, [&](double z) {
    if (++seen == p) {
      found = z;
      return false;
    }
    return true;
  });
  if (std::isnan(found)) {
    throw ConvergenceError("bessel_zero: failed to bracket zero " + std::to_string(p) +
                           " of order " + std::to_string(nu));
  }
  return found;
}

std::vector<double> bessel_zeros_below(Order order, double limit) {
  std::vector<double> zeros;
  scan_zeros(order.value(), limit, [&](double z) {
    zeros.push_back(z);
    return true;
  });
  return zeros;
}

double gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma: x must be > 0");
  }
  if (x < 0.5) {
    return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
  }
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  // Split the power so that t^{z+1/2} does not overflow before exp(-t) damps it.
  const double s = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * kPi) * s * (s * std::exp(-t)) * lanczos_sum(z);
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: x must be > 0");
  }
  if (x < 0.5) {
    return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

double unit_ball_volume(Dim n) {
  return std::pow(kPi, n.half()) / gamma(n.half() + 1.0);
}

double semiclassical_constant(Dim n) {
  return unit_ball_volume(n) / std::pow(2.0 * kPi, n.as_double());
}

}  // namespace weyl
