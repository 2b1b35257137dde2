#include "weyl/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "weyl/specfun.hpp"

namespace weyl {

namespace {

constexpr double kPi = std::numbers::pi;

std::string trim_number(double x) { return fmt::format("{:g}", x); }

// Keeps every value within 1e-12 of the count-th one, so degenerate levels
// are never split by rounding.
Spectrum finish(DomainSpec domain, std::vector<double> values, std::size_t count) {
  std::sort(values.begin(), values.end());
  const double edge = values[count - 1] * (1.0 + 1e-12);
  const auto end = std::upper_bound(values.begin(), values.end(), edge);
  values.erase(end, values.end());
  const double cutoff = values.back();
  return Spectrum(std::move(domain), std::move(values), cutoff);
}

void check_count(std::size_t count, const SpectrumOptions& options) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (count > options.max_eigenvalues) {
    throw BudgetExceeded(fmt::format("requested {} eigenvalues, budget is {}", count,
                                     options.max_eigenvalues));
  }
}

// Collects pi^2 sum (m_i/a_i)^2 <= level over the lattice.
void enumerate_box(const std::vector<double>& sides, long first, double level, std::size_t axis,
                   double partial, std::vector<double>& out, std::size_t budget) {
  const double a = sides[axis];
  for (long m = first;; ++m) {
    const double term = (m / a) * (m / a) * kPi * kPi;
    const double value = partial + term;
    if (value > level) break;
    if (axis + 1 == sides.size()) {
      out.push_back(value);
      if (out.size() > budget) {
        throw BudgetExceeded("box enumeration exceeded the eigenvalue budget");
      }
    } else {
      enumerate_box(sides, first, level, axis + 1, value, out, budget);
    }
  }
}

}  // namespace

std::string_view name(Boundary bc) {
  return bc == Boundary::Dirichlet ? "dirichlet" : "neumann";
}

DomainSpec DomainSpec::box(std::vector<double> sides, Boundary bc) {
  if (sides.size() < 2) throw std::invalid_argument("a box needs at least two sides");
  for (double a : sides) {
    if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("box sides must be positive");
  }
  DomainSpec d(Kind::Box, Dim(static_cast<int>(sides.size())), bc);
  d.sides_ = std::move(sides);
  return d;
}

DomainSpec DomainSpec::ball(Dim n, double radius, Boundary bc) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("ball radius must be positive");
  }
  if (bc == Boundary::Neumann) throw std::invalid_argument("Neumann ball spectra are not supported");
  DomainSpec d(Kind::Ball, n, bc);
  d.radius_ = radius;
  return d;
}

double DomainSpec::volume() const {
  if (kind_ == Kind::Ball) return unit_ball_volume(dim_) * std::pow(radius_, dim_.as_double());
  double v = 1.0;
  for (double a : sides_) v *= a;
  return v;
}

std::string DomainSpec::label() const {
  if (kind_ == Kind::Ball) {
    return fmt::format("ball_n{}_r{}_{}", dim_.value(), trim_number(radius_), name(bc_));
  }
  std::string shape;
  for (std::size_t i = 0; i < sides_.size(); ++i) {
    if (i) shape += 'x';
    shape += trim_number(sides_[i]);
  }
  return fmt::format("box_{}_{}", shape, name(bc_));
}

Spectrum::Spectrum(DomainSpec domain, std::vector<double> eigenvalues, double cutoff)
    : domain_(std::move(domain)), values_(std::move(eigenvalues)), cutoff_(cutoff) {
  if (values_.empty()) throw std::invalid_argument("empty spectrum");
  if (!std::is_sorted(values_.begin(), values_.end())) {
    throw std::invalid_argument("eigenvalues must be sorted");
  }
}

double Spectrum::eigenvalue(long k) const {
  if (k < 1 || static_cast<std::size_t>(k) > values_.size()) {
    throw std::out_of_range(fmt::format("eigenvalue index {} outside 1..{}", k, values_.size()));
  }
  return values_[static_cast<std::size_t>(k - 1)];
}

Spectrum box_spectrum(const std::vector<double>& sides, Boundary bc, std::size_t count,
                      const SpectrumOptions& options) {
  check_count(count, options);
  DomainSpec domain = DomainSpec::box(sides, bc);
  const Dim n = domain.dim();
  const double weyl = semiclassical_constant(n) * domain.volume();
  double floor_level = 0.0;
  if (bc == Boundary::Dirichlet) {
    for (double a : sides) floor_level += kPi * kPi / (a * a);
  }
  const long first = bc == Boundary::Dirichlet ? 1 : 0;

  double target = static_cast<double>(count);
  std::vector<double> values;
  for (;;) {
    const double level = std::pow(target / weyl, 2.0 / n.as_double()) + floor_level;
    values.clear();
    enumerate_box(sides, first, level, 0, 0.0, values, 2 * options.max_eigenvalues);
    if (values.size() >= count) break;
    target *= 1.5;
  }
  return finish(std::move(domain), std::move(values), count);
}

long spherical_multiplicity(Dim n, long l) {
  if (l < 0) throw std::invalid_argument("harmonic degree must be >= 0");
  auto binom = [](long top, long bottom) -> long {
    if (top < 0 || bottom < 0 || bottom > top) return 0;
    long r = 1;
    for (long i = 1; i <= bottom; ++i) r = r * (top - bottom + i) / i;
    return r;
  };
  const long d = n.value();
  return binom(d + l - 1, l) - binom(d + l - 3, l - 2);
}

Spectrum ball_spectrum(Dim n, double radius, std::size_t count, const SpectrumOptions& options) {
  check_count(count, options);
  DomainSpec domain = DomainSpec::ball(n, radius);
  const double nu0 = n.half() - 1.0;
  // Enumerate on the unit ball (x = j), then scale, so spectra of different
  // radii are exact rescalings of one another.
  const double weyl = semiclassical_constant(n) * unit_ball_volume(n);
  const double base = bessel_zero(Order(nu0), ZeroIndex(1));

  double target = static_cast<double>(count);
  std::vector<double> values;
  for (;;) {
    const double x_limit = std::max(std::sqrt(std::pow(target / weyl, 2.0 / n.as_double())), base);
    values.clear();
    for (long l = 0;; ++l) {
      const auto zeros = bessel_zeros_below(Order(nu0 + static_cast<double>(l)), x_limit);
      if (zeros.empty()) break;
      const long mult = spherical_multiplicity(n, l);
      for (double z : zeros) {
        values.insert(values.end(), static_cast<std::size_t>(mult), z * z);
        if (values.size() > 2 * options.max_eigenvalues) {
          throw BudgetExceeded("ball enumeration exceeded the eigenvalue budget");
        }
      }
    }
    if (values.size() >= count) break;
    target *= 1.5;
  }
  const double scale = 1.0 / (radius * radius);
  for (double& v : values) v *= scale;
  return finish(std::move(domain), std::move(values), count);
}

Spectrum make_spectrum(const DomainSpec& domain, std::size_t count, const SpectrumOptions& options) {
  if (domain.kind() == DomainSpec::Kind::Box) {
    return box_spectrum(domain.sides(), domain.boundary(), count, options);
  }
  return ball_spectrum(domain.dim(), domain.radius(), count, options);
}

long counting_function(const Spectrum& spec, double lam) {
  if (lam > spec.cutoff()) {
    throw std::out_of_range(
        fmt::format("level {} is beyond the spectrum cutoff {}", lam, spec.cutoff()));
  }
  const auto ev = spec.eigenvalues();
  return static_cast<long>(std::upper_bound(ev.begin(), ev.end(), lam) - ev.begin());
}

double partial_sum(const Spectrum& spec, long k) {
  if (k < 1) throw std::invalid_argument("partial_sum needs k >= 1");
  if (static_cast<std::size_t>(k) > spec.size()) {
    throw std::out_of_range(fmt::format("spectrum holds {} eigenvalues, asked for {}", spec.size(), k));
  }
  double sum = 0.0;
  for (long i = 0; i < k; ++i) sum += spec.eigenvalues()[static_cast<std::size_t>(i)];
  return sum;
}

double riesz_mean_1(const Spectrum& spec, double lam) {
  const long count = counting_function(spec, lam);
  const auto ev = spec.eigenvalues();

  double direct = 0.0;
  for (long i = 0; i < count; ++i) direct += lam - ev[static_cast<std::size_t>(i)];

  // int_0^lam N(mu) dmu: N equals i on [ev[i-1], ev[i]).
  double steps = 0.0;
  for (long i = 1; i <= count; ++i) {
    const double right = i < count ? ev[static_cast<std::size_t>(i)] : lam;
    steps += static_cast<double>(i) * (right - ev[static_cast<std::size_t>(i - 1)]);
  }
  if (std::abs(direct - steps) > 1e-10 * std::max({std::abs(direct), std::abs(steps), 1.0})) {
    throw std::logic_error(
        fmt::format("Riesz mean {} disagrees with step integral {} at {}", direct, steps, lam));
  }
  return direct;
}

void write_csv(const Spectrum& spec, std::ostream& out) {
  const DomainSpec& d = spec.domain();
  out << fmt::format("# domain={}, boundary={}, cutoff={:.12g}, volume={:.12g}\n", d.label(),
                     name(d.boundary()), spec.cutoff(), spec.volume());
  out << "eigenvalue\n";
  for (double v : spec.eigenvalues()) out << fmt::format("{:.12g}\n", v);
}

}  // namespace weyl
