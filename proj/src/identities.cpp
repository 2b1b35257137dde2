#include "weyl/identities.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace weyl {

bool check_left_riemann(Dim n, long k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  const double e = 2.0 / n.as_double();
  double sum = 0.0;  // sum_{j=0}^{k-1} j^{2/n}
  for (long k = 1; k <= k_max; ++k) {
    sum += std::pow(static_cast<double>(k - 1), e);
    if (!(sum < std::pow(static_cast<double>(k), 1.0 + e) / (1.0 + e))) return false;
  }
  return true;
}

std::pair<double, double> check_legendre_identity(const Spectrum& spec, double p) {
  if (!(p >= 0.0)) throw std::invalid_argument("p must be >= 0");
  const long whole = static_cast<long>(std::floor(p));
  if (static_cast<std::size_t>(whole) + 1 > spec.size() || spec.eigenvalue(whole + 1) >= spec.cutoff()) {
    throw std::out_of_range(fmt::format("spectrum too short for p = {}", p));
  }
  double closed = (p - static_cast<double>(whole)) * spec.eigenvalue(whole + 1);
  for (long j = 1; j <= whole; ++j) closed += spec.eigenvalue(j);

  // p lam - R(lam) is concave and piecewise linear; golden-section search on
  // [0, cutoff] converges to its maximum.
  auto f = [&](double lam) { return p * lam - riesz_mean_1(spec, lam); };
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 0.0;
  double b = spec.cutoff();
  double x1 = b - ratio * (b - a);
  double x2 = a + ratio * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > 1e-14 * spec.cutoff()) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + ratio * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - ratio * (b - a);
      f1 = f(x1);
    }
  }
  return {std::max(f1, f2), closed};
}

DecayReport check_asymptotic_decay(Expansion id, const std::vector<Dim>& dims) {
  if (dims.size() < 2) throw std::invalid_argument("need at least two dimensions");
  DecayReport r{id, {}, {}, 0.0, expansion_remainder_exponent(id), false};
  const int order = expansion_terms(id);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (Dim d : dims) {
    const double residual = exact_coefficient(id, d) - asymptotic_coefficient(id, d, order);
    r.dims.push_back(d.value());
    r.residuals.push_back(residual);
    const double x = std::log(d.as_double());
    const double y = std::log(std::abs(residual));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(dims.size());
  r.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  r.within = std::abs(r.slope - r.expected) <= 0.3;
  return r;
}

std::vector<CurveRow> comparison_curve(Dim n, long k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  const ConstantsBundle c = constants(n);
  std::vector<CurveRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max));
  for (long k = 1; k <= k_max; ++k) {
    CurveRow row{k,
                 k + 1,
                 gap_bound(GapBound::PpwRatio, c, k + 1, 1.0),
                 gap_bound(GapBound::New4, c, k, 1.0),
                 1.0 + gap_bound(GapBound::New1, c, k, 1.0),
                 gap_bound(GapBound::Ab94Ratio, c, k + 1, 1.0),
                 std::nullopt};
    if (k == 1) row.not_ppw = 1.0 + gap_bound(GapBound::NotPpw, c, 1, 1.0);
    rows.push_back(row);
  }
  return rows;
}

void write_csv(const std::vector<CurveRow>& rows, std::ostream& out) {
  out << "k,index,ppw,new4,new1,ab94,not_ppw\n";
  for (const auto& r : rows) {
    out << fmt::format("{},{},{:.12g},{:.12g},{:.12g},{:.12g},", r.k, r.index, r.ppw, r.new4, r.new1,
                       r.ab94);
    if (r.not_ppw) out << fmt::format("{:.12g}", *r.not_ppw);
    out << '\n';
  }
}

double new4_new1_ratio(Dim n, long k) {
  const ConstantsBundle c = constants(n);
  return gap_bound(GapBound::New4, c, k, 1.0) / (1.0 + gap_bound(GapBound::New1, c, k, 1.0));
}

double new4_new1_limit(Dim n) {
  const double d = n.as_double();
  return (1.0 + 4.0 / d) / ((1.0 + 2.0 / d) * std::pow(1.0 + 0.5 * d, 2.0 / d));
}

double new4_new1_limit_published(Dim n) {
  const double d = n.as_double();
  return (1.0 + 4.0 / d) / std::pow(1.0 + 0.5 * d, 1.0 + 2.0 / d);
}

}  // namespace weyl
