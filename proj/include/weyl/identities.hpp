#pragma once

// Structural checks: the left Riemann sum lemma, the Legendre transform of the
// Riesz mean, decay of expansion remainders, and the bound-comparison curve.

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "weyl/bounds.hpp"
#include "weyl/spectra.hpp"

namespace weyl {

/// sum_{j=0}^{k-1} j^{2/n} < k^{1+2/n} / (1+2/n) for every k <= k_max.
bool check_left_riemann(Dim n, long k_max);

/// {numerical sup_{lam >= 0} [p lam - R(lam)], closed form}; R is the Riesz
/// mean. Throws std::out_of_range when the spectrum is too short for p.
std::pair<double, double> check_legendre_identity(const Spectrum& spec, double p);

struct DecayReport {
  Expansion id;
  std::vector<int> dims;
  std::vector<double> residuals;  // exact - full truncated expansion
  double slope;                   // least-squares d log|residual| / d log n
  double expected;
  bool within;                    // |slope - expected| <= 0.3
};

DecayReport check_asymptotic_decay(Expansion id, const std::vector<Dim>& dims);

struct CurveRow {
  long k;      // gap index; the row bounds lambda_{k+1} / lambda_1
  long index;  // k + 1
  double ppw;
  double new4;
  double new1;
  double ab94;
  std::optional<double> not_ppw;  // only for k = 1
};

std::vector<CurveRow> comparison_curve(Dim n, long k_max);
void write_csv(const std::vector<CurveRow>& rows, std::ostream& out);

/// NEW4(k) / (lambda_1 + NEW1(k)).
double new4_new1_ratio(Dim n, long k);
/// Exact k -> infinity limit of the ratio: (1+4/n) / ((1+2/n) (1+n/2)^{2/n}).
double new4_new1_limit(Dim n);
/// The closed form (1+4/n) / (1+n/2)^{1+2/n}; equals the limit only at n = 2.
double new4_new1_limit_published(Dim n);

}  // namespace weyl
