#pragma once

// Exact Laplacian spectra of boxes (Dirichlet/Neumann) and balls (Dirichlet),
// plus the spectral functions the audits consume.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyl/dim.hpp"

namespace weyl {

enum class Boundary { Dirichlet, Neumann };

std::string_view name(Boundary bc);

class DomainSpec {
 public:
  enum class Kind { Box, Ball };

  static DomainSpec box(std::vector<double> sides, Boundary bc);
  /// Balls are Dirichlet only; Neumann throws std::invalid_argument.
  static DomainSpec ball(Dim n, double radius, Boundary bc = Boundary::Dirichlet);

  Kind kind() const noexcept { return kind_; }
  Dim dim() const noexcept { return dim_; }
  Boundary boundary() const noexcept { return bc_; }
  const std::vector<double>& sides() const noexcept { return sides_; }
  double radius() const noexcept { return radius_; }

  double volume() const;
  /// Compact identifier without commas, e.g. box_1x2_dirichlet, ball_n3_r1_dirichlet.
  std::string label() const;

 private:
  DomainSpec(Kind kind, Dim n, Boundary bc) : kind_(kind), dim_(n), bc_(bc) {}

  Kind kind_;
  Dim dim_;
  Boundary bc_;
  std::vector<double> sides_;
  double radius_ = 0.0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpectrumOptions {
  std::size_t max_eigenvalues = 10'000'000;
};

/// Sorted eigenvalues with multiplicity; every eigenvalue <= cutoff() is present.
class Spectrum {
 public:
  Spectrum(DomainSpec domain, std::vector<double> eigenvalues, double cutoff);

  std::span<const double> eigenvalues() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double cutoff() const noexcept { return cutoff_; }
  double volume() const { return domain_.volume(); }
  const DomainSpec& domain() const noexcept { return domain_; }
  Dim dim() const noexcept { return domain_.dim(); }

  /// 1-based; throws std::out_of_range past the end.
  double eigenvalue(long k) const;

 private:
  DomainSpec domain_;
  std::vector<double> values_;
  double cutoff_;
};

Spectrum box_spectrum(const std::vector<double>& sides, Boundary bc, std::size_t count,
                      const SpectrumOptions& options = {});
Spectrum ball_spectrum(Dim n, double radius, std::size_t count,
                       const SpectrumOptions& options = {});
Spectrum make_spectrum(const DomainSpec& domain, std::size_t count,
                       const SpectrumOptions& options = {});

/// Dimension of the degree-l spherical harmonics on S^{n-1}.
long spherical_multiplicity(Dim n, long l);

/// N(lam); throws std::out_of_range for lam > cutoff.
long counting_function(const Spectrum& spec, double lam);

/// lambda_1 + ... + lambda_k.
double partial_sum(const Spectrum& spec, long k);

/// sum_j (lam - lambda_j)_+; cross-checked internally against the step
/// integral of N over [0, lam].
double riesz_mean_1(const Spectrum& spec, double lam);

void write_csv(const Spectrum& spec, std::ostream& out);

}  // namespace weyl
