#pragma once

// Catalog of eigenvalue inequalities for the Dirichlet (and, for the
// Kroger/Polya bounds, Neumann) Laplacian, evaluated from the
// dimension-dependent constants in ConstantsBundle.
//
// Every evaluator is overloaded on Dim (computes the bundle) and on a
// precomputed ConstantsBundle (what the audit engine uses in hot loops).

#include <optional>
#include <span>
#include <string_view>

#include "weyl/dim.hpp"

namespace weyl {

struct ConstantsBundle {
  Dim n;
  double ball_volume;          // C_n
  double semiclassical;        // L_n^cl = C_n / (2 pi)^n
  double first_zero;           // j_{n/2-1,1}
  double bessel_at_zero;       // J_{n/2}(j_{n/2-1,1})
  double weyl_constant;        // H_n = 2n / (j^2 J^2)
  double scaled_constant;      // H_n * C_n
  double chiti_coeff;          // ess sup |u_1| <= chiti_coeff * lambda_1^{n/4}
  double ball_ratio;           // j_{n/2,1}^2 / j_{n/2-1,1}^2
};

ConstantsBundle constants(Dim n);

// ---------------------------------------------------------------------------
// Gap bounds

enum class GapBound {
  New1,      // lambda_{k+1} - lambda_1
  New2Sum,   // sum_{j<=k} (lambda_j - lambda_1)
  New4,      // lambda_{k+1}
  NotPpw,    // lambda_2 - lambda_1, value of the k=1 lemma at its smallest radius
  NotPpw2,   // lambda_2 - lambda_1, value of the k=1 lemma at its minimiser
  PpwRatio,  // lambda_k, k is the eigenvalue index
  Ab94Ratio, // lambda_k, k is the eigenvalue index
  SumKEqN,   // sum_{j=1}^{n} (lambda_{j+1} - lambda_1); k ignored
};

double gap_bound(GapBound variant, const ConstantsBundle& c, long k, double lambda1);
double gap_bound(GapBound variant, Dim n, long k, double lambda1);

/// Upper bound on sum_{j=1}^{k} (lambda_j - lambda_1).
double gap_sum_bound(const ConstantsBundle& c, long k, double lambda1);
double gap_sum_bound(Dim n, long k, double lambda1);

enum class ReciprocalBound {
  New3,     // sum_{j=2}^{k+1} 1/(lambda_j - lambda_1)
  AbChiti,  // sum_{k=1}^{n} 1/(lambda_{k+1} - lambda_1); k ignored
};

double reciprocal_gap_lower(ReciprocalBound variant, const ConstantsBundle& c, long k,
                            double lambda1);
double reciprocal_gap_lower(ReciprocalBound variant, Dim n, long k, double lambda1);

// ---------------------------------------------------------------------------
// Counting-function and Weyl-term bounds

enum class CountBound {
  Count1Lower,
  Count2Lower,
  SafarovLower,
  AbCountLower,
  AbCount2Lower,
  LiYauUpper,
  PolyaWeylTerm,
  BerezinRieszUpper,
  UrakawaLowerTerm,
  KrogerSum,
  KrogerSingle,
  LiYauSumLower,
  LiYauSingleLower,
};

/// What a CountBound value bounds, and from which side.
enum class Bounded {
  CountingFunction,  // N(lambda)
  RieszMean,         // sum_j (lambda - lambda_j)_+
  EigenvalueSum,     // sum_{i<=k} lambda_i (or mu_i)
  Eigenvalue,        // lambda_k, or mu_{k+1} for KrogerSingle
};

enum class Side { Lower, Upper };

/// Level-mode variants read CountingArgs::lambda as a spectral level;
/// index-mode variants read it as the integer index k.
enum class ArgMode { Level, Index };

struct CountBoundInfo {
  CountBound id;
  std::string_view name;
  Bounded bounded;
  Side side;
  ArgMode mode;
  bool needs_lambda1;
  bool needs_volume;
};

std::span<const CountBoundInfo> count_bound_table();
const CountBoundInfo& info(CountBound variant);

struct CountingArgs {
  double lambda = 0.0;           // level, or k for index-mode variants
  double lambda1 = 0.0;
  double lambda2 = 0.0;          // AbCount2Lower only
  double volume = 0.0;
  double packing_density = 1.0;  // UrakawaLowerTerm only; 1 for tiling domains
};

double counting_bound(CountBound variant, const ConstantsBundle& c, const CountingArgs& args);
double counting_bound(CountBound variant, Dim n, const CountingArgs& args);

/// Upper bound on the Riesz mean int_0^lam N(mu) dmu.
double riesz_bound_berezin(const ConstantsBundle& c, double lam, double volume);
double riesz_bound_berezin(Dim n, double lam, double volume);

/// 4 pi^2 k^{2/n} / (C_n |Omega|)^{2/n}, the Weyl term in Polya's conjecture.
double weyl_eigenvalue_term(const ConstantsBundle& c, double k, double volume);

// ---------------------------------------------------------------------------
// Radius-parameterised family behind the gap bounds

/// Smallest admissible radius H^{1/n} (1+k)^{1/n} sqrt(lambda_1).
double lemma_min_radius(const ConstantsBundle& c, long k, double lambda1);

/// (1+n/2)^{1/n} H^{1/n} k^{1/n} sqrt(lambda_1); with gap_sum = 0 this radius
/// turns the family into New1.
double lemma_new1_radius(const ConstantsBundle& c, long k, double lambda1);

/// Upper bound on lambda_{k+1} - lambda_1 for r >= lemma_min_radius, given
/// gap_sum = sum_{j<=k} (lambda_j - lambda_1).
double lemma_bound_family(const ConstantsBundle& c, long k, double r, double lambda1,
                          double gap_sum);
double lemma_bound_family(Dim n, long k, double r, double lambda1, double gap_sum);

// ---------------------------------------------------------------------------
// Large-n expansions of the coefficients

enum class Expansion {
  Asymp1,   // (1+n/2)^{2/n} H^{2/n}
  New4Exp,  // (1+4/n) n/(n+2) H^{2/n}
  PpwExp,   // j_{n/2,1}^2 / j_{n/2-1,1}^2
  AbPower,  // log(j_{n/2,1}^2 / j_{n/2-1,1}^2) / log 2
};

/// Published digits of the Airy-type constants used in the expansions.
inline constexpr double kB0 = 1.1131028;
inline constexpr double kB1 = 1.484606;
inline constexpr double kC1 = 1.8557571;
inline constexpr double kC2 = 1.033150;

/// Number of terms available for an expansion.
int expansion_terms(Expansion id);

/// Exponent of the remainder after all terms: O(n^{exponent}).
double expansion_remainder_exponent(Expansion id);

/// Sum of the first `order` terms (1 <= order <= expansion_terms(id)).
double asymptotic_coefficient(Expansion id, Dim n, int order);

/// The exact quantity the expansion approximates.
double exact_coefficient(Expansion id, const ConstantsBundle& c);
double exact_coefficient(Expansion id, Dim n);

// ---------------------------------------------------------------------------
// Flat catalog for the CLI: one entry per named bound.

struct BoundInputs {
  long k = 1;
  double lambda1 = 1.0;
  double lambda = 0.0;
  double lambda2 = 0.0;
  double volume = 1.0;
  double packing_density = 1.0;
  std::optional<double> radius;  // lemma family; defaults to the minimal radius
  double gap_sum = 0.0;          // lemma family
};

struct CatalogEntry {
  std::string_view name;
  std::string_view bounds;  // one-line description of the bounded quantity
  double (*evaluate)(const ConstantsBundle&, const BoundInputs&);
};

std::span<const CatalogEntry> bound_catalog();
const CatalogEntry* find_bound(std::string_view name);

std::string_view name(GapBound variant);
std::string_view name(ReciprocalBound variant);
std::string_view name(CountBound variant);
std::string_view name(Expansion id);

}  // namespace weyl
