#include "weyl/bounds.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyl/specfun.hpp"

namespace weyl {

namespace {

constexpr double kPi = std::numbers::pi;

void require_index(long k) {
  if (k < 1) {
    throw std::invalid_argument("index k must be >= 1, got " + std::to_string(k));
  }
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

double inv_n(const ConstantsBundle& c) { return 1.0 / c.n.as_double(); }

// H^{2/n}
double h_two_over_n(const ConstantsBundle& c) {
  return std::pow(c.weyl_constant, 2.0 * inv_n(c));
}

// (C_n |Omega|)^{-2/n} 4 pi^2
double weyl_scale(const ConstantsBundle& c, double volume) {
  return 4.0 * kPi * kPi / std::pow(c.ball_volume * volume, 2.0 * inv_n(c));
}

long floor_log2(long k) { return std::bit_width(static_cast<unsigned long>(k)) - 1; }

long index_from(double slot) {
  if (!(slot >= 1.0) || slot != std::floor(slot)) {
    throw std::invalid_argument("index-mode bound expects an integer k >= 1 in the lambda slot");
  }
  return static_cast<long>(slot);
}

constexpr std::array<CountBoundInfo, 13> kCountTable = {{
    {CountBound::Count1Lower, "COUNT1_LOWER", Bounded::CountingFunction, Side::Lower, ArgMode::Level, true, false},
    {CountBound::Count2Lower, "COUNT2_LOWER", Bounded::CountingFunction, Side::Lower, ArgMode::Level, true, false},
    {CountBound::SafarovLower, "SAFAROV_LOWER", Bounded::CountingFunction, Side::Lower, ArgMode::Level, true, false},
    {CountBound::AbCountLower, "AB_COUNT_LOWER", Bounded::CountingFunction, Side::Lower, ArgMode::Level, true, false},
    {CountBound::AbCount2Lower, "AB_COUNT2_LOWER", Bounded::CountingFunction, Side::Lower, ArgMode::Level, false, false},
    {CountBound::LiYauUpper, "LIYAU_UPPER", Bounded::CountingFunction, Side::Upper, ArgMode::Level, false, true},
    {CountBound::PolyaWeylTerm, "POLYA_WEYL_TERM", Bounded::CountingFunction, Side::Upper, ArgMode::Level, false, true},
    {CountBound::BerezinRieszUpper, "BEREZIN_RIESZ_UPPER", Bounded::RieszMean, Side::Upper, ArgMode::Level, false, true},
    {CountBound::UrakawaLowerTerm, "URAKAWA_LOWER_TERM", Bounded::CountingFunction, Side::Upper, ArgMode::Level, false, true},
    {CountBound::KrogerSum, "KROGER_SUM", Bounded::EigenvalueSum, Side::Upper, ArgMode::Index, false, true},
    {CountBound::KrogerSingle, "KROGER_SINGLE", Bounded::Eigenvalue, Side::Upper, ArgMode::Index, false, true},
    {CountBound::LiYauSumLower, "LIYAU_SUM_LOWER", Bounded::EigenvalueSum, Side::Lower, ArgMode::Index, false, true},
    {CountBound::LiYauSingleLower, "LIYAU_SINGLE_LOWER", Bounded::Eigenvalue, Side::Lower, ArgMode::Index, false, true},
}};

}  // namespace

ConstantsBundle constants(Dim n) {
  const double half = n.half();
  const double j = bessel_zero(Order(half - 1.0), ZeroIndex(1));
  const double jv = bessel_j(Order(half), j);
  const double h = 2.0 * n.as_double() / (j * j * jv * jv);
  const double ball = unit_ball_volume(n);
  const double chiti = std::pow(kPi, -0.25 * n.as_double()) * std::pow(2.0, 1.0 - half) /
                       (std::sqrt(gamma(half)) * j * std::abs(jv));
  const double j_next = bessel_zero(Order(half), ZeroIndex(1));
  return ConstantsBundle{
      .n = n,
      .ball_volume = ball,
      .semiclassical = semiclassical_constant(n),
      .first_zero = j,
      .bessel_at_zero = jv,
      .weyl_constant = h,
      .scaled_constant = h * ball,
      .chiti_coeff = chiti,
      .ball_ratio = (j_next / j) * (j_next / j),
  };
}

double gap_bound(GapBound variant, const ConstantsBundle& c, long k, double lambda1) {
  require_index(k);
  require_positive(lambda1, "lambda1");
  const double n = c.n.as_double();
  const double kd = static_cast<double>(k);
  switch (variant) {
    case GapBound::New1:
      return std::pow(1.0 + 0.5 * n, 2.0 / n) * h_two_over_n(c) * lambda1 * std::pow(kd, 2.0 / n);
    case GapBound::New2Sum:
      return gap_sum_bound(c, k, lambda1);
    case GapBound::New4:
      return (1.0 + 4.0 / n) * (1.0 + n / (n + 2.0) * h_two_over_n(c) * std::pow(kd, 2.0 / n)) *
             lambda1;
    case GapBound::NotPpw:
      if (k != 1) throw std::invalid_argument("NOT_PPW is a k = 1 bound");
      return std::pow(2.0, 1.0 + 2.0 / n) * n / (n + 2.0) * h_two_over_n(c) * lambda1;
    case GapBound::NotPpw2:
      if (k != 1) throw std::invalid_argument("NOT_PPW2 is a k = 1 bound");
      return gap_bound(GapBound::New1, c, 1, lambda1);
    case GapBound::PpwRatio:
      return std::pow(1.0 + 4.0 / n, kd - 1.0) * lambda1;
    case GapBound::Ab94Ratio:
      return std::pow(c.ball_ratio, static_cast<double>(floor_log2(k))) * lambda1;
    case GapBound::SumKEqN:
      return 4.0 * lambda1;
  }
  throw std::invalid_argument("unknown gap bound variant");
}

double gap_bound(GapBound variant, Dim n, long k, double lambda1) {
  return gap_bound(variant, constants(n), k, lambda1);
}

double gap_sum_bound(const ConstantsBundle& c, long k, double lambda1) {
  require_index(k);
  require_positive(lambda1, "lambda1");
  const double n = c.n.as_double();
  return n / (n + 2.0) * h_two_over_n(c) * lambda1 * std::pow(static_cast<double>(k), 1.0 + 2.0 / n);
}

double gap_sum_bound(Dim n, long k, double lambda1) {
  return gap_sum_bound(constants(n), k, lambda1);
}

double reciprocal_gap_lower(ReciprocalBound variant, const ConstantsBundle& c, long k,
                            double lambda1) {
  require_positive(lambda1, "lambda1");
  const double n = c.n.as_double();
  switch (variant) {
    case ReciprocalBound::New3: {
      require_index(k);
      const double kd = static_cast<double>(k);
      return (n + 2.0) / n / h_two_over_n(c) / lambda1 * kd * kd /
             std::pow(kd + 1.0, 1.0 + 2.0 / n);
    }
    case ReciprocalBound::AbChiti:
      return (2.0 * c.first_zero * c.first_zero + n * (n - 4.0)) / (6.0 * lambda1);
  }
  throw std::invalid_argument("unknown reciprocal bound variant");
}

double reciprocal_gap_lower(ReciprocalBound variant, Dim n, long k, double lambda1) {
  return reciprocal_gap_lower(variant, constants(n), k, lambda1);
}

std::span<const CountBoundInfo> count_bound_table() { return kCountTable; }

const CountBoundInfo& info(CountBound variant) {
  for (const auto& entry : kCountTable) {
    if (entry.id == variant) return entry;
  }
  throw std::invalid_argument("unknown counting bound variant");
}

double counting_bound(CountBound variant, const ConstantsBundle& c, const CountingArgs& args) {
  const CountBoundInfo& meta = info(variant);
  const double n = c.n.as_double();
  const double half = c.n.half();

  if (meta.mode == ArgMode::Level && !(args.lambda >= 0.0)) {
    throw std::invalid_argument(std::string(meta.name) + ": lambda must be >= 0");
  }
  if (meta.needs_lambda1) {
    require_positive(args.lambda1, "lambda1");
    if (args.lambda < args.lambda1) {
      throw std::invalid_argument(std::string(meta.name) + " requires lambda >= lambda1");
    }
  }
  if (meta.needs_volume) {
    require_positive(args.volume, "volume");
  }

  const double lam = args.lambda;
  switch (variant) {
    case CountBound::Count1Lower:
      return 2.0 / (n + 2.0) / c.weyl_constant * std::pow((lam - args.lambda1) / args.lambda1, half);
    case CountBound::Count2Lower: {
      const double excess = lam - (1.0 + 4.0 / n) * args.lambda1;
      if (excess <= 0.0) return 0.0;
      return std::pow((n + 2.0) / (n + 4.0), half) / c.weyl_constant *
             std::pow(excess / args.lambda1, half);
    }
    case CountBound::SafarovLower:
      return 2.0 / (n + 2.0) * std::exp(-1.0 / (4.0 * kPi)) * c.semiclassical *
             std::pow((lam - args.lambda1) / args.lambda1, half);
    case CountBound::AbCountLower:
      return std::exp2(std::floor(std::log(lam / args.lambda1) / std::log(c.ball_ratio)));
    case CountBound::AbCount2Lower:
      require_positive(args.lambda2, "lambda2");
      if (lam < args.lambda2) {
        throw std::invalid_argument("AB_COUNT2_LOWER requires lambda >= lambda2");
      }
      return std::exp2(1.0 + std::floor(std::log(lam / args.lambda2) / std::log(c.ball_ratio)));
    case CountBound::LiYauUpper:
      return std::pow((n + 2.0) / n, half) * c.semiclassical * std::pow(lam, half) * args.volume;
    case CountBound::PolyaWeylTerm:
      return c.semiclassical * std::pow(lam, half) * args.volume;
    case CountBound::BerezinRieszUpper:
      return riesz_bound_berezin(c, lam, args.volume);
    case CountBound::UrakawaLowerTerm:
      if (!(args.packing_density > 0.0 && args.packing_density <= 1.0)) {
        throw std::invalid_argument("packing density must lie in (0, 1]");
      }
      return c.semiclassical * std::pow(lam, half) * args.volume / args.packing_density;
    case CountBound::KrogerSum:
    case CountBound::LiYauSumLower: {
      const double k = static_cast<double>(index_from(lam));
      return n / (n + 2.0) * weyl_scale(c, args.volume) * std::pow(k, 1.0 + 2.0 / n);
    }
    case CountBound::KrogerSingle: {
      const double k = static_cast<double>(index_from(lam));
      return std::pow(1.0 + half, 2.0 / n) * weyl_scale(c, args.volume) * std::pow(k, 2.0 / n);
    }
    case CountBound::LiYauSingleLower: {
      const double k = static_cast<double>(index_from(lam));
      return n / (n + 2.0) * weyl_scale(c, args.volume) * std::pow(k, 2.0 / n);
    }
  }
  throw std::invalid_argument("unknown counting bound variant");
}

double counting_bound(CountBound variant, Dim n, const CountingArgs& args) {
  return counting_bound(variant, constants(n), args);
}

double riesz_bound_berezin(const ConstantsBundle& c, double lam, double volume) {
  if (!(lam >= 0.0)) throw std::invalid_argument("BEREZIN: lambda must be >= 0");
  require_positive(volume, "volume");
  const double n = c.n.as_double();
  return 2.0 / (n + 2.0) * c.semiclassical * std::pow(lam, 0.5 * n + 1.0) * volume;
}

double riesz_bound_berezin(Dim n, double lam, double volume) {
  return riesz_bound_berezin(constants(n), lam, volume);
}

double weyl_eigenvalue_term(const ConstantsBundle& c, double k, double volume) {
  require_positive(volume, "volume");
  if (!(k >= 0.0)) throw std::invalid_argument("k must be >= 0");
  return weyl_scale(c, volume) * std::pow(k, 2.0 * inv_n(c));
}

double lemma_min_radius(const ConstantsBundle& c, long k, double lambda1) {
  require_index(k);
  require_positive(lambda1, "lambda1");
  return std::pow(c.weyl_constant * (1.0 + static_cast<double>(k)), inv_n(c)) * std::sqrt(lambda1);
}

double lemma_new1_radius(const ConstantsBundle& c, long k, double lambda1) {
  require_index(k);
  require_positive(lambda1, "lambda1");
  return std::pow((1.0 + c.n.half()) * c.weyl_constant * static_cast<double>(k), inv_n(c)) *
         std::sqrt(lambda1);
}

double lemma_bound_family(const ConstantsBundle& c, long k, double r, double lambda1,
                          double gap_sum) {
  require_index(k);
  require_positive(lambda1, "lambda1");
  if (!(gap_sum >= 0.0)) throw std::invalid_argument("gap_sum must be >= 0");
  const double r_min = lemma_min_radius(c, k, lambda1);
  if (!(r >= r_min * (1.0 - 1e-12))) {
    throw std::invalid_argument("lemma radius below the admissible minimum");
  }
  const double n = c.n.as_double();
  const double mass = c.scaled_constant * std::pow(lambda1, 0.5 * n);
  const double numerator = n / (n + 2.0) * c.ball_volume * std::pow(r, n + 2.0) - mass * gap_sum;
  const double denominator = c.ball_volume * std::pow(r, n) - static_cast<double>(k) * mass;
  if (!(denominator > 0.0)) {
    throw std::invalid_argument("lemma denominator is not positive at this radius");
  }
  return numerator / denominator;
}

double lemma_bound_family(Dim n, long k, double r, double lambda1, double gap_sum) {
  return lemma_bound_family(constants(n), k, r, lambda1, gap_sum);
}

int expansion_terms(Expansion id) {
  switch (id) {
    case Expansion::Asymp1:
    case Expansion::New4Exp:
      return 3;
    case Expansion::PpwExp:
      return 5;
    case Expansion::AbPower:
      return 2;
  }
  throw std::invalid_argument("unknown expansion");
}

double expansion_remainder_exponent(Expansion id) {
  switch (id) {
    case Expansion::Asymp1:
    case Expansion::New4Exp:
    case Expansion::AbPower:
      return -2.0;
    case Expansion::PpwExp:
      return -8.0 / 3.0;
  }
  throw std::invalid_argument("unknown expansion");
}

double asymptotic_coefficient(Expansion id, Dim dim, int order) {
  if (order < 1 || order > expansion_terms(id)) {
    throw std::invalid_argument("expansion order out of range");
  }
  const double n = dim.as_double();
  const double b0_6 = std::pow(kB0, 6.0);
  const double tail = std::pow(2.0, 8.0 / 3.0) * (kB1 - kC1) * std::pow(n, -5.0 / 3.0);
  std::vector<double> terms;
  switch (id) {
    case Expansion::Asymp1:
      terms = {1.0, 2.0 / (3.0 * n) * std::log(4.0 * std::pow(n, 4.0) / b0_6), tail};
      break;
    case Expansion::New4Exp:
      terms = {1.0, 2.0 / (3.0 * n) * (3.0 + std::log(32.0 * n / b0_6)), tail};
      break;
    case Expansion::PpwExp:
      terms = {1.0, 4.0 / n,
               -4.0 / 3.0 * kC1 * std::pow(2.0, 5.0 / 3.0) * std::pow(n, -5.0 / 3.0),
               12.0 / (n * n),
               4.0 / 3.0 * (kC1 * kC1 - 2.0 * kC2) * std::pow(2.0, 7.0 / 3.0) *
                   std::pow(n, -7.0 / 3.0)};
      break;
    case Expansion::AbPower:
      terms = {5.77078 / n, -6.10703 * kC1 * std::pow(n, -5.0 / 3.0)};
      break;
  }
  double sum = 0.0;
  for (int i = 0; i < order; ++i) sum += terms[static_cast<std::size_t>(i)];
  return sum;
}

double exact_coefficient(Expansion id, const ConstantsBundle& c) {
  const double n = c.n.as_double();
  switch (id) {
    case Expansion::Asymp1:
      return std::pow(1.0 + 0.5 * n, 2.0 / n) * h_two_over_n(c);
    case Expansion::New4Exp:
      return (1.0 + 4.0 / n) * n / (n + 2.0) * h_two_over_n(c);
    case Expansion::PpwExp:
      return c.ball_ratio;
    case Expansion::AbPower:
      return std::log(c.ball_ratio) / std::log(2.0);
  }
  throw std::invalid_argument("unknown expansion");
}

double exact_coefficient(Expansion id, Dim n) { return exact_coefficient(id, constants(n)); }

std::string_view name(GapBound variant) {
  switch (variant) {
    case GapBound::New1: return "NEW1";
    case GapBound::New2Sum: return "NEW2_SUM";
    case GapBound::New4: return "NEW4";
    case GapBound::NotPpw: return "NOT_PPW";
    case GapBound::NotPpw2: return "NOT_PPW2";
    case GapBound::PpwRatio: return "PPW_RATIO";
    case GapBound::Ab94Ratio: return "AB94_RATIO";
    case GapBound::SumKEqN: return "SUM_K_EQ_N";
  }
  return "?";
}

std::string_view name(ReciprocalBound variant) {
  switch (variant) {
    case ReciprocalBound::New3: return "NEW3";
    case ReciprocalBound::AbChiti: return "ABCHITI";
  }
  return "?";
}

std::string_view name(CountBound variant) { return info(variant).name; }

std::string_view name(Expansion id) {
  switch (id) {
    case Expansion::Asymp1: return "ASYMP1";
    case Expansion::New4Exp: return "NEW4_EXP";
    case Expansion::PpwExp: return "PPW_EXP";
    case Expansion::AbPower: return "AB_POWER";
  }
  return "?";
}

namespace {

template <GapBound V>
double eval_gap(const ConstantsBundle& c, const BoundInputs& in) {
  return gap_bound(V, c, in.k, in.lambda1);
}

template <ReciprocalBound V>
double eval_reciprocal(const ConstantsBundle& c, const BoundInputs& in) {
  return reciprocal_gap_lower(V, c, in.k, in.lambda1);
}

template <CountBound V>
double eval_count(const ConstantsBundle& c, const BoundInputs& in) {
  CountingArgs args{.lambda = in.lambda,
                    .lambda1 = in.lambda1,
                    .lambda2 = in.lambda2,
                    .volume = in.volume,
                    .packing_density = in.packing_density};
  if (info(V).mode == ArgMode::Index) args.lambda = static_cast<double>(in.k);
  return counting_bound(V, c, args);
}

double eval_lemma(const ConstantsBundle& c, const BoundInputs& in) {
  const double r = in.radius.value_or(lemma_min_radius(c, in.k, in.lambda1));
  return lemma_bound_family(c, in.k, r, in.lambda1, in.gap_sum);
}

}  // namespace

std::span<const CatalogEntry> bound_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> out = {
        {name(GapBound::New1), "lambda_{k+1} - lambda_1 (upper)", &eval_gap<GapBound::New1>},
        {name(GapBound::New2Sum), "sum_{j<=k} (lambda_j - lambda_1) (upper)", &eval_gap<GapBound::New2Sum>},
        {name(GapBound::New4), "lambda_{k+1} (upper)", &eval_gap<GapBound::New4>},
        {name(GapBound::NotPpw), "lambda_2 - lambda_1 (upper, k = 1)", &eval_gap<GapBound::NotPpw>},
        {name(GapBound::NotPpw2), "lambda_2 - lambda_1 (upper, k = 1)", &eval_gap<GapBound::NotPpw2>},
        {name(GapBound::PpwRatio), "lambda_k (upper)", &eval_gap<GapBound::PpwRatio>},
        {name(GapBound::Ab94Ratio), "lambda_k (upper)", &eval_gap<GapBound::Ab94Ratio>},
        {name(GapBound::SumKEqN), "sum_{j=1}^{n} (lambda_{j+1} - lambda_1) (upper)", &eval_gap<GapBound::SumKEqN>},
        {name(ReciprocalBound::New3), "sum_{j=2}^{k+1} 1/(lambda_j - lambda_1) (lower)", &eval_reciprocal<ReciprocalBound::New3>},
        {name(ReciprocalBound::AbChiti), "sum_{j=1}^{n} 1/(lambda_{j+1} - lambda_1) (lower)", &eval_reciprocal<ReciprocalBound::AbChiti>},
        {name(CountBound::Count1Lower), "N(lambda) (strict lower)", &eval_count<CountBound::Count1Lower>},
        {name(CountBound::Count2Lower), "N(lambda) (strict lower)", &eval_count<CountBound::Count2Lower>},
        {name(CountBound::SafarovLower), "N(lambda) (lower)", &eval_count<CountBound::SafarovLower>},
        {name(CountBound::AbCountLower), "N(lambda) (lower)", &eval_count<CountBound::AbCountLower>},
        {name(CountBound::AbCount2Lower), "N(lambda), lambda >= lambda2 (lower)", &eval_count<CountBound::AbCount2Lower>},
        {name(CountBound::LiYauUpper), "N(lambda) (upper)", &eval_count<CountBound::LiYauUpper>},
        {name(CountBound::PolyaWeylTerm), "N(lambda) (upper, tiling domains)", &eval_count<CountBound::PolyaWeylTerm>},
        {name(CountBound::BerezinRieszUpper), "sum_j (lambda - lambda_j)_+ (upper)", &eval_count<CountBound::BerezinRieszUpper>},
        {name(CountBound::UrakawaLowerTerm), "N(lambda) (upper; counting form of lambda_k lower bound)", &eval_count<CountBound::UrakawaLowerTerm>},
        {name(CountBound::KrogerSum), "sum_{i<=k} mu_i (upper, Neumann)", &eval_count<CountBound::KrogerSum>},
        {name(CountBound::KrogerSingle), "mu_{k+1} (upper, Neumann)", &eval_count<CountBound::KrogerSingle>},
        {name(CountBound::LiYauSumLower), "sum_{i<=k} lambda_i (lower)", &eval_count<CountBound::LiYauSumLower>},
        {name(CountBound::LiYauSingleLower), "lambda_k (lower)", &eval_count<CountBound::LiYauSingleLower>},
        {"LEMMA_FAMILY", "lambda_{k+1} - lambda_1 (upper, radius family)", &eval_lemma},
    };
    return out;
  }();
  return catalog;
}

const CatalogEntry* find_bound(std::string_view wanted) {
  for (const auto& entry : bound_catalog()) {
    if (entry.name == wanted) return &entry;
  }
  return nullptr;
}

}  // namespace weyl
