#include "weyl/audit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "weyl/bounds.hpp"

namespace weyl {

namespace {

constexpr double kPi = std::numbers::pi;

struct Context {
  std::string_view id;
  const Spectrum& spec;
  const ConstantsBundle& c;
  IndexRange range;
  const LevelGrid* grid;
  const Spectrum* partner;
  std::vector<double> prefix;  // prefix[k] = lambda_1 + ... + lambda_k
  std::vector<AuditReport>& out;

  double n() const { return c.n.as_double(); }
  double lam(long k) const { return spec.eigenvalue(k); }
  double lambda1() const { return spec.eigenvalue(1); }
  double volume() const { return spec.volume(); }
  double sum(long k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= prefix.size()) {
      throw std::out_of_range(fmt::format("partial sum of {} eigenvalues is unavailable", k));
    }
    return prefix[static_cast<std::size_t>(k)];
  }
  void add(double parameter, double bound, double oracle, Direction d, bool strict = false) const {
    out.push_back(make_report(id, spec.domain(), parameter, bound, oracle, d, strict));
  }
  template <class F>
  void each_k(F&& f) const {
    for (long k = range.first; k <= range.last; ++k) f(k);
  }
  template <class F>
  void each_level(F&& f) const {
    for (double l : *grid) f(l);
  }
  double counting(CountBound v, double lambda) const {
    CountingArgs a{.lambda = lambda, .lambda1 = lambda1(), .volume = volume()};
    if (spec.size() > 1) a.lambda2 = lam(2);
    return counting_bound(v, c, a);
  }
};

constexpr Direction kUpper = Direction::UpperOnOracle;
constexpr Direction kLower = Direction::LowerOnOracle;

double packing_density(const DomainSpec& d) {
  if (d.kind() == DomainSpec::Kind::Box) return 1.0;
  switch (d.dim().value()) {
    case 2: return kPi / std::sqrt(12.0);
    case 3: return kPi / std::sqrt(18.0);
    case 4: return kPi * kPi / 16.0;
    default:
      throw std::invalid_argument(
          fmt::format("no lattice packing density on record for the {}-ball", d.dim().value()));
  }
}

// ---- index checks (Dirichlet) ------------------------------------------------

void new1(const Context& x) {
  x.each_k([&](long k) {
    x.add(k, gap_bound(GapBound::New1, x.c, k, x.lambda1()), x.lam(k + 1) - x.lambda1(), kUpper);
  });
}

void new2_sum(const Context& x) {
  x.each_k([&](long k) {
    x.add(k, gap_sum_bound(x.c, k, x.lambda1()), x.sum(k) - k * x.lambda1(), kUpper);
  });
}

void new3(const Context& x) {
  double acc = 0.0;
  for (long j = 2; j <= x.range.first; ++j) acc += 1.0 / (x.lam(j) - x.lambda1());
  x.each_k([&](long k) {
    acc += 1.0 / (x.lam(k + 1) - x.lambda1());
    x.add(k, reciprocal_gap_lower(ReciprocalBound::New3, x.c, k, x.lambda1()), acc, kLower);
  });
}

void new4(const Context& x) {
  x.each_k([&](long k) {
    x.add(k, gap_bound(GapBound::New4, x.c, k, x.lambda1()), x.lam(k + 1), kUpper);
  });
}

void ppw_recursion(const Context& x) {
  x.each_k([&](long k) {
    x.add(k, 4.0 / (x.n() * k) * x.sum(k), x.lam(k + 1) - x.lam(k), kUpper);
  });
}

void ppw_ratio(const Context& x) {
  x.each_k([&](long k) {
    x.add(k, gap_bound(GapBound::PpwRatio, x.c, k, x.lambda1()), x.lam(k), kUpper);
  });
}

void yang(const Context& x) {
  x.each_k([&](long k) {
    x.add(k, (1.0 + 4.0 / x.n()) * x.sum(k) / k, x.lam(k + 1), kUpper);
  });
}

void ab94(const Context& x) {
  x.each_k([&](long k) {
    x.add(k, gap_bound(GapBound::Ab94Ratio, x.c, k, x.lambda1()), x.lam(k), kUpper);
  });
}

void liyau_sum(const Context& x) {
  x.each_k([&](long k) {
    CountingArgs a{.lambda = static_cast<double>(k), .volume = x.volume()};
    x.add(k, counting_bound(CountBound::LiYauSumLower, x.c, a), x.sum(k), kLower);
  });
}

void liyau_single(const Context& x) {
  x.each_k([&](long k) {
    CountingArgs a{.lambda = static_cast<double>(k), .volume = x.volume()};
    x.add(k, counting_bound(CountBound::LiYauSingleLower, x.c, a), x.lam(k), kLower);
  });
}

void polya_dirichlet(const Context& x) {
  x.each_k([&](long k) {
    x.add(k, weyl_eigenvalue_term(x.c, static_cast<double>(k), x.volume()), x.lam(k), kLower);
  });
}

void lemma_family(const Context& x) {
  x.each_k([&](long k) {
    const double r0 = lemma_min_radius(x.c, k, x.lambda1());
    const double gap_sum = x.sum(k) - k * x.lambda1();
    const double oracle = x.lam(k + 1) - x.lambda1();
    for (int i = 0; i < 10; ++i) {
      const double r = r0 * (1.0 + 2.0 * i / 9.0);
      x.add(k, lemma_bound_family(x.c, k, r, x.lambda1(), gap_sum), oracle, kUpper);
    }
  });
}

void laptev4(const Context& x) {
  const double half = x.c.n.half();
  x.each_k([&](long k) {
    const double mean = x.sum(k) / k;
    const double lhs = (1.0 + half) * x.c.weyl_constant * std::pow(x.lambda1(), half) * k *
                       (x.lam(k + 1) - mean);
    x.add(k, lhs, std::pow(x.lam(k + 1) - x.lambda1(), 1.0 + half), kUpper);
  });
}

// ---- index checks (Neumann) --------------------------------------------------

void kroger_sum(const Context& x) {
  x.each_k([&](long k) {
    CountingArgs a{.lambda = static_cast<double>(k), .volume = x.volume()};
    x.add(k, counting_bound(CountBound::KrogerSum, x.c, a), x.sum(k), kUpper);
  });
}

void kroger_single(const Context& x) {
  x.each_k([&](long k) {
    CountingArgs a{.lambda = static_cast<double>(k), .volume = x.volume()};
    x.add(k, counting_bound(CountBound::KrogerSingle, x.c, a), x.lam(k + 1), kUpper);
  });
}

void polya_neumann(const Context& x) {
  x.each_k([&](long k) {
    x.add(k, weyl_eigenvalue_term(x.c, static_cast<double>(k), x.volume()), x.lam(k + 1), kUpper);
  });
}

void friedlander(const Context& x) {
  if (x.partner == nullptr) {
    throw std::invalid_argument("FRIEDLANDER needs the Dirichlet spectrum of the same domain");
  }
  x.each_k([&](long k) { x.add(k, x.partner->eigenvalue(k), x.lam(k + 1), kUpper); });
}

// ---- fixed checks (Dirichlet) ------------------------------------------------

void not_ppw(const Context& x) {
  x.add(1, gap_bound(GapBound::NotPpw, x.c, 1, x.lambda1()), x.lam(2) - x.lambda1(), kUpper);
}

void not_ppw2(const Context& x) {
  x.add(1, gap_bound(GapBound::NotPpw2, x.c, 1, x.lambda1()), x.lam(2) - x.lambda1(), kUpper);
}

void ab_ineq(const Context& x) {
  x.add(1, x.c.ball_ratio * x.lambda1(), x.lam(2), kUpper);
}

void sum_k_eq_n(const Context& x) {
  const long n = x.c.n.value();
  double gaps = 0.0;
  for (long j = 1; j <= n; ++j) gaps += x.lam(j + 1) - x.lambda1();
  x.add(static_cast<double>(n), gap_bound(GapBound::SumKEqN, x.c, n, x.lambda1()), gaps, kUpper);
}

void abchiti(const Context& x) {
  const long n = x.c.n.value();
  double acc = 0.0;
  for (long j = 1; j <= n; ++j) acc += 1.0 / (x.lam(j + 1) - x.lambda1());
  x.add(static_cast<double>(n), reciprocal_gap_lower(ReciprocalBound::AbChiti, x.c, n, x.lambda1()),
        acc, kLower);
}

// ---- level checks (Dirichlet) ------------------------------------------------

template <CountBound V, Direction D, bool Strict>
void counting_check(const Context& x) {
  x.each_level([&](double l) {
    x.add(l, x.counting(V, l), static_cast<double>(counting_function(x.spec, l)), D, Strict);
  });
}

void ab_count2(const Context& x) {
  x.each_level([&](double l) {
    if (l < x.lam(2)) return;
    x.add(l, x.counting(CountBound::AbCount2Lower, l),
          static_cast<double>(counting_function(x.spec, l)), kLower);
  });
}

void urakawa(const Context& x) {
  const double delta = packing_density(x.spec.domain());
  x.each_level([&](double l) {
    CountingArgs a{.lambda = l, .volume = x.volume(), .packing_density = delta};
    x.add(l, counting_bound(CountBound::UrakawaLowerTerm, x.c, a),
          static_cast<double>(counting_function(x.spec, l)), kUpper);
  });
}

void berezin(const Context& x) {
  x.each_level([&](double l) {
    x.add(l, riesz_bound_berezin(x.c, l, x.volume()), riesz_mean_1(x.spec, l), kUpper);
  });
}

void laptev_chiti(const Context& x) {
  const double n = x.n();
  const double l1 = x.lambda1();
  const double u2 = x.c.weyl_constant * x.c.semiclassical * std::pow(l1, 0.5 * n);
  x.each_level([&](double l) {
    const double bound = std::pow(l - l1, 1.0 + 0.5 * n) * x.c.semiclassical * 2.0 / (n + 2.0) / u2;
    x.add(l, bound, riesz_mean_1(x.spec, l), kLower);
  });
}

struct CheckImpl {
  AuditCheck meta;
  void (*run)(const Context&);
};

constexpr Boundary D = Boundary::Dirichlet;
constexpr Boundary N = Boundary::Neumann;
constexpr ParamKind I = ParamKind::Index;
constexpr ParamKind L = ParamKind::Level;
constexpr ParamKind F = ParamKind::Fixed;

const std::vector<CheckImpl>& checks() {
  static const std::vector<CheckImpl> table = {
      {{"NEW1", I, D, false, false, "lambda_{k+1} - lambda_1 <= NEW1(k)"}, &new1},
      {{"NEW2_SUM", I, D, false, false, "sum_{j<=k} (lambda_j - lambda_1) <= NEW2_SUM(k)"}, &new2_sum},
      {{"NEW3", I, D, false, false, "sum_{j=2}^{k+1} 1/(lambda_j - lambda_1) >= NEW3(k)"}, &new3},
      {{"NEW4", I, D, false, false, "lambda_{k+1} <= NEW4(k)"}, &new4},
      {{"NOT_PPW", F, D, false, false, "lambda_2 - lambda_1 <= NOT_PPW"}, &not_ppw},
      {{"NOT_PPW2", F, D, false, false, "lambda_2 - lambda_1 <= NOT_PPW2"}, &not_ppw2},
      {{"SUM_K_EQ_N", F, D, false, false, "sum_{j=1}^{n} (lambda_{j+1} - lambda_1) <= 4 lambda_1"}, &sum_k_eq_n},
      {{"ABCHITI", F, D, false, false, "sum_{j=1}^{n} 1/(lambda_{j+1} - lambda_1) >= ABCHITI"}, &abchiti},
      {{"AB_INEQ", F, D, false, false, "lambda_2 <= (j_{n/2,1}/j_{n/2-1,1})^2 lambda_1"}, &ab_ineq},
      {{"PPW_RECURSION", I, D, false, false, "lambda_{k+1} - lambda_k <= 4/(nk) sum_{j<=k} lambda_j"}, &ppw_recursion},
      {{"PPW_RATIO", I, D, false, false, "lambda_k <= (1+4/n)^{k-1} lambda_1"}, &ppw_ratio},
      {{"YANG", I, D, false, false, "lambda_{k+1} <= (1+4/n) (1/k) sum_{j<=k} lambda_j"}, &yang},
      {{"AB94", I, D, false, false, "lambda_k <= ab_ratio^{[log2 k]} lambda_1"}, &ab94},
      {{"LIYAU_SUM", I, D, false, false, "sum_{i<=k} lambda_i >= LIYAU_SUM_LOWER(k)"}, &liyau_sum},
      {{"LIYAU_SINGLE", I, D, false, false, "lambda_k >= LIYAU_SINGLE_LOWER(k)"}, &liyau_single},
      {{"POLYA_DIRICHLET", I, D, true, false, "lambda_k >= 4 pi^2 k^{2/n} / (C_n |Omega|)^{2/n}"}, &polya_dirichlet},
      {{"LEMMA_FAMILY", I, D, false, false, "lambda_{k+1} - lambda_1 <= family(r), r in [r0, 3 r0]"}, &lemma_family},
      {{"LAPTEV4", I, D, false, false, "(1+n/2) H lambda_1^{n/2} k (lambda_{k+1} - mean) >= (lambda_{k+1} - lambda_1)^{1+n/2}"}, &laptev4},
      {{"COUNT1", L, D, false, false, "N(lambda) > COUNT1_LOWER (strict)"}, &counting_check<CountBound::Count1Lower, kLower, true>},
      {{"COUNT2", L, D, false, false, "N(lambda) > COUNT2_LOWER (strict)"}, &counting_check<CountBound::Count2Lower, kLower, true>},
      {{"SAFAROV", L, D, false, false, "N(lambda) >= SAFAROV_LOWER"}, &counting_check<CountBound::SafarovLower, kLower, false>},
      {{"AB_COUNT", L, D, false, false, "N(lambda) >= AB_COUNT_LOWER"}, &counting_check<CountBound::AbCountLower, kLower, false>},
      {{"AB_COUNT2", L, D, false, false, "N(lambda) >= AB_COUNT2_LOWER, lambda >= lambda_2"}, &ab_count2},
      {{"LIYAU_COUNT", L, D, false, false, "N(lambda) <= LIYAU_UPPER"}, &counting_check<CountBound::LiYauUpper, kUpper, false>},
      {{"POLYA_COUNT", L, D, true, false, "N(lambda) <= POLYA_WEYL_TERM"}, &counting_check<CountBound::PolyaWeylTerm, kUpper, false>},
      {{"URAKAWA", L, D, false, false, "N(lambda) <= L_n |Omega| lambda^{n/2} / delta_L"}, &urakawa},
      {{"BEREZIN", L, D, false, false, "sum_j (lambda - lambda_j)_+ <= BEREZIN_RIESZ_UPPER"}, &berezin},
      {{"LAPTEV_CHITI", L, D, false, false, "sum_j (lambda - lambda_j)_+ >= (lambda - lambda_1)^{1+n/2} (2/(n+2)) / (H lambda_1^{n/2})"}, &laptev_chiti},
      {{"KROGER_SUM", I, N, false, false, "sum_{i<=k} mu_i <= KROGER_SUM(k)"}, &kroger_sum},
      {{"KROGER_SINGLE", I, N, false, false, "mu_{k+1} <= KROGER_SINGLE(k)"}, &kroger_single},
      {{"POLYA_NEUMANN", I, N, true, false, "mu_{k+1} <= 4 pi^2 k^{2/n} / (C_n |Omega|)^{2/n}"}, &polya_neumann},
      {{"FRIEDLANDER", I, N, false, true, "mu_{k+1} <= lambda_k"}, &friedlander},
  };
  return table;
}

const CheckImpl& find_impl(std::string_view id) {
  for (const auto& c : checks()) {
    if (c.meta.id == id) return c;
  }
  throw std::invalid_argument(fmt::format("unknown audit check '{}'", id));
}

bool is_power_of_two(double k) {
  return k >= 1.0 && std::has_single_bit(static_cast<unsigned long>(k));
}

constexpr RegisteredViolation kRegistered[] = {
    {"AB94",
     "ratio form uses [log2 k]; the underlying inequality only covers k = 2^m, so "
     "lambda_k may exceed ab_ratio^{[log2 k]} lambda_1 between powers of two",
     [](const AuditReport& r) { return !is_power_of_two(r.parameter); }},
};

}  // namespace

std::string_view name(Direction d) {
  return d == Direction::UpperOnOracle ? "UpperOnOracle" : "LowerOnOracle";
}

AuditReport make_report(std::string_view id, const DomainSpec& domain, double parameter,
                        double bound_value, double oracle_value, Direction direction,
                        bool strict) {
  const double slack =
      direction == Direction::UpperOnOracle ? bound_value - oracle_value : oracle_value - bound_value;
  bool ok;
  if (strict) {
    ok = slack > 0.0;
  } else {
    const double scale = std::max({std::abs(bound_value), std::abs(oracle_value), 1.0});
    ok = slack >= -kAuditTolerance * scale;
  }
  return AuditReport{std::string(id), domain, parameter, bound_value, oracle_value,
                     direction,       ok,     slack};
}

std::span<const AuditCheck> audit_checks() {
  static const std::vector<AuditCheck> metas = [] {
    std::vector<AuditCheck> out;
    for (const auto& c : checks()) out.push_back(c.meta);
    return out;
  }();
  return metas;
}

const AuditCheck* find_check(std::string_view id) {
  for (const auto& c : checks()) {
    if (c.meta.id == id) return &c.meta;
  }
  return nullptr;
}

std::vector<AuditReport> audit_bound(std::string_view id, const Spectrum& spec,
                                     const AuditParams& params, const Spectrum* partner) {
  const CheckImpl& impl = find_impl(id);
  const AuditCheck& meta = impl.meta;
  const DomainSpec& domain = spec.domain();
  if (domain.boundary() != meta.boundary) {
    throw std::invalid_argument(
        fmt::format("{} reads a {} spectrum, got {}", id, name(meta.boundary), domain.label()));
  }
  if (meta.boxes_only && domain.kind() != DomainSpec::Kind::Box) {
    throw std::invalid_argument(fmt::format("{} applies to tiling domains only", id));
  }

  IndexRange range{1, 0};
  const LevelGrid* grid = nullptr;
  if (meta.kind == ParamKind::Index) {
    const auto* r = std::get_if<IndexRange>(&params);
    if (r == nullptr) throw std::invalid_argument(fmt::format("{} takes an index range", id));
    if (r->first < 1 || r->last < r->first) throw std::invalid_argument("bad index range");
    range = *r;
  } else if (meta.kind == ParamKind::Level) {
    grid = std::get_if<LevelGrid>(&params);
    if (grid == nullptr) throw std::invalid_argument(fmt::format("{} takes a level grid", id));
    for (double l : *grid) {
      if (l < spec.eigenvalue(1) || l > spec.cutoff()) {
        throw std::out_of_range(fmt::format("{}: level {} outside [lambda_1, cutoff]", id, l));
      }
    }
  }

  const ConstantsBundle c = constants(domain.dim());
  std::vector<double> prefix(spec.size() + 1, 0.0);
  for (std::size_t i = 0; i < spec.size(); ++i) prefix[i + 1] = prefix[i] + spec.eigenvalues()[i];

  std::vector<AuditReport> out;
  Context ctx{id, spec, c, range, grid, partner, std::move(prefix), out};
  impl.run(ctx);
  return out;
}

std::span<const RegisteredViolation> registered_violations() { return kRegistered; }

const RegisteredViolation* registration_for(const AuditReport& report) {
  if (report.satisfied) return nullptr;
  for (const auto& r : kRegistered) {
    if (r.bound_id == report.bound_id && r.matches(report)) return &r;
  }
  return nullptr;
}

LevelGrid level_grid(const Spectrum& spec, int points) {
  if (points < 2) throw std::invalid_argument("a level grid needs at least two points");
  const double lo = spec.eigenvalue(1);
  const double hi = spec.cutoff();
  LevelGrid grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  grid.back() = hi;
  return grid;
}

std::vector<SuiteDomain> default_suite() {
  std::vector<SuiteDomain> suite;
  for (const auto& sides : std::vector<std::vector<double>>{{1, 1}, {1, 2}, {1, 1, 1}, {1, 2, 3}}) {
    suite.push_back({DomainSpec::box(sides, Boundary::Dirichlet), 501});
    suite.push_back({DomainSpec::box(sides, Boundary::Neumann), 501});
  }
  for (int n : {2, 3, 4}) suite.push_back({DomainSpec::ball(Dim(n), 1.0), 201});
  return suite;
}

namespace {

std::vector<AuditReport> audit_domain(const SuiteDomain& entry, int grid_points) {
  const Spectrum spec = make_spectrum(entry.domain, entry.count);
  std::optional<Spectrum> partner;
  const long last = static_cast<long>(entry.count) - 1;
  const LevelGrid grid = level_grid(spec, grid_points);

  std::vector<AuditReport> out;
  for (const auto& c : checks()) {
    const AuditCheck& m = c.meta;
    if (m.boundary != entry.domain.boundary()) continue;
    if (m.boxes_only && entry.domain.kind() != DomainSpec::Kind::Box) continue;
    if (m.needs_partner && !partner) {
      partner = box_spectrum(entry.domain.sides(), Boundary::Dirichlet, entry.count);
    }
    AuditParams params = IndexRange{1, last};
    if (m.kind == ParamKind::Level) params = grid;
    auto reports = audit_bound(m.id, spec, params, partner ? &*partner : nullptr);
    out.insert(out.end(), std::make_move_iterator(reports.begin()),
               std::make_move_iterator(reports.end()));
  }
  return out;
}

}  // namespace

SuiteResult run_suite(const std::vector<SuiteDomain>& suite, int grid_points) {
  std::vector<std::future<std::vector<AuditReport>>> jobs;
  jobs.reserve(suite.size());
  for (const auto& entry : suite) {
    jobs.push_back(std::async(std::launch::async, audit_domain, std::cref(entry), grid_points));
  }
  SuiteResult result;
  for (auto& job : jobs) {
    auto reports = job.get();
    result.reports.insert(result.reports.end(), std::make_move_iterator(reports.begin()),
                          std::make_move_iterator(reports.end()));
  }
  for (const auto& r : result.reports) {
    if (r.satisfied) continue;
    if (registration_for(r) != nullptr) {
      ++result.registered;
    } else {
      ++result.violations;
    }
  }
  return result;
}

void write_csv_header(std::ostream& out) {
  out << "bound_id,domain,parameter,bound_value,oracle_value,direction,satisfied,slack\n";
}

void write_csv(const AuditReport& r, std::ostream& out) {
  out << fmt::format("{},{},{:.12g},{:.12g},{:.12g},{},{},{:.12g}\n", r.bound_id, r.domain.label(),
                     r.parameter, r.bound_value, r.oracle_value, name(r.direction),
                     r.satisfied ? "true" : "false", r.slack);
}

void write_csv(std::span<const AuditReport> reports, std::ostream& out) {
  write_csv_header(out);
  for (const auto& r : reports) write_csv(r, out);
}

}  // namespace weyl
