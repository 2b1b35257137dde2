// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are fixed
// here and not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "weyl/audit.hpp"
#include "weyl/bounds.hpp"
#include "weyl/identities.hpp"
#include "weyl/specfun.hpp"
#include "weyl/tables.hpp"

using namespace weyl;

namespace {

constexpr double kTable2Abs = 1e-6;
constexpr double kTable1Abs = 1e-6;
constexpr double kTableSeconds = 1.0;
constexpr double kZeroAbs = 1e-12;
constexpr double kSuiteSeconds = 60.0;
constexpr double kLegendreRel = 1e-8;
constexpr double kRieszRel = 1e-10;
constexpr double kSlopeWindow = 0.3;
constexpr double kLimitAbs = 1e-12;
constexpr double kRatioAbs = 1e-4;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, std::string what) {
    if (!ok) {
      pass = false;
      notes.push_back(std::move(what));
    }
  }
  void info(std::string what) { notes.push_back(std::move(what)); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Cells of `table` are compared at `abs_tol` (or at printed precision when
// abs_tol is 0). Cells in `allowed` may disagree but must report a value.
void check_table(Outcome& o, TableId table, double abs_tol,
                 const std::set<std::pair<int, std::string>>& allowed) {
  for (const auto& c : reproduce_table(table)) {
    const double tol = abs_tol > 0.0 ? abs_tol : c.tolerance;
    const bool close = std::abs(c.derived - c.printed_value) <= tol;
    const std::string where = fmt::format("{} n={} {}", name(table), c.n, c.column);
    if (allowed.count({c.n, c.column}) != 0) {
      o.require(!close && c.status == CellStatus::Anomaly, where + ": expected a reported anomaly");
      o.info(fmt::format("{}: printed {} derived {:.7g} (allowed)", where, c.printed, c.derived));
      continue;
    }
    if (!close) {
      o.require(false, fmt::format("{}: printed {} derived {:.7g} tol {:.3g}", where, c.printed, c.derived, tol));
    }
  }
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  check_table(o, TableId::Table2Chiti, kTable2Abs, {});
  const double s = seconds_since(t0);
  o.require(s < kTableSeconds, fmt::format("runtime {:.3f} s", s));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  check_table(o, TableId::Table1Coeffs, kTable1Abs, {{3, "safarov"}});
  const double s = seconds_since(t0);
  o.require(s < kTableSeconds, fmt::format("runtime {:.3f} s", s));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  check_table(o, TableId::Table3L2, 0.0, {});
  check_table(o, TableId::Table4L32, 0.0, {});
  check_table(o, TableId::Table5L128, 0.0, {{6, "new1"}, {7, "new1"}});
  const double s = seconds_since(t0);
  o.require(s < kTableSeconds, fmt::format("runtime {:.3f} s", s));
  return o;
}

Outcome criterion4() {
  Outcome o;
  double worst = 0.0;
  for (long p = 1; p <= 100; ++p) {
    worst = std::max(worst, std::abs(bessel_zero(Order(0.5), ZeroIndex(p)) - p * std::numbers::pi));
  }
  o.require(worst <= kZeroAbs, fmt::format("j_(1/2,p) worst error {:.3g}", worst));
  const double j01 = std::abs(bessel_zero(Order(0.0), ZeroIndex(1)) - oracle::j01_bisection());
  o.require(j01 <= kZeroAbs, fmt::format("j_(0,1) error {:.3g}", j01));
  const double h3 = std::abs(constants(Dim(3)).weyl_constant - 3.0);
  o.require(h3 <= kZeroAbs, fmt::format("H_3 error {:.3g}", h3));
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto suite = default_suite();
  const SuiteResult result = run_suite(suite, 200);
  const double s = seconds_since(t0);
  o.require(suite.size() == 11, fmt::format("suite has {} spectra", suite.size()));
  o.require(result.clean(), fmt::format("{} unregistered violations", result.violations));
  o.require(s < kSuiteSeconds, fmt::format("runtime {:.2f} s", s));
  o.info(fmt::format("{} reports, {} registered, {:.2f} s", result.reports.size(), result.registered, s));
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (int n = 2; n <= 7; ++n) o.require(check_left_riemann(Dim(n), 10000), fmt::format("left Riemann n={}", n));

  const auto sq = box_spectrum({1, 1}, Boundary::Dirichlet, 501);
  const auto disk = ball_spectrum(Dim(2), 1.0, 201);
  for (const Spectrum* s : {&sq, &disk}) {
    for (int i = 0; i < 20; ++i) {
      const double p = 0.3 + 9.1 * i;
      const auto [num, closed] = check_legendre_identity(*s, p);
      const double rel = std::abs(num - closed) / std::max(std::abs(closed), 1.0);
      o.require(rel <= kLegendreRel, fmt::format("Legendre {} p={} rel {:.3g}", s->domain().label(), p, rel));
    }
  }

  std::mt19937_64 rng(20240611);
  for (const Spectrum* s : {&sq, &disk}) {
    const std::vector<double> ev(s->eigenvalues().begin(), s->eigenvalues().end());
    std::uniform_real_distribution<double> level(0.0, s->cutoff());
    for (int i = 0; i < 100; ++i) {
      const double lam = level(rng);
      const double r = riesz_mean_1(*s, lam);
      const double rel = std::abs(r - oracle::step_integral(ev, lam)) / std::max(r, 1.0);
      o.require(rel <= kRieszRel, fmt::format("Riesz {} lambda={:.6g} rel {:.3g}", s->domain().label(), lam, rel));
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const std::vector<Dim> dims{Dim(50), Dim(100), Dim(200), Dim(400)};
  for (Expansion e : {Expansion::PpwExp, Expansion::Asymp1}) {
    const auto d = check_asymptotic_decay(e, dims);
    const bool ok = std::abs(d.slope - d.expected) <= kSlopeWindow;
    o.require(ok, fmt::format("{} slope {:.3f}, expected {:.3f}", name(e), d.slope, d.expected));
    if (ok) o.info(fmt::format("{} slope {:.3f}", name(e), d.slope));
  }
  const double published = new4_new1_limit_published(Dim(2));
  o.require(std::abs(published - 0.75) <= kLimitAbs, fmt::format("limit at n=2 is {:.15g}", published));
  const double ratio = new4_new1_ratio(Dim(2), 1'000'000);
  o.require(std::abs(ratio - published) <= kRatioAbs, fmt::format("ratio at k=1e6 is {:.9g}", ratio));
  return o;
}

// Universality over all bounded domains cannot be checked numerically; the
// fixed-suite audit stands in for it. This criterion checks that the stand-in
// is complete: every domain in the suite and every inequality is exercised.
Outcome criterion8() {
  Outcome o;
  const auto suite = default_suite();
  std::size_t boxes = 0, balls = 0;
  for (const auto& d : suite) (d.domain.kind() == DomainSpec::Kind::Ball ? balls : boxes) += 1;
  o.require(boxes == 8 && balls == 3, fmt::format("{} box and {} ball spectra", boxes, balls));
  const std::vector<std::string_view> required{
      "NEW1",   "NEW2_SUM",   "NEW3",        "NEW4",         "NOT_PPW",      "NOT_PPW2",      "SUM_K_EQ_N",
      "ABCHITI", "PPW_RECURSION", "PPW_RATIO", "YANG",       "AB94",         "AB_INEQ",       "COUNT1",
      "COUNT2", "SAFAROV",    "AB_COUNT",    "LIYAU_SUM",    "LIYAU_SINGLE", "LIYAU_COUNT",   "KROGER_SUM",
      "KROGER_SINGLE", "POLYA_DIRICHLET", "POLYA_NEUMANN", "POLYA_COUNT", "BEREZIN", "LEMMA_FAMILY",
      "LAPTEV_CHITI"};
  for (auto id : required) o.require(find_check(id) != nullptr, fmt::format("missing check {}", id));
  o.info("universality over all domains replaced by the fixed-suite audit");
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list{
      {"Table 2 Chiti coefficients to 1e-6", criterion1},
      {"Table 1 coefficients (n=3 col 3 anomaly allowed)", criterion2},
      {"Tables 3-5 at printed precision (Table 5 n=6,7 allowed)", criterion3},
      {"special-function accuracy", criterion4},
      {"zero unregistered violations on the domain suite", criterion5},
      {"structural identities", criterion6},
      {"asymptotic remainder slopes and ratio limit", criterion7},
      {"suite audit replaces universality", criterion8},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria().size())) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }

  int failed = 0;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && id != only) continue;
    Outcome o;
    try {
      o = criteria()[i].second();
    } catch (const std::exception& e) {
      o.require(false, fmt::format("exception: {}", e.what()));
    }
    std::cout << fmt::format("{} C{} {}\n", o.pass ? "PASS" : "FAIL", id, criteria()[i].first);
    for (const auto& note : o.notes) std::cout << "    " << note << '\n';
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
