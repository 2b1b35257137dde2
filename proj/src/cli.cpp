#include "weyl/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "weyl/audit.hpp"
#include "weyl/bounds.hpp"
#include "weyl/identities.hpp"
#include "weyl/spectra.hpp"
#include "weyl/tables.hpp"

namespace weyl::cli {

namespace {

// Thrown for semantic argument problems that CLI11 cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string constant_text(double v) {
  if (v != 0.0 && std::abs(v) < 1e-3) return fmt::format("{:.12e}", v);
  return fmt::format("{:.12f}", v);
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw UsageError(fmt::format("cannot write '{}'", path));
  return file;
}

struct ConstantsArgs {
  int dim = 0;
};

int do_constants(const ConstantsArgs& a, std::ostream& out) {
  const ConstantsBundle c = constants(Dim(a.dim));
  out << "n=" << a.dim << '\n';
  out << "C_n=" << constant_text(c.ball_volume) << '\n';
  out << "L_cl=" << constant_text(c.semiclassical) << '\n';
  out << "j_first=" << constant_text(c.first_zero) << '\n';
  out << "J_at_zero=" << constant_text(c.bessel_at_zero) << '\n';
  out << "H=" << constant_text(c.weyl_constant) << '\n';
  out << "C_tilde=" << constant_text(c.scaled_constant) << '\n';
  out << "chiti_coeff=" << constant_text(c.chiti_coeff) << '\n';
  out << "ab_ratio=" << constant_text(c.ball_ratio) << '\n';
  return kExitOk;
}

struct BoundArgs {
  bool list = false;
  std::string id;
  int dim = 0;
  BoundInputs in;
  double radius = 0.0;
};

int do_bound(const BoundArgs& a, std::ostream& out) {
  if (a.list) {
    for (const auto& entry : bound_catalog()) out << entry.name << "  " << entry.bounds << '\n';
    return kExitOk;
  }
  if (a.id.empty() || a.dim == 0) throw UsageError("bound needs --id and --dim (or --list)");
  const CatalogEntry* entry = find_bound(a.id);
  if (entry == nullptr) throw UsageError(fmt::format("unknown bound id '{}'; see bound --list", a.id));
  BoundInputs in = a.in;
  if (a.radius > 0.0) in.radius = a.radius;
  out << fmt::format("{:.12g}\n", entry->evaluate(constants(Dim(a.dim)), in));
  return kExitOk;
}

struct SpectrumArgs {
  std::string domain;
  std::vector<double> sides;
  double radius = 1.0;
  int dim = 0;
  std::string bc = "dirichlet";
  std::size_t count = 0;
  std::string csv;
};

int do_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const Boundary bc = a.bc == "neumann" ? Boundary::Neumann : Boundary::Dirichlet;
  std::optional<Spectrum> spec;
  if (a.domain == "box") {
    if (a.sides.empty()) throw UsageError("box spectra need --sides");
    spec = box_spectrum(a.sides, bc, a.count);
  } else {
    if (a.dim == 0) throw UsageError("ball spectra need --dim");
    if (bc == Boundary::Neumann) throw UsageError("Neumann ball spectra are not supported");
    spec = ball_spectrum(Dim(a.dim), a.radius, a.count);
  }
  if (a.csv.empty()) {
    write_csv(*spec, out);
  } else {
    auto file = open_csv(a.csv);
    write_csv(*spec, file);
    out << fmt::format("{}: {} eigenvalues, cutoff {:.12g}, written to {}\n", spec->domain().label(),
                       spec->size(), spec->cutoff(), a.csv);
  }
  return kExitOk;
}

struct AuditArgs {
  std::string suite = "default";
  std::string csv;
  int grid = 200;
};

int do_audit(const AuditArgs& a, std::ostream& out) {
  const SuiteResult result = run_suite(default_suite(), a.grid);

  // Per-check tallies in catalog order.
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
  for (const auto& r : result.reports) {
    auto& t = tally[r.bound_id];
    ++t.first;
    if (!r.satisfied && registration_for(r) == nullptr) ++t.second;
  }
  for (const auto& check : audit_checks()) {
    const auto it = tally.find(std::string(check.id));
    if (it == tally.end()) continue;
    out << fmt::format("{:<16} {:>6} instances  {:>4} violations\n", check.id, it->second.first,
                       it->second.second);
  }
  for (const auto& r : result.reports) {
    if (const RegisteredViolation* reg = registration_for(r)) {
      out << fmt::format("registered: {} {} k={:g} bound={:.12g} oracle={:.12g} ({})\n", r.bound_id,
                         r.domain.label(), r.parameter, r.bound_value, r.oracle_value, reg->note);
    }
  }
  for (const auto& r : result.reports) {
    if (!r.satisfied && registration_for(r) == nullptr) {
      out << "VIOLATION ";
      write_csv(r, out);
    }
  }
  out << fmt::format("{} reports, {} violations, {} registered\n", result.reports.size(),
                     result.violations, result.registered);
  if (!a.csv.empty()) {
    auto file = open_csv(a.csv);
    write_csv(result.reports, file);
  }
  return result.clean() ? kExitOk : kExitViolations;
}

struct TablesArgs {
  std::string id;
};

int do_tables(const TablesArgs& a, std::ostream& out) {
  std::vector<TableId> ids;
  if (a.id.empty()) {
    ids.assign(all_tables().begin(), all_tables().end());
  } else if (auto id = parse_table_id(a.id)) {
    ids.push_back(*id);
  } else {
    throw UsageError(fmt::format("unknown table '{}'", a.id));
  }
  bool failed = false;
  for (TableId id : ids) {
    const auto cells = reproduce_table(id);
    write_diff(cells, id, out);
    for (const auto& c : cells) failed |= c.status == CellStatus::Fail;
  }
  return failed ? kExitViolations : kExitOk;
}

struct CurveArgs {
  int dim = 0;
  long kmax = 0;
  std::string csv;
};

int do_curve(const CurveArgs& a, std::ostream& out) {
  const auto rows = comparison_curve(Dim(a.dim), a.kmax);
  if (a.csv.empty()) {
    write_csv(rows, out);
  } else {
    auto file = open_csv(a.csv);
    write_csv(rows, file);
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenvalue bounds for the Dirichlet Laplacian: constants, audits, tables", "weylbounds"};
  app.require_subcommand(1, 1);
  app.failure_message(CLI::FailureMessage::help);

  ConstantsArgs constants_args;
  auto* constants_cmd = app.add_subcommand("constants", "Print the dimension constants");
  constants_cmd->add_option("--dim", constants_args.dim, "Dimension n >= 2")->required();

  BoundArgs bound_args;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate one catalog bound");
  bound_cmd->add_flag("--list", bound_args.list, "List bound ids");
  std::vector<std::string> ids;
  for (const auto& entry : bound_catalog()) ids.emplace_back(entry.name);
  bound_cmd->add_option("--id", bound_args.id, "Bound id")->check(CLI::IsMember(ids));
  bound_cmd->add_option("--dim", bound_args.dim, "Dimension n >= 2");
  bound_cmd->add_option("--k", bound_args.in.k, "Index k");
  bound_cmd->add_option("--lambda1", bound_args.in.lambda1, "First eigenvalue");
  bound_cmd->add_option("--lambda", bound_args.in.lambda, "Spectral level");
  bound_cmd->add_option("--lambda2", bound_args.in.lambda2, "Second eigenvalue");
  bound_cmd->add_option("--volume", bound_args.in.volume, "Domain volume");
  bound_cmd->add_option("--packing-density", bound_args.in.packing_density, "Lattice packing density");
  bound_cmd->add_option("--radius", bound_args.radius, "Radius for LEMMA_FAMILY");
  bound_cmd->add_option("--gap-sum", bound_args.in.gap_sum, "sum_{j<=k} (lambda_j - lambda_1)");

  SpectrumArgs spectrum_args;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Exact eigenvalues of a box or ball");
  spectrum_cmd->add_option("--domain", spectrum_args.domain, "box or ball")
      ->required()
      ->check(CLI::IsMember({"box", "ball"}));
  spectrum_cmd->add_option("--sides", spectrum_args.sides, "Box side lengths");
  spectrum_cmd->add_option("--radius", spectrum_args.radius, "Ball radius");
  spectrum_cmd->add_option("--dim", spectrum_args.dim, "Ball dimension");
  spectrum_cmd->add_option("--bc", spectrum_args.bc, "dirichlet or neumann")
      ->check(CLI::IsMember({"dirichlet", "neumann"}));
  spectrum_cmd->add_option("--count", spectrum_args.count, "Number of eigenvalues")->required();
  spectrum_cmd->add_option("--csv", spectrum_args.csv, "Write CSV to this path");

  AuditArgs audit_args;
  auto* audit_cmd = app.add_subcommand("audit", "Audit every inequality on the domain suite");
  audit_cmd->add_option("--suite", audit_args.suite, "Domain suite")->check(CLI::IsMember({"default"}));
  audit_cmd->add_option("--csv", audit_args.csv, "Write all reports to this path");
  audit_cmd->add_option("--grid", audit_args.grid, "Level grid points")->check(CLI::Range(2, 100000));

  TablesArgs tables_args;
  auto* tables_cmd = app.add_subcommand("tables", "Recompute the published tables");
  tables_cmd->add_option("--id", tables_args.id, "table1 .. table5");

  CurveArgs curve_args;
  auto* curve_cmd = app.add_subcommand("curve", "Bounds on lambda_{k+1}/lambda_1 against k");
  curve_cmd->add_option("--dim", curve_args.dim, "Dimension n >= 2")->required();
  curve_cmd->add_option("--kmax", curve_args.kmax, "Largest k")->required();
  curve_cmd->add_option("--csv", curve_args.csv, "Write CSV to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*constants_cmd) return do_constants(constants_args, out);
    if (*bound_cmd) return do_bound(bound_args, out);
    if (*spectrum_cmd) return do_spectrum(spectrum_args, out);
    if (*audit_cmd) return do_audit(audit_args, out);
    if (*tables_cmd) return do_tables(tables_args, out);
    if (*curve_cmd) return do_curve(curve_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace weyl::cli
