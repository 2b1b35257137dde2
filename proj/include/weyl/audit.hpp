#pragma once

// Runs catalog inequalities against exact spectra and records one report per
// parameter value.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weyl/spectra.hpp"

namespace weyl {

enum class Direction { UpperOnOracle, LowerOnOracle };

std::string_view name(Direction d);

struct AuditReport {
  std::string bound_id;
  DomainSpec domain;
  double parameter;
  double bound_value;
  double oracle_value;
  Direction direction;
  bool satisfied;
  double slack;  // positive = margin by which the inequality holds
};

/// Relative tolerance used for real-vs-real comparisons.
inline constexpr double kAuditTolerance = 1e-9;

/// Builds a report and decides `satisfied`. Strict checks demand a positive
/// margin with no tolerance.
AuditReport make_report(std::string_view id, const DomainSpec& domain, double parameter,
                        double bound_value, double oracle_value, Direction direction,
                        bool strict = false);

struct IndexRange {
  long first = 1;
  long last = 1;
};

using LevelGrid = std::vector<double>;
using AuditParams = std::variant<IndexRange, LevelGrid>;

enum class ParamKind {
  Index,  // runs over k
  Level,  // runs over a lambda grid
  Fixed,  // single instance, parameters ignored
};

struct AuditCheck {
  std::string_view id;
  ParamKind kind;
  Boundary boundary;          // spectrum the check reads
  bool boxes_only;            // tiling-domain statements
  bool needs_partner;         // FRIEDLANDER: Neumann spectrum plus its Dirichlet partner
  std::string_view statement;
};

std::span<const AuditCheck> audit_checks();
const AuditCheck* find_check(std::string_view id);

/// Runs one check. `partner` is the Dirichlet spectrum of the same domain,
/// required only by checks with needs_partner. Index ranges and level grids
/// must stay inside the spectrum; otherwise std::out_of_range.
std::vector<AuditReport> audit_bound(std::string_view id, const Spectrum& spec,
                                     const AuditParams& params,
                                     const Spectrum* partner = nullptr);

/// Violations that are known consequences of a published inequality being
/// stated in a form stronger than what was proved. Each entry says why.
struct RegisteredViolation {
  std::string_view bound_id;
  std::string_view note;
  bool (*matches)(const AuditReport&);
};

std::span<const RegisteredViolation> registered_violations();
const RegisteredViolation* registration_for(const AuditReport& report);

/// lambda_1 .. cutoff, `points` evenly spaced values.
LevelGrid level_grid(const Spectrum& spec, int points);

struct SuiteDomain {
  DomainSpec domain;
  std::size_t count;
};

/// Unit square, 1x2 box, unit cube, 1x2x3 box (both boundary conditions,
/// 501 eigenvalues) and the unit 2-, 3-, 4-balls (201 eigenvalues).
std::vector<SuiteDomain> default_suite();

struct SuiteResult {
  std::vector<AuditReport> reports;  // deterministic order: domain, check, parameter
  std::size_t violations = 0;        // unsatisfied and not registered
  std::size_t registered = 0;        // unsatisfied but registered
  bool clean() const { return violations == 0; }
};

/// Audits every applicable check on every suite domain, in parallel.
SuiteResult run_suite(const std::vector<SuiteDomain>& suite, int grid_points = 200);

void write_csv_header(std::ostream& out);
void write_csv(const AuditReport& report, std::ostream& out);
void write_csv(std::span<const AuditReport> reports, std::ostream& out);

}  // namespace weyl
