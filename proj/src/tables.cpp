#include "weyl/tables.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "weyl/bounds.hpp"

namespace weyl {

namespace {

constexpr std::array<TableId, 5> kAll = {TableId::Table1Coeffs, TableId::Table2Chiti,
                                         TableId::Table3L2, TableId::Table4L32,
                                         TableId::Table5L128};

std::vector<TableFixture> build_fixtures() {
  std::vector<TableFixture> f;
  f.push_back({TableId::Table1Coeffs,
               {"count2", "count1", "safarov"},
               {{"0.259775", "0.194831", "0.036745"},
                {"0.201227", "0.133333", "0.062381"},
                {"0.167459", "0.099235", "0.000975"},
                {"0.145412", "0.077874", "0.000142"},
                {"0.129833", "0.063395", "0.000019"},
                {"0.118201", "0.053193", "2.5e-6"}},
               {{3, "safarov", "factor-10 discrepancy"},
                {7, "count1", "two digits transposed or misprinted"}}});
  f.push_back({TableId::Table2Chiti,
               {"chiti"},
               {{"0.451909"}, {"0.225079"}, {"0.103129"}, {"0.044409"}, {"0.018199"}, {"0.007157"}},
               {}});
  f.push_back({TableId::Table3L2,
               {"ppw", "new2", "new1", "ab_ineq"},
               {{"3", "6.133", "6.133", "2.539"},
                {"2.333", "4.962", "4.832", "2.046"},
                {"2", "4.556", "4.174", "1.796"},
                {"1.8", "4.171", "3.777", "1.645"},
                {"1.667", "3.986", "3.508", "1.543"},
                {"1.571", "3.856", "3.314", "1.470"}},
               {{4, "new2", "neighbouring cells match; single-digit misprint"}}});
  f.push_back({TableId::Table4L32,
               {"ppw", "new4", "new1", "ab94"},
               {{"6.177e14", "122.334", "160.112", "105.46"},
                {"2.554e11", "31.071", "38.811", "35.831"},
                {"2.147e9", "15.606", "18.675", "18.707"},
                {"8.193e7", "10.341", "11.965", "12.052"},
                {"7.539e6", "7.870", "8.878", "8.758"},
                {"1.217e6", "6.491", "7.174", "6.865"}},
               {{7, "new4", "single-digit misprint"}}});
  f.push_back({TableId::Table5L128,
               {"ppw", "new4", "new1", "ab94"},
               {{"3.930e60", "491.885", "652.846", "679.705"},
                {"5.408e46", "75.911", "97.808", "149.957"},
                {"1.701e38", "29.539", "36.774", "60.369"},
                {"2.628e32", "16.814", "20.2736", "32.621"},
                {"1.496e28", "11.593", "11.5934", "20.861"},
                {"8.500e24", "8.917", "8.917", "14.836"}},
               {{6, "new1", "new1 cell repeats the new4 value"},
                {7, "new1", "new1 cell repeats the new4 value"}}});
  return f;
}

// The row of the ratio tables uses gap index k = index - 1.
long table_index(TableId id) {
  switch (id) {
    case TableId::Table3L2: return 2;
    case TableId::Table4L32: return 32;
    case TableId::Table5L128: return 128;
    default: return 0;
  }
}

}  // namespace

std::string_view name(TableId id) {
  switch (id) {
    case TableId::Table1Coeffs: return "TABLE1_COEFFS";
    case TableId::Table2Chiti: return "TABLE2_CHITI";
    case TableId::Table3L2: return "TABLE3_L2";
    case TableId::Table4L32: return "TABLE4_L32";
    case TableId::Table5L128: return "TABLE5_L128";
  }
  return "?";
}

std::optional<TableId> parse_table_id(std::string_view text) {
  std::string lower;
  for (char ch : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (TableId id : kAll) {
    std::string full;
    for (char ch : name(id)) full += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == full || lower == full.substr(0, 6)) return id;
  }
  return std::nullopt;
}

std::span<const TableId> all_tables() { return kAll; }

const TableFixture& fixture(TableId id) {
  static const std::vector<TableFixture> fixtures = build_fixtures();
  for (const auto& f : fixtures) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown table");
}

double printed_unit(std::string_view printed) {
  const auto e = printed.find_first_of("eE");
  const std::string_view mantissa = printed.substr(0, e);
  int exponent = 0;
  if (e != std::string_view::npos) exponent = std::stoi(std::string(printed.substr(e + 1)));
  const auto dot = mantissa.find('.');
  const int decimals = dot == std::string_view::npos ? 0 : static_cast<int>(mantissa.size() - dot - 1);
  return std::pow(10.0, exponent - decimals);
}

double derive_cell(TableId id, int n_value, std::string_view column) {
  const Dim dim(n_value);
  const ConstantsBundle c = constants(dim);
  const double n = dim.as_double();
  const double h = c.weyl_constant;
  switch (id) {
    case TableId::Table1Coeffs:
      if (column == "count2") return std::pow((n + 2.0) / (n + 4.0), 0.5 * n) / h;
      if (column == "count1") return 2.0 / (n + 2.0) / h;
      if (column == "safarov") {
        return 2.0 / (n + 2.0) * std::exp(-1.0 / (4.0 * std::numbers::pi)) * c.semiclassical;
      }
      break;
    case TableId::Table2Chiti:
      if (column == "chiti") return c.chiti_coeff;
      break;
    case TableId::Table3L2:
      if (column == "ppw") return gap_bound(GapBound::PpwRatio, c, 2, 1.0);
      if (column == "new2") return 1.0 + gap_bound(GapBound::NotPpw, c, 1, 1.0);
      if (column == "new1") return 1.0 + gap_bound(GapBound::New1, c, 1, 1.0);
      if (column == "ab_ineq") return c.ball_ratio;
      break;
    case TableId::Table4L32:
    case TableId::Table5L128: {
      const long index = table_index(id);
      if (column == "ppw") return gap_bound(GapBound::PpwRatio, c, index, 1.0);
      if (column == "new4") return gap_bound(GapBound::New4, c, index - 1, 1.0);
      if (column == "new1") return 1.0 + gap_bound(GapBound::New1, c, index - 1, 1.0);
      if (column == "ab94") return gap_bound(GapBound::Ab94Ratio, c, index, 1.0);
      break;
    }
  }
  throw std::invalid_argument(fmt::format("{} has no column '{}'", name(id), column));
}

std::vector<CellResult> reproduce_table(TableId id) {
  const TableFixture& f = fixture(id);
  std::vector<CellResult> out;
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    const int n = 2 + static_cast<int>(i);
    for (std::size_t j = 0; j < f.columns.size(); ++j) {
      const std::string_view column = f.columns[j];
      const std::string_view printed = f.rows[i][j];
      CellResult cell{n,
                      std::string(column),
                      std::string(printed),
                      std::stod(std::string(printed)),
                      derive_cell(id, n, column),
                      printed_unit(printed),
                      CellStatus::Pass,
                      {}};
      const auto anomaly = std::find_if(f.anomalies.begin(), f.anomalies.end(), [&](const Anomaly& a) {
        return a.n == n && a.column == column;
      });
      if (anomaly != f.anomalies.end()) {
        cell.status = CellStatus::Anomaly;
        cell.note = fmt::format("printed value inconsistent with formula; derived value {:.5g} ({})",
                                cell.derived, anomaly->note);
      } else if (std::abs(cell.derived - cell.printed_value) > cell.tolerance * (1.0 + 1e-9)) {
        cell.status = CellStatus::Fail;
      }
      out.push_back(std::move(cell));
    }
  }
  return out;
}

void write_diff(std::span<const CellResult> cells, TableId id, std::ostream& out) {
  for (const auto& c : cells) {
    const char* tag = c.status == CellStatus::Pass ? "PASS" : c.status == CellStatus::Fail ? "FAIL" : "ANOMALY";
    out << fmt::format("{} {} n={} {} printed={} derived={:.8g} tol={:g}", tag, name(id), c.n, c.column,
                       c.printed, c.derived, c.tolerance);
    if (!c.note.empty()) out << " | " << c.note;
    out << '\n';
  }
}

}  // namespace weyl
