#include "evdkit/dataio.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "evdkit/error.hpp"
#include "evdkit/format.hpp"

namespace evdkit {

namespace {

// Rows are years 1984..2014; 2014 stops at November.
constexpr std::array<int, 371> kWind = {
    33, 40, 46, 41, 31, 37, 41, 56, 45, 31, 40, 35,   //
    33, 43, 36, 36, 48, 45, 51, 44, 38, 36, 40, 32,   //
    51, 37, 43, 33, 35, 44, 41, 41, 33, 45, 38, 43,   //
    62, 45, 51, 39, 35, 58, 48, 35, 43, 49, 43, 39,   //
    39, 40, 39, 45, 48, 43, 45, 36, 40, 36, 47, 35,   //
    40, 39, 44, 37, 36, 38, 37, 41, 38, 36, 36, 48,   //
    37, 40, 38, 37, 37, 38, 49, 66, 39, 45, 37, 35,   //
    39, 52, 66, 51, 39, 64, 59, 36, 36, 36, 41, 41,   //
    39, 45, 40, 37, 33, 66, 38, 59, 38, 41, 45, 35,   //
    43, 39, 74, 63, 37, 45, 52, 43, 44, 52, 36, 43,   //
    46, 40, 43, 29, 39, 53, 32, 41, 52, 31, 46, 48,   //
    49, 41, 32, 37, 29, 43, 40, 47, 45, 38, 28, 30,   //
    40, 36, 37, 38, 37, 33, 30, 34, 38, 45, 40, 31,   //
    39, 31, 31, 38, 32, 34, 45, 39, 31, 29, 39, 36,   //
    34, 55, 38, 37, 36, 34, 44, 32, 54, 30, 39, 30,   //
    41, 33, 36, 39, 33, 33, 30, 40, 44, 61, 34, 26,   //
    38, 26, 34, 36, 28, 36, 43, 35, 43, 37, 40, 35,   //
    36, 28, 41, 30, 31, 48, 43, 43, 49, 36, 38, 30,   //
    33, 35, 36, 45, 29, 43, 33, 39, 38, 29, 38, 41,   //
    31, 35, 40, 33, 51, 33, 40, 45, 32, 29, 35, 37,   //
    35, 30, 32, 39, 32, 39, 38, 39, 83, 30, 33, 39,   //
    33, 36, 39, 44, 31, 43, 44, 43, 41, 101, 37, 33,  //
    55, 43, 30, 32, 32, 46, 47, 43, 32, 31, 32, 41,   //
    37, 37, 44, 43, 33, 41, 49, 39, 40, 43, 36, 35,   //
    37, 44, 39, 47, 52, 39, 39, 48, 37, 35, 40, 33,   //
    38, 36, 36, 38, 40, 49, 54, 47, 37, 33, 39, 36,   //
    36, 62, 43, 32, 32, 58, 35, 35, 38, 32, 33, 46,   //
    40, 44, 51, 59, 33, 41, 36, 53, 45, 39, 32, 31,   //
    40, 35, 41, 38, 66, 49, 52, 61, 36, 52, 30, 37,   //
    31, 35, 45, 40, 40, 47, 38, 51, 37, 46, 39, 31,   //
    36, 36, 46, 44, 46, 58, 46, 50, 39, 44, 38,       //
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n\"");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n\"");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

template <typename T>
T parse_cell(const std::string& cell, std::size_t row, const std::string& column) {
  T v{};
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (!cell.empty() && cell.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (cell.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("row " + std::to_string(row) + ", column '" + column + "': cannot parse '" +
                         cell + "'",
                     row, column);
  }
  return v;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;  // (line number, cells)
};

Table read_table(std::istream& in) {
  Table t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split(line);
    if (t.header.empty()) {
      for (auto& c : cells) c = lower(c);
      t.header = std::move(cells);
    } else {
      t.rows.emplace_back(line_no, std::move(cells));
    }
  }
  if (t.header.empty()) throw ParseError("empty CSV input", 0, "");
  return t;
}

std::size_t column_index(const Table& t, const std::string& name) {
  const auto it = std::find(t.header.begin(), t.header.end(), lower(name));
  if (it == t.header.end()) throw ParseError("missing column '" + name + "'", 1, name);
  return static_cast<std::size_t>(it - t.header.begin());
}

const std::string& cell_at(const std::vector<std::string>& cells, std::size_t i, std::size_t row,
                           const std::string& column) {
  if (i >= cells.size()) {
    throw ParseError("row " + std::to_string(row) + ": missing column '" + column + "'", row,
                     column);
  }
  return cells[i];
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

}  // namespace

void validate_series(const MonthlySeries& s) {
  if (s.year.size() != s.value.size() || s.month.size() != s.value.size()) {
    throw DataError("series columns have different lengths");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.month[i] < 1 || s.month[i] > 12) {
      throw DataError("row " + std::to_string(i + 1) + ": month " + std::to_string(s.month[i]) +
                      " outside 1..12");
    }
    if (!std::isfinite(s.value[i])) {
      throw DataError("row " + std::to_string(i + 1) + ": value is not finite");
    }
    if (i > 0) {
      const int prev = s.year[i - 1] * 12 + s.month[i - 1];
      const int cur = s.year[i] * 12 + s.month[i];
      if (cur != prev + 1) {
        throw DataError("row " + std::to_string(i + 1) +
                        ": (year, month) must advance by exactly one month");
      }
    }
  }
}

MonthlySeries load_embedded_wind() {
  MonthlySeries s;
  s.year.reserve(kWind.size());
  s.month.reserve(kWind.size());
  s.value.reserve(kWind.size());
  for (std::size_t i = 0; i < kWind.size(); ++i) {
    s.year.push_back(1984 + static_cast<int>(i / 12));
    s.month.push_back(1 + static_cast<int>(i % 12));
    s.value.push_back(kWind[i]);
  }
  return s;
}

MonthlySeries parse_csv(std::istream& in, const CsvColumns& columns) {
  const Table t = read_table(in);
  const std::size_t iy = column_index(t, columns.year);
  const std::size_t im = column_index(t, columns.month);
  const std::size_t iv = column_index(t, columns.value);
  MonthlySeries s;
  for (const auto& [row, cells] : t.rows) {
    s.year.push_back(parse_cell<int>(cell_at(cells, iy, row, columns.year), row, columns.year));
    s.month.push_back(parse_cell<int>(cell_at(cells, im, row, columns.month), row, columns.month));
    s.value.push_back(
        parse_cell<double>(cell_at(cells, iv, row, columns.value), row, columns.value));
  }
  validate_series(s);
  return s;
}

MonthlySeries read_csv(const std::filesystem::path& path, const CsvColumns& columns) {
  auto in = open(path);
  return parse_csv(in, columns);
}

std::vector<double> parse_value_column(std::istream& in, std::string_view column) {
  const Table t = read_table(in);
  const std::string name(column);
  const std::size_t iv = column_index(t, name);
  std::vector<double> out;
  out.reserve(t.rows.size());
  for (const auto& [row, cells] : t.rows) {
    const double v = parse_cell<double>(cell_at(cells, iv, row, name), row, name);
    if (!std::isfinite(v)) throw ParseError("row " + std::to_string(row) + ": non-finite value", row, name);
    out.push_back(v);
  }
  return out;
}

std::vector<double> read_value_column(const std::filesystem::path& path, std::string_view column) {
  auto in = open(path);
  return parse_value_column(in, column);
}

bool csv_has_calendar(const std::filesystem::path& path, const CsvColumns& columns) {
  auto in = open(path);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto cells = split(line);
    for (auto& c : cells) c = lower(c);
    auto has = [&](const std::string& n) {
      return std::find(cells.begin(), cells.end(), lower(n)) != cells.end();
    };
    return has(columns.year) && has(columns.month) && has(columns.value);
  }
  return false;
}

void write_csv(std::ostream& out, const MonthlySeries& series) {
  validate_series(series);
  out << "year,month,value\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out << series.year[i] << ',' << series.month[i] << ',' << format_double(series.value[i])
        << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const MonthlySeries& series) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  write_csv(out, series);
}

std::string_view adjustment_name(Adjustment adjustment) {
  return adjustment == Adjustment::None ? "none" : "monthly_median";
}

std::optional<Adjustment> parse_adjustment(std::string_view name) {
  if (name == "none") return Adjustment::None;
  if (name == "monthly_median") return Adjustment::MonthlyMedian;
  return std::nullopt;
}

double median(std::vector<double> v) {
  if (v.empty()) throw DataError("median of an empty sequence");
  const std::size_t n = v.size();
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n / 2), v.end());
  const double hi = v[n / 2];
  if (n % 2 == 1) return hi;
  const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n / 2));
  return 0.5 * (lo + hi);
}

std::vector<double> seasonal_adjust(const MonthlySeries& series, Adjustment adjustment) {
  validate_series(series);
  if (adjustment == Adjustment::None) return series.value;
  if (series.size() < 24) {
    throw DataError("monthly_median adjustment needs at least 24 observations");
  }
  const double overall = median(series.value);
  std::array<double, 13> offset{};
  for (int m = 1; m <= 12; ++m) {
    std::vector<double> vals;
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (series.month[i] == m) vals.push_back(series.value[i]);
    }
    offset[static_cast<std::size_t>(m)] = vals.empty() ? 0.0 : median(vals) - overall;
  }
  std::vector<double> out(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    out[i] = series.value[i] - offset[static_cast<std::size_t>(series.month[i])];
  }
  const double shift = overall - median(out);
  for (double& v : out) v += shift;
  return out;
}

}  // namespace evdkit
