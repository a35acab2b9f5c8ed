#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evdkit {

/// Consecutive monthly observations.
struct MonthlySeries {
  std::vector<int> year;
  std::vector<int> month;  ///< 1..12
  std::vector<double> value;

  [[nodiscard]] std::size_t size() const noexcept { return value.size(); }
};

/// Throws DataError unless the columns have equal length, months lie in
/// 1..12, values are finite and (year, month) advances one month per row.
void validate_series(const MonthlySeries& series);

/// Monthly maximum wind speed (mph), January 1984 to November 2014,
/// 371 observations.
MonthlySeries load_embedded_wind();

struct CsvColumns {
  std::string year = "year";
  std::string month = "month";
  std::string value = "value";
};

/// Comma-separated, header row first, '.' decimal point. Extra columns are
/// ignored. Throws ParseError naming the row and column of a bad cell.
MonthlySeries parse_csv(std::istream& in, const CsvColumns& columns = {});
MonthlySeries read_csv(const std::filesystem::path& path, const CsvColumns& columns = {});

/// A single numeric column from a headed CSV (no calendar required).
std::vector<double> parse_value_column(std::istream& in, std::string_view column = "value");
std::vector<double> read_value_column(const std::filesystem::path& path,
                                      std::string_view column = "value");

/// True when the header row of the file names all three calendar columns.
bool csv_has_calendar(const std::filesystem::path& path, const CsvColumns& columns = {});

void write_csv(std::ostream& out, const MonthlySeries& series);
void write_csv(const std::filesystem::path& path, const MonthlySeries& series);

enum class Adjustment { None, MonthlyMedian };

std::string_view adjustment_name(Adjustment adjustment);
std::optional<Adjustment> parse_adjustment(std::string_view name);

/// MonthlyMedian removes each calendar month's median offset from the
/// overall median, then shifts the result so its median equals the raw
/// median. Needs at least 24 observations.
std::vector<double> seasonal_adjust(const MonthlySeries& series, Adjustment adjustment);

/// Median of a copy of the values (mean of the middle pair for even n).
double median(std::vector<double> values);

}  // namespace evdkit
