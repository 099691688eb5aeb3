#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gpc::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kDefaultPrecision = 12;

// GPC_PRECISION if set (1..17), else fallback. Throws Error{kParseError}.
int precision_from_env(int fallback = kDefaultPrecision);

// printf %.*g; non-finite values as inf, -inf, nan.
std::string format_number(double v, int precision);

// Finite values rounded to precision; non-finite ones as the string tokens.
Json number_json(double v, int precision);
Json numbers_json(const std::vector<double>& v, int precision);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

enum class Format { kCsv, kJson };

void write_table(const Table& table, const std::filesystem::path& path, Format format,
                 int precision);
void write_json(const Json& doc, const std::filesystem::path& path);

// foo.csv -> foo.report.json, foo.csv -> foo.check.txt
std::filesystem::path sidecar_path(const std::filesystem::path& out);
std::filesystem::path check_path(const std::filesystem::path& out);

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

void write_checks(const std::vector<Check>& checks, const std::filesystem::path& path);
Json checks_json(const std::vector<Check>& checks);

// Comma list of weights; each entry is a decimal or a fraction p/q.
std::vector<double> parse_weights(std::string_view text);

}  // namespace gpc::cli
