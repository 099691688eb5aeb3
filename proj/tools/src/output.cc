#include "output.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "gpc/error.h"

namespace gpc::cli {
namespace {

void open_fail(const std::filesystem::path& path) {
  throw Error(ErrorCode::kParseError, "cannot write " + path.string());
}

double parse_plain(std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "bad weight '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

int precision_from_env(int fallback) {
  const char* env = std::getenv("GPC_PRECISION");
  if (env == nullptr || *env == '\0') return fallback;
  int p = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size() || p < 1 || p > 17) {
    throw Error(ErrorCode::kParseError, "GPC_PRECISION must be an integer in 1..17");
  }
  return p;
}

std::string format_number(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

Json number_json(double v, int precision) {
  if (!std::isfinite(v)) return format_number(v, precision);
  return std::strtod(format_number(v, precision).c_str(), nullptr);
}

Json numbers_json(const std::vector<double>& v, int precision) {
  Json out = Json::array();
  for (double x : v) out.push_back(number_json(x, precision));
  return out;
}

void write_table(const Table& table, const std::filesystem::path& path, Format format,
                 int precision) {
  std::ofstream os(path);
  if (!os) open_fail(path);
  if (format == Format::kJson) {
    Json doc;
    doc["columns"] = table.columns;
    Json rows = Json::array();
    for (const auto& row : table.rows) rows.push_back(numbers_json(row, precision));
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << format_number(row[i], precision);
    }
    os << '\n';
  }
}

void write_json(const Json& doc, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) open_fail(path);
  os << doc.dump(2) << '\n';
}

std::filesystem::path sidecar_path(const std::filesystem::path& out) {
  auto p = out;
  return p.replace_extension(".report.json");
}

std::filesystem::path check_path(const std::filesystem::path& out) {
  auto p = out;
  return p.replace_extension(".check.txt");
}

void write_checks(const std::vector<Check>& checks, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) open_fail(path);
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
}

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return out;
}

std::vector<double> parse_weights(std::string_view text) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    if (const auto slash = item.find('/'); slash != std::string_view::npos) {
      long long num = 0, den = 0;
      const auto a = std::from_chars(item.data(), item.data() + slash, num);
      const auto b = std::from_chars(item.data() + slash + 1, item.data() + item.size(), den);
      if (a.ec != std::errc() || a.ptr != item.data() + slash || b.ec != std::errc() ||
          b.ptr != item.data() + item.size() || den <= 0 || num < 0) {
        throw Error(ErrorCode::kParseError, "bad fraction '" + std::string(item) + "'");
      }
      out.push_back(static_cast<double>(num) / static_cast<double>(den));
    } else {
      out.push_back(parse_plain(item));
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace gpc::cli
