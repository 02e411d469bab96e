#include "eigres/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace eigres {

namespace {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

std::string cell_text(const Cell& c) {
  if (const auto* l = std::get_if<long>(&c)) return std::to_string(*l);
  if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
  return std::get<std::string>(c);
}

nlohmann::json real_json(double v) {
  if (std::isfinite(v)) return v;
  return format_real(v);
}

nlohmann::json cell_json(const Cell& c) {
  if (const auto* l = std::get_if<long>(&c)) return *l;
  if (const auto* d = std::get_if<double>(&c)) return real_json(*d);
  return std::get<std::string>(c);
}

}  // namespace

std::string to_csv(const OutputRecord& record) {
  std::string out = "schema_version";
  for (const auto& col : record.rows.columns) out += "," + csv_field(col);
  out += '\n';
  for (const auto& row : record.rows.rows) {
    out += record.schema_version;
    for (const auto& cell : row) out += "," + csv_field(cell_text(cell));
    out += '\n';
  }
  return out;
}

std::string to_json(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["schema_version"] = record.schema_version;
  j["command"] = record.command;
  j["columns"] = record.rows.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : record.rows.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size() && i < record.rows.columns.size(); ++i) {
      obj[record.rows.columns[i]] = cell_json(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  if (record.fit) {
    j["fit"] = {{"exponent", real_json(record.fit->exponent)},
                {"log_intercept", real_json(record.fit->log_intercept)},
                {"r_squared", real_json(record.fit->r_squared)},
                {"residuals", record.fit->residuals}};
  } else {
    j["fit"] = nullptr;
  }
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : record.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();
  for (const auto& [k, v] : record.notes) notes[k] = v;
  j["notes"] = std::move(notes);
  j["timing_ms"] = record.timing_ms;
  return j.dump(2) + "\n";
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os << content;
    if (!os.flush()) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace eigres
