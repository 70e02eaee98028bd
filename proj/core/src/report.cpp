#include "satwet/report.hpp"

#include <chrono>
#include <ctime>
#include <ostream>

#include "json.hpp"

namespace satwet {

namespace {

std::string single_line(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

std::string cell_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  return csv_escape(std::get<std::string>(cell));
}

}  // namespace

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& out, const SweepResult& result) {
  for (const auto& [key, value] : result.metadata) {
    out << "# " << key << ": " << single_line(value) << "\r\n";
  }
  if (!result.generated_at.empty()) out << "# generated_at: " << result.generated_at << "\r\n";
  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_escape(result.columns[i]);
  }
  out << "\r\n";
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << cell_text(row[i]);
    }
    out << "\r\n";
  }
}

void write_json(std::ostream& out, const SweepResult& result) {
  nlohmann::ordered_json doc;
  auto& meta = doc["metadata"];
  meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : result.metadata) {
    // cell_error may repeat; keep every occurrence.
    if (meta.contains(key)) {
      if (!meta[key].is_array()) meta[key] = nlohmann::ordered_json::array({meta[key]});
      meta[key].push_back(value);
    } else {
      meta[key] = value;
    }
  }
  doc["generated_at"] = result.generated_at;
  doc["columns"] = result.columns;
  auto& rows = doc["rows"];
  rows = nlohmann::ordered_json::array();
  for (const auto& row : result.rows) {
    auto& json_row = rows.emplace_back(nlohmann::ordered_json::array());
    for (const auto& cell : row) {
      std::visit([&](const auto& v) { json_row.push_back(v); }, cell);
    }
  }
  out << doc.dump(2) << '\n';
}

void write_result(std::ostream& out, const SweepResult& result, OutputFormat format) {
  if (format == OutputFormat::json) {
    write_json(out, result);
  } else {
    write_csv(out, result);
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace satwet
