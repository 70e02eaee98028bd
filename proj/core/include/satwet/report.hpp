#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satwet/scenario.hpp"

namespace satwet {

inline constexpr std::string_view kVersion = "0.1.0";

enum class OutputFormat { csv, json };

/// RFC-4180 CSV: `# key: value` metadata block, header row, data rows.
void write_csv(std::ostream& out, const SweepResult& result);

/// {"metadata": {...}, "generated_at": ..., "columns": [...], "rows": [[...]]}
void write_json(std::ostream& out, const SweepResult& result);

void write_result(std::ostream& out, const SweepResult& result, OutputFormat format);

/// Quotes a CSV field when it contains a comma, quote, CR or LF.
std::string csv_escape(std::string_view field);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace satwet
