#pragma once

// Machine-readable output: one JSON object, JSON lines, CSV or TSV. Reals are
// printed with 12 significant digits; integers verbatim.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pprod::io {

using Record = nlohmann::ordered_json;

enum class Format { Json, Csv, Tsv };

Format parse_format(std::string_view name);

/// 12 significant digits, round-half-even on the binary value.
std::string format_real(double v);

/// JSON value for a real: rounded to 12 significant digits, null when not finite.
Record real(double v);

/// A single record as one JSON object, or a one-row table.
void emit_object(std::ostream& out, Format fmt, const Record& rec);

/// Several records as JSON lines or a table with the first record's keys as header.
void emit_rows(std::ostream& out, Format fmt, const std::vector<Record>& rows);

}  // namespace pprod::io
