#include "pprod/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "pprod/errors.hpp"

namespace pprod::io {

Format parse_format(std::string_view name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "tsv") return Format::Tsv;
    throw DomainError("unknown format '" + std::string(name) + "' (expected json, csv, tsv)");
}

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Record real(double v) {
    if (!std::isfinite(v)) return nullptr;
    return std::stod(format_real(v));
}

namespace {

std::string cell(const Record& v, char sep) {
    std::string text;
    if (v.is_null()) {
        text = "";
    } else if (v.is_string()) {
        text = v.get<std::string>();
    } else if (v.is_boolean()) {
        text = v.get<bool>() ? "true" : "false";
    } else if (v.is_number_integer()) {
        text = v.dump();
    } else if (v.is_number_float()) {
        text = format_real(v.get<double>());
    } else {
        text = v.dump();
    }
    const bool quote = sep == ',' && (text.find_first_of(",\"\n") != std::string::npos);
    if (!quote) return text;
    std::string q = "\"";
    for (char ch : text) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

void emit_table(std::ostream& out, char sep, const std::vector<Record>& rows) {
    if (rows.empty()) return;
    bool first = true;
    for (const auto& [key, value] : rows.front().items()) {
        if (!first) out << sep;
        out << key;
        first = false;
    }
    out << '\n';
    for (const auto& row : rows) {
        first = true;
        for (const auto& [key, value] : rows.front().items()) {
            if (!first) out << sep;
            out << (row.contains(key) ? cell(row.at(key), sep) : std::string{});
            first = false;
        }
        out << '\n';
    }
}

}  // namespace

void emit_object(std::ostream& out, Format fmt, const Record& rec) {
    switch (fmt) {
        case Format::Json: out << rec.dump() << '\n'; break;
        case Format::Csv: emit_table(out, ',', {rec}); break;
        case Format::Tsv: emit_table(out, '\t', {rec}); break;
    }
}

void emit_rows(std::ostream& out, Format fmt, const std::vector<Record>& rows) {
    switch (fmt) {
        case Format::Json:
            for (const auto& r : rows) out << r.dump() << '\n';
            break;
        case Format::Csv: emit_table(out, ',', rows); break;
        case Format::Tsv: emit_table(out, '\t', rows); break;
    }
}

}  // namespace pprod::io
