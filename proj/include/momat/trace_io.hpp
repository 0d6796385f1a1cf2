#pragma once

// Trace serialization. CSV is the canonical format; JSON adds the booking log.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "momat/evolution.hpp"

namespace momat {

/// period, the 17 metrics, the 20 accounts, the six invariances.
const std::vector<std::string>& trace_columns();

/// Shortest text that reads back to the same double.
std::string format_double(double x);
/// Whole-string parse; throws ParseError.
double parse_double(std::string_view text);

/// '#' comment lines echo engine and every parameter, then header and rows.
void write_trace_csv(std::ostream& out, const Trace& trace);
/// Throws ParseError on an empty input, a wrong header or a malformed row.
Trace read_trace_csv(std::istream& in);
Trace read_trace_csv_file(const std::string& path);

void write_trace_json(std::ostream& out, const Trace& trace);

}  // namespace momat
