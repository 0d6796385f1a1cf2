#include "momat/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "momat/error.hpp"

namespace momat {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::string trim(std::string s) {
    const char* ws = " \t\r";
    s.erase(0, s.find_first_not_of(ws));
    s.erase(s.find_last_not_of(ws) + 1);
    return s;
}

}  // namespace

const std::vector<std::string>& trace_columns() {
    static const std::vector<std::string> columns = [] {
        std::vector<std::string> c{"period"};
        for (auto n : kMetricNames) c.emplace_back(n);
        for (const auto& spec : account_table()) c.emplace_back(spec.name);
        for (auto n : kInvarianceNames) c.emplace_back(n);
        return c;
    }();
    return columns;
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

double parse_double(std::string_view text) {
    double x = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty())
        throw Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
    return x;
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
    out << "# engine=" << to_string(trace.engine) << '\n';
    for (auto key : kParameterKeys) out << "# " << key << '=' << format_double(get_parameter(trace.params, key)) << '\n';
    const auto& cols = trace_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto& row : trace.rows) {
        out << row.period;
        for (double v : row.metrics.values()) out << ',' << format_double(v);
        for (double v : row.ledger.balances()) out << ',' << format_double(v);
        for (double v : row.inv.values()) out << ',' << format_double(v);
        out << '\n';
    }
}

Trace read_trace_csv(std::istream& in) {
    Trace trace;
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    const auto& cols = trace_columns();
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (line.front() == '#') {
            auto body = trim(line.substr(1));
            auto eq = body.find('=');
            if (eq == std::string::npos) continue;
            auto key = trim(body.substr(0, eq));
            auto value = trim(body.substr(eq + 1));
            if (key == "engine") {
                trace.engine = value == "categorical" ? EngineKind::Categorical : EngineKind::RecursiveOracle;
            } else if (is_parameter_key(key)) {
                set_parameter(trace.params, key, parse_double(value));
            }
            continue;
        }
        auto cells = split(line, ',');
        if (!header_seen) {
            for (auto& c : cells) c = trim(c);
            if (cells != cols) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unexpected header");
            header_seen = true;
            continue;
        }
        if (cells.size() != cols.size())
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                                   std::to_string(cols.size()) + " fields, got " +
                                                   std::to_string(cells.size()));
        TraceRow row;
        double period = parse_double(trim(cells[0]));
        if (period != static_cast<int>(period)) throw Error(ErrorCode::ParseError, "non-integral period");
        row.period = static_cast<int>(period);
        std::size_t k = 1;
        std::array<double, 17> metrics{};
        for (auto& m : metrics) m = parse_double(trim(cells[k++]));
        row.metrics = PeriodMetrics::from_values(metrics);
        for (const auto& spec : account_table()) row.ledger.set_unchecked(spec.id, parse_double(trim(cells[k++])));
        std::array<double, 6> inv{};
        for (auto& v : inv) v = parse_double(trim(cells[k++]));
        row.inv = {inv[0], inv[1], inv[2], inv[3], inv[4], inv[5]};
        trace.rows.push_back(row);
        trace.bookings.emplace_back();
    }
    if (!header_seen) throw Error(ErrorCode::ParseError, "no trace header found");
    return trace;
}

Trace read_trace_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return read_trace_csv(in);
}

void write_trace_json(std::ostream& out, const Trace& trace) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["engine"] = to_string(trace.engine);
    ordered_json params = ordered_json::object();
    for (auto key : kParameterKeys) params[std::string(key)] = get_parameter(trace.params, key);
    doc["parameters"] = params;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        const auto& row = trace.rows[i];
        ordered_json r;
        r["period"] = row.period;
        ordered_json metrics = ordered_json::object();
        auto mv = row.metrics.values();
        for (std::size_t k = 0; k < mv.size(); ++k) metrics[std::string(kMetricNames[k])] = mv[k];
        r["metrics"] = metrics;
        ordered_json accounts = ordered_json::object();
        for (const auto& spec : account_table()) accounts[std::string(spec.name)] = row.ledger[spec.id];
        r["accounts"] = accounts;
        ordered_json inv = ordered_json::object();
        auto iv = row.inv.values();
        for (std::size_t k = 0; k < iv.size(); ++k) inv[std::string(kInvarianceNames[k])] = iv[k];
        r["invariances"] = inv;
        ordered_json log = ordered_json::array();
        if (i < trace.bookings.size()) {
            for (const auto& b : trace.bookings[i]) {
                ordered_json legs = ordered_json::array();
                for (const auto& leg : b.legs)
                    legs.push_back({{"account", account_spec(leg.account).name},
                                    {"direction", leg.direction == Direction::Inflow ? "in" : "out"},
                                    {"amount", leg.amount},
                                    {"unit", to_string(leg.unit)}});
                log.push_back({{"id", b.id}, {"label", b.label}, {"legs", legs}});
            }
        }
        r["bookings"] = log;
        rows.push_back(std::move(r));
    }
    doc["rows"] = rows;
    out << doc.dump(1) << '\n';
}

}  // namespace momat
