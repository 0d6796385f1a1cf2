#include "momat/config.hpp"

#include <fstream>
#include <istream>

#include "momat/error.hpp"
#include "momat/trace_io.hpp"

namespace momat {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

EngineKind parse_engine(std::string_view name) {
    if (name == "recursive") return EngineKind::RecursiveOracle;
    if (name == "categorical") return EngineKind::Categorical;
    throw Error(ErrorCode::InvalidParameter, "engine must be recursive or categorical, got '" + std::string(name) + "'");
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key == "engine") {
        config.engine = parse_engine(value);
        return;
    }
    if (key == "horizon") {
        double h = parse_double(value);
        if (h != static_cast<int>(h)) throw Error(ErrorCode::ParseError, "horizon must be an integer");
        config.horizon = static_cast<int>(h);
        return;
    }
    if (!is_parameter_key(key)) throw Error(ErrorCode::InvalidParameter, "unknown key '" + std::string(key) + "'");
    set_parameter(config.params, key, parse_double(value));
}

void apply_assignment(RunConfig& config, std::string_view assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string_view::npos)
        throw Error(ErrorCode::ParseError, "expected key=value, got '" + std::string(assignment) + "'");
    apply_setting(config, assignment.substr(0, eq), assignment.substr(eq + 1));
}

RunConfig parse_config(std::istream& in, RunConfig base) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = line;
        if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        body = trim(body);
        if (body.empty()) continue;
        try {
            apply_assignment(base, body);
        } catch (const Error& e) {
            throw Error(e.code(), "config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open config " + path);
    return parse_config(in, std::move(base));
}

}  // namespace momat
