#pragma once

// Run configuration: key=value files plus command-line overrides.

#include <iosfwd>
#include <string>
#include <string_view>

#include "momat/decisions.hpp"
#include "momat/evolution.hpp"

namespace momat {

struct RunConfig {
    Parameters params;
    int horizon = 100;
    EngineKind engine = EngineKind::RecursiveOracle;
};

/// Accepts the parameter keys plus `horizon` and `engine`; throws
/// InvalidParameter for unknown keys and ParseError for malformed values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);
/// Parses "key=value" (used by --set).
void apply_assignment(RunConfig& config, std::string_view assignment);

/// One key=value per line; '#' starts a comment; blank lines ignored.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

EngineKind parse_engine(std::string_view name);

}  // namespace momat
