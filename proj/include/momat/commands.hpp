#pragma once

// Subcommand bodies of the momat tool. Each returns the process exit code.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "momat/categorical_engine.hpp"
#include "momat/config.hpp"

namespace momat {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 1,      // configuration or validation error
    kExitInvariance = 2,   // an invariance exceeded kInvarianceTolerance
    kExitDivergence = 3,   // engines diverged beyond kDivergenceTolerance
};

inline constexpr double kInvarianceTolerance = 1e-9;
inline constexpr double kDivergenceTolerance = 1e-12;

struct RunOutputs {
    std::optional<std::string> csv_path;
    std::optional<std::string> json_path;
};

/// Without output paths the CSV goes to `out`. The invariance report goes to `err`.
int cmd_run(const RunConfig& config, const RunOutputs& outputs, std::ostream& out, std::ostream& err);

/// `faults` is applied to the categorical engine only.
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err, const EngineFaults& faults = {});

/// One CSV summary row per value, runs in parallel; a failing value is
/// reported in its row and does not stop the others.
int cmd_sweep(const RunConfig& config, const std::string& param, const std::vector<double>& values, std::ostream& out,
              std::ostream& err);

/// Writes accounts.dat, invariances.dat, price.dat, investment.dat and
/// plot.gp into `out_dir`.
int cmd_plot(const std::string& trace_path, const std::string& out_dir, std::ostream& out, std::ostream& err);

int cmd_check_laws(std::ostream& out, std::ostream& err);

}  // namespace momat
