#pragma once

#include <span>
#include <string>
#include <vector>

#include "momat/evolution.hpp"

namespace momat {

struct NamedSeries {
    std::string name;
    std::vector<double> values;
};

struct SeriesDrift {
    std::string name;
    double drift = 0.0;  // max |x_t − x_{t−1}| / max(1, |x_t|) over the window
};

struct StabilityReport {
    bool bounded = true;  // every value finite and within ±1e9
    std::vector<SeriesDrift> drift;

    /// Throws NotFound for an unknown series.
    double drift_of(std::string_view name) const;
};

inline constexpr double kBoundLimit = 1e9;
inline constexpr std::size_t kDriftWindow = 10;
inline constexpr std::size_t kMinStabilityRows = 20;

/// Throws InvalidArgument if any series is shorter than kMinStabilityRows.
StabilityReport stability_report(std::span<const NamedSeries> series);

/// Drift of GoodPrice, Investment and the four agent bank balances; bounded
/// covers every value in the trace.
StabilityReport stability_report(const Trace& trace);

}  // namespace momat
