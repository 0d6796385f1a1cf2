#include "momat/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "momat/error.hpp"

namespace momat {

namespace {

bool within_bounds(double x) { return std::isfinite(x) && std::abs(x) <= kBoundLimit; }

}  // namespace

double StabilityReport::drift_of(std::string_view name) const {
    for (const auto& d : drift)
        if (d.name == name) return d.drift;
    throw Error(ErrorCode::NotFound, "no series '" + std::string(name) + "'");
}

StabilityReport stability_report(std::span<const NamedSeries> series) {
    StabilityReport report;
    for (const auto& s : series) {
        const auto& x = s.values;
        if (x.size() < kMinStabilityRows)
            throw Error(ErrorCode::InvalidArgument,
                        "series " + s.name + " has " + std::to_string(x.size()) + " points, need " +
                            std::to_string(kMinStabilityRows));
        report.bounded = report.bounded && std::all_of(x.begin(), x.end(), within_bounds);
        double worst = 0.0;
        for (std::size_t t = x.size() - kDriftWindow; t < x.size(); ++t) {
            double d = std::abs(x[t] - x[t - 1]) / std::max(1.0, std::abs(x[t]));
            worst = std::isnan(d) || std::isnan(worst) ? std::numeric_limits<double>::quiet_NaN() : std::max(worst, d);
        }
        report.drift.push_back({s.name, worst});
    }
    return report;
}

StabilityReport stability_report(const Trace& trace) {
    std::vector<NamedSeries> series = {{"GoodPrice", {}},  {"Investment", {}}, {"AccLabBank", {}},
                                       {"AccResBank", {}}, {"AccComBank", {}}, {"AccCapBank", {}}};
    bool bounded = true;
    for (const auto& row : trace.rows) {
        series[0].values.push_back(row.metrics.good_price);
        series[1].values.push_back(row.metrics.investment);
        series[2].values.push_back(row.ledger[AccountId::LabBank]);
        series[3].values.push_back(row.ledger[AccountId::ResBank]);
        series[4].values.push_back(row.ledger[AccountId::ComBank]);
        series[5].values.push_back(row.ledger[AccountId::CapBank]);
        for (double v : row.metrics.values()) bounded = bounded && within_bounds(v);
        for (double v : row.ledger.balances()) bounded = bounded && within_bounds(v);
        for (double v : row.inv.values()) bounded = bounded && within_bounds(v);
    }
    StabilityReport report = stability_report(std::span<const NamedSeries>(series));
    report.bounded = report.bounded && bounded;
    return report;
}

}  // namespace momat
