#pragma once

// Period evolution: the canonical within-period algorithm, the recursive
// reference engine and whole-run traces.

#include <functional>
#include <string_view>
#include <vector>

#include "momat/decisions.hpp"
#include "momat/ledger.hpp"

namespace momat {

struct SimulationState {
    LedgerState ledger;
    ContractMemory memory;
    double declared_dividend = 0.0;  // declared last period, paid this period
    int period = 0;

    friend bool operator==(const SimulationState&, const SimulationState&) = default;
};

SimulationState initial_state(const Parameters& params);

struct PeriodResult {
    SimulationState next;
    PeriodMetrics metrics;
    std::vector<Booking> bookings;  // in execution order
};

/// Posts one booking and returns the new ledger; must throw on rejection.
using BookingPoster = std::function<LedgerState(const LedgerState&, const Booking&)>;

/// Knobs used only to build deliberately broken engines in tests.
struct StepFaults {
    int price_period_shift = 0;  // GoodPrice sees period + shift
};

/// One period with a caller-supplied booking poster. Atomic: throws
/// ValidationFailure (the input state is untouched) if any booking or the
/// investment check is rejected.
PeriodResult execute_period(const SimulationState& state, const Parameters& params, const BookingPoster& poster,
                            const StepFaults& faults = {});

/// Reference engine step: bookings posted by the plain ledger.
PeriodResult period_step(const SimulationState& state, const Parameters& params);

enum class EngineKind { RecursiveOracle, Categorical };

std::string_view to_string(EngineKind kind) noexcept;

struct TraceRow {
    int period = 0;
    PeriodMetrics metrics;
    LedgerState ledger;  // snapshot at the start of the period
    Invariances inv;

    friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

/// Row t: start-of-period balances and their invariances, plus the metrics of
/// period t. A run over horizon H has H + 1 rows.
struct Trace {
    Parameters params;
    EngineKind engine = EngineKind::RecursiveOracle;
    std::vector<TraceRow> rows;
    std::vector<std::vector<Booking>> bookings;  // per row
};

struct EngineFaults;

/// Throws InvalidArgument for horizon < 1, InvalidParameter for bad params,
/// ValidationFailure or LawCheckFailure from the engines.
Trace run(const Parameters& params, int horizon, EngineKind engine);
Trace run(const Parameters& params, int horizon, EngineKind engine, const EngineFaults& faults);

/// Largest absolute difference over every metric, balance and invariance.
/// Traces of different length compare as +infinity.
double max_divergence(const Trace& a, const Trace& b);

}  // namespace momat
