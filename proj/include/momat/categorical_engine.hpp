#pragma once

// The categorical engine: accounts as objects of a finite category, bookings
// as weighted morphisms, pullback typing of legs, pushout aggregation of
// flows, and period evolution as a natural transformation η_time checked
// every period.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "momat/cat/category.hpp"
#include "momat/cat/finset.hpp"
#include "momat/evolution.hpp"
#include "momat/ledger.hpp"

namespace momat {

/// Deliberate defects for tests of the comparison and consistency checks.
struct EngineFaults {
    bool price_period_off_by_one = false;
    std::optional<AccountId> eta_weight_offset;  // adds +1 to that η component
};

/// Twenty account objects carrying {unit, balance}, the five mirror
/// morphisms and one channel morphism per leg pair of the eight bookings.
cat::FiniteCategory build_economy_category(const LedgerState& state);

/// Account-structure category: build_economy_category of the zero ledger,
/// built once and shared.
std::shared_ptr<const cat::FiniteCategory> account_structure();

struct FlowMorphism {
    AccountId src;
    AccountId dst;
    double weight;
    std::string label;  // e.g. "b1a"
};

/// One morphism per consecutive leg pair, oriented outflow → inflow; when both
/// legs of a pair move the same way the first leg is the source.
std::vector<FlowMorphism> booking_to_morphisms(const Booking& booking);

/// Legs typed by the pullback of legs → units ← accounts: a leg is well-typed
/// iff (leg, its account) lies in the pullback. Balance and conservation
/// diagnostics are added as for validate_booking.
ValidationResult validate_via_pullback(const LedgerState& state, const Booking& booking);

/// Pushout of legs → accounts along the identity on legs: each class is one
/// account with its legs, folded in leg order. Throws like post_booking.
LedgerState apply_via_pushout(const LedgerState& state, const Booking& booking);

/// Validation then application; the categorical engine's booking poster.
LedgerState post_categorical(const LedgerState& state, const Booking& booking);

/// Category of the three prices with the cost channels labor → good and
/// resource → good.
std::shared_ptr<const cat::FiniteCategory> price_structure();

struct PeriodWitness {
    std::shared_ptr<const cat::FiniteCategory> source;    // account structure
    std::shared_ptr<const cat::FiniteCategory> timeline;  // (A,t) and (A,t+1)
    cat::NaturalTransformation eta;                       // F_t ⇒ F_{t+1}
    cat::Functor price;                                   // prices of the period
    cat::LawReport laws;                                  // all checks combined
};

/// Builds η_time for one period from the balances before and after.
/// η_A is weighted by the net change of A.
PeriodWitness build_period_witness(const LedgerState& before, const LedgerState& after, const PeriodMetrics& metrics,
                                   const Parameters& params, int period, const EngineFaults& faults = {});

/// Accounts whose η component weight differs from the reference change
/// after − before (exact comparison).
std::vector<AccountId> check_evolution_against_oracle(const cat::NaturalTransformation& eta, const LedgerState& before,
                                                      const LedgerState& after);

struct CategoricalStep {
    PeriodResult result;
    PeriodWitness witness;
};

/// One period of the categorical engine. Throws LawCheckFailure when a functor
/// or naturality law fails.
CategoricalStep categorical_step(const SimulationState& state, const Parameters& params, const EngineFaults& faults = {});

}  // namespace momat
