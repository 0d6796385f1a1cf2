#include "momat/categorical_engine.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "momat/error.hpp"

namespace momat {

namespace {

using cat::FiniteCategory;
using cat::FinSet;
using cat::FinSetMap;
using cat::Functor;
using cat::MorphismId;
using cat::NaturalTransformation;
using cat::ObjectId;

constexpr std::array<Unit, 4> kUnits = {Unit::EU, Unit::Hours, Unit::Kg, Unit::Good};

ObjectId object_of(AccountId id) { return ObjectId{index_of(id) + 1}; }

std::vector<Booking> booking_templates() {
    return {bookings::wages(0, 0),
            bookings::goods_purchase(Agent::Lab, 0, 0),
            bookings::resources(0, 0),
            bookings::goods_purchase(Agent::Res, 0, 0),
            bookings::loan(0),
            bookings::dividend(0, 0),
            bookings::repayment(0),
            bookings::goods_purchase(Agent::Cap, 0, 0)};
}

const FinSet& account_set() {
    static const FinSet set = [] {
        std::vector<std::string> names;
        for (const auto& spec : account_table()) names.emplace_back(spec.name);
        return FinSet(std::move(names));
    }();
    return set;
}

const FinSet& unit_set() {
    static const FinSet set = [] {
        std::vector<std::string> names;
        for (auto u : kUnits) names.emplace_back(to_string(u));
        return FinSet(std::move(names));
    }();
    return set;
}

FinSet leg_set(const Booking& booking) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < booking.legs.size(); ++i) labels.push_back("leg" + std::to_string(i));
    return FinSet(std::move(labels));
}

ErrorCode error_for(DiagnosticKind kind) {
    switch (kind) {
        case DiagnosticKind::UnitMismatch: return ErrorCode::UnitMismatch;
        case DiagnosticKind::InsufficientBalance: return ErrorCode::InsufficientBalance;
        case DiagnosticKind::NominalImbalance:
        case DiagnosticKind::RealImbalance: return ErrorCode::ConservationViolation;
        default: return ErrorCode::ValidationFailure;
    }
}

void merge(cat::LawReport& into, const cat::LawReport& from, const std::string& where) {
    for (auto v : from.violations) {
        v.detail = where + ": " + v.detail;
        into.violations.push_back(std::move(v));
    }
}

}  // namespace

FiniteCategory build_economy_category(const LedgerState& state) {
    FiniteCategory c("economy");
    for (const auto& spec : account_table())
        c.add_object(std::string(spec.name), cat::Payload{std::string(to_string(spec.unit)), state[spec.id]});
    for (auto [agent_side, bank_side] : kMirrorPairs)
        c.add_morphism(object_of(agent_side), object_of(bank_side), 0.0,
                       "mirror:" + std::string(account_spec(agent_side).name));
    for (const auto& b : booking_templates())
        for (const auto& m : booking_to_morphisms(b)) c.add_morphism(object_of(m.src), object_of(m.dst), 0.0, m.label);
    return c;
}

std::shared_ptr<const FiniteCategory> account_structure() {
    static const auto structure = std::make_shared<const FiniteCategory>(build_economy_category(LedgerState{}));
    return structure;
}

std::vector<FlowMorphism> booking_to_morphisms(const Booking& booking) {
    std::vector<FlowMorphism> out;
    for (std::size_t i = 0; i + 1 < booking.legs.size(); i += 2) {
        const auto& first = booking.legs[i];
        const auto& second = booking.legs[i + 1];
        bool swap = first.direction == Direction::Inflow && second.direction == Direction::Outflow;
        const auto& src = swap ? second : first;
        const auto& dst = swap ? first : second;
        std::string label = "b" + std::to_string(booking.id) + static_cast<char>('a' + i / 2);
        // A pair carries one value per unit; the EU leg names the money amount.
        double weight = first.unit == Unit::EU ? first.amount : second.amount;
        out.push_back({src.account, dst.account, weight, std::move(label)});
    }
    return out;
}

ValidationResult validate_via_pullback(const LedgerState& state, const Booking& booking) {
    ValidationResult result;
    for (std::size_t i = 0; i < booking.legs.size(); ++i) {
        const auto& leg = booking.legs[i];
        if (index_of(leg.account) >= kAccountCount || static_cast<std::size_t>(leg.unit) >= kUnits.size()) {
            result.diagnostics.push_back({DiagnosticKind::UnknownAccount, i, "leg outside the account category"});
            return result;
        }
    }

    const FinSet legs = leg_set(booking);
    std::vector<std::size_t> leg_units, leg_accounts, account_units;
    for (const auto& leg : booking.legs) {
        leg_units.push_back(static_cast<std::size_t>(leg.unit));
        leg_accounts.push_back(index_of(leg.account));
    }
    for (const auto& spec : account_table()) account_units.push_back(static_cast<std::size_t>(spec.unit));
    const FinSetMap f(legs, unit_set(), std::move(leg_units));
    const FinSetMap g(account_set(), unit_set(), std::move(account_units));
    const cat::Pullback typed = cat::finset_pullback(f, g);

    // (leg, account) in the pullback is exactly the mediating map from the
    // cone (id, legs → accounts) existing at that leg.
    std::set<std::pair<std::size_t, std::size_t>> pairs(typed.pairs.begin(), typed.pairs.end());
    for (std::size_t i = 0; i < booking.legs.size(); ++i) {
        if (pairs.contains({i, leg_accounts[i]})) continue;
        const auto& spec = account_spec(booking.legs[i].account);
        result.diagnostics.push_back({DiagnosticKind::UnitMismatch, i,
                                      "[" + std::string(to_string(booking.legs[i].unit)) + "] leg on " +
                                          std::string(spec.name) + " [" + std::string(to_string(spec.unit)) + "]"});
    }

    for (auto& d : validate_booking(state, booking).diagnostics)
        if (d.kind != DiagnosticKind::UnitMismatch) result.diagnostics.push_back(std::move(d));
    return result;
}

LedgerState apply_via_pushout(const LedgerState& state, const Booking& booking) {
    auto check = validate_via_pullback(state, booking);
    if (!check.ok()) {
        std::string message = "booking " + std::to_string(booking.id) + " rejected by pullback:";
        for (const auto& d : check.diagnostics) message += " [" + std::string(to_string(d.kind)) + "] " + d.message;
        throw Error(error_for(check.diagnostics.front().kind), message);
    }

    const FinSet legs = leg_set(booking);
    std::vector<std::size_t> to_account;
    for (const auto& leg : booking.legs) to_account.push_back(index_of(leg.account));
    const FinSetMap h(legs, account_set(), std::move(to_account));
    const cat::Pushout glued = cat::finset_pushout(h, FinSetMap::identity(legs));

    LedgerState next = state;
    for (const auto& members : glued.classes) {
        if (members.front() >= kAccountCount) continue;
        const auto account = static_cast<AccountId>(members.front());
        double balance = next[account];
        for (std::size_t k = 1; k < members.size(); ++k) balance = balance + signed_delta(booking.legs[members[k] - kAccountCount]);
        if (balance < 0.0)
            throw Error(ErrorCode::InsufficientBalance, std::string(account_spec(account).name) + " would go negative");
        next.set_unchecked(account, balance);
    }
    return next;
}

LedgerState post_categorical(const LedgerState& state, const Booking& booking) { return apply_via_pushout(state, booking); }

std::shared_ptr<const FiniteCategory> price_structure() {
    static const auto structure = [] {
        auto c = std::make_shared<FiniteCategory>("prices");
        auto good = c->add_object("GoodPrice", cat::Payload{"EU/G", 0.0});
        auto labor = c->add_object("LaborPrice", cat::Payload{"EU/h", 0.0});
        auto resource = c->add_object("ResourcePrice", cat::Payload{"EU/kg", 0.0});
        c->add_morphism(labor, good, 0.0, "cost:labor");
        c->add_morphism(resource, good, 0.0, "cost:resource");
        return std::shared_ptr<const FiniteCategory>(std::move(c));
    }();
    return structure;
}

PeriodWitness build_period_witness(const LedgerState& before, const LedgerState& after, const PeriodMetrics& metrics,
                                   const Parameters& params, int period, const EngineFaults& faults) {
    auto source = account_structure();
    const std::string now = "@" + std::to_string(period);
    const std::string next = "@" + std::to_string(period + 1);

    auto timeline = std::make_shared<FiniteCategory>("timeline" + now);
    for (const auto& spec : account_table())
        timeline->add_object(std::string(spec.name) + now, cat::Payload{std::string(to_string(spec.unit)), before[spec.id]});
    for (const auto& spec : account_table())
        timeline->add_object(std::string(spec.name) + next, cat::Payload{std::string(to_string(spec.unit)), after[spec.id]});

    const std::size_t n = source->object_count();
    const std::size_t m = source->morphism_count();
    auto at = [](ObjectId o, std::size_t shift) { return ObjectId{o.value + shift}; };
    for (std::size_t shift : {std::size_t{0}, n})
        for (const auto& mor : source->morphisms())
            timeline->add_morphism(at(mor.src, shift), at(mor.dst, shift), mor.weight, mor.label);
    std::vector<MorphismId> evolution;
    for (const auto& spec : account_table()) {
        double weight = after[spec.id] - before[spec.id];
        if (faults.eta_weight_offset == spec.id) weight += 1.0;
        evolution.push_back(
            timeline->add_morphism(object_of(spec.id), at(object_of(spec.id), n), weight, "eta:" + std::string(spec.name)));
    }
    std::shared_ptr<const FiniteCategory> target = timeline;

    Functor f_now(source, target, "F" + now);
    Functor f_next(source, target, "F" + next);
    for (const auto& obj : source->objects()) {
        f_now.map_object(obj.id, obj.id);
        f_next.map_object(obj.id, at(obj.id, n));
    }
    for (const auto& mor : source->morphisms()) {
        f_now.map_morphism(mor.id, mor.id);
        f_next.map_morphism(mor.id, MorphismId{mor.id.value + m});
    }
    NaturalTransformation eta(f_now, f_next, "eta_time" + now);
    for (std::size_t i = 0; i < n; ++i) eta.set_component(ObjectId{i + 1}, evolution[i]);

    auto prices = price_structure();
    auto valued = std::make_shared<FiniteCategory>("prices" + now);
    auto good = valued->add_object("GoodPrice" + now, cat::Payload{"EU/G", metrics.good_price});
    auto labor = valued->add_object("LaborPrice" + now, cat::Payload{"EU/h", params.p_l});
    auto resource = valued->add_object("ResourcePrice" + now, cat::Payload{"EU/kg", params.p_r});
    auto via_labor = valued->add_morphism(labor, good, metrics.good_price / params.p_l, "cost:labor");
    auto via_resource = valued->add_morphism(resource, good, metrics.good_price / params.p_r, "cost:resource");
    Functor price(prices, std::shared_ptr<const FiniteCategory>(valued), "price" + now);
    price.map_object(prices->get_object("GoodPrice"), good);
    price.map_object(prices->get_object("LaborPrice"), labor);
    price.map_object(prices->get_object("ResourcePrice"), resource);
    price.map_morphism(MorphismId{1}, via_labor);
    price.map_morphism(MorphismId{2}, via_resource);

    cat::LawReport laws;
    merge(laws, cat::check_functor_laws(f_now), f_now.name());
    merge(laws, cat::check_functor_laws(f_next), f_next.name());
    merge(laws, cat::check_naturality(eta), eta.name());
    merge(laws, cat::check_functor_laws(price), price.name());

    return PeriodWitness{source, target, std::move(eta), std::move(price), std::move(laws)};
}

std::vector<AccountId> check_evolution_against_oracle(const NaturalTransformation& eta, const LedgerState& before,
                                                      const LedgerState& after) {
    std::vector<AccountId> mismatched;
    const auto& target = eta.to().target();
    for (const auto& spec : account_table()) {
        const auto& component = eta.component(object_of(spec.id));
        double weight = 0.0;
        for (auto step : component.steps) weight += target.morphism(step).weight;
        if (component.steps.size() != 1 || weight != after[spec.id] - before[spec.id]) mismatched.push_back(spec.id);
    }
    return mismatched;
}

CategoricalStep categorical_step(const SimulationState& state, const Parameters& params, const EngineFaults& faults) {
    StepFaults step_faults;
    if (faults.price_period_off_by_one) step_faults.price_period_shift = -1;
    PeriodResult result = execute_period(state, params, post_categorical, step_faults);
    PeriodWitness witness =
        build_period_witness(state.ledger, result.next.ledger, result.metrics, params, state.period, faults);
    if (!witness.laws.passed())
        throw Error(ErrorCode::LawCheckFailure, "period " + std::to_string(state.period) + ": " + witness.laws.summary());
    return CategoricalStep{std::move(result), std::move(witness)};
}

}  // namespace momat
