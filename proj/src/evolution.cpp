#include "momat/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "momat/categorical_engine.hpp"
#include "momat/error.hpp"

namespace momat {

namespace {

using enum AccountId;

bool rejection(ErrorCode code) {
    switch (code) {
        case ErrorCode::InsufficientBalance:
        case ErrorCode::UnitMismatch:
        case ErrorCode::ConservationViolation:
        case ErrorCode::ValidationFailure:
        case ErrorCode::InvalidArgument: return true;
        default: return false;
    }
}

}  // namespace

SimulationState initial_state(const Parameters& params) {
    params.validate();
    SimulationState s;
    s.ledger = init_ledger(params.endowments);
    s.memory = ContractMemory(static_cast<std::size_t>(params.tau));
    return s;
}

PeriodResult execute_period(const SimulationState& state, const Parameters& p, const BookingPoster& poster,
                            const StepFaults& faults) {
    p.validate();
    const auto tau = static_cast<std::size_t>(p.tau);
    if (state.memory.wage.size() != tau || state.memory.repay.size() != tau)
        throw Error(ErrorCode::InvalidArgument, "contract memory length differs from tau");

    const int t = state.period;
    PeriodResult out;
    LedgerState L = state.ledger;
    auto& log = out.bookings;
    auto post = [&](Booking b) {
        L = poster(L, b);
        log.push_back(std::move(b));
    };

    try {
        const double start_com_bank = L[ComBank];

        L.set_real_balance(LabGood, L[LabGood] * p.beta_l);
        L.set_real_balance(ResGood, L[ResGood] * p.beta_r);
        L.set_real_balance(CapGood, L[CapGood] * p.beta_c);

        L.set_real_balance(LabLab, L[LabLab] + p.nu_l);
        L.set_real_balance(ResRes, L[ResRes] + p.nu_r);

        const Dues due = memory_due(state.memory);
        const Consumption c = consumption(L[LabBank], L[ResBank], L[CapBank], p.rho_l, p.rho_r, p.rho_c);
        const double plan = demand_plan(due.wages, due.repays, p.mu);
        const double surplus = c.demand - plan;

        const double made = production(L[ComLab], L[ComRes], p.alpha, p.gamma);
        L.set_real_balance(ComLab, 0.0);
        L.set_real_balance(ComRes, 0.0);
        L.set_real_balance(ComGood, L[ComGood] + made);

        const double price = good_price(plan, made, surplus, p.omega, t + faults.price_period_shift, p.p_0);
        for (auto [agent, spend] : {std::pair{Agent::Lab, c.lab}, {Agent::Res, c.res}, {Agent::Cap, c.cap}}) {
            if (spend > 0.0 && !(price > 0.0))
                throw Error(ErrorCode::ValidationFailure, "goods demanded at a non-positive price");
            post(bookings::goods_purchase(agent, spend, spend > 0.0 ? spend / price : 0.0));
        }

        const double invest = investment_sigmoid(surplus, p.sig_a, p.sig_b, p.sig_c);
        const Allocation alloc = allocate_investment(invest, p.lambda, p.tau);
        if (!investment_validation(invest, L[ComBank]))
            throw Error(ErrorCode::ValidationFailure, "investment exceeds capacity plus credit limit");
        post(bookings::loan(invest));
        post(bookings::resources(alloc.res, alloc.res / p.p_r));
        post(bookings::wages(due.wages, due.wages / p.p_l));
        post(bookings::repayment(due.repays));

        const double paid = state.declared_dividend;
        const double inflow = c.lab + c.res + c.cap + invest;
        const double outflow = alloc.res + due.wages + due.repays + paid;
        const double diff = inflow - outflow;
        const double declared = dividend_decision(diff, start_com_bank, p.delta_c, p.delta_b);
        post(bookings::dividend(paid, declared));

        auto& m = out.metrics;
        m.wages_payment = due.wages;
        m.repays_payment = due.repays;
        m.consum_lab = c.lab;
        m.consum_res = c.res;
        m.consum_cap = c.cap;
        m.demand = c.demand;
        m.demand_plan = plan;
        m.demand_surplus = surplus;
        m.good_production = made;
        m.good_price = price;
        m.investment = invest;
        m.investment_res = alloc.res;
        m.investment_lab = alloc.lab;
        m.repayment = alloc.installment;
        m.diff = diff;
        m.dividend_decision = declared;
        m.dividend_payment = paid;

        out.next.ledger = L;
        out.next.memory.wage = memory_push(state.memory.wage, alloc.lab);
        out.next.memory.repay = memory_push(state.memory.repay, alloc.installment);
        out.next.declared_dividend = declared;
        out.next.period = t + 1;
    } catch (const Error& e) {
        if (!rejection(e.code())) throw;
        throw Error(ErrorCode::ValidationFailure, "period " + std::to_string(t) + " aborted: " + e.what());
    }
    return out;
}

PeriodResult period_step(const SimulationState& state, const Parameters& params) {
    return execute_period(state, params, [](const LedgerState& s, const Booking& b) { return post_booking(s, b); });
}

std::string_view to_string(EngineKind kind) noexcept {
    return kind == EngineKind::Categorical ? "categorical" : "recursive";
}

Trace run(const Parameters& params, int horizon, EngineKind engine) { return run(params, horizon, engine, EngineFaults{}); }

Trace run(const Parameters& params, int horizon, EngineKind engine, const EngineFaults& faults) {
    if (horizon < 1) throw Error(ErrorCode::InvalidArgument, "horizon must be >= 1");
    params.validate();
    Trace trace;
    trace.params = params;
    trace.engine = engine;
    trace.rows.reserve(static_cast<std::size_t>(horizon) + 1);
    trace.bookings.reserve(static_cast<std::size_t>(horizon) + 1);

    SimulationState state = initial_state(params);
    for (int t = 0; t <= horizon; ++t) {
        PeriodResult r = engine == EngineKind::Categorical ? categorical_step(state, params, faults).result
                                                           : period_step(state, params);
        trace.rows.push_back({t, r.metrics, state.ledger, invariances(state.ledger)});
        trace.bookings.push_back(std::move(r.bookings));
        state = std::move(r.next);
    }
    return trace;
}

double max_divergence(const Trace& a, const Trace& b) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (a.rows.size() != b.rows.size()) return inf;
    double worst = 0.0;
    auto take = [&](double x, double y) {
        if (x == y) return;
        double d = std::abs(x - y);
        worst = std::isnan(d) ? inf : std::max(worst, d);
    };
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const auto& ra = a.rows[i];
        const auto& rb = b.rows[i];
        if (ra.period != rb.period) return inf;
        auto ma = ra.metrics.values();
        auto mb = rb.metrics.values();
        for (std::size_t k = 0; k < ma.size(); ++k) take(ma[k], mb[k]);
        for (std::size_t k = 0; k < kAccountCount; ++k) take(ra.ledger.balances()[k], rb.ledger.balances()[k]);
        auto ia = ra.inv.values();
        auto ib = rb.inv.values();
        for (std::size_t k = 0; k < ia.size(); ++k) take(ia[k], ib[k]);
    }
    return worst;
}

}  // namespace momat
