// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "momat/categorical_engine.hpp"
#include "momat/decisions.hpp"
#include "momat/error.hpp"
#include "momat/stability.hpp"
#include "table5.hpp"
#include "trace_cells.hpp"
#include "universal.hpp"

using namespace momat;

namespace {

constexpr double kTable5RuntimeLimit = 1.0;        // s
constexpr double kInvarianceRuntimeLimit = 2.0;    // s
constexpr double kInvarianceTolerance = 1e-9;
constexpr double kEngineTolerance = 1e-12;
constexpr double kPriceDriftLimit = 0.01;
constexpr int kRandomBookings = 1000;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome golden_trace() {
    auto start = std::chrono::steady_clock::now();
    Trace trace = run(Parameters{}, 2, EngineKind::RecursiveOracle);
    double elapsed = seconds_since(start);
    int cells = 0, bad = 0;
    std::string first_bad;
    for (const auto& c : golden::kTable5) {
        for (int t = 0; t < 3; ++t) {
            double expected = c.values[static_cast<std::size_t>(t)];
            double got = testing::cell(trace.rows[static_cast<std::size_t>(t)], c.column);
            ++cells;
            if (!(std::abs(got - expected) <= golden::tolerance(c.column, t, expected))) {
                ++bad;
                if (first_bad.empty()) first_bad = std::string(c.column) + "@" + std::to_string(t) + "=" + std::to_string(got);
            }
        }
    }
    std::ostringstream d;
    d << cells << " cells, " << bad << " outside tolerance" << (first_bad.empty() ? "" : " (first " + first_bad + ")")
      << ", " << elapsed << " s";
    return {bad == 0 && elapsed < kTable5RuntimeLimit, d.str()};
}

Outcome worked_examples() {
    int bad = 0, total = 0;
    auto near = [&](double got, double want, double tol) {
        ++total;
        if (!(std::abs(got - want) <= tol)) ++bad;
    };
    near(production(110, 20, 0.42, 0.75), 31.17, 0.01);
    near(production(0, 8.32, 0.42, 0.75), 1.0, 0.01);
    near(production(4.33, 9.26, 0.42, 0.75), 3.20, 0.01);
    near(investment_sigmoid(0, 20, 480, 200), 260.0, 0.01);
    near(investment_sigmoid(49.4, 20, 480, 200), 289.49, 0.01);
    near(investment_sigmoid(25.36, 20, 480, 200), 275.20, 0.01);
    near(demand_plan(0, 0, 0.5), 0.0, 0.01);
    near(demand_plan(52, 26, 0.5), 117.0, 0.01);
    near(demand_plan(109.90, 54.95, 0.5), 247.27, 0.01);
    near(dividend_decision(52, 0, 0.15, 0.4), 7.8, 0.01);
    near(dividend_decision(138.5, 52, 0.15, 0.4), 41.57, 0.01);
    near(dividend_decision(121.25, 190.50, 0.15, 0.4), 94.39, 0.01);
    near(good_price(0, 31.17, 0, 0.5, 0, 30), 30.0, 0.01);
    near(good_price(117, 1.0, 49.4, 0.5, 1, 30), 141.7, 0.01);
    near(good_price(247.27, 3.20, 25.36, 0.5, 2, 30), 89.94, 0.05);
    auto c1 = consumption(0, 208, 0, 0.95, 0.8, 0.6);
    near(c1.res, 166.4, 0.01);
    auto c2 = consumption(52, 273.19, 7.8, 0.95, 0.8, 0.6);
    near(c2.demand, 272.63, 0.01);
    auto a = allocate_investment(260, 0.2, 10);
    near(a.res, 208, 0.01);
    near(a.lab, 52, 0.01);
    near(a.installment, 26, 0.01);
    std::vector<double> h(10, 0.0);
    h = memory_push(h, 52.0);
    ++total;
    bad += h != std::vector<double>{52, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    h = memory_push(h, 57.90);
    ++total;
    bad += h != std::vector<double>{57.90, 52, 0, 0, 0, 0, 0, 0, 0, 0};
    ContractMemory m;
    m.wage = h;
    near(memory_due(m).wages, 109.90, 0.01);
    return {bad == 0, std::to_string(total) + " examples, " + std::to_string(bad) + " failed"};
}

Outcome invariance_suite() {
    auto start = std::chrono::steady_clock::now();
    Trace trace = run(Parameters{}, 100, EngineKind::RecursiveOracle);
    double elapsed = seconds_since(start);
    double worst = 0.0;
    for (const auto& row : trace.rows) worst = std::max(worst, row.inv.max_abs());
    std::ostringstream d;
    d << trace.rows.size() << " rows, max |invariance| " << worst << ", " << elapsed << " s";
    return {worst <= kInvarianceTolerance && elapsed < kInvarianceRuntimeLimit, d.str()};
}

Outcome engine_equivalence() {
    Trace a = run(Parameters{}, 100, EngineKind::RecursiveOracle);
    Trace b = run(Parameters{}, 100, EngineKind::Categorical);
    double div = max_divergence(a, b);
    std::ostringstream d;
    d << "max divergence " << div << " over " << a.rows.size() << " rows";
    return {div <= kEngineTolerance, d.str()};
}

Outcome stability() {
    auto report = stability_report(run(Parameters{}, 100, EngineKind::RecursiveOracle));
    double drift = report.drift_of("GoodPrice");
    std::ostringstream d;
    d << "bounded=" << (report.bounded ? "true" : "false") << ", GoodPrice drift " << drift;
    return {report.bounded && drift < kPriceDriftLimit, d.str()};
}

Outcome law_suites() {
    int periods = 0, failures = 0;
    Parameters p;
    SimulationState s = initial_state(p);
    for (int t = 0; t <= 100; ++t) {
        try {
            auto step = categorical_step(s, p);
            failures += !step.witness.laws.passed();
            s = std::move(step.result.next);
        } catch (const Error&) {
            ++failures;
            break;
        }
        ++periods;
    }

    using cat::FinSet;
    using cat::FinSetMap;
    FinSet A{"a", "b"}, B{"x", "y", "z"}, C{"t", "f"};
    auto pb = cat::finset_pullback(FinSetMap::from_pairs(A, C, {{"a", "t"}, {"b", "f"}}),
                                   FinSetMap::from_pairs(B, C, {{"x", "t"}, {"y", "t"}, {"z", "f"}}));
    bool pullback_ok = pb.apex == FinSet{"(a,x)", "(a,y)", "(b,z)"};
    FinSet one{"t"}, PA{"a", "b"}, PB{"x", "y"};
    auto po = cat::finset_pushout(FinSetMap::from_pairs(one, PA, {{"t", "a"}}), FinSetMap::from_pairs(one, PB, {{"t", "x"}}));
    bool pushout_ok = po.apex == FinSet{"[a=x]", "b", "y"};

    // Exhaustive mediating-map search: every map between the fixture sets.
    std::size_t cones = 0, non_unique = 0;
    using testing::Images;
    for (std::size_t na = 0; na <= 3; ++na)
        for (std::size_t nb = 0; nb <= 2; ++nb)
            for (std::size_t nc = 1; nc <= 2; ++nc)
                testing::for_each_map(na, nc, [&](const Images& fi) {
                    testing::for_each_map(nb, nc, [&](const Images& gi) {
                        auto Aset = testing::labeled(na, 'a'), Bset = testing::labeled(nb, 'b'), Cset = testing::labeled(nc, 'c');
                        auto pbk = cat::finset_pullback(FinSetMap(Aset, Cset, fi), FinSetMap(Bset, Cset, gi));
                        for (std::size_t nd = 0; nd <= 2; ++nd)
                            testing::for_each_map(nd, na, [&](const Images& da) {
                                testing::for_each_map(nd, nb, [&](const Images& db) {
                                    bool cone = true;
                                    for (std::size_t k = 0; k < nd; ++k) cone = cone && fi[da[k]] == gi[db[k]];
                                    ++cones;
                                    non_unique += testing::pullback_mediators(pbk, da, db) != (cone ? 1u : 0u);
                                });
                            });
                        // Dual: the sets above, read as a span A <- C' -> B with C' of size nc.
                        if (na == 0 || nb == 0) return;
                        testing::for_each_map(nc, na, [&](const Images& f2) {
                            testing::for_each_map(nc, nb, [&](const Images& g2) {
                                auto pso = cat::finset_pushout(FinSetMap(Cset, Aset, f2), FinSetMap(Cset, Bset, g2));
                                for (std::size_t nq = 1; nq <= 2; ++nq)
                                    testing::for_each_map(na, nq, [&](const Images& qa) {
                                        testing::for_each_map(nb, nq, [&](const Images& qb) {
                                            bool cocone = true;
                                            for (std::size_t k = 0; k < nc; ++k) cocone = cocone && qa[f2[k]] == qb[g2[k]];
                                            ++cones;
                                            non_unique += testing::pushout_mediators(pso, nq, qa, qb) != (cocone ? 1u : 0u);
                                        });
                                    });
                            });
                        });
                    });
                });

    std::ostringstream d;
    d << periods << " periods law-checked, " << failures << " failures; pullback " << (pullback_ok ? "ok" : "wrong")
      << "; pushout " << (pushout_ok ? "ok" : "wrong") << "; " << cones << " (co)cones searched, " << non_unique
      << " without a unique mediator";
    return {failures == 0 && periods == 101 && pullback_ok && pushout_ok && non_unique == 0, d.str()};
}

Outcome conservation() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> amount(0.0, 400.0);
    std::uniform_int_distribution<int> kind(0, 7);
    LedgerState s = init_ledger();
    s.set_real_balance(AccountId::LabLab, 500.0);
    s.set_real_balance(AccountId::ResRes, 500.0);
    s.set_real_balance(AccountId::ComGood, 500.0);
    int accepted = 0, rejected = 0, unbalanced = 0, negative = 0, unatomic = 0;
    for (int i = 0; i < kRandomBookings; ++i) {
        double x = amount(rng), q = amount(rng) / 40.0;
        Booking b;
        switch (kind(rng)) {
            case 0: b = bookings::wages(x, q); break;
            case 1: b = bookings::goods_purchase(Agent::Lab, x, q); break;
            case 2: b = bookings::resources(x, q); break;
            case 3: b = bookings::goods_purchase(Agent::Res, x, q); break;
            case 4: b = bookings::loan(x); break;
            case 5: b = bookings::dividend(std::min(x, s[AccountId::ComDiv]), amount(rng) / 4.0); break;
            case 6: b = bookings::repayment(x); break;
            default: b = bookings::goods_purchase(Agent::Cap, x, q); break;
        }
        unbalanced += nominal_residual(b) != 0.0;
        const LedgerState before = s;
        try {
            s = post_booking(s, b);
            ++accepted;
        } catch (const Error&) {
            unatomic += !(s == before);
            ++rejected;
        }
        for (double v : s.balances()) negative += v < 0.0;
    }
    std::ostringstream d;
    d << kRandomBookings << " bookings: " << accepted << " posted, " << rejected << " rejected, " << unbalanced
      << " unbalanced, " << negative << " negative balances";
    return {unbalanced == 0 && negative == 0 && unatomic == 0 && rejected > 0 && accepted > 0, d.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> check;
    };
    const Criterion criteria[] = {
        {"AC1 golden trace t=0..2", golden_trace},
        {"AC2 worked examples", worked_examples},
        {"AC3 invariances over 100 periods", invariance_suite},
        {"AC4 engine equivalence", engine_equivalence},
        {"AC5 stability", stability},
        {"AC6 categorical law suites", law_suites},
        {"AC7 conservation under random bookings", conservation},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
