#include <doctest.h>

#include <cmath>

#include "momat/error.hpp"
#include "momat/evolution.hpp"
#include "momat/stability.hpp"
#include "reference_model.hpp"
#include "table5.hpp"
#include "trace_cells.hpp"

using namespace momat;
using enum AccountId;
using testing::cell;

TEST_CASE("first two periods match the published table") {
    Trace trace = run(Parameters{}, 2, EngineKind::RecursiveOracle);
    REQUIRE(trace.rows.size() == 3);
    for (const auto& c : golden::kTable5) {
        for (int t = 0; t < 3; ++t) {
            double expected = c.values[static_cast<std::size_t>(t)];
            double got = cell(trace.rows[static_cast<std::size_t>(t)], c.column);
            INFO(c.column << " t=" << t << " got " << got);
            CHECK(std::abs(got - expected) <= golden::tolerance(c.column, t, expected));
        }
    }
}

TEST_CASE("published AccCapGood row repeats AccResRes") {
    Trace trace = run(Parameters{}, 2, EngineKind::RecursiveOracle);
    for (int t = 0; t < 3; ++t) {
        auto i = static_cast<std::size_t>(t);
        CHECK(golden::kCapGoodAsPublished.values[i] == golden::kTable5[21].values[i]);
    }
    // Cap buys nothing before period 2, so its holding is still zero.
    CHECK(trace.rows[1].ledger[CapGood] == 0.0);
    CHECK(trace.rows[2].ledger[CapGood] == 0.0);
}

TEST_CASE("step from the initial state") {
    Parameters p;
    auto r = period_step(initial_state(p), p);
    CHECK(r.metrics.investment == 260.0);
    CHECK(std::abs(r.metrics.good_production - 31.17) <= 0.01);
    CHECK(r.metrics.good_price == 30.0);
    CHECK(r.metrics.dividend_decision == doctest::Approx(7.8));
    const auto& L = r.next.ledger;
    CHECK(L[ComLoan] == 260.0);
    CHECK(L[ResBank] == 208.0);
    CHECK(L[ComBank] == 52.0);
    CHECK(std::abs(L[ComGood] - 31.17) <= 0.01);
    CHECK(L[ResRes] == doctest::Approx(91.68));
    CHECK(L[LabLab] == 100.0);
    CHECK(r.bookings.size() == 8);
    std::vector<int> order;
    for (const auto& b : r.bookings) order.push_back(b.id);
    CHECK(order == std::vector<int>{2, 4, 8, 5, 3, 1, 7, 6});

    auto r2 = period_step(r.next, p);
    CHECK(std::abs(r2.metrics.investment - 289.49) <= 0.01);
    CHECK(r2.metrics.good_price == doctest::Approx(141.7));
    CHECK(std::abs(r2.metrics.diff - 138.50) <= 0.01);
    const auto& L2 = r2.next.ledger;
    CHECK(std::abs(L2[ComBank] - 190.50) <= 0.01);
    CHECK(std::abs(L2[ResBank] - 273.19) <= 0.01);
    CHECK(L2[LabBank] == 52.0);
    CHECK(std::abs(L2[ComLoan] - 523.49) <= 0.01);
}

TEST_CASE("an empty economy cannot deliver the resources its investment buys") {
    Parameters p;
    p.nu_l = p.nu_r = 0.0;
    p.endowments = {0.0, 0.0};
    const SimulationState s = initial_state(p);
    const SimulationState copy = s;
    try {
        period_step(s, p);
        FAIL("period should be rejected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ValidationFailure);
        CHECK(std::string(e.what()).find("AccResRes") != std::string::npos);
    }
    CHECK(s == copy);
}

TEST_CASE("the same empty economy runs once resources are on hand") {
    Parameters p;
    p.nu_l = 0.0;
    p.endowments = {0.0, 0.0};
    auto r = period_step(initial_state(p), p);
    CHECK(r.metrics.demand == 0.0);
    CHECK(r.metrics.good_production == 1.0);
    CHECK(r.metrics.wages_payment == 0.0);
    CHECK(r.metrics.dividend_payment == 0.0);
}

TEST_CASE("trace length and horizon") {
    CHECK(run(Parameters{}, 1, EngineKind::RecursiveOracle).rows.size() == 2);
    CHECK(run(Parameters{}, 1, EngineKind::Categorical).rows.size() == 2);
    CHECK_THROWS_AS(run(Parameters{}, 0, EngineKind::RecursiveOracle), Error);
    Parameters bad;
    bad.rho_l = 1.5;
    CHECK_THROWS_AS(run(bad, 5, EngineKind::RecursiveOracle), Error);
}

TEST_CASE("runs are deterministic") {
    auto a = run(Parameters{}, 100, EngineKind::RecursiveOracle);
    auto b = run(Parameters{}, 100, EngineKind::RecursiveOracle);
    CHECK(a.rows == b.rows);
    CHECK(max_divergence(a, b) == 0.0);
}

TEST_CASE("default run: invariances, mirrors and non-negative balances for 100 periods") {
    auto trace = run(Parameters{}, 100, EngineKind::RecursiveOracle);
    REQUIRE(trace.rows.size() == 101);
    for (const auto& row : trace.rows) {
        for (double v : row.inv.values()) CHECK(std::abs(v) <= 1e-9);
        for (auto [agent_side, bank_side] : kMirrorPairs) CHECK(row.ledger[agent_side] == row.ledger[bank_side]);
        for (double b : row.ledger.balances()) CHECK(b >= 0.0);
    }
}

TEST_CASE("default run agrees with the straight-line reference model") {
    auto trace = run(Parameters{}, 100, EngineKind::RecursiveOracle);
    auto ref = reference::simulate(reference::Params{}, 100);
    REQUIRE(ref.size() == trace.rows.size());
    double worst = 0.0;
    for (std::size_t t = 0; t < ref.size(); ++t)
        for (const auto& [name, expected] : ref[t]) {
            double got = cell(trace.rows[t], name);
            worst = std::max(worst, std::abs(got - expected) / std::max(1.0, std::abs(expected)));
        }
    CHECK(worst <= 1e-9);
}

TEST_CASE("one-period memory asks for the whole loan back the next period") {
    Parameters p;
    p.tau = 1;
    auto first = period_step(initial_state(p), p);
    CHECK(first.next.memory.wage == std::vector<double>{52.0});
    CHECK(first.next.memory.repay == std::vector<double>{260.0});
    CHECK(memory_due(first.next.memory).repays == first.metrics.investment);
    // 260 due against 52 + 455.89 of receipts after paying wages and resources.
    try {
        period_step(first.next, p);
        FAIL("repayment should overdraw the company");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ValidationFailure);
        CHECK(std::string(e.what()).find("booking 7") != std::string::npos);
    }
}

TEST_CASE("wages and repayments telescope over the memory length") {
    Parameters p;
    p.tau = 5;
    auto trace = run(p, 40, EngineKind::RecursiveOracle);
    for (std::size_t t = 0; t < trace.rows.size(); ++t) {
        double wages = 0.0, repays = 0.0;
        for (std::size_t k = 1; k <= 5 && k <= t; ++k) {
            wages += trace.rows[t - k].metrics.investment_lab;
            repays += trace.rows[t - k].metrics.repayment;
        }
        CHECK(trace.rows[t].metrics.wages_payment == doctest::Approx(wages).epsilon(1e-12));
        CHECK(trace.rows[t].metrics.repays_payment == doctest::Approx(repays).epsilon(1e-12));
    }
    CHECK(stability_report(trace).bounded);
}

TEST_CASE("decay rates leave the first three rows untouched") {
    Parameters p;
    p.beta_l = p.beta_r = p.beta_c = 1.0;
    auto a = run(p, 2, EngineKind::RecursiveOracle);
    auto b = run(Parameters{}, 2, EngineKind::RecursiveOracle);
    CHECK(a.rows == b.rows);
    auto a3 = run(p, 3, EngineKind::RecursiveOracle);
    auto b3 = run(Parameters{}, 3, EngineKind::RecursiveOracle);
    // Res's first purchase decays at the start of period 2.
    CHECK(a3.rows[3].ledger[ResGood] != b3.rows[3].ledger[ResGood]);
    CHECK(a3.rows[3].metrics.good_price == b3.rows[3].metrics.good_price);
}

TEST_CASE("stability report") {
    auto trace = run(Parameters{}, 100, EngineKind::RecursiveOracle);
    auto report = stability_report(trace);
    CHECK(report.bounded);
    CHECK(report.drift.size() == 6);

    std::vector<NamedSeries> flat{{"flat", std::vector<double>(30, 4.0)}};
    auto r = stability_report(std::span<const NamedSeries>(flat));
    CHECK(r.bounded);
    CHECK(r.drift_of("flat") == 0.0);

    std::vector<double> doubling{1.0};
    for (int i = 0; i < 40; ++i) doubling.push_back(doubling.back() * 2);
    std::vector<NamedSeries> grow{{"grow", doubling}};
    CHECK_FALSE(stability_report(std::span<const NamedSeries>(grow)).bounded);

    std::vector<NamedSeries> nan{{"nan", std::vector<double>(25, NAN)}};
    CHECK_FALSE(stability_report(std::span<const NamedSeries>(nan)).bounded);

    std::vector<NamedSeries> shorty{{"short", std::vector<double>(5, 1.0)}};
    CHECK_THROWS_AS(stability_report(std::span<const NamedSeries>(shorty)), Error);
}
