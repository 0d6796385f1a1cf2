#pragma once

// Behavioral rules of the agents and the contract memory.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "momat/ledger.hpp"

namespace momat {

struct Parameters {
    int tau = 10;          // memory length (periods)
    double lambda = 0.2;   // labor share of investment
    double sig_a = 20.0;
    double sig_b = 480.0;
    double sig_c = 200.0;
    double rho_r = 0.8;
    double rho_l = 0.95;
    double rho_c = 0.6;
    double mu = 0.5;       // markup
    double omega = 0.5;    // windfall share of surplus in price
    double delta_c = 0.15;
    double delta_b = 0.4;
    double p_r = 25.0;
    double p_l = 12.0;
    double p_0 = 30.0;
    double gamma = 0.75;
    double alpha = 0.42;
    double beta_l = 0.95;
    double beta_r = 0.7;
    double beta_c = 0.6;
    double nu_l = 100.0;
    double nu_r = 100.0;
    Endowments endowments{};

    /// Throws InvalidParameter naming the first offending field.
    void validate() const;

    friend bool operator==(const Parameters&, const Parameters&) = default;
};

/// Config-file keys, in canonical order. `tau` is integral; the rest are reals.
inline constexpr std::array<std::string_view, 24> kParameterKeys = {
    "tau",   "lambda",  "sig_a",   "sig_b", "sig_c", "rho_r",  "rho_l",  "rho_c",
    "mu",    "omega",   "delta_c", "delta_b", "p_r", "p_l",    "p_0",    "gamma",
    "alpha", "beta_l",  "beta_r",  "beta_c", "nu_l", "nu_r",   "com_lab_0", "com_res_0"};

bool is_parameter_key(std::string_view key) noexcept;
/// Throws InvalidParameter for unknown keys or a non-integral tau.
void set_parameter(Parameters& p, std::string_view key, double value);
double get_parameter(const Parameters& p, std::string_view key);

/// Future wage and repayment obligations; index 0 is the most recent contract.
struct ContractMemory {
    std::vector<double> wage;
    std::vector<double> repay;

    explicit ContractMemory(std::size_t tau = 10) : wage(tau, 0.0), repay(tau, 0.0) {}
    friend bool operator==(const ContractMemory&, const ContractMemory&) = default;
};

struct Dues {
    double wages = 0.0;
    double repays = 0.0;
};

Dues memory_due(const ContractMemory& mem);
/// [x, hist_0, ..., hist_{n-2}]; throws InvalidArgument for negative or non-finite x.
std::vector<double> memory_push(const std::vector<double>& hist, double x);

struct Consumption {
    double lab = 0.0;
    double res = 0.0;
    double cap = 0.0;
    double demand = 0.0;
};

Consumption consumption(double lab_bank, double res_bank, double cap_bank, double rho_l, double rho_r, double rho_c);
double demand_plan(double wages, double repays, double mu);
/// 1 + α L^γ R^(1−γ), with 0 raised to a positive power taken as 0.
double production(double labor, double resources, double alpha, double gamma);
double good_price(double plan, double production, double surplus, double omega, int period, double p_0);
double investment_sigmoid(double surplus, double sig_a, double sig_b, double sig_c);

struct Allocation {
    double res = 0.0;
    double lab = 0.0;
    double installment = 0.0;
};

Allocation allocate_investment(double investment, double lambda, int tau);
double dividend_decision(double diff, double start_com_bank, double delta_c, double delta_b);

struct PeriodMetrics {
    double wages_payment = 0.0;
    double repays_payment = 0.0;
    double consum_lab = 0.0;
    double consum_res = 0.0;
    double consum_cap = 0.0;
    double demand = 0.0;
    double demand_plan = 0.0;
    double demand_surplus = 0.0;
    double good_production = 0.0;
    double good_price = 0.0;
    double investment = 0.0;
    double investment_res = 0.0;
    double investment_lab = 0.0;
    double repayment = 0.0;
    double diff = 0.0;
    double dividend_decision = 0.0;
    double dividend_payment = 0.0;

    std::array<double, 17> values() const noexcept;
    static PeriodMetrics from_values(const std::array<double, 17>& v) noexcept;
    friend bool operator==(const PeriodMetrics&, const PeriodMetrics&) = default;
};

inline constexpr std::array<std::string_view, 17> kMetricNames = {
    "WagesPayment", "RepaysPayment", "ConsumLab",  "ConsumRes",   "ConsumCap",    "Demand",
    "DemandPlan",   "DemandSurplus", "GoodProduction", "GoodPrice", "Investment", "InvestmentRes",
    "InvestmentLab", "Repayment",    "Diff",       "DividendDecision", "DividendPayment"};

}  // namespace momat
