#include "momat/decisions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "momat/error.hpp"

namespace momat {

namespace {

void require(bool ok, std::string_view field, std::string_view rule) {
    if (!ok) throw Error(ErrorCode::InvalidParameter, std::string(field) + " must be " + std::string(rule));
}

bool fraction(double x) { return x >= 0.0 && x <= 1.0; }
bool positive(double x) { return std::isfinite(x) && x > 0.0; }
bool non_negative(double x) { return std::isfinite(x) && x >= 0.0; }

double* field(Parameters& p, std::string_view key) {
    if (key == "lambda") return &p.lambda;
    if (key == "sig_a") return &p.sig_a;
    if (key == "sig_b") return &p.sig_b;
    if (key == "sig_c") return &p.sig_c;
    if (key == "rho_r") return &p.rho_r;
    if (key == "rho_l") return &p.rho_l;
    if (key == "rho_c") return &p.rho_c;
    if (key == "mu") return &p.mu;
    if (key == "omega") return &p.omega;
    if (key == "delta_c") return &p.delta_c;
    if (key == "delta_b") return &p.delta_b;
    if (key == "p_r") return &p.p_r;
    if (key == "p_l") return &p.p_l;
    if (key == "p_0") return &p.p_0;
    if (key == "gamma") return &p.gamma;
    if (key == "alpha") return &p.alpha;
    if (key == "beta_l") return &p.beta_l;
    if (key == "beta_r") return &p.beta_r;
    if (key == "beta_c") return &p.beta_c;
    if (key == "nu_l") return &p.nu_l;
    if (key == "nu_r") return &p.nu_r;
    if (key == "com_lab_0") return &p.endowments.com_lab;
    if (key == "com_res_0") return &p.endowments.com_res;
    return nullptr;
}

}  // namespace

void Parameters::validate() const {
    require(tau >= 1, "tau", ">= 1");
    require(fraction(lambda), "lambda", "in [0,1]");
    require(std::isfinite(sig_a), "sig_a", "finite");
    require(positive(sig_b), "sig_b", "> 0");
    require(positive(sig_c), "sig_c", "> 0");
    require(fraction(rho_r), "rho_r", "in [0,1]");
    require(fraction(rho_l), "rho_l", "in [0,1]");
    require(fraction(rho_c), "rho_c", "in [0,1]");
    require(std::isfinite(mu), "mu", "finite");
    require(std::isfinite(omega), "omega", "finite");
    require(fraction(delta_c), "delta_c", "in [0,1]");
    require(fraction(delta_b), "delta_b", "in [0,1]");
    require(positive(p_r), "p_r", "> 0");
    require(positive(p_l), "p_l", "> 0");
    require(positive(p_0), "p_0", "> 0");
    require(fraction(gamma), "gamma", "in [0,1]");
    require(positive(alpha), "alpha", "> 0");
    require(fraction(beta_l), "beta_l", "in [0,1]");
    require(fraction(beta_r), "beta_r", "in [0,1]");
    require(fraction(beta_c), "beta_c", "in [0,1]");
    require(non_negative(nu_l), "nu_l", ">= 0");
    require(non_negative(nu_r), "nu_r", ">= 0");
    require(non_negative(endowments.com_lab), "com_lab_0", ">= 0");
    require(non_negative(endowments.com_res), "com_res_0", ">= 0");
}

bool is_parameter_key(std::string_view key) noexcept {
    return std::find(kParameterKeys.begin(), kParameterKeys.end(), key) != kParameterKeys.end();
}

void set_parameter(Parameters& p, std::string_view key, double value) {
    if (key == "tau") {
        if (!(value >= 1.0) || value != std::floor(value) || value > 1e6)
            throw Error(ErrorCode::InvalidParameter, "tau must be a positive integer");
        p.tau = static_cast<int>(value);
        return;
    }
    double* slot = field(p, key);
    if (!slot) throw Error(ErrorCode::InvalidParameter, "unknown parameter '" + std::string(key) + "'");
    *slot = value;
}

double get_parameter(const Parameters& p, std::string_view key) {
    if (key == "tau") return p.tau;
    double* slot = field(const_cast<Parameters&>(p), key);
    if (!slot) throw Error(ErrorCode::InvalidParameter, "unknown parameter '" + std::string(key) + "'");
    return *slot;
}

Dues memory_due(const ContractMemory& mem) {
    Dues d;
    for (double w : mem.wage) d.wages += w;
    for (double r : mem.repay) d.repays += r;
    return d;
}

std::vector<double> memory_push(const std::vector<double>& hist, double x) {
    if (!std::isfinite(x) || x < 0.0) throw Error(ErrorCode::InvalidArgument, "memory entries must be >= 0");
    if (hist.empty()) return hist;
    std::vector<double> out;
    out.reserve(hist.size());
    out.push_back(x);
    out.insert(out.end(), hist.begin(), hist.end() - 1);
    return out;
}

Consumption consumption(double lab_bank, double res_bank, double cap_bank, double rho_l, double rho_r, double rho_c) {
    Consumption c;
    c.lab = rho_l * lab_bank;
    c.res = rho_r * res_bank;
    c.cap = rho_c * cap_bank;
    c.demand = c.lab + c.res + c.cap;
    return c;
}

double demand_plan(double wages, double repays, double mu) { return (wages + repays) * (1.0 + mu); }

double production(double labor, double resources, double alpha, double gamma) {
    auto power = [](double base, double e) { return base == 0.0 && e > 0.0 ? 0.0 : std::pow(base, e); };
    return 1.0 + alpha * power(labor, gamma) * power(resources, 1.0 - gamma);
}

double good_price(double plan, double production, double surplus, double omega, int period, double p_0) {
    if (!(production > 0.0)) throw Error(ErrorCode::InvalidArgument, "production must be > 0");
    return plan / production + omega * std::max(0.0, surplus) + (period == 0 ? p_0 : 0.0);
}

double investment_sigmoid(double surplus, double sig_a, double sig_b, double sig_c) {
    return sig_a + sig_b / (1.0 + std::exp(-surplus / sig_c));
}

Allocation allocate_investment(double investment, double lambda, int tau) {
    // The larger share is computed by product and the smaller one by
    // difference, which is exact (Sterbenz) so the shares sum to the total.
    double big = investment * std::max(lambda, 1.0 - lambda);
    big = std::max(big, investment * 0.5);
    double small = investment - big;
    return lambda <= 0.5 ? Allocation{big, small, investment / tau} : Allocation{small, big, investment / tau};
}

double dividend_decision(double diff, double start_com_bank, double delta_c, double delta_b) {
    return std::max(0.0, diff * delta_c) + (start_com_bank > 0.0 ? start_com_bank * delta_b : 0.0);
}

std::array<double, 17> PeriodMetrics::values() const noexcept {
    return {wages_payment, repays_payment, consum_lab,     consum_res,     consum_cap,     demand,
            demand_plan,   demand_surplus, good_production, good_price,    investment,     investment_res,
            investment_lab, repayment,     diff,           dividend_decision, dividend_payment};
}

PeriodMetrics PeriodMetrics::from_values(const std::array<double, 17>& v) noexcept {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10], v[11], v[12], v[13], v[14], v[15], v[16]};
}

}  // namespace momat
