#include "momat/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "momat/error.hpp"

namespace momat {

namespace {

using enum AccountId;
using K = AccountKind;

constexpr std::array<AccountSpec, kAccountCount> kTable = {{
    {LabBank, Agent::Lab, "AccLabBank", K::Asset, Unit::EU},
    {LabLab, Agent::Lab, "AccLabLab", K::Asset, Unit::Hours},
    {LabGood, Agent::Lab, "AccLabGood", K::Asset, Unit::Good},
    {ResBank, Agent::Res, "AccResBank", K::Asset, Unit::EU},
    {ResRes, Agent::Res, "AccResRes", K::Asset, Unit::Kg},
    {ResGood, Agent::Res, "AccResGood", K::Asset, Unit::Good},
    {ComBank, Agent::Com, "AccComBank", K::Asset, Unit::EU},
    {ComLoan, Agent::Com, "AccComLoan", K::Liability, Unit::EU},
    {ComDiv, Agent::Com, "AccComDiv", K::Liability, Unit::EU},
    {ComLab, Agent::Com, "AccComLab", K::Asset, Unit::Hours},
    {ComRes, Agent::Com, "AccComRes", K::Asset, Unit::Kg},
    {ComGood, Agent::Com, "AccComGood", K::Asset, Unit::Good},
    {CapBank, Agent::Cap, "AccCapBank", K::Asset, Unit::EU},
    {CapDiv, Agent::Cap, "AccCapDiv", K::Asset, Unit::EU},
    {CapGood, Agent::Cap, "AccCapGood", K::Asset, Unit::Good},
    {BankLoan, Agent::Bank, "AccBankLoan", K::Asset, Unit::EU},
    {BankCom, Agent::Bank, "AccBankCom", K::Liability, Unit::EU},
    {BankCap, Agent::Bank, "AccBankCap", K::Liability, Unit::EU},
    {BankRes, Agent::Bank, "AccBankRes", K::Liability, Unit::EU},
    {BankLab, Agent::Bank, "AccBankLab", K::Liability, Unit::EU},
}};

static_assert([] {
    for (std::size_t i = 0; i < kTable.size(); ++i)
        if (index_of(kTable[i].id) != i) return false;
    return true;
}());

bool valid_account(AccountId id) noexcept { return index_of(id) < kAccountCount; }

AccountId bank_account_of(Agent agent) {
    switch (agent) {
        case Agent::Lab: return LabBank;
        case Agent::Res: return ResBank;
        case Agent::Cap: return CapBank;
        case Agent::Com: return ComBank;
        case Agent::Bank: break;
    }
    throw Error(ErrorCode::InvalidArgument, "the bank keeps no deposit with itself");
}

AccountId mirror_of(Agent agent) {
    switch (agent) {
        case Agent::Lab: return BankLab;
        case Agent::Res: return BankRes;
        case Agent::Cap: return BankCap;
        case Agent::Com: return BankCom;
        case Agent::Bank: break;
    }
    throw Error(ErrorCode::InvalidArgument, "the bank keeps no deposit with itself");
}

AccountId good_account_of(Agent agent) {
    switch (agent) {
        case Agent::Lab: return LabGood;
        case Agent::Res: return ResGood;
        case Agent::Cap: return CapGood;
        default: break;
    }
    throw Error(ErrorCode::InvalidArgument, "only Lab, Res and Cap consume goods");
}

BookingLeg in(AccountId id, double amount) { return {id, Direction::Inflow, amount, account_spec(id).unit}; }
BookingLeg out(AccountId id, double amount) { return {id, Direction::Outflow, amount, account_spec(id).unit}; }

ErrorCode error_for(DiagnosticKind kind) {
    switch (kind) {
        case DiagnosticKind::UnitMismatch: return ErrorCode::UnitMismatch;
        case DiagnosticKind::InsufficientBalance: return ErrorCode::InsufficientBalance;
        case DiagnosticKind::NominalImbalance:
        case DiagnosticKind::RealImbalance: return ErrorCode::ConservationViolation;
        default: return ErrorCode::ValidationFailure;
    }
}

}  // namespace

std::span<const AccountSpec, kAccountCount> account_table() noexcept { return kTable; }

const AccountSpec& account_spec(AccountId id) {
    if (!valid_account(id)) throw Error(ErrorCode::NotFound, "account index " + std::to_string(index_of(id)));
    return kTable[index_of(id)];
}

std::optional<AccountId> find_account(std::string_view name) noexcept {
    for (const auto& spec : kTable)
        if (spec.name == name) return spec.id;
    return std::nullopt;
}

std::string_view to_string(Agent agent) noexcept {
    switch (agent) {
        case Agent::Lab: return "Lab";
        case Agent::Res: return "Res";
        case Agent::Com: return "Com";
        case Agent::Cap: return "Cap";
        case Agent::Bank: return "Bank";
    }
    return "?";
}

std::string_view to_string(Unit unit) noexcept {
    switch (unit) {
        case Unit::EU: return "EU";
        case Unit::Hours: return "h";
        case Unit::Kg: return "kg";
        case Unit::Good: return "G";
    }
    return "?";
}

std::string_view to_string(AccountKind kind) noexcept {
    return kind == AccountKind::Asset ? "Asset" : "Liability";
}

std::optional<Unit> unit_from_string(std::string_view s) noexcept {
    for (auto u : {Unit::EU, Unit::Hours, Unit::Kg, Unit::Good})
        if (to_string(u) == s) return u;
    return std::nullopt;
}

std::string_view to_string(DiagnosticKind kind) noexcept {
    switch (kind) {
        case DiagnosticKind::UnknownAccount: return "unknown-account";
        case DiagnosticKind::UnitMismatch: return "unit-mismatch";
        case DiagnosticKind::NegativeAmount: return "negative-amount";
        case DiagnosticKind::NonFinite: return "non-finite";
        case DiagnosticKind::InsufficientBalance: return "insufficient-balance";
        case DiagnosticKind::NominalImbalance: return "nominal-imbalance";
        case DiagnosticKind::RealImbalance: return "real-imbalance";
    }
    return "?";
}

Account LedgerState::account(AccountId id) const {
    const auto& s = account_spec(id);
    return Account{s.id, s.agent, s.name, s.kind, s.unit, balance(id)};
}

std::vector<Account> LedgerState::accounts() const {
    std::vector<Account> out;
    out.reserve(kAccountCount);
    for (const auto& s : kTable) out.push_back(account(s.id));
    return out;
}

void LedgerState::set_real_balance(AccountId id, double value) {
    const auto& s = account_spec(id);
    if (s.unit == Unit::EU)
        throw Error(ErrorCode::UnitMismatch, std::string(s.name) + " is nominal; it only moves through bookings");
    if (!std::isfinite(value) || value < 0.0)
        throw Error(ErrorCode::InsufficientBalance, std::string(s.name) + " would hold " + std::to_string(value));
    balances_[index_of(id)] = value;
}

LedgerState init_ledger(const Endowments& endowments) {
    if (!(endowments.com_lab >= 0.0) || !(endowments.com_res >= 0.0) || !std::isfinite(endowments.com_lab) ||
        !std::isfinite(endowments.com_res))
        throw Error(ErrorCode::NegativeEndowment, "initial endowments must be finite and >= 0");
    LedgerState state;
    state.set_real_balance(ComLab, endowments.com_lab);
    state.set_real_balance(ComRes, endowments.com_res);
    return state;
}

namespace bookings {

Booking wages(double wage, double hours) {
    return {1, "Lab sells Lab to Com",
            {out(LabLab, hours), in(LabBank, wage),
             out(ComBank, wage), in(ComLab, hours),
             out(BankCom, wage), in(BankLab, wage)}};
}

Booking goods_purchase(Agent consumer, double spend, double goods) {
    int id = 0;
    std::string label;
    switch (consumer) {
        case Agent::Lab: id = 2; label = "Lab buys Good from Com"; break;
        case Agent::Res: id = 4; label = "Res buys Good from Com"; break;
        case Agent::Cap: id = 8; label = "Cap buys Good from Com"; break;
        default: throw Error(ErrorCode::InvalidArgument, "only Lab, Res and Cap buy goods");
    }
    return {id, std::move(label),
            {out(bank_account_of(consumer), spend), in(good_account_of(consumer), goods),
             out(ComGood, goods), in(ComBank, spend),
             out(mirror_of(consumer), spend), in(BankCom, spend)}};
}

Booking resources(double payment, double kg) {
    return {3, "Res sells Res to Com",
            {out(ResRes, kg), in(ResBank, payment),
             out(ComBank, payment), in(ComRes, kg),
             out(BankCom, payment), in(BankRes, payment)}};
}

Booking loan(double amount) {
    return {5, "Com gets Loan from Bank",
            {in(ComBank, amount), in(ComLoan, amount),
             in(BankCom, amount), in(BankLoan, amount)}};
}

Booking dividend(double paid, double declared) {
    return {6, "Com pays Div to Cap",
            {out(CapDiv, paid), in(CapBank, paid),
             out(ComBank, paid), out(ComDiv, paid),
             out(BankCom, paid), in(BankCap, paid),
             in(ComDiv, declared), in(CapDiv, declared)}};
}

Booking repayment(double amount) {
    return {7, "Com repays Loan to Bank",
            {out(ComBank, amount), out(ComLoan, amount),
             out(BankCom, amount), out(BankLoan, amount)}};
}

}  // namespace bookings

bool ValidationResult::has(DiagnosticKind kind) const noexcept {
    return std::any_of(diagnostics.begin(), diagnostics.end(), [kind](const Diagnostic& d) { return d.kind == kind; });
}

bool is_debit(const BookingLeg& leg) {
    bool asset = account_spec(leg.account).kind == AccountKind::Asset;
    return asset == (leg.direction == Direction::Inflow);
}

double exact_sum(std::span<const double> values) {
    std::vector<double> partials;
    for (double x : values) {
        std::size_t i = 0;
        for (double y : partials) {
            if (std::abs(x) < std::abs(y)) std::swap(x, y);
            double hi = x + y;
            double lo = y - (hi - x);
            if (lo != 0.0) partials[i++] = lo;
            x = hi;
        }
        partials.resize(i);
        partials.push_back(x);
    }
    double total = 0.0;
    for (auto it = partials.rbegin(); it != partials.rend(); ++it) total += *it;
    return total;
}

double nominal_residual(const Booking& booking) {
    std::vector<double> terms;
    for (const auto& leg : booking.legs) {
        if (leg.unit != Unit::EU || !valid_account(leg.account)) continue;
        terms.push_back(is_debit(leg) ? leg.amount : -leg.amount);
    }
    return exact_sum(terms);
}

std::array<double, 4> real_residuals(const Booking& booking) {
    std::array<std::vector<double>, 4> terms;
    for (const auto& leg : booking.legs) {
        if (leg.unit == Unit::EU) continue;
        terms[static_cast<std::size_t>(leg.unit)].push_back(signed_delta(leg));
    }
    std::array<double, 4> out{};
    for (std::size_t u = 0; u < 4; ++u) out[u] = exact_sum(terms[u]);
    return out;
}

std::vector<Agent> nominal_agents(const Booking& booking) {
    std::vector<Agent> agents;
    for (const auto& leg : booking.legs) {
        if (leg.unit != Unit::EU || !valid_account(leg.account)) continue;
        auto agent = account_spec(leg.account).agent;
        if (std::find(agents.begin(), agents.end(), agent) == agents.end()) agents.push_back(agent);
    }
    return agents;
}

ValidationResult validate_booking(const LedgerState& state, const Booking& booking) {
    ValidationResult result;
    auto report = [&](DiagnosticKind kind, std::size_t leg, std::string msg) {
        result.diagnostics.push_back({kind, leg, std::move(msg)});
    };

    bool legs_well_formed = true;
    for (std::size_t i = 0; i < booking.legs.size(); ++i) {
        const auto& leg = booking.legs[i];
        if (!valid_account(leg.account)) {
            report(DiagnosticKind::UnknownAccount, i, "leg targets no known account");
            legs_well_formed = false;
            continue;
        }
        const auto& spec = account_spec(leg.account);
        if (!std::isfinite(leg.amount)) {
            report(DiagnosticKind::NonFinite, i, std::string(spec.name) + " amount is not finite");
            legs_well_formed = false;
        } else if (leg.amount < 0.0) {
            report(DiagnosticKind::NegativeAmount, i, std::string(spec.name) + " amount is negative");
            legs_well_formed = false;
        }
        if (leg.unit != spec.unit) {
            report(DiagnosticKind::UnitMismatch, i,
                   "[" + std::string(to_string(leg.unit)) + "] leg on " + std::string(spec.name) + " [" +
                       std::string(to_string(spec.unit)) + "]");
            legs_well_formed = false;
        }
    }
    if (!legs_well_formed) return result;

    auto balances = state.balances();
    for (std::size_t i = 0; i < booking.legs.size(); ++i) {
        const auto& leg = booking.legs[i];
        auto& b = balances[index_of(leg.account)];
        b += signed_delta(leg);
        if (b < 0.0) {
            std::ostringstream msg;
            msg.precision(17);
            msg << account_spec(leg.account).name << " would fall to " << b;
            report(DiagnosticKind::InsufficientBalance, i, msg.str());
        }
    }

    if (double r = nominal_residual(booking); r != 0.0) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "EU debits exceed credits by " << r;
        report(DiagnosticKind::NominalImbalance, booking.legs.size(), msg.str());
    }
    auto real = real_residuals(booking);
    for (std::size_t u = 1; u < real.size(); ++u) {
        if (real[u] != 0.0)
            report(DiagnosticKind::RealImbalance, booking.legs.size(),
                   std::string(to_string(static_cast<Unit>(u))) + " inflows and outflows differ");
    }
    return result;
}

LedgerState post_booking(const LedgerState& state, const Booking& booking) {
    auto check = validate_booking(state, booking);
    if (!check.ok()) {
        std::string message = "booking " + std::to_string(booking.id) + " rejected:";
        for (const auto& d : check.diagnostics) message += " [" + std::string(to_string(d.kind)) + "] " + d.message;
        throw Error(error_for(check.diagnostics.front().kind), message);
    }
    LedgerState next = state;
    for (const auto& leg : booking.legs) next.set_unchecked(leg.account, next[leg.account] + signed_delta(leg));
    return next;
}

double Invariances::max_abs() const noexcept {
    double m = 0.0;
    for (double v : values()) {
        if (std::isnan(v)) return v;
        m = std::max(m, std::abs(v));
    }
    return m;
}

Invariances invariances(const LedgerState& s) noexcept {
    Invariances inv;
    inv.lab_bank = s[LabBank] - s[BankLab];
    inv.res_bank = s[ResBank] - s[BankRes];
    inv.cap_bank = s[CapBank] - s[BankCap];
    inv.com_bank = s[ComBank] - s[BankCom];
    inv.com_loan = s[BankLoan] - s[ComLoan];
    inv.macro = inv.lab_bank + inv.res_bank + inv.cap_bank + inv.com_bank + inv.com_loan;
    return inv;
}

int investment_validation(double investment, double capacity, double credit_limit) {
    if (std::isnan(investment) || std::isnan(capacity) || std::isnan(credit_limit))
        throw Error(ErrorCode::InvalidArgument, "investment validation on NaN");
    return investment <= capacity + credit_limit ? 1 : 0;
}

}  // namespace momat
