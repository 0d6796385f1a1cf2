#pragma once

// The twenty T-accounts of the five-agent economy, the eight macro bookings
// and the mirror-account invariances.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace momat {

enum class Agent : std::uint8_t { Lab, Res, Com, Cap, Bank };
inline constexpr std::size_t kAgentCount = 5;

/// Units of account: money and the three real quantities.
enum class Unit : std::uint8_t { EU, Hours, Kg, Good };

enum class AccountKind : std::uint8_t { Asset, Liability };

enum class AccountId : std::uint8_t {
    LabBank, LabLab, LabGood,
    ResBank, ResRes, ResGood,
    ComBank, ComLoan, ComDiv, ComLab, ComRes, ComGood,
    CapBank, CapDiv, CapGood,
    BankLoan, BankCom, BankCap, BankRes, BankLab,
};
inline constexpr std::size_t kAccountCount = 20;

struct AccountSpec {
    AccountId id;
    Agent agent;
    std::string_view name;
    AccountKind kind;
    Unit unit;
};

/// Static account table in canonical (trace column) order.
std::span<const AccountSpec, kAccountCount> account_table() noexcept;
const AccountSpec& account_spec(AccountId id);
std::optional<AccountId> find_account(std::string_view name) noexcept;
constexpr std::size_t index_of(AccountId id) noexcept { return static_cast<std::size_t>(id); }

std::string_view to_string(Agent agent) noexcept;
std::string_view to_string(Unit unit) noexcept;
std::string_view to_string(AccountKind kind) noexcept;
std::optional<Unit> unit_from_string(std::string_view s) noexcept;

struct Account {
    AccountId id;
    Agent agent;
    std::string_view name;
    AccountKind kind;
    Unit unit;
    double balance;
};

struct Endowments {
    double com_lab = 110.0;  // h
    double com_res = 20.0;   // kg

    friend bool operator==(const Endowments&, const Endowments&) = default;
};

/// Balances of all twenty accounts. Liabilities hold non-negative magnitudes.
class LedgerState {
public:
    LedgerState() { balances_.fill(0.0); }

    double balance(AccountId id) const noexcept { return balances_[index_of(id)]; }
    double operator[](AccountId id) const noexcept { return balance(id); }
    const std::array<double, kAccountCount>& balances() const noexcept { return balances_; }
    Account account(AccountId id) const;
    std::vector<Account> accounts() const;

    /// Sets a real-unit (h, kg, G) holding outside any booking: decay,
    /// endowments, production. Nominal accounts only move through bookings.
    void set_real_balance(AccountId id, double value);

    /// Raw write for tests and deserialization; no checks.
    void set_unchecked(AccountId id, double value) noexcept { balances_[index_of(id)] = value; }

    friend bool operator==(const LedgerState&, const LedgerState&) = default;

private:
    std::array<double, kAccountCount> balances_{};
};

LedgerState init_ledger(const Endowments& endowments = {});

enum class Direction : std::uint8_t { Inflow, Outflow };

struct BookingLeg {
    AccountId account;
    Direction direction;
    double amount;
    Unit unit;
};

/// One macro booking. Legs come in per-agent pairs (the micro bookings
/// 1a/1b/1c ...) and are applied in order.
struct Booking {
    int id = 0;
    std::string label;
    std::vector<BookingLeg> legs;
};

namespace bookings {

/// 1: Lab sells `hours` of labor to Com for `wage` EU.
Booking wages(double wage, double hours);
/// 2, 4, 8: consumer buys `goods` from Com for `spend` EU.
Booking goods_purchase(Agent consumer, double spend, double goods);
/// 3: Res sells `kg` of resources to Com for `payment` EU.
Booking resources(double payment, double kg);
/// 5: Bank grants Com a loan.
Booking loan(double amount);
/// 6: Com pays the previously declared dividend and declares the next one.
Booking dividend(double paid, double declared);
/// 7: Com repays loan principal.
Booking repayment(double amount);

}  // namespace bookings

enum class DiagnosticKind : std::uint8_t {
    UnknownAccount,
    UnitMismatch,
    NegativeAmount,
    NonFinite,
    InsufficientBalance,
    NominalImbalance,
    RealImbalance,
};

std::string_view to_string(DiagnosticKind kind) noexcept;

struct Diagnostic {
    DiagnosticKind kind;
    std::size_t leg;
    std::string message;
};

struct ValidationResult {
    std::vector<Diagnostic> diagnostics;

    bool ok() const noexcept { return diagnostics.empty(); }
    explicit operator bool() const noexcept { return ok(); }
    bool has(DiagnosticKind kind) const noexcept;
};

/// Signed effect of a leg on the stored balance; liabilities store magnitudes
/// so an inflow raises either kind of account.
constexpr double signed_delta(const BookingLeg& leg) noexcept {
    return leg.direction == Direction::Inflow ? leg.amount : -leg.amount;
}

/// Debit side of the leg in double-entry terms: asset inflow or liability outflow.
bool is_debit(const BookingLeg& leg);

/// Exactly rounded sum (Shewchuk partials); equal exact sums compare equal.
double exact_sum(std::span<const double> values);

/// Exactly rounded (EU debits − EU credits); zero iff the booking conserves money.
double nominal_residual(const Booking& booking);
/// Exactly rounded (inflow − outflow) per real unit, indexed by Unit.
std::array<double, 4> real_residuals(const Booking& booking);

/// Agents whose EU accounts the booking writes to.
std::vector<Agent> nominal_agents(const Booking& booking);

ValidationResult validate_booking(const LedgerState& state, const Booking& booking);

/// Applies the booking; throws UnitMismatch, InsufficientBalance or
/// ConservationViolation (never clamps). The input state is left untouched.
LedgerState post_booking(const LedgerState& state, const Booking& booking);

struct Invariances {
    double lab_bank = 0.0;  // Lab.Bank − Bank.Lab
    double res_bank = 0.0;  // Res.Bank − Bank.Res
    double cap_bank = 0.0;  // Cap.Bank − Bank.Cap
    double com_bank = 0.0;  // Com.Bank − Bank.Com
    double com_loan = 0.0;  // Bank.Loan − Com.Loan
    double macro = 0.0;     // sum of the five

    std::array<double, 6> values() const noexcept { return {lab_bank, res_bank, cap_bank, com_bank, com_loan, macro}; }
    double max_abs() const noexcept;
    friend bool operator==(const Invariances&, const Invariances&) = default;
};

inline constexpr std::array<std::string_view, 6> kInvarianceNames = {
    "I_Lab_B", "I_Res_B", "I_Cap_B", "I_Com_B", "I_Com_L", "I_Mac"};

Invariances invariances(const LedgerState& state) noexcept;

/// Mirror pairs (agent-side, bank-side) behind the first five invariances.
inline constexpr std::array<std::pair<AccountId, AccountId>, 5> kMirrorPairs = {{
    {AccountId::LabBank, AccountId::BankLab},
    {AccountId::ResBank, AccountId::BankRes},
    {AccountId::CapBank, AccountId::BankCap},
    {AccountId::ComBank, AccountId::BankCom},
    {AccountId::BankLoan, AccountId::ComLoan},
}};

inline constexpr double kUnboundedCredit = std::numeric_limits<double>::infinity();

/// 1 iff the investment fits the company's capacity plus the credit limit.
int investment_validation(double investment, double capacity, double credit_limit = kUnboundedCredit);

}  // namespace momat
