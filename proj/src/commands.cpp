#include "momat/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>

#include "momat/cat/finset.hpp"
#include "momat/error.hpp"
#include "momat/stability.hpp"
#include "momat/trace_io.hpp"

namespace momat {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    return f;
}

struct InvarianceBreach {
    int period;
    std::size_t which;
    double value;
};

std::optional<InvarianceBreach> worst_invariance(const Trace& trace, double& worst) {
    worst = 0.0;
    std::optional<InvarianceBreach> breach;
    for (const auto& row : trace.rows) {
        auto v = row.inv.values();
        for (std::size_t k = 0; k < v.size(); ++k) {
            double a = std::abs(v[k]);
            if (std::isnan(a) || a > worst) worst = std::isnan(a) ? a : std::max(worst, a);
            if (!(a <= kInvarianceTolerance) && !breach) breach = InvarianceBreach{row.period, k, v[k]};
        }
    }
    return breach;
}

void write_columns(const std::string& path, const Trace& trace, const std::vector<std::string>& names) {
    const auto& cols = trace_columns();
    std::vector<std::size_t> idx;
    for (const auto& n : names) idx.push_back(static_cast<std::size_t>(std::find(cols.begin(), cols.end(), n) - cols.begin()));
    auto f = open_out(path);
    f << "# period";
    for (const auto& n : names) f << ' ' << n;
    f << '\n';
    for (const auto& row : trace.rows) {
        std::vector<double> flat{static_cast<double>(row.period)};
        for (double v : row.metrics.values()) flat.push_back(v);
        for (double v : row.ledger.balances()) flat.push_back(v);
        for (double v : row.inv.values()) flat.push_back(v);
        f << row.period;
        for (auto i : idx) f << ' ' << format_double(flat[i]);
        f << '\n';
    }
}

}  // namespace

int cmd_run(const RunConfig& config, const RunOutputs& outputs, std::ostream& out, std::ostream& err) {
    Trace trace;
    try {
        trace = run(config.params, config.horizon, config.engine);
        if (outputs.csv_path) {
            auto f = open_out(*outputs.csv_path);
            write_trace_csv(f, trace);
        }
        if (outputs.json_path) {
            auto f = open_out(*outputs.json_path);
            write_trace_json(f, trace);
        }
        if (!outputs.csv_path && !outputs.json_path) write_trace_csv(out, trace);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    double worst = 0.0;
    auto breach = worst_invariance(trace, worst);
    err << "periods: " << trace.rows.size() << ", engine: " << to_string(config.engine)
        << ", max |invariance|: " << format_double(worst) << '\n';
    if (breach) {
        err << "invariance breach: " << kInvarianceNames[breach->which] << " = " << format_double(breach->value)
            << " at period " << breach->period << '\n';
        return kExitInvariance;
    }
    return kExitOk;
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err, const EngineFaults& faults) {
    double divergence = 0.0;
    try {
        Trace reference = run(config.params, config.horizon, EngineKind::RecursiveOracle);
        Trace categorical = run(config.params, config.horizon, EngineKind::Categorical, faults);
        divergence = max_divergence(reference, categorical);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    out << "max divergence: " << format_double(divergence) << '\n';
    if (!(divergence <= kDivergenceTolerance)) {
        err << "engines diverge beyond " << format_double(kDivergenceTolerance) << '\n';
        return kExitDivergence;
    }
    return kExitOk;
}

int cmd_sweep(const RunConfig& config, const std::string& param, const std::vector<double>& values, std::ostream& out,
              std::ostream& err) {
    if (!is_parameter_key(param)) {
        err << "error: unknown parameter '" << param << "'\n";
        return kExitInvalid;
    }
    if (values.empty()) return kExitOk;

    struct Summary {
        std::string status = "ok";
        double final_price = NAN;
        double max_invariance = NAN;
        std::optional<bool> bounded;
        std::optional<double> price_drift;
    };
    std::vector<std::future<Summary>> jobs;
    for (double value : values) {
        jobs.push_back(std::async(std::launch::async, [config, param, value] {
            Summary s;
            try {
                RunConfig c = config;
                set_parameter(c.params, param, value);
                Trace trace = run(c.params, c.horizon, c.engine);
                s.final_price = trace.rows.back().metrics.good_price;
                worst_invariance(trace, s.max_invariance);
                if (trace.rows.size() >= kMinStabilityRows) {
                    auto report = stability_report(trace);
                    s.bounded = report.bounded;
                    s.price_drift = report.drift_of("GoodPrice");
                }
            } catch (const std::exception& e) {
                s.status = e.what();
                std::replace(s.status.begin(), s.status.end(), ',', ';');
                std::replace(s.status.begin(), s.status.end(), '\n', ' ');
            }
            return s;
        }));
    }

    out << param << ",status,final_GoodPrice,max_abs_invariance,bounded,GoodPrice_drift\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        Summary s = jobs[i].get();
        out << format_double(values[i]) << ',' << s.status << ',' << format_double(s.final_price) << ','
            << format_double(s.max_invariance) << ',' << (s.bounded ? (*s.bounded ? "true" : "false") : "") << ','
            << (s.price_drift ? format_double(*s.price_drift) : "") << '\n';
    }
    return kExitOk;
}

int cmd_plot(const std::string& trace_path, const std::string& out_dir, std::ostream& out, std::ostream& err) {
    try {
        Trace trace = read_trace_csv_file(trace_path);
        std::filesystem::create_directories(out_dir);
        const std::filesystem::path dir(out_dir);

        std::vector<std::string> accounts;
        for (const auto& spec : account_table()) accounts.emplace_back(spec.name);
        std::vector<std::string> inv(kInvarianceNames.begin(), kInvarianceNames.end());
        write_columns((dir / "accounts.dat").string(), trace, accounts);
        write_columns((dir / "invariances.dat").string(), trace, inv);
        write_columns((dir / "price.dat").string(), trace, {"GoodPrice"});
        write_columns((dir / "investment.dat").string(), trace, {"Investment", "InvestmentRes", "InvestmentLab"});

        auto gp = open_out((dir / "plot.gp").string());
        gp << "set terminal pngcairo size 1200,900\n"
              "set output 'momat.png'\n"
              "set multiplot layout 2,2\n"
              "set key outside right\n"
              "set title 'Account balances'\n"
              "plot for [i=2:" << accounts.size() + 1 << "] 'accounts.dat' using 1:i with lines title columnhead(i)\n"
              "set title 'Invariances'\n"
              "plot for [i=2:7] 'invariances.dat' using 1:i with lines lc rgb 'red' notitle\n"
              "set title 'GoodPrice'\n"
              "plot 'price.dat' using 1:2 with lines notitle\n"
              "set title 'Investment'\n"
              "plot for [i=2:4] 'investment.dat' using 1:i with lines notitle\n"
              "unset multiplot\n";
        out << "wrote " << trace.rows.size() << " points per panel to " << out_dir << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitOk;
}

int cmd_check_laws(std::ostream& out, std::ostream& err) {
    bool all = true;
    auto line = [&](const std::string& name, bool ok, const std::string& detail = {}) {
        out << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << '\n';
        all = all && ok;
    };
    try {
        auto structure = account_structure();
        auto laws = cat::check_category_laws(*structure);
        line("account category laws", laws.passed(), laws.summary());
        auto id = cat::Functor::identity(structure);
        laws = cat::check_functor_laws(id);
        line("identity functor", laws.passed(), laws.summary());

        Parameters params;
        SimulationState state = initial_state(params);
        for (int t = 0; t < 3; ++t) {
            auto step = categorical_step(state, params);
            line("eta_time and price functor, period " + std::to_string(t), step.witness.laws.passed(),
                 step.witness.laws.summary());
            state = step.result.next;
        }

        using cat::FinSet;
        using cat::FinSetMap;
        FinSet a{"a", "b"}, b{"x", "y", "z"}, c{"t", "f"};
        auto pb = cat::finset_pullback(FinSetMap::from_pairs(a, c, {{"a", "t"}, {"b", "f"}}),
                                       FinSetMap::from_pairs(b, c, {{"x", "t"}, {"y", "t"}, {"z", "f"}}));
        line("pullback {(a,x),(a,y),(b,z)}", pb.apex == FinSet{"(a,x)", "(a,y)", "(b,z)"});

        FinSet one{"t"}, pa{"a", "b"}, pbs{"x", "y"};
        auto po = cat::finset_pushout(FinSetMap::from_pairs(one, pa, {{"t", "a"}}),
                                      FinSetMap::from_pairs(one, pbs, {{"t", "x"}}));
        line("pushout {[a=x], b, y}", po.apex == FinSet{"[a=x]", "b", "y"});
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return all ? kExitOk : kExitInvalid;
}

}  // namespace momat
