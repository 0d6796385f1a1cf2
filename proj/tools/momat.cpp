#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "momat/commands.hpp"
#include "momat/error.hpp"
#include "momat/trace_io.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::vector<std::string> sets;
    std::optional<int> horizon;
    std::optional<std::string> engine;
};

void add_common(CLI::App* app, CommonOptions& o, bool with_engine) {
    app->add_option("-c,--config", o.config_path, "key=value parameter file");
    app->add_option("--set", o.sets, "override, e.g. --set omega=0.7")->take_all();
    app->add_option("--horizon", o.horizon, "last period to simulate (default 100)");
    if (with_engine) app->add_option("--engine", o.engine, "recursive or categorical");
}

momat::RunConfig resolve(const CommonOptions& o) {
    momat::RunConfig config;
    if (!o.config_path.empty()) config = momat::load_config_file(o.config_path);
    for (const auto& s : o.sets) momat::apply_assignment(config, s);
    if (o.horizon) config.horizon = *o.horizon;
    if (o.engine) config.engine = momat::parse_engine(*o.engine);
    return config;
}

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = item.find_last_not_of(" \t");
        values.push_back(momat::parse_double(std::string_view(item).substr(b, e - b + 1)));
    }
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"momat: five-agent monetary macroeconomic accounting simulator"};
    app.require_subcommand(1);

    CommonOptions run_opts, compare_opts, sweep_opts;
    momat::RunOutputs outputs;
    auto* run = app.add_subcommand("run", "simulate and write the trace");
    add_common(run, run_opts, true);
    run->add_option("--csv", outputs.csv_path, "CSV trace path");
    run->add_option("--json", outputs.json_path, "JSON trace path (with booking log)");

    auto* compare = app.add_subcommand("compare", "run both engines and report their divergence");
    add_common(compare, compare_opts, false);

    std::string sweep_param, sweep_values;
    auto* sweep = app.add_subcommand("sweep", "stability summaries over parameter values");
    add_common(sweep, sweep_opts, true);
    sweep->add_option("--param", sweep_param, "parameter to vary")->required();
    sweep->add_option("--values", sweep_values, "comma-separated values");

    std::string trace_path, out_dir = "plot";
    auto* plot = app.add_subcommand("plot", "emit gnuplot data and script for a CSV trace");
    plot->add_option("trace", trace_path, "CSV trace")->required();
    plot->add_option("-o,--out-dir", out_dir, "output directory");

    auto* laws = app.add_subcommand("check-laws", "run the category, functor and naturality law suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : momat::kExitInvalid;
    }

    try {
        if (*run) return momat::cmd_run(resolve(run_opts), outputs, std::cout, std::cerr);
        if (*compare) return momat::cmd_compare(resolve(compare_opts), std::cout, std::cerr);
        if (*sweep) return momat::cmd_sweep(resolve(sweep_opts), sweep_param, parse_values(sweep_values), std::cout, std::cerr);
        if (*plot) return momat::cmd_plot(trace_path, out_dir, std::cout, std::cerr);
        if (*laws) return momat::cmd_check_laws(std::cout, std::cerr);
    } catch (const momat::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return momat::kExitInvalid;
    }
    return momat::kExitInvalid;
}
