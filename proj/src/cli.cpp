#include "fiberplan/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "CLI11.hpp"
#include "fiberplan/network_io.hpp"
#include "fiberplan/plan.hpp"
#include "fiberplan/report.hpp"

namespace fiberplan {

namespace {

struct CommonOptions {
    std::string format = "text";
    std::string out_path;
    bool stamp = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out_path, "Write the report to this file instead of stdout");
    cmd->add_flag("--stamp", o.stamp, "Print a generation timestamp on stderr");
}

OutputFormat format_of(const CommonOptions& o) { return o.format == "json" ? OutputFormat::Json : OutputFormat::Text; }

void emit(const CommonOptions& o, const std::string& body, std::ostream& out, std::ostream& err) {
    if (o.stamp) {
        err << fmt::format("generated {:%Y-%m-%dT%H:%M:%SZ}\n",
                           std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()));
    }
    if (o.out_path.empty()) {
        out << body;
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << body)) {
        throw ConfigError(fmt::format("cannot write report to '{}'", o.out_path));
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fiber backbone and GPON distribution planner", "fiberplan"};
    app.require_subcommand(1);

    std::string network_path;
    CommonOptions common;

    auto* validate = app.add_subcommand("validate", "Check a network description for structural violations");
    validate->add_option("--network", network_path, "Network description file")->required();
    add_common(validate, common);

    PlanOptions plan_options;
    bool no_amp_plan = false;
    auto* plan = app.add_subcommand("plan", "Power and rise-time budgets with compliance verdicts");
    plan->add_option("--network", network_path, "Network description file")->required();
    plan->add_option("--standard", plan_options.standard, "Standard profile name")->capture_default_str();
    plan->add_option("--path", plan_options.path, "Comma-separated node ids, or 'ring'")->capture_default_str();
    plan->add_flag("--no-amp-plan", no_amp_plan, "Use installed amplifiers only; skip EDFA sizing");
    add_common(plan, common);

    TrafficInput traffic;
    std::optional<Count> population;
    std::optional<double> cellular, share, lte, growth;
    std::optional<int> horizon;
    auto* forecast = app.add_subcommand("forecast", "Subscriber forecast and growth projection");
    forecast->add_option("--network", network_path, "Read inputs from the file's 'traffic' key");
    forecast->add_option("--population", population, "Population");
    forecast->add_option("--cellular-penetration", cellular, "Mobile subscriptions per inhabitant");
    forecast->add_option("--operator-share", share, "Operator market share");
    forecast->add_option("--lte-penetration", lte, "Share of operator customers on LTE");
    forecast->add_option("--growth", growth, "Annual growth rate (0.051 = 5.1%)");
    forecast->add_option("--horizon", horizon, "Projection horizon in years");
    add_common(forecast, common);

    std::string trace_path = "ring";
    std::optional<double> input_power;
    bool with_ber = false;
    double noise_sigma = kDefaultNoiseSigmaAmps;
    auto* trace = app.add_subcommand("trace", "Per-element power trace along a path");
    trace->add_option("--network", network_path, "Network description file")->required();
    trace->add_option("--path", trace_path, "Comma-separated node ids, or 'ring'")->capture_default_str();
    trace->add_option("--input-power", input_power, "Injected power in dBm (default: transceiver power)");
    trace->add_flag("--ber", with_ber, "Append a Q-factor BER estimate at the final point");
    trace->add_option("--noise-sigma", noise_sigma, "Receiver noise current in A")->capture_default_str();
    add_common(trace, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (validate->parsed()) {
            const auto doc = load_network_file(network_path);
            const auto violations = validate_network(doc.network);
            emit(common, render_violations(violations, format_of(common)), out, err);
            return violations.empty() ? kExitPass : kExitInputError;
        }
        if (plan->parsed()) {
            plan_options.amplifier_planning = !no_amp_plan;
            const auto report = build_plan(load_network_file(network_path), plan_options);
            emit(common, render_plan(report, format_of(common)), out, err);
            return report.overall_pass ? kExitPass : kExitComplianceFailure;
        }
        if (forecast->parsed()) {
            std::optional<TrafficInput> base;
            if (!network_path.empty()) {
                base = load_network_file(network_path).traffic;
                if (!base) {
                    throw ConfigError(fmt::format("'{}' has no 'traffic' section", network_path));
                }
            } else if (!population || !cellular || !share || !lte) {
                throw ConfigError(
                    "forecast needs --network or all of --population, --cellular-penetration, "
                    "--operator-share, --lte-penetration");
            }
            traffic = base.value_or(TrafficInput{});
            if (population) traffic.population = *population;
            if (cellular) traffic.cellular_penetration = *cellular;
            if (share) traffic.operator_share = *share;
            if (lte) traffic.lte_penetration = *lte;
            if (growth) traffic.annual_growth = *growth;
            if (horizon) traffic.horizon_years = *horizon;
            const auto result = forecast_subscribers(traffic);
            emit(common, render_forecast(traffic, result, format_of(common)), out, err);
            return kExitPass;
        }
        if (trace->parsed()) {
            const auto doc = load_network_file(network_path);
            if (auto violations = validate_network(doc.network); !violations.empty()) {
                throw ValidationError(std::move(violations));
            }
            const auto path = resolve_path(doc.network, trace_path);
            const auto chain = build_chain(doc, path);
            const Dbm injected = input_power ? Dbm{*input_power} : doc.network.transceiver.tx_power;
            const auto result = propagate(injected, chain, doc.network.losses);
            std::optional<BerEstimate> ber;
            if (with_ber) {
                ber = estimate_ber(result.final_power(), doc.network.transceiver.responsivity_a_per_w, noise_sigma);
            }
            emit(common, render_trace(result, ber, format_of(common)), out, err);
            return kExitPass;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace fiberplan
