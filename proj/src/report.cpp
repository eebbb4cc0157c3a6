#include "fiberplan/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "json.hpp"

namespace fiberplan {

namespace {

using json = nlohmann::ordered_json;

constexpr int kDbDecimals = 2;
constexpr int kPsDecimals = 3;
constexpr int kKmDecimals = 3;

double rounded(double v, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(v * scale) / scale + 0.0;  // + 0.0 folds -0 into 0
}

json db(Db v) { return rounded(v.value, kDbDecimals); }
json dbm(Dbm v) { return rounded(v.value, kDbDecimals); }
json ps(double v) { return rounded(v, kPsDecimals); }

int decimals_for(const std::string& unit) { return unit == "ps" ? kPsDecimals : kDbDecimals; }

json loss_json(const LossBreakdown& b) {
    return json{{"connector", db(b.connector_total)}, {"fiber", db(b.fiber_total)},   {"splice", db(b.splice_total)},
                {"splitter", db(b.splitter_total)},   {"margin", db(b.margin)},       {"total", db(b.total)}};
}

json verdict_json(const Verdict& v) {
    const int d = decimals_for(v.unit);
    return json{{"quantity", v.quantity},
                {"unit", v.unit},
                {"value", rounded(v.value, d)},
                {"threshold", rounded(v.threshold, d)},
                {"bound", v.bound == Bound::AtLeast ? "at_least" : "at_most"},
                {"margin", rounded(v.margin, d)},
                {"pass", v.pass}};
}

std::string pass_text(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string join_path(const std::vector<std::string>& nodes) {
    std::string out;
    for (const auto& n : nodes) {
        out += (out.empty() ? "" : " -> ") + n;
    }
    return out;
}

std::string plan_json(const PlanReport& r) {
    json spans = json::array();
    for (const auto& s : r.spans) {
        spans.push_back(json{{"id", s.span_id},
                             {"link", s.link},
                             {"length_km", rounded(s.length_km, kKmDecimals)},
                             {"splices", s.splices},
                             {"loss_db", loss_json(s.loss)},
                             {"rise_time_ps",
                              json{{"transmitter", ps(s.risetime.tx_component)},
                                   {"receiver", ps(s.risetime.rx_component)},
                                   {"dispersion", ps(s.risetime.dispersion_component)},
                                   {"total", ps(s.risetime.total)},
                                   {"ceiling", ps(s.risetime.ceiling)},
                                   {"pass", s.risetime.pass}}}});
    }
    json amp = nullptr;
    if (r.amplifier_plan) {
        amp = json{{"gain_deficit_db", db(r.amplifier_plan->gain_deficit)},
                   {"unit_gain_db", db(r.amplifier_plan->unit_gain)},
                   {"edfa_count", r.amplifier_plan->edfa_count},
                   {"total_gain_db", db(r.amplifier_plan->total_gain)}};
    }
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        verdicts.push_back(verdict_json(v));
    }
    json out{{"network", r.network_name},
             {"standard",
              json{{"name", r.standard.name},
                   {"bit_rate_bps", r.standard.bit_rate_bps},
                   {"line_code", std::string(to_string(r.standard.line_code))},
                   {"rx_sensitivity_dbm", dbm(r.standard.rx_sensitivity)}}},
             {"path", r.path_nodes},
             {"spans", spans},
             {"path_loss_db", loss_json(r.path_loss)},
             {"power_budget",
              json{{"tx_power_dbm", dbm(r.tx_power)},
                   {"distribution_loss_db", db(r.distribution_loss)},
                   {"min_backbone_exit_dbm", dbm(r.min_backbone_exit)},
                   {"max_backbone_loss_db", db(r.max_backbone_loss)},
                   {"installed_gain_db", db(r.installed_gain)},
                   {"applied_gain_db", db(r.applied_gain)},
                   {"backbone_exit_power_dbm", dbm(r.backbone_exit_power)},
                   {"received_power_dbm", dbm(r.received_power)}}},
             {"amplifier_plan", amp},
             {"verdicts", verdicts},
             {"overall_pass", r.overall_pass}};
    return out.dump(2) + "\n";
}

std::string plan_text(const PlanReport& r) {
    std::size_t link_w = 4;
    for (const auto& s : r.spans) {
        link_w = std::max(link_w, s.link.size());
    }
    std::string out;
    out += fmt::format("Network: {}\n", r.network_name.empty() ? "(unnamed)" : r.network_name);
    out += fmt::format("Standard: {} ({:.0f} bit/s {}, sensitivity {} dBm)\n", r.standard.name,
                       r.standard.bit_rate_bps, to_string(r.standard.line_code),
                       fixed(r.standard.rx_sensitivity.value, 2));
    out += fmt::format("Path: {}\n\n", join_path(r.path_nodes));

    out += "Span losses (dB)\n";
    out += fmt::format("{:<6} {:<{}} {:>10} {:>7} {:>8} {:>8} {:>8} {:>8} {:>8}\n", "span", "link", link_w,
                       "length_km", "conn", "fiber", "splice", "split", "margin", "total");
    auto loss_row = [&](const std::string& id, const std::string& link, double km, const LossBreakdown& b) {
        return fmt::format("{:<6} {:<{}} {:>10} {:>7} {:>8} {:>8} {:>8} {:>8} {:>8}\n", id, link, link_w,
                           fixed(km, kKmDecimals), fixed(b.connector_total.value, 2), fixed(b.fiber_total.value, 2),
                           fixed(b.splice_total.value, 2), fixed(b.splitter_total.value, 2),
                           fixed(b.margin.value, 2), fixed(b.total.value, 2));
    };
    double total_km = 0.0;
    for (const auto& s : r.spans) {
        out += loss_row(s.span_id, s.link, s.length_km, s.loss);
        total_km += s.length_km;
    }
    out += loss_row("path", "", total_km, r.path_loss);

    out += "\nRise time (ps)\n";
    out += fmt::format("{:<{}} {:>10} {:>8} {:>9} {:>8}\n", "link", link_w, "rise_time", "splices", "ceiling",
                       "verdict");
    int splice_total = 0;
    for (const auto& s : r.spans) {
        out += fmt::format("{:<{}} {:>10} {:>8} {:>9} {:>8}\n", s.link, link_w, fixed(s.risetime.total, kPsDecimals),
                           s.splices, fixed(s.risetime.ceiling, kPsDecimals), pass_text(s.risetime.pass));
        splice_total += s.splices;
    }
    out += fmt::format("{:<{}} {:>10} {:>8}\n", "total", link_w, "", splice_total);

    auto line = [](const char* label, double v, const char* unit) {
        return fmt::format("  {:<28} {:>9} {}\n", label, fixed(v, kDbDecimals), unit);
    };
    out += "\nPower budget\n";
    out += line("transmit power", r.tx_power.value, "dBm");
    out += line("backbone loss", r.path_loss.total.value, "dB");
    out += line("distribution loss", r.distribution_loss.value, "dB");
    out += line("min backbone exit power", r.min_backbone_exit.value, "dBm");
    out += line("max backbone loss", r.max_backbone_loss.value, "dB");
    out += line("installed amplifier gain", r.installed_gain.value, "dB");
    out += line("applied amplifier gain", r.applied_gain.value, "dB");
    out += line("backbone exit power", r.backbone_exit_power.value, "dBm");
    out += line("end-point received power", r.received_power.value, "dBm");

    out += "\nAmplifier plan\n";
    if (r.amplifier_plan) {
        out += line("gain deficit", r.amplifier_plan->gain_deficit.value, "dB");
        out += line("unit gain", r.amplifier_plan->unit_gain.value, "dB");
        out += fmt::format("  {:<28} {:>9}\n", "EDFA count", r.amplifier_plan->edfa_count);
        out += line("total gain", r.amplifier_plan->total_gain.value, "dB");
    } else {
        out += "  (disabled)\n";
    }

    out += "\nVerdicts\n";
    std::size_t q_w = 8;
    for (const auto& v : r.verdicts) {
        q_w = std::max(q_w, v.quantity.size());
    }
    for (const auto& v : r.verdicts) {
        const int d = decimals_for(v.unit);
        out += fmt::format("  {:<{}} {:>10} {:2} {:>10} {:<3} margin {:>9}  {}\n", v.quantity, q_w, fixed(v.value, d),
                           v.bound == Bound::AtLeast ? ">=" : "<=", fixed(v.threshold, d), v.unit,
                           fixed(v.margin, d), pass_text(v.pass));
    }
    out += fmt::format("\nOverall: {}\n", pass_text(r.overall_pass));
    return out;
}

}  // namespace

std::string fixed(double value, int decimals) {
    std::string s = fmt::format("{:.{}f}", value, decimals);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

std::string render_plan(const PlanReport& report, OutputFormat format) {
    return format == OutputFormat::Json ? plan_json(report) : plan_text(report);
}

std::string render_violations(const std::vector<Violation>& violations, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json arr = json::array();
        for (const auto& v : violations) {
            arr.push_back(json{{"element", v.element}, {"rule", v.rule}, {"message", v.message}});
        }
        return json{{"valid", violations.empty()}, {"violations", arr}}.dump(2) + "\n";
    }
    if (violations.empty()) {
        return "valid: no structural violations\n";
    }
    std::string out = fmt::format("invalid: {} violation{}\n", violations.size(), violations.size() == 1 ? "" : "s");
    for (const auto& v : violations) {
        out += fmt::format("  {:<16} {:<24} {}\n", v.element, v.rule, v.message);
    }
    return out;
}

std::string render_forecast(const TrafficInput& in, const TrafficForecast& f, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json out{{"input",
                  json{{"population", in.population},
                       {"cellular_penetration", in.cellular_penetration},
                       {"operator_share", in.operator_share},
                       {"lte_penetration", in.lte_penetration},
                       {"annual_growth", in.annual_growth},
                       {"horizon_years", in.horizon_years}}},
                 {"mobile_subscribers", f.mobile_subscribers},
                 {"operator_subscribers", f.operator_subscribers},
                 {"lte_subscribers", f.lte_subscribers},
                 {"projected_subscribers", f.projected_subscribers}};
        return out.dump(2) + "\n";
    }
    std::string out;
    out += fmt::format("{:<34} {:>12}\n", "stage", "count");
    out += fmt::format("{:<34} {:>12}\n", "population", in.population);
    out += fmt::format("{:<34} {:>12}\n", fmt::format("mobile subscribers (x{})", in.cellular_penetration),
                       f.mobile_subscribers);
    out += fmt::format("{:<34} {:>12}\n", fmt::format("operator subscribers (x{})", in.operator_share),
                       f.operator_subscribers);
    out += fmt::format("{:<34} {:>12}\n", fmt::format("LTE subscribers (x{})", in.lte_penetration), f.lte_subscribers);
    out += fmt::format("{:<34} {:>12}\n",
                       fmt::format("projected, {} y at {}%/y", in.horizon_years, in.annual_growth * 100.0),
                       f.projected_subscribers);
    return out;
}

std::string render_trace(const PowerTrace& trace, const std::optional<BerEstimate>& ber, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json points = json::array();
        for (const auto& p : trace.points) {
            points.push_back(json{{"label", p.label}, {"power_dbm", dbm(p.power)}});
        }
        json out{{"points", points}, {"final_power_dbm", dbm(trace.final_power())}};
        if (ber) {
            out["ber"] = json{{"q_factor", ber->q_factor}, {"ber", ber->ber}};
        }
        return out.dump(2) + "\n";
    }
    std::size_t w = 5;
    for (const auto& p : trace.points) {
        w = std::max(w, p.label.size());
    }
    std::string out = fmt::format("{:<{}} {:>10}\n", "point", w, "power_dBm");
    for (const auto& p : trace.points) {
        out += fmt::format("{:<{}} {:>10}\n", p.label, w, fixed(p.power.value, kDbDecimals));
    }
    if (ber) {
        out += fmt::format("\nQ factor {:.3f}, BER {:.3e}\n", ber->q_factor, ber->ber);
    }
    return out;
}

}  // namespace fiberplan
