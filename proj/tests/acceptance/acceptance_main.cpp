// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "../support/oracles.hpp"
#include "fiberplan/network_io.hpp"
#include "fiberplan/plan.hpp"
#include "fiberplan/power_budget.hpp"
#include "fiberplan/report.hpp"
#include "fiberplan/risetime.hpp"
#include "fiberplan/signal_chain.hpp"
#include "fiberplan/standards.hpp"
#include "fiberplan/traffic.hpp"

using namespace fiberplan;
using namespace fiberplan::testing;

namespace {

constexpr double kDbTolerance = 0.005;
constexpr double kRiseTimeTolerancePs = 0.01;
constexpr double kTraceIdentityTolerance = 1e-12;
constexpr double kBerRelativeTolerance = 0.05;
constexpr int kRandomChains = 1000;

const std::string kFixture = FIBERPLAN_DATA_DIR "/sleman.json";

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

Outcome backbone_span_loss() {
    Outcome o;
    Span span;
    span.id = "backbone";
    span.from_node = "a";
    span.to_node = "b";
    span.length_km = 84.9;
    span.connectors = 14;
    span.splices = 46;
    const FiberProfile fiber{"G.655", 0.3, 3.5, 3.0};
    const ComponentLosses losses{Db{0.3}, Db{0.05}, Db{3.0}, Db{0.0}};
    const auto b = span_loss(span, fiber, losses);
    o.require(near(b.total.value, 34.97, kDbTolerance), fmt::format("total {:.6f} dB", b.total.value));
    o.detail = o.pass ? fmt::format("total {:.4f} dB (4.2 + 25.47 + 2.3 + 3)", b.total.value) : o.detail;
    return o;
}

Outcome received_power_reproduction() {
    Outcome o;
    const Db losses[] = {Db{34.97}, Db{16.67}};
    const Db gains[] = {Db{40.0}};
    const double p = received_power(Dbm{9.0}, losses, gains).value;
    o.require(near(p, -2.64, kDbTolerance), fmt::format("received {:.6f} dBm", p));
    if (o.pass) o.detail = fmt::format("received {:.4f} dBm", p);
    return o;
}

Outcome amplifier_sizing() {
    Outcome o;
    const auto plan = amplifier_requirement(Db{34.97}, Db{13.33}, Db{20.0});
    o.require(near(plan.gain_deficit.value, 21.64, kDbTolerance),
              fmt::format("deficit {:.6f} dB", plan.gain_deficit.value));
    o.require(plan.edfa_count == 2, fmt::format("{} EDFAs", plan.edfa_count));
    if (o.pass) o.detail = fmt::format("deficit {:.4f} dB, {} EDFAs", plan.gain_deficit.value, plan.edfa_count);
    return o;
}

Outcome budget_chain() {
    Outcome o;
    const Dbm min_exit = resolve_profile("gpon-downlink-olt").rx_sensitivity + Db{16.67};
    const Db budget = max_allowed_loss(Dbm{9.0}, min_exit);
    o.require(near(min_exit.value, -4.33, kDbTolerance), fmt::format("min exit {:.6f} dBm", min_exit.value));
    o.require(near(budget.value, 13.33, kDbTolerance), fmt::format("budget {:.6f} dB", budget.value));

    const auto r = build_plan(load_network_file(kFixture), PlanOptions{});
    o.require(near(r.min_backbone_exit.value, -4.33, kDbTolerance), "fixture plan min exit");
    o.require(near(r.max_backbone_loss.value, 13.33, kDbTolerance), "fixture plan budget");
    if (o.pass) o.detail = fmt::format("min exit {:.4f} dBm, budget {:.4f} dB", min_exit.value, budget.value);
    return o;
}

Outcome rise_time_table() {
    Outcome o;
    const auto profile = resolve_profile("gpon-onu-endpoint");
    const TransceiverProfile trx{Dbm{9.0}, 0.1, kTxRisePs, kRxRisePs, Dbm{-38.0}, 0.9};
    const FiberProfile fiber{"G.655", 0.3, 3.5, 3.0};

    // Lengths from the inversion oracle.
    double oracle_km = 0.0;
    int oracle_splices = 0;
    for (const auto& row : kBackboneRows) {
        Span s;
        s.length_km = invert_rise_time(row.rise_time_ps);
        oracle_km += s.length_km;
        const auto rt = span_risetime_report(s, fiber, trx, profile);
        const int n = splice_count(s.length_km, fiber.drum_length_km);
        oracle_splices += n;
        o.require(near(rt.total, row.rise_time_ps, kRiseTimeTolerancePs),
                  fmt::format("{} oracle {:.4f} ps", row.link, rt.total));
        o.require(n == row.splices, fmt::format("{} oracle splices {}", row.link, n));
    }
    o.require(oracle_splices == 46, fmt::format("oracle splice sum {}", oracle_splices));
    o.require(oracle_km >= 84.5 && oracle_km <= 85.0, fmt::format("oracle length sum {:.4f}", oracle_km));

    // Lengths shipped in the fixture.
    const auto r = build_plan(load_network_file(kFixture), PlanOptions{});
    double fixture_km = 0.0;
    int fixture_splices = 0;
    for (std::size_t i = 0; i < kBackboneRows.size(); ++i) {
        const auto& row = kBackboneRows[i];
        const auto& s = r.spans.at(i);
        fixture_km += s.length_km;
        fixture_splices += s.splices;
        o.require(s.link == row.link, fmt::format("row {} is {}", i, s.link));
        o.require(near(s.risetime.total, row.rise_time_ps, kRiseTimeTolerancePs),
                  fmt::format("{} fixture {:.4f} ps", row.link, s.risetime.total));
        o.require(s.splices == row.splices, fmt::format("{} fixture splices {}", row.link, s.splices));
    }
    o.require(fixture_splices == 46, fmt::format("fixture splice sum {}", fixture_splices));
    o.require(fixture_km >= 84.5 && fixture_km <= 85.0, fmt::format("fixture length sum {:.4f}", fixture_km));
    if (o.pass) {
        o.detail = fmt::format("7/7 rows, splices sum {}, lengths {:.3f} km (oracle) / {:.3f} km (fixture)",
                               fixture_splices, oracle_km, fixture_km);
    }
    return o;
}

Outcome rise_time_ceiling() {
    Outcome o;
    const double ceiling = max_system_risetime(10e9, LineCode::Nrz);
    o.require(ceiling == 70.0, fmt::format("ceiling {:.17g}", ceiling));
    const auto profile = resolve_profile("gpon-onu-endpoint");
    for (const auto& row : kBackboneRows) {
        o.require(risetime_verdict(row.rise_time_ps, profile).pass, fmt::format("{} verdict", row.link));
    }
    const auto r = build_plan(load_network_file(kFixture), PlanOptions{});
    for (const auto& s : r.spans) {
        o.require(s.risetime.pass, fmt::format("{} fixture verdict", s.link));
    }
    if (o.pass) o.detail = "ceiling 70 ps, all 7 links pass";
    return o;
}

Outcome traffic_table() {
    Outcome o;
    const auto f = forecast_subscribers({850221, 1.5, 0.42, 0.2, 0.051, 5});
    o.require(f.mobile_subscribers == 1275331, fmt::format("C = {}", f.mobile_subscribers));
    o.require(f.operator_subscribers == 535639, fmt::format("E = {}", f.operator_subscribers));
    o.require(f.lte_subscribers == 107128, fmt::format("LTE = {}", f.lte_subscribers));
    o.require(f.projected_subscribers == 137378, fmt::format("5 y = {}", f.projected_subscribers));
    if (o.pass) {
        o.detail = fmt::format("{} / {} / {} -> {}", f.mobile_subscribers, f.operator_subscribers, f.lte_subscribers,
                               f.projected_subscribers);
    }
    return o;
}

ChainElement random_element(std::mt19937_64& rng, bool allow_gain) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int ratios[] = {2, 4, 8, 16, 32};
    switch (rng() % (allow_gain ? 6 : 5)) {
        case 0: return {"fiber", FiberSegment{u(rng) * 100.0, FiberProfile{"f", 0.15 + u(rng) * 0.35, 3.5, 3.0}}};
        case 1: return {"connector", ConnectorJoint{}};
        case 2: return {"splice", SpliceJoint{}};
        case 3: return {"splitter", SplitterStage{ratios[rng() % 5]}};
        case 4: return {"pad", MarginPad{Db{u(rng) * 20.0}}};
        default: return {"amp", AmplifierStage{Db{0.5 + u(rng) * 30.0}}};
    }
}

Outcome substituted_property_suite() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    const ComponentLosses losses{Db{0.3}, Db{0.05}, Db{3.0}, Db{0.5}};

    // (a) trace final point == received_power
    double worst = 0.0;
    for (int i = 0; i < kRandomChains; ++i) {
        std::vector<ChainElement> chain;
        for (int n = static_cast<int>(rng() % 60); n > 0; --n) chain.push_back(random_element(rng, true));
        std::vector<Db> l, g;
        for (const auto& e : chain) {
            const auto eff = element_effect(e, losses);
            l.push_back(eff.loss);
            g.push_back(eff.gain);
        }
        const Dbm in{std::uniform_real_distribution<double>(-10.0, 20.0)(rng)};
        worst = std::max(worst, std::abs(propagate(in, chain, losses).final_power().value -
                                         received_power(in, l, g).value));
    }
    o.require(worst <= kTraceIdentityTolerance, fmt::format("(a) worst deviation {:.3g} dB", worst));

    // (b) loss-only traces are monotone non-increasing
    bool monotone = true;
    for (int i = 0; i < kRandomChains; ++i) {
        std::vector<ChainElement> chain;
        for (int n = static_cast<int>(rng() % 60); n > 0; --n) chain.push_back(random_element(rng, false));
        const auto t = propagate(Dbm{5.0}, chain, losses);
        for (std::size_t k = 1; k < t.points.size(); ++k) {
            monotone = monotone && t.points[k].power <= t.points[k - 1].power;
        }
    }
    o.require(monotone, "(b) loss-only trace increased");

    // (c) BER bounded, strictly monotone in received power, q = 6 reference point
    double previous = 0.5;
    bool ber_ok = true;
    for (double p = -70.0; p <= -22.0; p += 0.01) {
        const auto e = estimate_ber(Dbm{p}, 0.9);
        ber_ok = ber_ok && e.ber >= 0.0 && e.ber <= 0.5 && e.ber < previous;
        previous = e.ber;
    }
    o.require(ber_ok, "(c) BER not bounded/monotone");
    const double current = 0.9 * dbm_to_watts(Dbm{-20.0});
    const auto q6 = estimate_ber(Dbm{-20.0}, 0.9, current / 6.0);
    const double oracle = gaussian_tail_quadrature(6.0);
    o.require(std::abs(q6.ber - 9.87e-10) <= kBerRelativeTolerance * 9.87e-10,
              fmt::format("(c) q=6 BER {:.4g}", q6.ber));
    o.require(std::abs(q6.ber - oracle) <= kBerRelativeTolerance * oracle,
              fmt::format("(c) q=6 BER {:.4g} vs oracle {:.4g}", q6.ber, oracle));

    // (d) -28 dBm end-point verdict at and around the boundary
    const auto onu = resolve_profile("gpon-onu-endpoint");
    const double below = std::nextafter(-28.0, -100.0);
    const double above = std::nextafter(-28.0, 0.0);
    o.require(power_verdict(Dbm{-28.0}, onu).pass, "(d) exactly -28 dBm failed");
    o.require(power_verdict(Dbm{above}, onu).pass, "(d) just above -28 dBm failed");
    o.require(!power_verdict(Dbm{below}, onu).pass, "(d) just below -28 dBm passed");
    auto doc = load_network_file(kFixture);
    for (double offset = -1.0; offset <= 1.0; offset += 0.05) {
        doc.distribution->loss = Db{16.67 + 25.36 + offset};
        const auto r = build_plan(doc, PlanOptions{"gpon-onu-endpoint", "ring", true});
        o.require(r.verdicts.back().pass == (r.received_power.value >= -28.0),
                  fmt::format("(d) design at {:.6f} dBm misjudged", r.received_power.value));
    }

    if (o.pass) {
        o.detail = fmt::format("(a) max dev {:.2g} dB over {} chains; (b) ok; (c) q=6 BER {:.4g}; (d) ok", worst,
                               kRandomChains, q6.ber);
    }
    return o;
}

std::string capture(const std::string& command, int& exit_code) {
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    std::string out;
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe.release());
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

Outcome plan_determinism() {
    Outcome o;
    for (const char* format : {"text", "json"}) {
        const std::string cmd = fmt::format("{} plan --network {} --standard gpon-onu-endpoint --format {}",
                                            FIBERPLAN_CLI_PATH, kFixture, format);
        int code_a = 0;
        int code_b = 0;
        const auto a = capture(cmd, code_a);
        const auto b = capture(cmd, code_b);
        o.require(code_a == 0 && code_b == 0, fmt::format("{}: exit codes {} / {}", format, code_a, code_b));
        o.require(!a.empty() && a == b, fmt::format("{}: outputs differ", format));
    }
    if (o.pass) o.detail = "text and json reports byte-identical across two CLI runs";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 backbone span loss = 34.97 dB +/- 0.005", backbone_span_loss},
        {"AC2 end-point received power = -2.64 dBm +/- 0.005", received_power_reproduction},
        {"AC3 amplifier sizing: 21.64 dB deficit, 2 EDFAs", amplifier_sizing},
        {"AC4 budget chain: -4.33 dBm min exit, 13.33 dB backbone budget", budget_chain},
        {"AC5 per-link rise times +/- 0.01 ps, splices exact, sum 46, length in [84.5, 85.0]", rise_time_table},
        {"AC6 rise-time ceiling 70 ps, every link passes", rise_time_ceiling},
        {"AC7 subscriber chain 1275331 / 535639 / 107128 -> 137378", traffic_table},
        {"AC8 substituted property suite (trace identity, monotone trace, BER, -28 dBm verdict)",
         substituted_property_suite},
        {"AC9 plan report byte determinism", plan_determinism},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = fmt::format("exception: {}", e.what());
        }
        failures += outcome.pass ? 0 : 1;
        fmt::print("[{}] {} -- {}\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
