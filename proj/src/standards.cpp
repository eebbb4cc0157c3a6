#include "fiberplan/standards.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "fiberplan/errors.hpp"
#include "fiberplan/risetime.hpp"

namespace fiberplan {

namespace {

constexpr double kDesignBitRate = 10e9;  // STM-64

}  // namespace

Verdict make_verdict(std::string quantity, std::string unit, double value, double threshold, Bound bound) {
    Verdict v;
    v.quantity = std::move(quantity);
    v.unit = std::move(unit);
    v.value = value;
    v.threshold = threshold;
    v.bound = bound;
    v.margin = bound == Bound::AtLeast ? value - threshold : threshold - value;
    v.pass = bound == Bound::AtLeast ? value >= threshold : value <= threshold;
    return v;
}

bool verdict_consistent(const Verdict& v) {
    const bool expected = v.bound == Bound::AtLeast ? v.value >= v.threshold : v.value <= v.threshold;
    return expected == v.pass && (v.margin >= 0.0) == v.pass;
}

Verdict power_verdict(Dbm received, const StandardProfile& profile) {
    return make_verdict(fmt::format("received power ({})", profile.name), "dBm", received.value,
                        profile.rx_sensitivity.value, Bound::AtLeast);
}

Verdict risetime_verdict(double total_rise_ps, const StandardProfile& profile) {
    if (!(total_rise_ps > 0.0)) {
        throw DomainError(fmt::format("rise time must be > 0 ps (got {})", total_rise_ps));
    }
    return make_verdict("system rise time", "ps", total_rise_ps,
                        max_system_risetime(profile.bit_rate_bps, profile.line_code), Bound::AtMost);
}

const std::vector<StandardProfile>& builtin_profiles() {
    static const std::vector<StandardProfile> profiles = {
        {"gpon-downlink-olt", kDesignBitRate, LineCode::Nrz, Dbm{-21.0},
         "G.984.2 downlink receiver minimum at the distribution head"},
        {"gpon-onu-endpoint", kDesignBitRate, LineCode::Nrz, Dbm{-28.0},
         "G.984.2 minimum received power at the ONU end point"},
        {"table2-receiver", kDesignBitRate, LineCode::Nrz, Dbm{-38.0},
         "backbone receiver minimum sensitivity of the design parameter set"},
    };
    return profiles;
}

StandardProfile resolve_profile(std::string_view name, std::span<const StandardProfile> custom) {
    auto by_name = [&](const StandardProfile& p) { return p.name == name; };
    if (auto it = std::find_if(custom.begin(), custom.end(), by_name); it != custom.end()) {
        return *it;
    }
    const auto& builtins = builtin_profiles();
    if (auto it = std::find_if(builtins.begin(), builtins.end(), by_name); it != builtins.end()) {
        return *it;
    }
    std::string known;
    for (const auto& p : custom) {
        known += (known.empty() ? "" : ", ") + p.name;
    }
    for (const auto& p : builtins) {
        known += (known.empty() ? "" : ", ") + p.name;
    }
    throw ConfigError(fmt::format("unknown standard '{}' (known: {})", name, known));
}

std::string_view to_string(LineCode code) { return code == LineCode::Nrz ? "NRZ" : "RZ"; }

std::optional<LineCode> parse_line_code(std::string_view text) {
    if (text == "NRZ" || text == "nrz") {
        return LineCode::Nrz;
    }
    if (text == "RZ" || text == "rz") {
        return LineCode::Rz;
    }
    return std::nullopt;
}

}  // namespace fiberplan
