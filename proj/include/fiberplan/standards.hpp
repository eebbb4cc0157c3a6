#pragma once

// Named compliance profiles and pass/fail verdicts.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fiberplan/units.hpp"

namespace fiberplan {

enum class LineCode { Nrz, Rz };

struct StandardProfile {
    std::string name;
    double bit_rate_bps{};
    LineCode line_code = LineCode::Nrz;
    Dbm rx_sensitivity{};
    std::string notes;
};

/// Which side of the threshold is acceptable.
enum class Bound {
    AtLeast,  // value >= threshold passes (received power vs sensitivity)
    AtMost,   // value <= threshold passes (rise time vs ceiling)
};

struct Verdict {
    std::string quantity;
    std::string unit;
    double value{};
    double threshold{};
    Bound bound = Bound::AtLeast;
    bool pass{};
    double margin{};  // positive means headroom, in `unit`
};

/// Builds a verdict; equality with the threshold passes.
Verdict make_verdict(std::string quantity, std::string unit, double value, double threshold, Bound bound);

/// Recomputes the pass flag from the verdict's own value and threshold.
bool verdict_consistent(const Verdict& v);

Verdict power_verdict(Dbm received, const StandardProfile& profile);
Verdict risetime_verdict(double total_rise_ps, const StandardProfile& profile);

/// gpon-downlink-olt (-21 dBm), gpon-onu-endpoint (-28 dBm) and
/// table2-receiver (-38 dBm), all at the 10 Gbit/s NRZ design line rate.
const std::vector<StandardProfile>& builtin_profiles();

/// Looks `name` up in `custom` first, then in the built-ins. Throws
/// ConfigError listing the known names when nothing matches.
StandardProfile resolve_profile(std::string_view name, std::span<const StandardProfile> custom = {});

std::string_view to_string(LineCode code);
std::optional<LineCode> parse_line_code(std::string_view text);

}  // namespace fiberplan
