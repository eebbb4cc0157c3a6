#include "fiberplan/risetime.hpp"

#include <cmath>

#include <fmt/format.h>

#include "fiberplan/errors.hpp"

namespace fiberplan {

namespace {

constexpr double kPsPerSecond = 1e12;
constexpr double kNrzFraction = 0.7;
constexpr double kRzFraction = 0.35;

void require_non_negative(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw DomainError(fmt::format("{} must be a finite value >= 0 (got {})", what, v));
    }
}

}  // namespace

double max_system_risetime(double bit_rate_bps, LineCode code) {
    if (!(bit_rate_bps > 0.0) || !std::isfinite(bit_rate_bps)) {
        throw DomainError(fmt::format("bit rate must be > 0 (got {})", bit_rate_bps));
    }
    // Scale the fraction first: 0.7e12 / 1e10 is exactly 70.
    const double fraction = code == LineCode::Nrz ? kNrzFraction : kRzFraction;
    return fraction * kPsPerSecond / bit_rate_bps;
}

double dispersion_risetime(double dispersion_ps_per_nm_km, double spectral_width_nm, double length_km) {
    require_non_negative(dispersion_ps_per_nm_km, "dispersion");
    require_non_negative(spectral_width_nm, "spectral width");
    require_non_negative(length_km, "length");
    return dispersion_ps_per_nm_km * spectral_width_nm * length_km;
}

double total_risetime(double tx_ps, double rx_ps, double dispersion_ps) {
    require_non_negative(tx_ps, "transmitter rise time");
    require_non_negative(rx_ps, "receiver rise time");
    require_non_negative(dispersion_ps, "dispersion rise time");
    return std::hypot(tx_ps, rx_ps, dispersion_ps);
}

RiseTimeReport span_risetime_report(const Span& span, const FiberProfile& fiber,
                                    const TransceiverProfile& transceiver, const StandardProfile& profile) {
    RiseTimeReport r;
    r.ceiling = max_system_risetime(profile.bit_rate_bps, profile.line_code);
    r.dispersion_component =
        dispersion_risetime(fiber.dispersion_ps_per_nm_km, transceiver.spectral_width_nm, span.length_km);
    r.tx_component = transceiver.tx_rise_time_ps;
    r.rx_component = transceiver.rx_rise_time_ps;
    r.total = total_risetime(r.tx_component, r.rx_component, r.dispersion_component);
    r.pass = r.total <= r.ceiling;
    return r;
}

}  // namespace fiberplan
