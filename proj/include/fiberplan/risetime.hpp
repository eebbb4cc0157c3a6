#pragma once

// Rise-time budget: bit-rate ceiling, chromatic dispersion contribution and
// the root-sum-square system total. All times are picoseconds.

#include "fiberplan/model.hpp"
#include "fiberplan/standards.hpp"

namespace fiberplan {

struct RiseTimeReport {
    double ceiling{};
    double dispersion_component{};
    double tx_component{};
    double rx_component{};
    double total{};
    bool pass{};
};

/// 0.7 of the bit period for NRZ, 0.35 for RZ.
double max_system_risetime(double bit_rate_bps, LineCode code);

/// D * spectral width * length.
double dispersion_risetime(double dispersion_ps_per_nm_km, double spectral_width_nm, double length_km);

double total_risetime(double tx_ps, double rx_ps, double dispersion_ps);

RiseTimeReport span_risetime_report(const Span& span, const FiberProfile& fiber,
                                    const TransceiverProfile& transceiver, const StandardProfile& profile);

}  // namespace fiberplan
