#include "fiberplan/power_budget.hpp"

#include <cmath>

#include <fmt/format.h>

#include "fiberplan/errors.hpp"

namespace fiberplan {

LossBreakdown span_loss(const Span& span, const FiberProfile& fiber, const ComponentLosses& losses,
                        MarginPolicy margin) {
    if (!(span.length_km >= 0.0) || span.connectors < 0) {
        throw DomainError(fmt::format("span '{}' has a negative length or connector count", span.id));
    }
    // A zero-length span carries no drum joints of its own.
    const int splices = span.splices ? *span.splices
                        : span.length_km > 0.0 ? resolved_splices(span, fiber)
                                               : 0;
    if (splices < 0) {
        throw DomainError(fmt::format("span '{}' has a negative splice count", span.id));
    }

    LossBreakdown b;
    b.connector_total = losses.connector_loss * static_cast<double>(span.connectors);
    b.fiber_total = Db{fiber.attenuation_db_per_km * span.length_km};
    b.splice_total = losses.splice_loss * static_cast<double>(splices);
    for (const auto& s : span.splitters) {
        b.splitter_total += splitter_loss(s.ratio, losses.splitter_excess_loss);
    }
    b.margin = margin == MarginPolicy::Include ? losses.system_margin : Db{0.0};
    b.total = b.connector_total + b.fiber_total + b.splice_total + b.splitter_total + b.margin;
    return b;
}

LossBreakdown span_loss(const Span& span, const Network& net, MarginPolicy margin) {
    return span_loss(span, net.fiber_for(span), net.losses, margin);
}

LossBreakdown path_loss(std::span<const LossBreakdown> spans, Db margin) {
    LossBreakdown p;
    for (const auto& s : spans) {
        p.connector_total += s.connector_total;
        p.fiber_total += s.fiber_total;
        p.splice_total += s.splice_total;
        p.splitter_total += s.splitter_total;
        p.margin += s.margin;
    }
    p.margin += margin;
    p.total = p.connector_total + p.fiber_total + p.splice_total + p.splitter_total + p.margin;
    return p;
}

Db splitter_loss(int ratio, Db excess) {
    if (!is_valid_split_ratio(ratio)) {
        throw DomainError(fmt::format("splitter ratio 1x{} is not a power of two >= 2", ratio));
    }
    return Db{10.0 * std::log10(static_cast<double>(ratio))} + excess;
}

Db max_allowed_loss(Dbm input_power, Dbm rx_sensitivity) { return input_power - rx_sensitivity; }

AmplifierPlan amplifier_requirement(Db actual_loss, Db max_loss, Db unit_gain) {
    if (!(unit_gain.value > 0.0)) {
        throw DomainError(fmt::format("amplifier unit gain must be > 0 dB (got {})", unit_gain.value));
    }
    AmplifierPlan plan;
    plan.unit_gain = unit_gain;
    plan.gain_deficit = Db{std::max(0.0, actual_loss.value - max_loss.value)};
    plan.edfa_count =
        plan.gain_deficit.value > 0.0 ? static_cast<int>(std::ceil(plan.gain_deficit.value / unit_gain.value)) : 0;
    // The rounded quotient can land exactly on an integer just below the true one.
    while (unit_gain.value * plan.edfa_count < plan.gain_deficit.value) {
        ++plan.edfa_count;
    }
    plan.total_gain = unit_gain * static_cast<double>(plan.edfa_count);
    return plan;
}

Dbm received_power(Dbm tx_power, std::span<const Db> losses, std::span<const Db> gains) {
    Dbm p = tx_power;
    for (Db l : losses) {
        p -= l;
    }
    for (Db g : gains) {
        p += g;
    }
    return p;
}

}  // namespace fiberplan
