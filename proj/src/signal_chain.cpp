#include "fiberplan/signal_chain.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "fiberplan/errors.hpp"
#include "fiberplan/power_budget.hpp"

namespace fiberplan {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

ElementEffect element_effect(const ChainElement& element, const ComponentLosses& losses) {
    return std::visit(
        Overloaded{
            [&](const FiberSegment& f) {
                if (!(f.length_km >= 0.0) || !(f.profile.attenuation_db_per_km > 0.0)) {
                    throw DomainError(fmt::format("'{}': fiber segment needs length >= 0 and attenuation > 0",
                                                  element.label));
                }
                return ElementEffect{Db{f.profile.attenuation_db_per_km * f.length_km}, {}};
            },
            [&](const ConnectorJoint&) { return ElementEffect{losses.connector_loss, {}}; },
            [&](const SpliceJoint&) { return ElementEffect{losses.splice_loss, {}}; },
            [&](const SplitterStage& s) {
                return ElementEffect{splitter_loss(s.ratio, losses.splitter_excess_loss), {}};
            },
            [&](const AmplifierStage& a) {
                if (!(a.gain.value > 0.0)) {
                    throw DomainError(fmt::format("'{}': amplifier gain must be > 0 dB", element.label));
                }
                return ElementEffect{{}, a.gain};
            },
            [&](const MarginPad& m) {
                if (!(m.loss.value >= 0.0)) {
                    throw DomainError(fmt::format("'{}': pad loss must be >= 0 dB", element.label));
                }
                return ElementEffect{m.loss, {}};
            },
        },
        element.kind);
}

PowerTrace propagate(Dbm input_power, std::span<const ChainElement> chain, const ComponentLosses& losses) {
    PowerTrace trace;
    trace.points.reserve(chain.size() + 1);
    trace.points.push_back({"input", input_power});
    Dbm p = input_power;
    for (const auto& e : chain) {
        const auto effect = element_effect(e, losses);
        p = p - effect.loss + effect.gain;
        trace.points.push_back({e.label, p});
    }
    return trace;
}

double ber_from_q(double q) { return 0.5 * std::erfc(q / std::numbers::sqrt2); }

BerEstimate estimate_ber(Dbm received, double responsivity_a_per_w, double noise_sigma_amps) {
    if (!(responsivity_a_per_w > 0.0)) {
        throw DomainError(fmt::format("responsivity must be > 0 A/W (got {})", responsivity_a_per_w));
    }
    if (!(noise_sigma_amps > 0.0)) {
        throw DomainError(fmt::format("noise sigma must be > 0 A (got {})", noise_sigma_amps));
    }
    const double photocurrent = responsivity_a_per_w * dbm_to_watts(received);
    BerEstimate e;
    e.q_factor = photocurrent / noise_sigma_amps;
    e.ber = ber_from_q(e.q_factor);
    return e;
}

}  // namespace fiberplan
