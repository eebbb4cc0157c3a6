#pragma once

// Per-element power propagation along an ordered chain, and a Gaussian
// Q-factor BER estimate at the receiver.

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fiberplan/model.hpp"
#include "fiberplan/units.hpp"

namespace fiberplan {

struct FiberSegment {
    double length_km{};
    FiberProfile profile;
};
struct ConnectorJoint {};
struct SpliceJoint {};
struct SplitterStage {
    int ratio{};
};
struct AmplifierStage {
    Db gain{};
};
/// Fixed attenuation: the system margin, or a lumped segment loss.
struct MarginPad {
    Db loss{};
};

using ElementKind = std::variant<FiberSegment, ConnectorJoint, SpliceJoint, SplitterStage, AmplifierStage, MarginPad>;

struct ChainElement {
    std::string label;
    ElementKind kind;
};

struct ElementEffect {
    Db loss{};
    Db gain{};
};

/// Loss and gain of a single element; DomainError on invalid parameters.
ElementEffect element_effect(const ChainElement& element, const ComponentLosses& losses);

struct TracePoint {
    std::string label;
    Dbm power{};
};

struct PowerTrace {
    std::vector<TracePoint> points;  // points[0] is the injected power

    Dbm final_power() const { return points.back().power; }
};

PowerTrace propagate(Dbm input_power, std::span<const ChainElement> chain, const ComponentLosses& losses);

struct BerEstimate {
    double q_factor{};
    double ber{};
};

/// Receiver noise current. With a 0.9 A/W photodiode, -25 dBm gives
/// q ~ 4.1 (BER ~ 2e-5) and -26.6 dBm gives q ~ 2.8 (BER ~ 3e-3).
inline constexpr double kDefaultNoiseSigmaAmps = 7.0e-7;

/// 0.5 erfc(q / sqrt 2).
double ber_from_q(double q);

/// q = responsivity * P[W] / noise_sigma.
BerEstimate estimate_ber(Dbm received, double responsivity_a_per_w, double noise_sigma_amps = kDefaultNoiseSigmaAmps);

}  // namespace fiberplan
