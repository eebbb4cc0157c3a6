#pragma once

// Power link budget: itemized span losses, received power, loss budgets and
// EDFA sizing. Losses and gains are positive dB magnitudes.

#include <span>

#include "fiberplan/model.hpp"
#include "fiberplan/units.hpp"

namespace fiberplan {

struct LossBreakdown {
    Db connector_total{};
    Db fiber_total{};
    Db splice_total{};
    Db splitter_total{};
    Db margin{};
    Db total{};  // sum of the five terms above
};

struct AmplifierPlan {
    Db gain_deficit{};
    Db unit_gain{};
    int edfa_count{};
    Db total_gain{};
};

/// The system margin belongs to a path, not to each span in it.
enum class MarginPolicy { Include, Exclude };

/// Connector, fiber, splice and splitter terms for one span, plus the
/// system margin when `margin` is Include.
LossBreakdown span_loss(const Span& span, const FiberProfile& fiber, const ComponentLosses& losses,
                        MarginPolicy margin = MarginPolicy::Include);

/// Same, resolving the span's fiber profile in `net` (ConfigError if missing).
LossBreakdown span_loss(const Span& span, const Network& net, MarginPolicy margin = MarginPolicy::Include);

/// Sums margin-free span breakdowns and applies `margin` once.
LossBreakdown path_loss(std::span<const LossBreakdown> spans, Db margin);

/// Ideal 10 log10(N) split plus the per-stage excess.
Db splitter_loss(int ratio, Db excess = Db{0.0});

/// Loss budget between an input power and a receiver sensitivity.
Db max_allowed_loss(Dbm input_power, Dbm rx_sensitivity);

AmplifierPlan amplifier_requirement(Db actual_loss, Db max_loss, Db unit_gain);

/// tx - sum(losses) + sum(gains).
Dbm received_power(Dbm tx_power, std::span<const Db> losses, std::span<const Db> gains = {});

}  // namespace fiberplan
