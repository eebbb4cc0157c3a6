#pragma once

// End-to-end planning over a path through a network: per-span loss and
// rise-time results, the path power budget, EDFA sizing and verdicts.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiberplan/network_io.hpp"
#include "fiberplan/power_budget.hpp"
#include "fiberplan/risetime.hpp"
#include "fiberplan/signal_chain.hpp"
#include "fiberplan/standards.hpp"

namespace fiberplan {

struct ResolvedPath {
    std::vector<std::string> nodes;   // node ids in travel order
    std::vector<const Span*> spans;   // spans.size() == nodes.size() - 1
};

/// "ring" walks the whole ring starting at the first listed node, leaving
/// through its first listed span. Otherwise `spec` is a comma-separated
/// node list and every consecutive pair must share a span (ConfigError).
ResolvedPath resolve_path(const Network& net, std::string_view spec);

struct PlanOptions {
    std::string standard = "gpon-onu-endpoint";
    std::string path = "ring";
    bool amplifier_planning = true;
};

struct SpanResult {
    std::string span_id;
    std::string link;  // "From-To" using node names in travel order
    double length_km{};
    int splices{};
    LossBreakdown loss;  // without system margin
    RiseTimeReport risetime;
};

struct PlanReport {
    std::string network_name;
    StandardProfile standard;
    std::vector<std::string> path_nodes;
    std::vector<SpanResult> spans;

    LossBreakdown path_loss;  // system margin applied once
    Dbm tx_power{};
    Db distribution_loss{};
    Dbm min_backbone_exit{};  // distribution head sensitivity + distribution loss
    Db max_backbone_loss{};
    std::optional<AmplifierPlan> amplifier_plan;
    Db installed_gain{};
    Db applied_gain{};  // installed gain, topped up to the plan's total when planning
    Dbm backbone_exit_power{};
    Dbm received_power{};

    std::vector<Verdict> verdicts;
    bool overall_pass{};
};

/// Validates the network (ValidationError), resolves the standard and path
/// (ConfigError) and evaluates the budget.
PlanReport build_plan(const NetworkDocument& doc, const PlanOptions& options);

/// Element chain for a path: per span the connectors, fiber, splices,
/// splitters and installed amplifiers, then the system margin and the
/// distribution segment when the document has one.
std::vector<ChainElement> build_chain(const NetworkDocument& doc, const ResolvedPath& path);

}  // namespace fiberplan
