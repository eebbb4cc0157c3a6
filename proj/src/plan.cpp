#include "fiberplan/plan.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace fiberplan {

namespace {

bool joins(const Span& s, std::string_view a, std::string_view b) {
    return (s.from_node == a && s.to_node == b) || (s.from_node == b && s.to_node == a);
}

std::string_view other_end(const Span& s, std::string_view node) {
    return s.from_node == node ? std::string_view(s.to_node) : std::string_view(s.from_node);
}

std::vector<std::string> split_nodes(std::string_view spec) {
    std::vector<std::string> out;
    while (true) {
        const auto comma = spec.find(',');
        auto token = spec.substr(0, comma);
        while (!token.empty() && token.front() == ' ') {
            token.remove_prefix(1);
        }
        while (!token.empty() && token.back() == ' ') {
            token.remove_suffix(1);
        }
        out.emplace_back(token);
        if (comma == std::string_view::npos) {
            break;
        }
        spec.remove_prefix(comma + 1);
    }
    return out;
}

ResolvedPath walk_ring(const Network& net) {
    if (net.topology != Topology::Ring) {
        throw ConfigError("path 'ring' requires a ring topology; pass an explicit node list instead");
    }
    ResolvedPath path;
    const std::string& start = net.nodes.front().id;
    path.nodes.push_back(start);
    std::string current = start;
    while (path.spans.size() < net.spans.size()) {
        auto it = std::find_if(net.spans.begin(), net.spans.end(), [&](const Span& s) {
            return (s.from_node == current || s.to_node == current) &&
                   std::find(path.spans.begin(), path.spans.end(), &s) == path.spans.end();
        });
        if (it == net.spans.end()) {
            break;
        }
        path.spans.push_back(&*it);
        current = std::string(other_end(*it, current));
        path.nodes.push_back(current);
        if (current == start) {
            break;
        }
    }
    return path;
}

std::string link_name(const Network& net, std::string_view a, std::string_view b) {
    return fmt::format("{}-{}", net.find_node(a)->name, net.find_node(b)->name);
}

}  // namespace

ResolvedPath resolve_path(const Network& net, std::string_view spec) {
    if (net.nodes.empty()) {
        throw ConfigError("network has no nodes");
    }
    if (spec == "ring") {
        return walk_ring(net);
    }
    ResolvedPath path;
    path.nodes = split_nodes(spec);
    if (path.nodes.size() < 2) {
        throw ConfigError(fmt::format("path '{}' needs at least two nodes", spec));
    }
    for (const auto& n : path.nodes) {
        if (net.find_node(n) == nullptr) {
            throw ConfigError(fmt::format("path references unknown node '{}'", n));
        }
    }
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
        const auto& a = path.nodes[i];
        const auto& b = path.nodes[i + 1];
        auto it = std::find_if(net.spans.begin(), net.spans.end(), [&](const Span& s) { return joins(s, a, b); });
        if (it == net.spans.end()) {
            throw ConfigError(fmt::format("no span joins '{}' and '{}'", a, b));
        }
        path.spans.push_back(&*it);
    }
    return path;
}

PlanReport build_plan(const NetworkDocument& doc, const PlanOptions& options) {
    const Network& net = doc.network;
    if (auto violations = validate_network(net); !violations.empty()) {
        throw ValidationError(std::move(violations));
    }

    PlanReport r;
    r.network_name = doc.name;
    r.standard = resolve_profile(options.standard, doc.standards);
    const ResolvedPath path = resolve_path(net, options.path);
    r.path_nodes = path.nodes;

    std::vector<LossBreakdown> breakdowns;
    for (std::size_t i = 0; i < path.spans.size(); ++i) {
        const Span& span = *path.spans[i];
        const FiberProfile& fiber = net.fiber_for(span);
        SpanResult s;
        s.span_id = span.id;
        s.link = link_name(net, path.nodes[i], path.nodes[i + 1]);
        s.length_km = span.length_km;
        s.splices = resolved_splices(span, fiber);
        s.loss = span_loss(span, fiber, net.losses, MarginPolicy::Exclude);
        s.risetime = span_risetime_report(span, fiber, net.transceiver, r.standard);
        breakdowns.push_back(s.loss);
        for (const auto& a : span.amplifiers) {
            r.installed_gain += a.gain;
        }
        r.spans.push_back(std::move(s));
    }
    r.path_loss = path_loss(breakdowns, net.losses.system_margin);

    r.tx_power = net.transceiver.tx_power;
    if (doc.distribution) {
        r.distribution_loss = doc.distribution->loss;
        r.min_backbone_exit = doc.distribution->rx_sensitivity + doc.distribution->loss;
    } else {
        r.min_backbone_exit = r.standard.rx_sensitivity;
    }
    r.max_backbone_loss = max_allowed_loss(r.tx_power, r.min_backbone_exit);

    r.applied_gain = r.installed_gain;
    if (options.amplifier_planning && doc.planning_amplifier) {
        r.amplifier_plan = amplifier_requirement(r.path_loss.total, r.max_backbone_loss, doc.planning_amplifier->gain);
        r.applied_gain = std::max(r.installed_gain, r.amplifier_plan->total_gain);
    }

    const Db backbone_losses[] = {r.path_loss.total};
    const Db all_losses[] = {r.path_loss.total, r.distribution_loss};
    const Db gains[] = {r.applied_gain};
    r.backbone_exit_power = received_power(r.tx_power, backbone_losses, gains);
    r.received_power = received_power(r.tx_power, all_losses, gains);

    for (const auto& s : r.spans) {
        auto v = risetime_verdict(s.risetime.total, r.standard);
        v.quantity = fmt::format("rise time {} {}", s.span_id, s.link);
        r.verdicts.push_back(std::move(v));
    }
    r.verdicts.push_back(make_verdict("backbone exit power", "dBm", r.backbone_exit_power.value,
                                      r.min_backbone_exit.value, Bound::AtLeast));
    auto endpoint = power_verdict(r.received_power, r.standard);
    endpoint.quantity = fmt::format("end-point received power ({})", r.standard.name);
    r.verdicts.push_back(std::move(endpoint));

    r.overall_pass = std::all_of(r.verdicts.begin(), r.verdicts.end(), [](const Verdict& v) { return v.pass; });
    return r;
}

std::vector<ChainElement> build_chain(const NetworkDocument& doc, const ResolvedPath& path) {
    const Network& net = doc.network;
    std::vector<ChainElement> chain;
    for (const Span* span : path.spans) {
        const FiberProfile& fiber = net.fiber_for(*span);
        const int head_connectors = (span->connectors + 1) / 2;
        int connector_no = 0;
        auto add_connectors = [&](int n) {
            for (int i = 0; i < n; ++i) {
                chain.push_back({fmt::format("{} connector {}", span->id, ++connector_no), ConnectorJoint{}});
            }
        };

        add_connectors(head_connectors);
        chain.push_back({fmt::format("{} fiber {:.3f} km", span->id, span->length_km),
                         FiberSegment{span->length_km, fiber}});
        const int splices = resolved_splices(*span, fiber);
        for (int i = 1; i <= splices; ++i) {
            chain.push_back({fmt::format("{} splice {}", span->id, i), SpliceJoint{}});
        }
        for (const auto& s : span->splitters) {
            chain.push_back({fmt::format("{} splitter 1x{}", span->id, s.ratio), SplitterStage{s.ratio}});
        }
        for (const auto& a : span->amplifiers) {
            chain.push_back({fmt::format("{} {} +{:.2f} dB", span->id, to_string(a.kind), a.gain.value),
                             AmplifierStage{a.gain}});
        }
        add_connectors(span->connectors - head_connectors);
    }
    chain.push_back({"system margin", MarginPad{net.losses.system_margin}});
    if (doc.distribution) {
        chain.push_back({"distribution segment", MarginPad{doc.distribution->loss}});
    }
    return chain;
}

}  // namespace fiberplan
