#include "fiberplan/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include <fmt/format.h>

namespace fiberplan {

namespace {

constexpr std::string_view kNetworkElement = "network";

// Quotients within this distance above an integer are treated as that
// integer, so 9.0 / 3.0 computed as 3.0000000000000004 still yields 3 drums.
constexpr double kDrumQuotientSlack = 1e-9;

bool finite(double v) { return std::isfinite(v); }

class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // false if a and b were already joined
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

struct Collector {
    std::vector<Violation> out;

    void add(std::string_view element, std::string_view rule, std::string message) {
        out.push_back(Violation{std::string(element), std::string(rule), std::move(message)});
    }
};

void check_profiles(const Network& net, Collector& c) {
    std::set<std::string> seen;
    for (const auto& f : net.fibers) {
        if (!seen.insert(f.name).second) {
            c.add(f.name, "duplicate-id", fmt::format("fiber profile '{}' is defined more than once", f.name));
        }
        if (!(finite(f.attenuation_db_per_km) && f.attenuation_db_per_km > 0.0)) {
            c.add(f.name, "invalid-fiber-profile", "attenuation must be > 0 dB/km");
        }
        if (!(finite(f.dispersion_ps_per_nm_km) && f.dispersion_ps_per_nm_km >= 0.0)) {
            c.add(f.name, "invalid-fiber-profile", "dispersion must be >= 0 ps/(nm km)");
        }
        if (!(finite(f.drum_length_km) && f.drum_length_km > 0.0)) {
            c.add(f.name, "invalid-fiber-profile", "drum length must be > 0 km");
        }
    }

    const auto& t = net.transceiver;
    if (!finite(t.tx_power.value) || !finite(t.rx_sensitivity.value)) {
        c.add("transceiver", "invalid-transceiver", "transmit power and sensitivity must be finite");
    }
    if (!(t.spectral_width_nm > 0.0 && finite(t.spectral_width_nm))) {
        c.add("transceiver", "invalid-transceiver", "spectral width must be > 0 nm");
    }
    if (!(t.tx_rise_time_ps > 0.0 && finite(t.tx_rise_time_ps))) {
        c.add("transceiver", "invalid-transceiver", "transmitter rise time must be > 0 ps");
    }
    if (!(t.rx_rise_time_ps > 0.0 && finite(t.rx_rise_time_ps))) {
        c.add("transceiver", "invalid-transceiver", "receiver rise time must be > 0 ps");
    }
    if (!(t.responsivity_a_per_w > 0.0 && finite(t.responsivity_a_per_w))) {
        c.add("transceiver", "invalid-transceiver", "responsivity must be > 0 A/W");
    }

    const auto& l = net.losses;
    for (auto [label, v] : {std::pair{"connector loss", l.connector_loss}, std::pair{"splice loss", l.splice_loss},
                            std::pair{"system margin", l.system_margin},
                            std::pair{"splitter excess loss", l.splitter_excess_loss}}) {
        if (!(finite(v.value) && v.value >= 0.0)) {
            c.add("losses", "invalid-losses", fmt::format("{} must be >= 0 dB", label));
        }
    }
}

void check_spans(const Network& net, Collector& c) {
    std::set<std::string> seen;
    for (const auto& s : net.spans) {
        if (!seen.insert(s.id).second) {
            c.add(s.id, "duplicate-id", fmt::format("span '{}' is defined more than once", s.id));
        }
        for (const auto* end : {&s.from_node, &s.to_node}) {
            if (net.find_node(*end) == nullptr) {
                c.add(s.id, "unresolved-node", fmt::format("span references unknown node '{}'", *end));
            }
        }
        if (s.from_node == s.to_node) {
            c.add(s.id, "self-loop", fmt::format("span starts and ends at '{}'", s.from_node));
        }
        if (net.find_fiber(s.fiber) == nullptr) {
            c.add(s.id, "unresolved-fiber", fmt::format("span references unknown fiber profile '{}'", s.fiber));
        }
        if (!(finite(s.length_km) && s.length_km > 0.0)) {
            c.add(s.id, "non-positive-length", "span length must be > 0 km");
        }
        if (s.connectors < 0) {
            c.add(s.id, "negative-count", "connector count must be >= 0");
        }
        if (s.splices && *s.splices < 0) {
            c.add(s.id, "negative-count", "splice count must be >= 0");
        }
        for (const auto& sp : s.splitters) {
            if (!is_valid_split_ratio(sp.ratio)) {
                c.add(s.id, "invalid-splitter", fmt::format("splitter ratio 1x{} is not a power of two >= 2", sp.ratio));
            }
        }
        for (const auto& a : s.amplifiers) {
            if (!(finite(a.gain.value) && a.gain.value > 0.0)) {
                c.add(s.id, "invalid-amplifier", "amplifier gain must be > 0 dB");
            }
        }
    }
}

struct Graph {
    std::map<std::string, std::size_t> index;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // only resolvable, non-loop spans
    std::vector<const Span*> edge_spans;
};

Graph build_graph(const Network& net) {
    Graph g;
    for (const auto& n : net.nodes) {
        g.index.emplace(n.id, g.index.size());
    }
    for (const auto& s : net.spans) {
        auto a = g.index.find(s.from_node);
        auto b = g.index.find(s.to_node);
        if (a == g.index.end() || b == g.index.end() || a->second == b->second) {
            continue;
        }
        g.edges.emplace_back(a->second, b->second);
        g.edge_spans.push_back(&s);
    }
    return g;
}

void check_ring(const Network& net, const Graph& g, Collector& c) {
    std::vector<int> degree(g.index.size(), 0);
    for (auto [a, b] : g.edges) {
        ++degree[a];
        ++degree[b];
    }
    bool degrees_ok = true;
    for (const auto& n : net.nodes) {
        int d = degree[g.index.at(n.id)];
        if (d != 2) {
            degrees_ok = false;
            c.add(n.id, "ring-degree", fmt::format("ring node has degree {}, expected 2", d));
        }
    }
    if (!degrees_ok || net.nodes.empty()) {
        return;
    }
    // All degrees are 2, so the span set is a union of disjoint cycles; it is
    // a single cycle exactly when the graph is connected.
    DisjointSet ds(g.index.size());
    for (auto [a, b] : g.edges) {
        ds.unite(a, b);
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < g.index.size(); ++i) {
        roots.insert(ds.find(i));
    }
    if (roots.size() != 1) {
        c.add(kNetworkElement, "ring-not-single-cycle",
              fmt::format("spans form {} disjoint cycles, expected one", roots.size()));
    }
}

void check_tree(const Network& net, const Graph& g, Collector& c) {
    if (!net.head) {
        c.add(kNetworkElement, "tree-head", "tree topology requires a head node");
    } else if (net.find_node(*net.head) == nullptr) {
        c.add(kNetworkElement, "tree-head", fmt::format("head node '{}' does not exist", *net.head));
    }

    DisjointSet ds(g.index.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (!ds.unite(g.edges[e].first, g.edges[e].second)) {
            c.add(g.edge_spans[e]->id, "tree-cycle", "span closes a cycle in a tree topology");
        }
    }
    if (net.nodes.empty()) {
        return;
    }
    std::size_t root = ds.find(net.head && g.index.contains(*net.head) ? g.index.at(*net.head) : 0);
    for (const auto& n : net.nodes) {
        if (ds.find(g.index.at(n.id)) != root) {
            c.add(n.id, "tree-disconnected", "node is not reachable from the head node");
        }
    }
}

}  // namespace

const Node* Network::find_node(std::string_view id) const {
    auto it = std::find_if(nodes.begin(), nodes.end(), [&](const Node& n) { return n.id == id; });
    return it == nodes.end() ? nullptr : &*it;
}

const Span* Network::find_span(std::string_view id) const {
    auto it = std::find_if(spans.begin(), spans.end(), [&](const Span& s) { return s.id == id; });
    return it == spans.end() ? nullptr : &*it;
}

const FiberProfile* Network::find_fiber(std::string_view name) const {
    auto it = std::find_if(fibers.begin(), fibers.end(), [&](const FiberProfile& f) { return f.name == name; });
    return it == fibers.end() ? nullptr : &*it;
}

const FiberProfile& Network::fiber_for(const Span& span) const {
    const auto* f = find_fiber(span.fiber);
    if (f == nullptr) {
        throw ConfigError(fmt::format("span '{}' references unknown fiber profile '{}'", span.id, span.fiber));
    }
    return *f;
}

std::vector<Violation> validate_network(const Network& net) {
    Collector c;
    if (net.nodes.empty()) {
        c.add(kNetworkElement, "no-nodes", "network has no nodes");
    }
    std::set<std::string> node_ids;
    for (const auto& n : net.nodes) {
        if (!node_ids.insert(n.id).second) {
            c.add(n.id, "duplicate-id", fmt::format("node '{}' is defined more than once", n.id));
        }
    }
    check_profiles(net, c);
    check_spans(net, c);

    // Graph rules assume unique node ids.
    if (node_ids.size() == net.nodes.size()) {
        Graph g = build_graph(net);
        if (net.topology == Topology::Ring) {
            check_ring(net, g, c);
        } else {
            check_tree(net, g, c);
        }
    }

    std::stable_sort(c.out.begin(), c.out.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.element, a.rule, a.message) < std::tie(b.element, b.rule, b.message);
    });
    return c.out;
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
    std::string msg = fmt::format("network is invalid ({} violation{})", violations.size(),
                                  violations.size() == 1 ? "" : "s");
    for (const auto& v : violations) {
        msg += fmt::format("\n  {}: {}: {}", v.element, v.rule, v.message);
    }
    return msg;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

int splice_count(double length_km, double drum_length_km) {
    if (!(length_km > 0.0) || !(drum_length_km > 0.0) || !finite(length_km) || !finite(drum_length_km)) {
        throw DomainError(
            fmt::format("splice_count needs positive length and drum length (got {} km, {} km)", length_km,
                        drum_length_km));
    }
    const double drums = std::ceil(length_km / drum_length_km - kDrumQuotientSlack);
    return static_cast<int>(std::max(drums, 1.0)) + 2;
}

int resolved_splices(const Span& span, const FiberProfile& fiber) {
    if (span.splices) {
        return *span.splices;
    }
    return splice_count(span.length_km, fiber.drum_length_km);
}

bool is_valid_split_ratio(int ratio) { return ratio >= 2 && (ratio & (ratio - 1)) == 0; }

std::string_view to_string(Topology topology) { return topology == Topology::Ring ? "ring" : "tree"; }

std::string_view to_string(AmplifierKind) { return "EDFA"; }

}  // namespace fiberplan
