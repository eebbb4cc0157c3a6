#pragma once

#include <string>
#include <vector>

#include "fiberplan/model.hpp"

namespace fiberplan::testing {

inline FiberProfile g655() { return FiberProfile{"G.655", 0.3, 3.5, 3.0}; }

inline TransceiverProfile backbone_transceiver() {
    return TransceiverProfile{Dbm{9.0}, 0.1, 60.0, 35.0, Dbm{-38.0}, 0.9};
}

inline ComponentLosses backbone_losses() { return ComponentLosses{Db{0.3}, Db{0.05}, Db{3.0}, Db{0.0}}; }

inline Span make_span(std::string id, std::string from, std::string to, double length_km) {
    Span s;
    s.id = std::move(id);
    s.from_node = std::move(from);
    s.to_node = std::move(to);
    s.length_km = length_km;
    s.fiber = "G.655";
    return s;
}

/// Ring n0 - n1 - ... - n{count-1} - n0 with spans s0..s{count-1}.
inline Network make_ring(int count, double length_km = 10.0) {
    Network net;
    net.topology = Topology::Ring;
    net.fibers = {g655()};
    net.losses = backbone_losses();
    net.transceiver = backbone_transceiver();
    for (int i = 0; i < count; ++i) {
        net.nodes.push_back({"n" + std::to_string(i), "Node " + std::to_string(i)});
    }
    for (int i = 0; i < count; ++i) {
        net.spans.push_back(make_span("s" + std::to_string(i), "n" + std::to_string(i),
                                      "n" + std::to_string((i + 1) % count), length_km));
    }
    return net;
}

/// Star rooted at "root" with `leaves` children.
inline Network make_star(int leaves) {
    Network net;
    net.topology = Topology::Tree;
    net.head = "root";
    net.fibers = {g655()};
    net.losses = backbone_losses();
    net.transceiver = backbone_transceiver();
    net.nodes.push_back({"root", "Root"});
    for (int i = 0; i < leaves; ++i) {
        const auto id = "leaf" + std::to_string(i);
        net.nodes.push_back({id, id});
        net.spans.push_back(make_span("t" + std::to_string(i), "root", id, 2.0));
    }
    return net;
}

}  // namespace fiberplan::testing
