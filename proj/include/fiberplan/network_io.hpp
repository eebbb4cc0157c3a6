#pragma once

// Network description files (JSON).
//
// Required top-level keys: nodes, spans, topology, fiber_profiles,
// transceiver, losses. Optional: name, head, amplifier, distribution,
// standards, traffic. Units: km, dBm, dB, ps, ps/(nm km). A span's
// "splices" may be an integer or "auto".

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiberplan/model.hpp"
#include "fiberplan/standards.hpp"
#include "fiberplan/traffic.hpp"

namespace fiberplan {

/// Lumped distribution segment hanging off the end of a backbone path: its
/// loss and the receiver sensitivity at its head. Together they fix the
/// minimum power the backbone must deliver.
struct DistributionSegment {
    Db loss{};
    Dbm rx_sensitivity{};
};

struct NetworkDocument {
    std::string name;
    Network network;
    std::optional<Amplifier> planning_amplifier;  // unit used for EDFA sizing
    std::optional<DistributionSegment> distribution;
    std::vector<StandardProfile> standards;
    std::optional<TrafficInput> traffic;
};

/// Parses a document. Syntax errors raise ParseError with line/column;
/// schema errors (missing keys, wrong types, unknown profile names) raise
/// ConfigError. Structural validation is separate: see validate_network().
NetworkDocument parse_network_document(std::string_view text);

/// Reads and parses a file; I/O failures raise ConfigError.
NetworkDocument load_network_file(const std::filesystem::path& path);

}  // namespace fiberplan
