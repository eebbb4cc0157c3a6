#pragma once

// Network topology data model and structural validation.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiberplan/errors.hpp"
#include "fiberplan/units.hpp"

namespace fiberplan {

struct FiberProfile {
    std::string name;
    double attenuation_db_per_km{};     // > 0
    double dispersion_ps_per_nm_km{};   // >= 0
    double drum_length_km{};            // > 0, cable length per drum
};

struct TransceiverProfile {
    Dbm tx_power{};
    double spectral_width_nm{};
    double tx_rise_time_ps{};
    double rx_rise_time_ps{};
    Dbm rx_sensitivity{};
    double responsivity_a_per_w{};
};

struct ComponentLosses {
    Db connector_loss{};        // per connector
    Db splice_loss{};           // per splice
    Db system_margin{};         // once per evaluated path
    Db splitter_excess_loss{};  // per splitter stage, on top of the ideal split
};

enum class AmplifierKind { Edfa };

struct Amplifier {
    Db gain{};
    AmplifierKind kind = AmplifierKind::Edfa;
};

/// A 1xN passive splitter.
struct Splitter {
    int ratio{};
};

inline constexpr int kDefaultConnectorsPerSpan = 2;

struct Span {
    std::string id;
    std::string from_node;
    std::string to_node;
    double length_km{};
    int connectors = kDefaultConnectorsPerSpan;
    std::optional<int> splices;  // nullopt: derive from the fiber's drum length
    std::vector<Amplifier> amplifiers;
    std::vector<Splitter> splitters;
    std::string fiber;  // FiberProfile name
};

struct Node {
    std::string id;
    std::string name;
};

enum class Topology { Ring, Tree };

struct Network {
    std::vector<Node> nodes;
    std::vector<Span> spans;
    Topology topology = Topology::Ring;
    std::optional<std::string> head;  // required for Tree
    std::vector<FiberProfile> fibers;
    ComponentLosses losses;
    TransceiverProfile transceiver;

    const Node* find_node(std::string_view id) const;
    const Span* find_span(std::string_view id) const;
    const FiberProfile* find_fiber(std::string_view name) const;

    /// Fiber profile for a span; throws ConfigError when it does not resolve.
    const FiberProfile& fiber_for(const Span& span) const;
};

struct Violation {
    std::string element;
    std::string rule;
    std::string message;

    bool operator==(const Violation&) const = default;
};

/// Every violated structural invariant, sorted by element id then rule.
std::vector<Violation> validate_network(const Network& net);

/// Raised when an operation needs a structurally valid network.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations);

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// ceil(length / drum_length) + 2: one joint per interior drum boundary plus
/// the two terminating joints.
int splice_count(double length_km, double drum_length_km);

/// Explicit splice count if the span has one, otherwise splice_count().
int resolved_splices(const Span& span, const FiberProfile& fiber);

bool is_valid_split_ratio(int ratio);

std::string_view to_string(Topology topology);
std::string_view to_string(AmplifierKind kind);

}  // namespace fiberplan
