#include "fiberplan/network_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"

namespace fiberplan {

namespace {

using json = nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

// A JSON object together with its location in the document, for messages
// like "spans[3].length: expected a number".
class Object {
public:
    Object(const json& value, std::string path) : value_(value), path_(std::move(path)) {
        if (!value_.is_object()) {
            fail("expected an object");
        }
    }

    const std::string& path() const { return path_; }

    [[noreturn]] void fail(std::string_view what) const { throw ConfigError(fmt::format("{}: {}", path_, what)); }

    void allow_only(std::initializer_list<std::string_view> keys) const {
        for (const auto& [k, v] : value_.items()) {
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
                throw ConfigError(fmt::format("{}: unknown key '{}'", path_, k));
            }
        }
    }

    bool has(const char* key) const { return value_.contains(key); }

    const json& at(const char* key) const {
        if (!value_.contains(key)) {
            fail(fmt::format("missing required key '{}'", key));
        }
        return value_.at(key);
    }

    std::string child(const char* key) const { return path_.empty() ? key : fmt::format("{}.{}", path_, key); }

    double number(const char* key) const {
        const auto& v = at(key);
        if (!v.is_number()) {
            throw ConfigError(fmt::format("{}: expected a number", child(key)));
        }
        return v.get<double>();
    }

    double number_or(const char* key, double fallback) const { return has(key) ? number(key) : fallback; }

    std::int64_t integer(const char* key) const {
        const auto& v = at(key);
        if (!v.is_number_integer()) {
            throw ConfigError(fmt::format("{}: expected an integer", child(key)));
        }
        return v.get<std::int64_t>();
    }

    std::string text(const char* key) const {
        const auto& v = at(key);
        if (!v.is_string()) {
            throw ConfigError(fmt::format("{}: expected a string", child(key)));
        }
        return v.get<std::string>();
    }

    std::string text_or(const char* key, std::string fallback) const { return has(key) ? text(key) : fallback; }

    const json& array(const char* key) const {
        const auto& v = at(key);
        if (!v.is_array()) {
            throw ConfigError(fmt::format("{}: expected an array", child(key)));
        }
        return v;
    }

    Object object(const char* key) const { return Object(at(key), child(key)); }

private:
    const json& value_;
    std::string path_;
};

std::string element_path(const std::string& base, std::size_t i) { return fmt::format("{}[{}]", base, i); }

int to_int(const Object& o, const char* key) {
    const auto v = o.integer(key);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw ConfigError(fmt::format("{}: value out of range", o.child(key)));
    }
    return static_cast<int>(v);
}

Amplifier read_amplifier(const Object& o) {
    o.allow_only({"gain", "kind"});
    const auto kind = o.text_or("kind", "EDFA");
    if (kind != "EDFA") {
        o.fail(fmt::format("unsupported amplifier kind '{}'", kind));
    }
    return Amplifier{Db{o.number("gain")}, AmplifierKind::Edfa};
}

FiberProfile read_fiber(const Object& o) {
    o.allow_only({"name", "attenuation", "dispersion", "drum_length", "notes"});
    return FiberProfile{o.text("name"), o.number("attenuation"), o.number("dispersion"), o.number("drum_length")};
}

TransceiverProfile read_transceiver(const Object& o) {
    o.allow_only({"tx_power", "spectral_width", "tx_rise_time", "rx_rise_time", "rx_sensitivity", "responsivity"});
    TransceiverProfile t;
    t.tx_power = Dbm{o.number("tx_power")};
    t.spectral_width_nm = o.number("spectral_width");
    t.tx_rise_time_ps = o.number("tx_rise_time");
    t.rx_rise_time_ps = o.number("rx_rise_time");
    t.rx_sensitivity = Dbm{o.number("rx_sensitivity")};
    t.responsivity_a_per_w = o.number("responsivity");
    return t;
}

ComponentLosses read_losses(const Object& o) {
    o.allow_only({"connector_loss", "splice_loss", "system_margin", "splitter_excess_loss"});
    ComponentLosses l;
    l.connector_loss = Db{o.number("connector_loss")};
    l.splice_loss = Db{o.number("splice_loss")};
    l.system_margin = Db{o.number("system_margin")};
    l.splitter_excess_loss = Db{o.number_or("splitter_excess_loss", 0.0)};
    return l;
}

Span read_span(const Object& o) {
    o.allow_only({"id", "from", "to", "length", "fiber", "connectors", "splices", "amplifiers", "splitters"});
    Span s;
    s.id = o.text("id");
    s.from_node = o.text("from");
    s.to_node = o.text("to");
    s.length_km = o.number("length");
    s.fiber = o.text("fiber");
    if (o.has("connectors")) {
        s.connectors = to_int(o, "connectors");
    }
    if (o.has("splices")) {
        const auto& v = o.at("splices");
        if (v.is_string()) {
            if (v.get<std::string>() != "auto") {
                throw ConfigError(fmt::format("{}: expected an integer or \"auto\"", o.child("splices")));
            }
        } else {
            s.splices = to_int(o, "splices");
        }
    }
    if (o.has("amplifiers")) {
        const auto& arr = o.array("amplifiers");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            s.amplifiers.push_back(read_amplifier(Object(arr[i], element_path(o.child("amplifiers"), i))));
        }
    }
    if (o.has("splitters")) {
        const auto& arr = o.array("splitters");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            Object so(arr[i], element_path(o.child("splitters"), i));
            so.allow_only({"ratio"});
            s.splitters.push_back(Splitter{to_int(so, "ratio")});
        }
    }
    return s;
}

StandardProfile read_standard(const Object& o) {
    o.allow_only({"name", "bit_rate", "line_code", "rx_sensitivity", "notes"});
    StandardProfile p;
    p.name = o.text("name");
    p.bit_rate_bps = o.number("bit_rate");
    const auto code = o.text_or("line_code", "NRZ");
    auto parsed = parse_line_code(code);
    if (!parsed) {
        o.fail(fmt::format("unknown line code '{}' (expected NRZ or RZ)", code));
    }
    p.line_code = *parsed;
    p.rx_sensitivity = Dbm{o.number("rx_sensitivity")};
    p.notes = o.text_or("notes", "");
    if (!(p.bit_rate_bps > 0.0) || !std::isfinite(p.rx_sensitivity.value)) {
        o.fail("bit_rate must be > 0 and rx_sensitivity finite");
    }
    return p;
}

TrafficInput read_traffic(const Object& o) {
    o.allow_only({"population", "cellular_penetration", "operator_share", "lte_penetration", "annual_growth",
                  "horizon"});
    TrafficInput t;
    t.population = o.integer("population");
    t.cellular_penetration = o.number("cellular_penetration");
    t.operator_share = o.number("operator_share");
    t.lte_penetration = o.number("lte_penetration");
    t.annual_growth = o.number_or("annual_growth", 0.0);
    t.horizon_years = o.has("horizon") ? to_int(o, "horizon") : 0;
    return t;
}

}  // namespace

NetworkDocument parse_network_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // nlohmann reports the byte just past the offending token.
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, column] = line_column(text, byte);
        std::string_view reason = e.what();
        if (const auto pos = reason.find(": "); pos != std::string_view::npos) {
            reason.remove_prefix(pos + 2);
        }
        throw ParseError(fmt::format("parse error at line {}, column {}: {}", line, column, reason), line, column);
    }

    Object top(root, "");
    top.allow_only({"name", "description", "topology", "head", "nodes", "spans", "fiber_profiles", "transceiver",
                    "losses", "amplifier", "distribution", "standards", "traffic"});

    NetworkDocument doc;
    doc.name = top.text_or("name", "");
    Network& net = doc.network;

    const auto topology = top.text("topology");
    if (topology == "ring") {
        net.topology = Topology::Ring;
    } else if (topology == "tree") {
        net.topology = Topology::Tree;
    } else {
        throw ConfigError(fmt::format("topology: expected \"ring\" or \"tree\", got \"{}\"", topology));
    }
    if (top.has("head")) {
        net.head = top.text("head");
    }

    const auto& nodes = top.array("nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Object o(nodes[i], element_path("nodes", i));
        o.allow_only({"id", "name"});
        auto id = o.text("id");
        auto name = o.text_or("name", id);
        net.nodes.push_back(Node{std::move(id), std::move(name)});
    }

    const auto& fibers = top.array("fiber_profiles");
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        net.fibers.push_back(read_fiber(Object(fibers[i], element_path("fiber_profiles", i))));
    }
    net.transceiver = read_transceiver(top.object("transceiver"));
    net.losses = read_losses(top.object("losses"));

    const auto& spans = top.array("spans");
    for (std::size_t i = 0; i < spans.size(); ++i) {
        Object o(spans[i], element_path("spans", i));
        Span s = read_span(o);
        if (net.find_fiber(s.fiber) == nullptr) {
            throw ConfigError(fmt::format("{}.fiber: unknown fiber profile '{}'", o.path(), s.fiber));
        }
        net.spans.push_back(std::move(s));
    }

    if (top.has("amplifier")) {
        doc.planning_amplifier = read_amplifier(top.object("amplifier"));
    }
    if (top.has("distribution")) {
        Object o = top.object("distribution");
        o.allow_only({"loss", "rx_sensitivity"});
        doc.distribution = DistributionSegment{Db{o.number("loss")}, Dbm{o.number("rx_sensitivity")}};
        if (!(doc.distribution->loss.value >= 0.0)) {
            o.fail("loss must be >= 0 dB");
        }
    }
    if (top.has("standards")) {
        const auto& arr = top.array("standards");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            doc.standards.push_back(read_standard(Object(arr[i], element_path("standards", i))));
        }
    }
    if (top.has("traffic")) {
        doc.traffic = read_traffic(top.object("traffic"));
    }
    return doc;
}

NetworkDocument load_network_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(fmt::format("cannot open network file '{}'", path.string()));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network_document(buf.str());
}

}  // namespace fiberplan
