#pragma once

// Text and JSON renderings. dB and dBm are printed with two decimals, ps with
// three, km with three and counts as integers. Output is a pure function of
// the input value.

#include <optional>
#include <string>
#include <vector>

#include "fiberplan/model.hpp"
#include "fiberplan/plan.hpp"
#include "fiberplan/signal_chain.hpp"
#include "fiberplan/traffic.hpp"

namespace fiberplan {

enum class OutputFormat { Text, Json };

/// Fixed-point rendering that never prints "-0.00".
std::string fixed(double value, int decimals);

std::string render_plan(const PlanReport& report, OutputFormat format);
std::string render_violations(const std::vector<Violation>& violations, OutputFormat format);
std::string render_forecast(const TrafficInput& input, const TrafficForecast& forecast, OutputFormat format);
std::string render_trace(const PowerTrace& trace, const std::optional<BerEstimate>& ber, OutputFormat format);

}  // namespace fiberplan
