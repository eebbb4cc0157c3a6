#pragma once

// Subscriber forecasting: population -> mobile -> operator -> LTE
// subscribers, then compound annual growth on the LTE stage.

#include <cstdint>

namespace fiberplan {

using Count = std::int64_t;

struct TrafficInput {
    Count population{};
    double cellular_penetration{};
    double operator_share{};
    double lte_penetration{};
    double annual_growth{};
    int horizon_years{};
};

struct TrafficForecast {
    Count mobile_subscribers{};
    Count operator_subscribers{};
    Count lte_subscribers{};
    Count projected_subscribers{};
};

/// Nearest integer; exact halves go toward zero (1275331.5 -> 1275331).
Count round_half_toward_zero(double x);

TrafficForecast forecast_subscribers(const TrafficInput& input);

/// round(base * (1 + rate)^years), compounded annually.
Count project_growth(Count base, double rate, int years);

}  // namespace fiberplan
