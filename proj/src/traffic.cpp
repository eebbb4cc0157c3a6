#include "fiberplan/traffic.hpp"

#include <cmath>

#include <fmt/format.h>

#include "fiberplan/errors.hpp"

namespace fiberplan {

namespace {

void require_ratio(double r, const char* what) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw DomainError(fmt::format("{} must be a finite ratio >= 0 (got {})", what, r));
    }
}

Count stage(Count previous, double ratio) { return round_half_toward_zero(static_cast<double>(previous) * ratio); }

}  // namespace

Count round_half_toward_zero(double x) {
    const double magnitude = std::ceil(std::abs(x) - 0.5);
    return static_cast<Count>(x < 0.0 ? -magnitude : magnitude);
}

TrafficForecast forecast_subscribers(const TrafficInput& input) {
    if (input.population < 0) {
        throw DomainError(fmt::format("population must be >= 0 (got {})", input.population));
    }
    require_ratio(input.cellular_penetration, "cellular penetration");
    require_ratio(input.operator_share, "operator share");
    require_ratio(input.lte_penetration, "LTE penetration");

    TrafficForecast f;
    f.mobile_subscribers = stage(input.population, input.cellular_penetration);
    f.operator_subscribers = stage(f.mobile_subscribers, input.operator_share);
    f.lte_subscribers = stage(f.operator_subscribers, input.lte_penetration);
    f.projected_subscribers = project_growth(f.lte_subscribers, input.annual_growth, input.horizon_years);
    return f;
}

Count project_growth(Count base, double rate, int years) {
    if (base < 0 || years < 0) {
        throw DomainError(fmt::format("growth projection needs base >= 0 and years >= 0 (got {}, {})", base, years));
    }
    require_ratio(rate, "growth rate");
    return stage(base, std::pow(1.0 + rate, years));
}

}  // namespace fiberplan
