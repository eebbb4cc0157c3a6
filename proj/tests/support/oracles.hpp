#pragma once

// Independent reference computations used by the unit and acceptance
// suites. Nothing here calls into the library.

#include <array>
#include <cmath>
#include <numbers>
#include <string_view>

namespace fiberplan::testing {

/// Published per-link rise times and splice counts of the backbone ring.
struct RiseTimeRow {
    std::string_view link;
    double rise_time_ps;
    int splices;
};

inline constexpr std::array<RiseTimeRow, 7> kBackboneRows = {{
    {"Seyegan-Tempel", 69.552, 6},
    {"Tempel-Pakem", 69.773, 9},
    {"Pakem-Ngemplak", 69.541, 6},
    {"Ngemplak-Kalasan", 69.524, 5},
    {"Kalasan-Depok", 69.606, 7},
    {"Depok-Gamping", 69.625, 7},
    {"Gamping-Seyegan", 69.582, 6},
}};

inline constexpr double kTxRisePs = 60.0;
inline constexpr double kRxRisePs = 35.0;
inline constexpr double kDispersionTimesWidth = 3.5 * 0.1;  // ps/km

/// Span length that reproduces a published rise time:
/// L = sqrt(t^2 - t_tx^2 - t_rx^2) / (D * sigma).
inline double invert_rise_time(double rise_time_ps) {
    return std::sqrt(rise_time_ps * rise_time_ps - kTxRisePs * kTxRisePs - kRxRisePs * kRxRisePs) /
           kDispersionTimesWidth;
}

/// Gaussian tail Q(x) = 1/sqrt(2 pi) * integral_x^inf exp(-t^2/2) dt by
/// composite Simpson quadrature over [x, x + 40].
inline double gaussian_tail_quadrature(double x, int intervals = 200000) {
    const double a = x;
    const double b = x + 40.0;
    const double h = (b - a) / intervals;
    auto f = [](double t) { return std::exp(-0.5 * t * t); };
    double sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) {
        sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0 / std::sqrt(2.0 * std::numbers::pi);
}

/// Least k with k * unit >= deficit, by linear search.
inline int least_amplifier_count(double deficit, double unit) {
    int k = 0;
    while (k * unit < deficit) {
        ++k;
    }
    return k;
}

}  // namespace fiberplan::testing
