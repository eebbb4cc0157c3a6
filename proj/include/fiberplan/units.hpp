#pragma once

// Decibel quantities used throughout the planner.
//
// Db is a relative level (a loss or gain magnitude); Dbm is an absolute
// optical power referenced to 1 mW. Only the physically meaningful
// combinations are defined:
//   Dbm +/- Db  -> Dbm
//   Dbm -  Dbm  -> Db
//   Db  +/- Db  -> Db

#include <cmath>
#include <compare>

namespace fiberplan {

struct Db {
    double value{};

    constexpr auto operator<=>(const Db&) const = default;

    constexpr Db& operator+=(Db other) {
        value += other.value;
        return *this;
    }
    constexpr Db& operator-=(Db other) {
        value -= other.value;
        return *this;
    }
};

struct Dbm {
    double value{};

    constexpr auto operator<=>(const Dbm&) const = default;

    constexpr Dbm& operator+=(Db gain) {
        value += gain.value;
        return *this;
    }
    constexpr Dbm& operator-=(Db loss) {
        value -= loss.value;
        return *this;
    }
};

constexpr Db operator+(Db a, Db b) { return Db{a.value + b.value}; }
constexpr Db operator-(Db a, Db b) { return Db{a.value - b.value}; }
constexpr Db operator*(Db a, double k) { return Db{a.value * k}; }
constexpr Db operator*(double k, Db a) { return Db{a.value * k}; }

constexpr Dbm operator+(Dbm p, Db gain) { return Dbm{p.value + gain.value}; }
constexpr Dbm operator-(Dbm p, Db loss) { return Dbm{p.value - loss.value}; }
constexpr Db operator-(Dbm a, Dbm b) { return Db{a.value - b.value}; }

/// P[W] = 10^((P[dBm] - 30) / 10). -inf dBm maps to 0 W.
inline double dbm_to_watts(Dbm p) { return std::pow(10.0, (p.value - 30.0) / 10.0); }

inline Dbm watts_to_dbm(double watts) { return Dbm{10.0 * std::log10(watts) + 30.0}; }

namespace literals {
constexpr Db operator""_dB(long double v) { return Db{static_cast<double>(v)}; }
constexpr Db operator""_dB(unsigned long long v) { return Db{static_cast<double>(v)}; }
constexpr Dbm operator""_dBm(long double v) { return Dbm{static_cast<double>(v)}; }
constexpr Dbm operator""_dBm(unsigned long long v) { return Dbm{static_cast<double>(v)}; }
}  // namespace literals

}  // namespace fiberplan
