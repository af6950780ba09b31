#pragma once

// Unit conversions at the I/O boundary. Everything inside the library is SI
// (Pa, K, kg, s, m3); bar and Celsius appear only in user-facing files.

namespace caes::units {

inline constexpr double pa_per_bar = 1e5;
inline constexpr double celsius_offset = 273.15;

constexpr double bar_to_pa(double bar) { return bar * pa_per_bar; }
constexpr double pa_to_bar(double pa) { return pa / pa_per_bar; }
constexpr double celsius_to_kelvin(double c) { return c + celsius_offset; }
constexpr double kelvin_to_celsius(double k) { return k - celsius_offset; }

}  // namespace caes::units
