#ifndef LINKFORGE_TIME_HH
#define LINKFORGE_TIME_HH

#include <cstdint>

namespace linkforge {

// Simulation time in integer microseconds since scenario start.
// int64 covers > 290k years, so 24 h scenarios never get near overflow.
using TimeUs = std::int64_t;

constexpr TimeUs kMillisecond = 1'000;
constexpr TimeUs kSecond = 1'000'000;

constexpr TimeUs from_ms(std::int64_t ms) { return ms * kMillisecond; }
constexpr TimeUs from_s(std::int64_t s) { return s * kSecond; }

constexpr std::int64_t to_whole_ms(TimeUs t) { return t / kMillisecond; }
constexpr double to_s(TimeUs t) { return static_cast<double>(t) / kSecond; }

} // namespace linkforge

#endif
