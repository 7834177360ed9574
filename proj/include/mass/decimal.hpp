#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mass {

// All quantities are fixed-point decimals stored in micro units
// (1 unit == 1'000'000 micro), so equality and zero tests are exact.
inline constexpr std::int64_t kMicro = 1'000'000;

// Products of two micro-scaled values (load x distance) live at 1e-12 of a
// unit. 128-bit keeps sums of such products exact without overflow checks.
using CostValue = __int128;

inline constexpr CostValue kMicroSq = static_cast<CostValue>(kMicro) * kMicro;

// Parses a nonnegative decimal with at most six fractional digits into micro
// units. Returns nullopt on any other input (sign, stray characters, too many
// fractional digits, value above `max_micro`).
std::optional<std::int64_t> parse_micro(std::string_view text,
                                        std::int64_t max_micro = INT64_MAX);

// Exact decimal rendering of a micro-scaled value; trailing zeros trimmed,
// no decimal point for whole units.
std::string format_micro(std::int64_t micro);

// Same for a micro^2-scaled cost (divisor 1e12).
std::string format_cost(CostValue cost);

bool cost_is_integral(CostValue cost);

// Unscaled whole-unit value of an integral cost. Precondition: integral and
// representable as int64.
std::int64_t cost_to_units(CostValue cost);

std::string int128_to_string(__int128 value);

}  // namespace mass
