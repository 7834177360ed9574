#include "mass/decimal.hpp"

#include <algorithm>

#include "mass/errors.hpp"

namespace mass {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonSquare: return "NonSquare";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::NegativeLoad: return "NegativeLoad";
    case Errc::DiagonalNotVacant: return "DiagonalNotVacant";
    case Errc::MalformedCell: return "MalformedCell";
    case Errc::HeaderMismatch: return "HeaderMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NoUncoveredCell: return "NoUncoveredCell";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::IterationGuardExceeded: return "IterationGuardExceeded";
    case Errc::NoCapacity: return "NoCapacity";
    case Errc::Infeasible: return "Infeasible";
    case Errc::Unplaced: return "Unplaced";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

std::optional<std::int64_t> parse_micro(std::string_view text, std::int64_t max_micro) {
  std::size_t pos = 0;
  __int128 whole = 0;
  int digit_count = 0;

  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    whole = whole * 10 + (text[pos] - '0');
    if (whole > static_cast<__int128>(INT64_MAX)) return std::nullopt;
    ++pos;
    ++digit_count;
  }

  std::int64_t frac = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    int frac_digits = 0;
    std::int64_t scale = kMicro;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (++frac_digits > 6) return std::nullopt;
      scale /= 10;
      frac += (text[pos] - '0') * scale;
      ++pos;
      ++digit_count;
    }
  }

  if (digit_count == 0 || pos != text.size()) return std::nullopt;

  __int128 value = whole * kMicro + frac;
  if (value > static_cast<__int128>(max_micro)) return std::nullopt;
  return static_cast<std::int64_t>(value);
}

std::string int128_to_string(__int128 value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  // Two's-complement minimum negates fine through unsigned.
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value)
                                   : static_cast<unsigned __int128>(value);
  std::string digits;
  while (mag > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

namespace {

std::string format_scaled(__int128 value, __int128 divisor, int frac_digits) {
  bool negative = value < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value)
                                   : static_cast<unsigned __int128>(value);
  unsigned __int128 div = static_cast<unsigned __int128>(divisor);
  std::string out;
  if (negative && mag != 0) out = "-";
  out += int128_to_string(static_cast<__int128>(mag / div));
  unsigned __int128 rem = mag % div;
  if (rem != 0) {
    std::string frac;
    for (int d = 0; d < frac_digits; ++d) {
      div /= 10;
      frac.push_back(static_cast<char>('0' + static_cast<int>(rem / div)));
      rem %= div;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out += '.';
    out += frac;
  }
  return out;
}

}  // namespace

std::string format_micro(std::int64_t micro) {
  return format_scaled(micro, kMicro, 6);
}

std::string format_cost(CostValue cost) {
  return format_scaled(cost, kMicroSq, 12);
}

bool cost_is_integral(CostValue cost) {
  return cost % kMicroSq == 0;
}

std::int64_t cost_to_units(CostValue cost) {
  if (!cost_is_integral(cost)) fail(Errc::InvalidArgument, "cost is not a whole number of units");
  CostValue units = cost / kMicroSq;
  if (units > INT64_MAX || units < INT64_MIN)
    fail(Errc::TooLarge, "cost does not fit a 64-bit integer");
  return static_cast<std::int64_t>(units);
}

}  // namespace mass
