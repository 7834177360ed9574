#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mass/decimal.hpp"

namespace mass {

inline constexpr int kMaxFacilities = 64;

// Per-cell cap of 1e6 unit-loads keeps every downstream sum inside int64.
inline constexpr std::int64_t kMaxLoadMicro = 1'000'000 * kMicro;

// Square matrix of directed inter-facility loads. A vacant cell means no flow
// is possible between the two facilities; the diagonal is always vacant.
// Immutable after construction and safe to share across threads.
class LoadMatrix {
 public:
  // Validates every invariant: square, 1 <= n <= kMaxFacilities, distinct
  // well-formed names, vacant diagonal (a present 0 on the diagonal is
  // normalized to vacant), loads in [0, kMaxLoadMicro].
  static LoadMatrix from_cells(std::vector<std::string> names,
                               std::vector<std::optional<std::int64_t>> cells);

  int n() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  bool vacant(int i, int j) const { return cells_[idx(i, j)] < 0; }
  std::int64_t load_micro(int i, int j) const { return cells_[idx(i, j)]; }
  std::optional<std::int64_t> cell(int i, int j) const {
    std::int64_t v = cells_[idx(i, j)];
    return v < 0 ? std::nullopt : std::optional<std::int64_t>(v);
  }

  std::int64_t total_load_micro() const;
  int present_count() const;

  bool operator==(const LoadMatrix&) const = default;

 private:
  LoadMatrix() = default;
  std::size_t idx(int i, int j) const;

  std::vector<std::string> names_;
  std::vector<std::int64_t> cells_;  // -1 marks a vacant cell
};

// Parses the load-matrix CSV format:
//   facility,<name1>,...,<nameN>
//   <name>,v1,...,vN
// where each v is a nonnegative decimal (<= 6 fractional digits) or the
// vacant marker `-` (an empty field also means vacant). Lines starting with
// `#` are comments. Data rows may appear in any order; the result follows
// header order.
LoadMatrix parse_load_matrix(std::string_view text);

// Canonical CSV rendering; parse_load_matrix(to_csv(lm)) == lm.
std::string to_csv(const LoadMatrix& lm);

}  // namespace mass
