#include "mass/loads.hpp"

#include <algorithm>
#include <unordered_map>

#include "mass/errors.hpp"

namespace mass {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f')
      return false;
  }
  return true;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::size_t LoadMatrix::idx(int i, int j) const {
  if (i < 0 || j < 0 || i >= n() || j >= n())
    fail(Errc::InvalidArgument, "cell index out of range");
  return static_cast<std::size_t>(i) * n() + j;
}

LoadMatrix LoadMatrix::from_cells(std::vector<std::string> names,
                                  std::vector<std::optional<std::int64_t>> cells) {
  const int n = static_cast<int>(names.size());
  if (n < 1) fail(Errc::HeaderMismatch, "a load matrix needs at least one facility");
  if (n > kMaxFacilities)
    fail(Errc::TooLarge, "at most " + std::to_string(kMaxFacilities) + " facilities supported");
  if (cells.size() != static_cast<std::size_t>(n) * n)
    fail(Errc::NonSquare, "expected " + std::to_string(n) + "x" + std::to_string(n) + " cells");

  for (const auto& name : names) {
    if (!valid_name(name)) fail(Errc::MalformedCell, "invalid facility name '" + name + "'");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (names[i] == names[j]) fail(Errc::DuplicateName, "facility '" + names[i] + "'");
    }
  }

  LoadMatrix lm;
  lm.names_ = std::move(names);
  lm.cells_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& cell = cells[static_cast<std::size_t>(i) * n + j];
      if (!cell.has_value()) continue;
      std::int64_t v = *cell;
      if (v < 0) fail(Errc::NegativeLoad, "load (" + lm.names_[i] + "," + lm.names_[j] + ")");
      if (v > kMaxLoadMicro)
        fail(Errc::MalformedCell, "load (" + lm.names_[i] + "," + lm.names_[j] + ") exceeds maximum");
      if (i == j) {
        if (v != 0)
          fail(Errc::DiagonalNotVacant, "diagonal cell (" + lm.names_[i] + "," + lm.names_[j] + ")");
        continue;  // a present 0 on the diagonal normalizes to vacant
      }
      lm.cells_[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
  return lm;
}

std::int64_t LoadMatrix::total_load_micro() const {
  std::int64_t sum = 0;
  for (std::int64_t v : cells_)
    if (v > 0) sum += v;
  return sum;
}

int LoadMatrix::present_count() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                        [](std::int64_t v) { return v >= 0; }));
}

LoadMatrix parse_load_matrix(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find('\n', start);
    std::string_view line = (pos == std::string_view::npos)
                                ? text.substr(start)
                                : text.substr(start, pos - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (lines.empty()) fail(Errc::HeaderMismatch, "missing header row");

  auto header = split(lines[0], ',');
  if (header[0] != "facility")
    fail(Errc::HeaderMismatch, "header must start with 'facility'");
  if (header.size() < 2) fail(Errc::HeaderMismatch, "header names no facilities");

  std::vector<std::string> names(header.begin() + 1, header.end());
  const int n = static_cast<int>(names.size());
  if (n > kMaxFacilities)
    fail(Errc::TooLarge, "at most " + std::to_string(kMaxFacilities) + " facilities supported");

  std::unordered_map<std::string_view, int> name_index;
  for (int j = 0; j < n; ++j) {
    if (!valid_name(names[j]))
      fail(Errc::MalformedCell, "invalid facility name '" + names[j] + "'");
    if (!name_index.emplace(names[j], j).second)
      fail(Errc::DuplicateName, "facility '" + names[j] + "'");
  }

  std::vector<std::optional<std::int64_t>> cells(static_cast<std::size_t>(n) * n);
  std::vector<bool> row_seen(n, false);

  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto fields = split(lines[li], ',');
    std::string row_name(fields[0]);
    auto it = name_index.find(fields[0]);
    if (it == name_index.end())
      fail(Errc::HeaderMismatch, "row '" + row_name + "' not in header");
    const int i = it->second;
    if (row_seen[i]) fail(Errc::DuplicateName, "row '" + row_name + "' appears twice");
    row_seen[i] = true;

    if (fields.size() != static_cast<std::size_t>(n) + 1)
      fail(Errc::MalformedCell, "row '" + row_name + "' has " +
                                    std::to_string(fields.size() - 1) + " values, expected " +
                                    std::to_string(n));

    for (int j = 0; j < n; ++j) {
      std::string_view field = fields[j + 1];
      if (field.empty() || field == "-") continue;  // vacant
      if (field.front() == '-') {
        if (parse_micro(field.substr(1)).has_value())
          fail(Errc::NegativeLoad, "cell (" + row_name + "," + names[j] + ")");
        fail(Errc::MalformedCell, "cell (" + row_name + "," + names[j] + "): '" +
                                      std::string(field) + "'");
      }
      auto value = parse_micro(field, kMaxLoadMicro);
      if (!value.has_value())
        fail(Errc::MalformedCell, "cell (" + row_name + "," + names[j] + "): '" +
                                      std::string(field) + "'");
      if (i == j && *value != 0)
        fail(Errc::DiagonalNotVacant, "cell (" + row_name + "," + names[j] + ")");
      cells[static_cast<std::size_t>(i) * n + j] = *value;
    }
  }

  const int rows = static_cast<int>(std::count(row_seen.begin(), row_seen.end(), true));
  if (rows != n)
    fail(Errc::NonSquare, std::to_string(rows) + " data rows for " + std::to_string(n) +
                              " header columns");

  return LoadMatrix::from_cells(std::move(names), std::move(cells));
}

std::string to_csv(const LoadMatrix& lm) {
  std::string out = "facility";
  for (const auto& name : lm.names()) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (int i = 0; i < lm.n(); ++i) {
    out += lm.names()[i];
    for (int j = 0; j < lm.n(); ++j) {
      out += ',';
      if (lm.vacant(i, j))
        out += '-';
      else
        out += format_micro(lm.load_micro(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace mass
