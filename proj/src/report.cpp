#include "mass/report.hpp"

#include <charconv>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "mass/errors.hpp"

namespace mass {

namespace {

using nlohmann::json;

std::string bool_str(bool value) { return value ? "true" : "false"; }

// Whole units as a JSON number when exact, decimal string otherwise.
json json_micro(std::int64_t micro) {
  if (micro % kMicro == 0) return micro / kMicro;
  return format_micro(micro);
}

json json_cost(CostValue cost) {
  if (cost_is_integral(cost)) {
    const CostValue units = cost / kMicroSq;
    if (units <= std::numeric_limits<std::int64_t>::max() &&
        units >= std::numeric_limits<std::int64_t>::min())
      return static_cast<std::int64_t>(units);
  }
  return format_cost(cost);
}

std::vector<std::string> participant_names(const LoadMatrix& lm, const Move& move) {
  const bool facility =
      move.kind == MoveKind::Facility2Swap || move.kind == MoveKind::Facility3Rotation;
  std::vector<std::string> out;
  out.reserve(move.participants.size());
  for (int p : move.participants)
    out.push_back(facility ? lm.names()[static_cast<std::size_t>(p)] : std::to_string(p));
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += parts[i];
  }
  return out;
}

std::string grid_str(const GridShape& grid) {
  return std::to_string(grid.rows) + "x" + std::to_string(grid.cols);
}

void append_pairs_text(std::string& out, const LoadMatrix& lm, const AssignOutcome& a) {
  for (int i = 0; i < lm.n(); ++i)
    out += "pair." + lm.names()[static_cast<std::size_t>(i)] + "=" +
           lm.names()[static_cast<std::size_t>(a.asg.partner[static_cast<std::size_t>(i)])] + "\n";
}

void append_places_text(std::string& out, const LoadMatrix& lm, const Layout& layout) {
  for (int i = 0; i < lm.n(); ++i) {
    const Slot s = layout.slot_of[static_cast<std::size_t>(i)];
    out += "place." + lm.names()[static_cast<std::size_t>(i)] + "=" + std::to_string(s.row) +
           "," + std::to_string(s.col) + "\n";
  }
}

void append_ascii_text(std::string& out, const LoadMatrix& lm, const Layout& layout,
                       const FloorPlan& fp) {
  out += "layout:\n";
  out += render_ascii(layout, fp, lm.names());
}

json pairs_json(const LoadMatrix& lm, const AssignOutcome& a) {
  json obj = json::object();
  for (int i = 0; i < lm.n(); ++i)
    obj[lm.names()[static_cast<std::size_t>(i)]] =
        lm.names()[static_cast<std::size_t>(a.asg.partner[static_cast<std::size_t>(i)])];
  return obj;
}

json places_json(const LoadMatrix& lm, const Layout& layout) {
  json obj = json::object();
  for (int i = 0; i < lm.n(); ++i) {
    const Slot s = layout.slot_of[static_cast<std::size_t>(i)];
    obj[lm.names()[static_cast<std::size_t>(i)]] = json{{"col", s.col}, {"row", s.row}};
  }
  return obj;
}

json grid_json(const GridShape& grid) { return json{{"cols", grid.cols}, {"rows", grid.rows}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      fields.emplace_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return fields;
}

std::optional<int> parse_index(const std::string& field) {
  int value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || value < 0) return std::nullopt;
  return value;
}

}  // namespace

AssignOutcome run_assign(const LoadMatrix& lm) {
  AssignOutcome outcome;
  outcome.cm = to_cost_matrix(lm);
  outcome.asg = hungarian_solve(outcome.cm);
  outcome.cost = assignment_cost(outcome.cm, outcome.asg);
  return outcome;
}

LayoutOutcome run_layout(const LoadMatrix& lm, const FloorPlan& fp) {
  LayoutOutcome outcome;
  outcome.assign = run_assign(lm);
  outcome.fp = fp;
  outcome.grid = derive_grid(fp);
  outcome.layout = build_initial_layout(outcome.assign.asg, fp, lm.n());
  outcome.cost = layout_cost(outcome.layout, lm, fp).total;
  return outcome;
}

OptimizeOutcome run_optimize(const LoadMatrix& lm, const FloorPlan& fp, const MoveOptions& opts) {
  OptimizeOutcome outcome;
  outcome.seed = run_layout(lm, fp);
  auto [improved, trace] = craft_improve(outcome.seed.layout, lm, fp, opts);
  outcome.final_layout = std::move(improved);
  outcome.trace = std::move(trace);
  return outcome;
}

EvaluateOutcome run_evaluate(const LoadMatrix& lm, const FloorPlan& fp, const Layout& layout) {
  EvaluateOutcome outcome;
  outcome.fp = fp;
  outcome.grid = derive_grid(fp);
  outcome.layout = layout;
  outcome.cost = layout_cost(layout, lm, fp);
  return outcome;
}

OracleOutcome run_oracle(const LoadMatrix& lm, const FloorPlan& fp) {
  OracleOutcome outcome;
  outcome.fp = fp;
  outcome.grid = derive_grid(fp);
  outcome.result = brute_force_optimum(lm, fp);
  return outcome;
}

std::string assign_text(const LoadMatrix& lm, const AssignOutcome& outcome) {
  std::string out;
  out += "n=" + std::to_string(lm.n()) + "\n";
  out += "big_m=" + format_micro(outcome.cm.big_m) + "\n";
  append_pairs_text(out, lm, outcome);
  out += "cost=" + format_micro(outcome.cost.total_micro) + "\n";
  out += "uses_synthetic=" + bool_str(outcome.cost.uses_synthetic) + "\n";
  return out;
}

std::string assign_json(const LoadMatrix& lm, const AssignOutcome& outcome) {
  json j;
  j["n"] = lm.n();
  j["big_m"] = json_micro(outcome.cm.big_m);
  j["assignment"] = pairs_json(lm, outcome);
  j["cost"] = json_micro(outcome.cost.total_micro);
  j["uses_synthetic"] = outcome.cost.uses_synthetic;
  return dump(j);
}

std::string layout_text(const LoadMatrix& lm, const LayoutOutcome& outcome) {
  std::string out;
  out += "n=" + std::to_string(lm.n()) + "\n";
  out += "grid=" + grid_str(outcome.grid) + "\n";
  append_pairs_text(out, lm, outcome.assign);
  out += "assignment_cost=" + format_micro(outcome.assign.cost.total_micro) + "\n";
  out += "uses_synthetic=" + bool_str(outcome.assign.cost.uses_synthetic) + "\n";
  append_places_text(out, lm, outcome.layout);
  out += "cost=" + format_cost(outcome.cost) + "\n";
  append_ascii_text(out, lm, outcome.layout, outcome.fp);
  return out;
}

std::string layout_json(const LoadMatrix& lm, const LayoutOutcome& outcome) {
  json j;
  j["n"] = lm.n();
  j["grid"] = grid_json(outcome.grid);
  j["assignment"] = pairs_json(lm, outcome.assign);
  j["assignment_cost"] = json_micro(outcome.assign.cost.total_micro);
  j["uses_synthetic"] = outcome.assign.cost.uses_synthetic;
  j["placements"] = places_json(lm, outcome.layout);
  j["cost"] = json_cost(outcome.cost);
  j["ascii"] = render_ascii(outcome.layout, outcome.fp, lm.names());
  return dump(j);
}

std::string optimize_text(const LoadMatrix& lm, const OptimizeOutcome& outcome) {
  const Trace& trace = outcome.trace;
  std::string out;
  out += "n=" + std::to_string(lm.n()) + "\n";
  out += "grid=" + grid_str(outcome.seed.grid) + "\n";
  append_pairs_text(out, lm, outcome.seed.assign);
  out += "initial_cost=" + format_cost(trace.initial_cost) + "\n";
  out += "accepted_moves=" + std::to_string(trace.accepted.size()) + "\n";
  for (std::size_t k = 0; k < trace.accepted.size(); ++k) {
    const TraceEntry& entry = trace.accepted[k];
    const std::string prefix = "move." + std::to_string(k + 1) + ".";
    out += prefix + "kind=" + move_kind_name(entry.move.kind) + "\n";
    out += prefix + "participants=" + join(participant_names(lm, entry.move)) + "\n";
    out += prefix + "delta=" + format_cost(entry.move.delta) + "\n";
    out += prefix + "cost_after=" + format_cost(entry.cost_after) + "\n";
  }
  out += "final_cost=" + format_cost(trace.final_cost) + "\n";
  out += "improvement=" + format_cost(trace.initial_cost - trace.final_cost) + "\n";
  out += "hit_max_iters=" + bool_str(trace.hit_max_iters) + "\n";
  append_places_text(out, lm, outcome.final_layout);
  append_ascii_text(out, lm, outcome.final_layout, outcome.seed.fp);
  return out;
}

std::string optimize_json(const LoadMatrix& lm, const OptimizeOutcome& outcome) {
  const Trace& trace = outcome.trace;
  json j;
  j["n"] = lm.n();
  j["grid"] = grid_json(outcome.seed.grid);
  j["assignment"] = pairs_json(lm, outcome.seed.assign);
  j["initial_cost"] = json_cost(trace.initial_cost);
  j["accepted_moves"] = trace.accepted.size();
  json moves = json::array();
  for (const TraceEntry& entry : trace.accepted) {
    json m;
    m["kind"] = move_kind_name(entry.move.kind);
    m["participants"] = participant_names(lm, entry.move);
    m["delta"] = json_cost(entry.move.delta);
    m["cost_after"] = json_cost(entry.cost_after);
    moves.push_back(std::move(m));
  }
  j["moves"] = std::move(moves);
  j["final_cost"] = json_cost(trace.final_cost);
  j["improvement"] = json_cost(trace.initial_cost - trace.final_cost);
  j["hit_max_iters"] = trace.hit_max_iters;
  j["placements"] = places_json(lm, outcome.final_layout);
  j["ascii"] = render_ascii(outcome.final_layout, outcome.seed.fp, lm.names());
  return dump(j);
}

std::string evaluate_text(const LoadMatrix& lm, const EvaluateOutcome& outcome) {
  std::string out;
  out += "n=" + std::to_string(lm.n()) + "\n";
  out += "grid=" + grid_str(outcome.grid) + "\n";
  append_places_text(out, lm, outcome.layout);
  out += "cost=" + format_cost(outcome.cost.total) + "\n";
  append_ascii_text(out, lm, outcome.layout, outcome.fp);
  return out;
}

std::string evaluate_json(const LoadMatrix& lm, const EvaluateOutcome& outcome) {
  json j;
  j["n"] = lm.n();
  j["grid"] = grid_json(outcome.grid);
  j["placements"] = places_json(lm, outcome.layout);
  j["cost"] = json_cost(outcome.cost.total);
  j["ascii"] = render_ascii(outcome.layout, outcome.fp, lm.names());
  return dump(j);
}

std::string oracle_text(const LoadMatrix& lm, const OracleOutcome& outcome) {
  std::string out;
  out += "n=" + std::to_string(lm.n()) + "\n";
  out += "grid=" + grid_str(outcome.grid) + "\n";
  out += "best_cost=" + format_cost(outcome.result.best_cost) + "\n";
  out += "optima_count=" + std::to_string(outcome.result.optima_count) + "\n";
  append_places_text(out, lm, outcome.result.witness);
  append_ascii_text(out, lm, outcome.result.witness, outcome.fp);
  return out;
}

std::string oracle_json(const LoadMatrix& lm, const OracleOutcome& outcome) {
  json j;
  j["n"] = lm.n();
  j["grid"] = grid_json(outcome.grid);
  j["best_cost"] = json_cost(outcome.result.best_cost);
  j["optima_count"] = outcome.result.optima_count;
  j["placements"] = places_json(lm, outcome.result.witness);
  j["ascii"] = render_ascii(outcome.result.witness, outcome.fp, lm.names());
  return dump(j);
}

std::string trace_json(const LoadMatrix& lm, const Trace& trace) {
  json j;
  j["initial_cost"] = json_cost(trace.initial_cost);
  json moves = json::array();
  for (const TraceEntry& entry : trace.accepted) {
    json m;
    m["kind"] = move_kind_name(entry.move.kind);
    m["participants"] = participant_names(lm, entry.move);
    m["cost_after"] = json_cost(entry.cost_after);
    moves.push_back(std::move(m));
  }
  j["moves"] = std::move(moves);
  j["final_cost"] = json_cost(trace.final_cost);
  return dump(j);
}

std::string layout_svg(const Layout& layout, const FloorPlan& fp,
                       std::span<const std::string> names) {
  if (names.size() != static_cast<std::size_t>(layout.n()))
    fail(Errc::SizeMismatch, "one name per placed facility required");
  const std::string floor_w = format_micro(fp.floor_w);
  const std::string floor_h = format_micro(fp.floor_h);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + floor_w + "\" height=\"" +
         floor_h + "\" viewBox=\"0 0 " + floor_w + " " + floor_h + "\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + floor_w + "\" height=\"" + floor_h +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.2\"/>\n";
  const std::string font_size = format_micro(fp.facility_h / 3);
  for (int i = 0; i < layout.n(); ++i) {
    const Slot s = layout.slot_of[static_cast<std::size_t>(i)];
    const std::int64_t x = s.col * fp.pitch();
    const std::int64_t y = s.row * (fp.facility_h + fp.aisle);
    out += "  <g>\n";
    out += "    <rect x=\"" + format_micro(x) + "\" y=\"" + format_micro(y) + "\" width=\"" +
           format_micro(fp.facility_w) + "\" height=\"" + format_micro(fp.facility_h) +
           "\" fill=\"#dce6f2\" stroke=\"black\" stroke-width=\"0.2\"/>\n";
    out += "    <text x=\"" + format_micro(x + fp.facility_w / 2) + "\" y=\"" +
           format_micro(y + fp.facility_h / 2) +
           "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-size=\"" + font_size +
           "\">" + xml_escape(names[static_cast<std::size_t>(i)]) + "</text>\n";
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

Layout parse_placement_csv(std::string_view text, const LoadMatrix& lm) {
  std::unordered_map<std::string, int> name_index;
  for (int i = 0; i < lm.n(); ++i) name_index.emplace(lm.names()[static_cast<std::size_t>(i)], i);

  Layout layout;
  layout.slot_of.assign(static_cast<std::size_t>(lm.n()), Slot{-1, -1});
  std::vector<char> seen(static_cast<std::size_t>(lm.n()), 0);

  bool header_done = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view line =
        end == std::string_view::npos ? text.substr(pos) : text.substr(pos, end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string> fields = split_fields(line);
    if (!header_done) {
      if (fields.size() != 3 || fields[0] != "facility" || fields[1] != "row" ||
          fields[2] != "col")
        fail(Errc::HeaderMismatch, "placement header must be `facility,row,col`");
      header_done = true;
      continue;
    }
    if (fields.size() != 3)
      fail(Errc::MalformedCell, "placement rows need exactly facility,row,col");
    const auto it = name_index.find(fields[0]);
    if (it == name_index.end())
      fail(Errc::HeaderMismatch, "unknown facility `" + fields[0] + "` in placement");
    if (seen[static_cast<std::size_t>(it->second)])
      fail(Errc::DuplicateName, "facility `" + fields[0] + "` placed twice");
    const std::optional<int> row = parse_index(fields[1]);
    const std::optional<int> col = parse_index(fields[2]);
    if (!row || !col)
      fail(Errc::MalformedCell, "placement row/col must be nonnegative integers");
    seen[static_cast<std::size_t>(it->second)] = 1;
    layout.slot_of[static_cast<std::size_t>(it->second)] = Slot{*row, *col};
  }
  if (!header_done) fail(Errc::HeaderMismatch, "placement header must be `facility,row,col`");
  for (int i = 0; i < lm.n(); ++i)
    if (!seen[static_cast<std::size_t>(i)])
      fail(Errc::Unplaced, "facility `" + lm.names()[static_cast<std::size_t>(i)] +
                               "` has no placement");
  return layout;
}

}  // namespace mass
