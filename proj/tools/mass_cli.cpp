#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mass/errors.hpp"
#include "mass/report.hpp"

namespace {

// Flag-value grammar problems are usage errors (exit 1), unlike data errors
// found while reading input files (exit 2).
struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) mass::fail(mass::Errc::InvalidArgument, "cannot read file `" + path + "`");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) mass::fail(mass::Errc::InvalidArgument, "cannot write file `" + path + "`");
  out << content;
  if (!out) mass::fail(mass::Errc::InvalidArgument, "cannot write file `" + path + "`");
}

std::int64_t parse_length(const std::string& flag, const std::string& text) {
  const std::optional<std::int64_t> value = mass::parse_micro(text, mass::kMaxDimMicro);
  if (!value)
    throw UsageError{"invalid " + flag + " value `" + text +
                     "` (expected a nonnegative decimal, at most 6 fractional digits)"};
  return *value;
}

std::pair<std::int64_t, std::int64_t> parse_wxh(const std::string& flag, const std::string& text) {
  const std::size_t x = text.find('x');
  if (x == std::string::npos || text.find('x', x + 1) != std::string::npos)
    throw UsageError{"invalid " + flag + " value `" + text + "` (expected WxH, e.g. 64x22)"};
  return {parse_length(flag, text.substr(0, x)), parse_length(flag, text.substr(x + 1))};
}

struct Cli {
  std::string loads_path;
  std::string format = "text";
  std::string floor = "64x22";
  std::string facility = "20x10";
  std::string aisle = "2";
  std::string trace_path;
  std::string svg_path;
  std::string placement_path;
  std::vector<std::string> move_tokens;
  int max_iters = 1000;

  mass::LoadMatrix load_matrix() const { return mass::parse_load_matrix(read_file(loads_path)); }

  mass::FloorPlan floor_plan() const {
    const auto [fw, fh] = parse_wxh("--floor", floor);
    const auto [cw, ch] = parse_wxh("--facility", facility);
    mass::FloorPlan fp;
    fp.floor_w = fw;
    fp.floor_h = fh;
    fp.facility_w = cw;
    fp.facility_h = ch;
    fp.aisle = parse_length("--aisle", aisle);
    return fp;
  }

  mass::MoveOptions move_options() const {
    mass::MoveOptions opts;
    opts.max_iters = max_iters;
    if (move_tokens.empty()) return opts;
    opts.facility2 = opts.facility3 = opts.column2 = opts.column3 = false;
    for (const std::string& token : move_tokens) {
      if (token == "facility2")
        opts.facility2 = true;
      else if (token == "facility3")
        opts.facility3 = true;
      else if (token == "column2")
        opts.column2 = true;
      else if (token == "column3")
        opts.column3 = true;
      else
        throw UsageError{"unknown move kind `" + token +
                         "` (expected facility2, facility3, column2, column3)"};
    }
    return opts;
  }

  bool json() const { return format == "json"; }

  void maybe_svg(const mass::Layout& layout, const mass::FloorPlan& fp,
                 const mass::LoadMatrix& lm) const {
    if (!svg_path.empty()) write_file(svg_path, mass::layout_svg(layout, fp, lm.names()));
  }
};

int cmd_assign(const Cli& cli) {
  const mass::LoadMatrix lm = cli.load_matrix();
  const mass::AssignOutcome outcome = mass::run_assign(lm);
  std::cout << (cli.json() ? mass::assign_json(lm, outcome) : mass::assign_text(lm, outcome));
  return 0;
}

int cmd_layout(const Cli& cli) {
  const mass::LoadMatrix lm = cli.load_matrix();
  const mass::FloorPlan fp = cli.floor_plan();
  const mass::LayoutOutcome outcome = mass::run_layout(lm, fp);
  cli.maybe_svg(outcome.layout, fp, lm);
  std::cout << (cli.json() ? mass::layout_json(lm, outcome) : mass::layout_text(lm, outcome));
  return 0;
}

int cmd_optimize(const Cli& cli) {
  const mass::LoadMatrix lm = cli.load_matrix();
  const mass::FloorPlan fp = cli.floor_plan();
  const mass::OptimizeOutcome outcome = mass::run_optimize(lm, fp, cli.move_options());
  if (!cli.trace_path.empty()) write_file(cli.trace_path, mass::trace_json(lm, outcome.trace));
  cli.maybe_svg(outcome.final_layout, fp, lm);
  std::cout << (cli.json() ? mass::optimize_json(lm, outcome) : mass::optimize_text(lm, outcome));
  return 0;
}

int cmd_evaluate(const Cli& cli) {
  const mass::LoadMatrix lm = cli.load_matrix();
  const mass::FloorPlan fp = cli.floor_plan();
  const mass::Layout layout = mass::parse_placement_csv(read_file(cli.placement_path), lm);
  const mass::EvaluateOutcome outcome = mass::run_evaluate(lm, fp, layout);
  cli.maybe_svg(outcome.layout, fp, lm);
  std::cout << (cli.json() ? mass::evaluate_json(lm, outcome) : mass::evaluate_text(lm, outcome));
  return 0;
}

int cmd_oracle(const Cli& cli) {
  const mass::LoadMatrix lm = cli.load_matrix();
  const mass::FloorPlan fp = cli.floor_plan();
  const mass::OracleOutcome outcome = mass::run_oracle(lm, fp);
  cli.maybe_svg(outcome.result.witness, fp, lm);
  std::cout << (cli.json() ? mass::oracle_json(lm, outcome) : mass::oracle_text(lm, outcome));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facility-layout optimizer: Hungarian assignment seeding plus "
               "steepest-descent exchange improvement"};
  app.require_subcommand(1);
  Cli cli;

  const auto add_common = [&](CLI::App* cmd, bool with_dims) {
    cmd->add_option("--loads", cli.loads_path, "load-matrix CSV file")->required();
    cmd->add_option("--format", cli.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_dims) {
      cmd->add_option("--floor", cli.floor, "floor WxH in meters (default 64x22)");
      cmd->add_option("--facility", cli.facility,
                      "facility footprint WxH in meters (default 20x10)");
      cmd->add_option("--aisle", cli.aisle, "aisle width in meters (default 2)");
      cmd->add_option("--svg", cli.svg_path, "write an SVG rendering to this file");
    }
  };

  CLI::App* assign = app.add_subcommand("assign", "Optimal facility pairing and its cost");
  add_common(assign, false);

  CLI::App* layout = app.add_subcommand("layout", "Initial block layout seeded by the pairing");
  add_common(layout, true);

  CLI::App* optimize =
      app.add_subcommand("optimize", "Full pipeline: pairing, initial layout, exchange descent");
  add_common(optimize, true);
  optimize->add_option("--moves", cli.move_tokens,
                       "enabled move kinds (default all): facility2,facility3,column2,column3")
      ->delimiter(',');
  optimize->add_option("--max-iters", cli.max_iters, "descent round limit (default 1000)")
      ->check(CLI::NonNegativeNumber);
  optimize->add_option("--trace", cli.trace_path, "write the accepted-move trace JSON here");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Cost of a placement given as CSV");
  add_common(evaluate, true);
  evaluate->add_option("--placement", cli.placement_path, "placement CSV (facility,row,col)")
      ->required();

  CLI::App* oracle =
      app.add_subcommand("oracle", "Exhaustive optimal layout (small instances only)");
  add_common(oracle, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or a one-line diagnostic
    return code == 0 ? 0 : 1;
  }

  try {
    if (assign->parsed()) return cmd_assign(cli);
    if (layout->parsed()) return cmd_layout(cli);
    if (optimize->parsed()) return cmd_optimize(cli);
    if (evaluate->parsed()) return cmd_evaluate(cli);
    if (oracle->parsed()) return cmd_oracle(cli);
    std::cerr << "mass: no subcommand selected\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "mass: " << e.message << "\n";
    return 1;
  } catch (const mass::Error& e) {
    std::cerr << "mass: " << e.what() << "\n";
    switch (e.code()) {
      case mass::Errc::NoCapacity:
      case mass::Errc::Infeasible:
      case mass::Errc::TooLarge: return 3;
      default: return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "mass: " << e.what() << "\n";
    return 2;
  }
}
