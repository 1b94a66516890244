#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "heunpot/potential_builder.hpp"

namespace heunpot::app {

enum class Command { Inspect, Build, Verify, Cases };
enum class OutputFormat { Csv, Json };

/// Family selector and scale parameters as given on the command line.
struct FamilySpec {
  std::string name = "linear+";
  double g = 1.0;
  double s = 1.0;
  double b = 1.0;
  double c = 1.0;
  double sigma = 1.0;
  double alpha1 = 1.0;
  double beta1 = 0.0;
  double gamma1 = 0.0;
  std::optional<double> c1;
};

struct RunConfig {
  Command command = Command::Inspect;
  RawHeunParams heun{2.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  bool epsilon_given = false;
  FamilySpec family;
  std::optional<GridSpec> grid;
  OutputFormat format = OutputFormat::Json;
  std::string out_path;  // empty: standard output
  std::optional<double> tol;
  std::uint64_t seed = 20240917;
  bool corrupt_table = false;
  ConstructionPath construction = ConstructionPath::Direct;
};

/// Validates the Heun parameters, solving for epsilon when it was not given.
HeunParams make_heun(const RunConfig& cfg);

TransformFamily make_family(const FamilySpec& spec);

/// Parses "min:max:count".
GridSpec parse_grid(const std::string& text);

std::string to_string(Command c);

}  // namespace heunpot::app
