#include "heunpot/app/config.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace heunpot::app {

HeunParams make_heun(const RunConfig& cfg) {
  return cfg.epsilon_given ? HeunParams::validate(cfg.heun) : HeunParams::with_solved_epsilon(cfg.heun);
}

TransformFamily make_family(const FamilySpec& spec) {
  const std::string& n = spec.name;
  if (n == "exp+" || n == "exp-") {
    return family::Exponential{spec.g, spec.s, n == "exp+" ? Branch::Plus : Branch::Minus};
  }
  if (n == "cosh2") return family::CoshSq{spec.s};
  if (n == "sinh2") return family::SinhSq{spec.s};
  if (n == "cos2") return family::CosSq{spec.b};
  if (n == "sin2") return family::SinSq{spec.b};
  if (n == "quad") return family::Quadratic{spec.c};
  if (n == "linear+" || n == "linear-") {
    return family::Linear{spec.sigma, n == "linear+" ? Branch::Plus : Branch::Minus};
  }
  if (n == "general") {
    const QuadraticRho rho = QuadraticRho::make(spec.alpha1, spec.beta1, spec.gamma1);
    return family::General{rho, spec.c1 ? cplx(*spec.c1) : default_general_c1(rho), Branch::Plus};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + n + "'");
}

GridSpec parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) {
    throw Error(ErrorKind::InvalidArgument, "grid must look like min:max:count");
  }
  GridSpec g;
  try {
    std::size_t used = 0;
    g.min = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    g.max = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "grid bounds are not numbers: " + text);
  }
  const auto* first = parts[2].data();
  const auto* last = first + parts[2].size();
  const auto res = std::from_chars(first, last, g.count);
  if (res.ec != std::errc() || res.ptr != last) {
    throw Error(ErrorKind::InvalidArgument, "grid count is not an integer: " + parts[2]);
  }
  if (g.count < 3 || !(g.min < g.max)) {
    throw Error(ErrorKind::InvalidArgument, "grid needs min < max and at least 3 points");
  }
  return g;
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Inspect: return "inspect";
    case Command::Build: return "build";
    case Command::Verify: return "verify";
    case Command::Cases: return "cases";
  }
  return "?";
}

}  // namespace heunpot::app
