#include "heunpot/app/report.hpp"

#include <cstdio>
#include <string>
#include <variant>

namespace heunpot::app {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

// Adding 0.0 turns a negative zero into +0.
json to_json(const cplx& v) { return json::array({v.real() + 0.0, v.imag() + 0.0}); }

cplx complex_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json heun_to_json(const HeunParams& p) {
  return {
      {"a", to_json(p.a())},         {"q", to_json(p.q())},         {"alpha", to_json(p.alpha())},
      {"beta", to_json(p.beta())},   {"gamma", to_json(p.gamma())}, {"delta", to_json(p.delta())},
      {"epsilon", to_json(p.epsilon())},
  };
}

json family_to_json(const TransformFamily& fam) {
  json params = std::visit(Overloaded{
                               [](const family::Exponential& f) { return json{{"g", to_json(f.g)}, {"s", to_json(f.s)}}; },
                               [](const family::CoshSq& f) { return json{{"s", to_json(f.s)}}; },
                               [](const family::SinhSq& f) { return json{{"s", to_json(f.s)}}; },
                               [](const family::CosSq& f) { return json{{"b", to_json(f.b)}}; },
                               [](const family::SinSq& f) { return json{{"b", to_json(f.b)}}; },
                               [](const family::Quadratic& f) { return json{{"c", to_json(f.c)}}; },
                               [](const family::Linear& f) { return json{{"sigma", to_json(f.sigma)}}; },
                               [](const family::General& f) {
                                 return json{{"c1", to_json(f.c1)},
                                             {"branch", f.branch == Branch::Plus ? "+" : "-"}};
                               },
                           },
                           fam);
  const QuadraticRho r = induced_rho(fam);
  return {
      {"name", family_name(fam)},
      {"params", params},
      {"rho", {{"alpha1", to_json(r.alpha1())}, {"beta1", to_json(r.beta1())}, {"gamma1", to_json(r.gamma1())}}},
  };
}

json coeffs_to_json(const std::vector<NamedCoeff>& coeffs) {
  json out = json::object();
  for (const auto& c : coeffs) out[c.name] = to_json(c.value);
  return out;
}

json claim_to_json(const ClaimVerdict& v) {
  json j = {
      {"claim", v.claim},
      {"family", v.family},
      {"verdict", to_string(v.verdict)},
      {"max_rel_error", v.max_rel_error},
      {"points", v.xs.size()},
  };
  if (!v.printed.empty()) {
    j["printed"] = coeffs_to_json(v.printed);
    j["refit"] = coeffs_to_json(v.refit);
    j["refit_max_rel_error"] = v.refit_max_rel_error;
  }
  return j;
}

json profile_to_json(const PotentialProfile& prof) {
  json xs = json::array(), zs = json::array(), is = json::array(), vs = json::array(), psi = json::array();
  for (std::size_t i = 0; i < prof.xs.size(); ++i) {
    xs.push_back(prof.xs[i]);
    zs.push_back(to_json(prof.zs[i]));
    is.push_back(to_json(prof.is_values[i]));
    vs.push_back(to_json(prof.v_values[i]));
    psi.push_back(prof.psi_values[i] ? to_json(*prof.psi_values[i]) : json(nullptr));
  }
  return {
      {"meta",
       {
           {"family", family_to_json(prof.family)},
           {"heun", heun_to_json(prof.heun)},
           {"k_squared", to_json(prof.k_squared)},
           {"construction_path", to_string(prof.construction_path)},
           {"excluded", prof.excluded},
       }},
      {"profile", {{"x", xs}, {"z", zs}, {"I_S", is}, {"V", vs}, {"psi", psi}}},
  };
}

void write_profile_csv(std::ostream& os, const PotentialProfile& prof) {
  os << "x,z_re,z_im,I_S_re,I_S_im,V_re,V_im,psi_re,psi_im\n";
  for (std::size_t i = 0; i < prof.xs.size(); ++i) {
    os << num(prof.xs[i]) << ',' << num(prof.zs[i].real()) << ',' << num(prof.zs[i].imag()) << ','
       << num(prof.is_values[i].real()) << ',' << num(prof.is_values[i].imag()) << ','
       << num(prof.v_values[i].real()) << ',' << num(prof.v_values[i].imag()) << ',';
    if (prof.psi_values[i]) {
      os << num(prof.psi_values[i]->real()) << ',' << num(prof.psi_values[i]->imag());
    } else {
      os << ',';
    }
    os << '\n';
  }
}

ProfileTable profile_from_json(const json& j) {
  ProfileTable t;
  const json& prof = j.at("profile");
  for (const auto& x : prof.at("x")) t.xs.push_back(x.get<double>());
  for (const auto& v : prof.at("I_S")) t.is_values.push_back(complex_from_json(v));
  for (const auto& v : prof.at("V")) t.v_values.push_back(complex_from_json(v));
  t.k_squared = complex_from_json(j.at("meta").at("k_squared"));
  return t;
}

}  // namespace heunpot::app
