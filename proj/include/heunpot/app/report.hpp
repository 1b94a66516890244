#pragma once

// JSON and CSV serialization. Complex numbers are [re, im] arrays in JSON and
// *_re / *_im column pairs in CSV.

#include <json.hpp>
#include <ostream>
#include <vector>

#include "heunpot/potential_builder.hpp"

namespace heunpot::app {

using nlohmann::json;

json to_json(const cplx& v);
cplx complex_from_json(const json& j);

json heun_to_json(const HeunParams& p);
json family_to_json(const TransformFamily& fam);
json coeffs_to_json(const std::vector<NamedCoeff>& coeffs);
json claim_to_json(const ClaimVerdict& v);

json profile_to_json(const PotentialProfile& prof);
void write_profile_csv(std::ostream& os, const PotentialProfile& prof);

/// The columns of a profile as read back from its JSON export.
struct ProfileTable {
  std::vector<double> xs;
  std::vector<cplx> is_values;
  std::vector<cplx> v_values;
  cplx k_squared;
};

ProfileTable profile_from_json(const json& j);

}  // namespace heunpot::app
