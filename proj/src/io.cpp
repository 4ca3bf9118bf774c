#include "posauct/io.hpp"

#include <cmath>
#include <fstream>

namespace posauct {

namespace {

std::vector<double> number_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(Errc::ParseError, std::string("missing or non-array field '") + key + "'");
  std::vector<double> out;
  for (const auto& x : j[key]) {
    if (!x.is_number()) throw Error(Errc::ParseError, std::string("non-numeric entry in '") + key + "'");
    out.push_back(x.get<double>());
  }
  return out;
}

json extended_real(double x) {
  if (x == kNegInf) return json("-inf");
  return json(x);
}

}  // namespace

json instance_to_json(const Instance& inst) {
  return json{{"ctrs", inst.ctrs}, {"valuations", inst.valuations}, {"budgets", inst.budgets}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "instance must be a JSON object");
  return validate_instance(number_array(j, "ctrs"), number_array(j, "valuations"),
                           number_array(j, "budgets"));
}

ScalarBidProfile scalar_profile_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("bids") ? j["bids"] : j;
  if (!arr.is_array() || (!arr.empty() && arr[0].is_array()))
    throw Error(Errc::ParseError, "scalar bid profile must be an array of numbers");
  ScalarBidProfile p;
  for (const auto& x : arr) {
    if (!x.is_number()) throw Error(Errc::ParseError, "non-numeric bid");
    p.bids.push_back(x.get<double>());
  }
  return p;
}

MatrixBidProfile matrix_profile_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("bids") ? j["bids"] : j;
  if (!arr.is_array() || arr.empty() || !arr[0].is_array())
    throw Error(Errc::ParseError, "matrix bid profile must be an array of arrays");
  MatrixBidProfile p;
  for (const auto& row : arr) {
    if (!row.is_array()) throw Error(Errc::ParseError, "matrix bid profile rows must be arrays");
    std::vector<double> r;
    for (const auto& x : row) {
      if (!x.is_number()) throw Error(Errc::ParseError, "non-numeric bid");
      r.push_back(x.get<double>());
    }
    p.bids.push_back(std::move(r));
  }
  return p;
}

AnyProfile profile_from_json(MechanismId mech, const json& j) {
  if (mech == MechanismId::EGFP) return matrix_profile_from_json(j);
  return scalar_profile_from_json(j);
}

json outcome_to_json(const Outcome& out) {
  json sigma = json::array(), utilities = json::array();
  for (int s : out.assignment.sigma) sigma.push_back(s + 1);
  for (double u : out.utilities) utilities.push_back(extended_real(u));
  return json{{"sigma", sigma}, {"payments", out.payments}, {"utilities", utilities}};
}

json deviation_to_json(const DeviationReport& d) {
  json j{{"player", d.player + 1},
         {"target", d.target + 1},
         {"required_bid", d.required_bid},
         {"required_attained", d.required_attained},
         {"feasible", d.feasible}};
  j["deviation_utility"] = extended_real(d.deviation_utility);
  j["gain"] = d.gain == kPosInf ? json("inf") : extended_real(d.gain);
  return j;
}

json equilibrium_report_to_json(const EquilibriumReport& rep) {
  json j;
  j["mechanism"] = mechanism_name(rep.mech);
  j["is_equilibrium"] = rep.is_equilibrium;
  j["theta"] = rep.theta;
  if (const auto* s = std::get_if<ScalarBidProfile>(&rep.profile)) j["bids"] = s->bids;
  else j["bids"] = std::get<MatrixBidProfile>(rep.profile).bids;
  json sigma = json::array();
  for (int v : rep.assignment.sigma) sigma.push_back(v + 1);
  j["sigma"] = sigma;
  j["lw"] = rep.lw;
  json devs = json::array();
  for (const auto& d : rep.best_deviation) devs.push_back(deviation_to_json(d));
  j["best_deviation"] = devs;
  return j;
}

json lpoa_report_to_json(const LpoaReport& rep) {
  return json{{"opt_lw", rep.opt_lw},
              {"min_eq_lw", rep.min_eq_lw},
              {"max_eq_lw", rep.max_eq_lw},
              {"lpoa", rep.lpoa},
              {"lpos", rep.lpos},
              {"equilibria_found", rep.equilibria_found},
              {"grid", {{"levels_per_player", rep.grid.levels_per_player}, {"theta", rep.grid.theta}}}};
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "malformed JSON in " + path);
  return j;
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot open file for writing: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace posauct
