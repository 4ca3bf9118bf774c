// Command-line front end: instance generation, mechanism evaluation,
// equilibrium verification and empirical LPoA/LPoS measurement.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "posauct/equilibrium.hpp"
#include "posauct/instances.hpp"
#include "posauct/io.hpp"

namespace pa = posauct;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // not an equilibrium / no equilibrium found
constexpr int kExitInputError = 2;

pa::AnyProfile parse_bids_arg(pa::MechanismId mech, const std::string& arg) {
  if (std::filesystem::exists(arg)) return pa::profile_from_json(mech, pa::parse_json_file(arg));
  // Inline form: "1.01,1" for scalar, "1.001,0;1,0" for matrix rows.
  auto parse_row = [](const std::string& row) {
    std::vector<double> out;
    std::stringstream ss(row);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        out.push_back(v);
      } catch (const std::exception&) {
        throw pa::Error(pa::Errc::ParseError, "bad bid value '" + tok + "'");
      }
    }
    if (out.empty()) throw pa::Error(pa::Errc::ParseError, "empty bid list");
    return out;
  };
  if (mech == pa::MechanismId::EGFP) {
    pa::MatrixBidProfile p;
    std::stringstream ss(arg);
    std::string row;
    while (std::getline(ss, row, ';')) p.bids.push_back(parse_row(row));
    return p;
  }
  return pa::ScalarBidProfile{parse_row(arg)};
}

std::string fmt(double x) {
  if (x == pa::kNegInf) return "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

void print_outcome_table(const pa::Instance& inst, pa::MechanismId mech, const pa::AnyProfile& bids,
                         const pa::Outcome& out) {
  const bool scalar = mech != pa::MechanismId::EGFP;
  std::vector<bool> noover;
  if (scalar) noover = pa::check_no_over(inst, std::get<pa::ScalarBidProfile>(bids), {});
  std::printf("%-7s %-9s %-12s %-12s %-12s", "player", "position", "bid", "payment", "utility");
  if (mech == pa::MechanismId::GSP) std::printf(" %-12s", "price/click");
  if (scalar) std::printf(" %-8s", "no-over");
  std::printf("\n");
  for (int i = 0; i < inst.n; ++i) {
    int pos = out.assignment.sigma[i];
    double bid = scalar ? std::get<pa::ScalarBidProfile>(bids).bids[i]
                        : std::get<pa::MatrixBidProfile>(bids).bids[i][pos];
    std::printf("%-7d %-9d %-12s %-12s %-12s", i + 1, pos + 1, fmt(bid).c_str(),
                fmt(out.payments[i]).c_str(), fmt(out.utilities[i]).c_str());
    if (mech == pa::MechanismId::GSP)
      std::printf(" %-12s", fmt(out.payments[i] / inst.ctrs[pos]).c_str());
    if (scalar) std::printf(" %-8s", noover[i] ? "yes" : "NO");
    std::printf("\n");
  }
  std::printf("LW = %s   SW = %s\n", fmt(pa::liquid_welfare(inst, out.assignment)).c_str(),
              fmt(pa::social_welfare(inst, out.assignment)).c_str());
}

void write_outcome_csv(const pa::Instance& inst, pa::MechanismId mech, const pa::AnyProfile& bids,
                       const pa::Outcome& out, const std::string& path) {
  std::ofstream csv(path);
  if (!csv) throw pa::Error(pa::Errc::ParseError, "cannot open " + path);
  csv << "player,position,bid,payment,utility,lw_contrib\n";
  for (int i = 0; i < inst.n; ++i) {
    int pos = out.assignment.sigma[i];
    double bid = mech != pa::MechanismId::EGFP
                     ? std::get<pa::ScalarBidProfile>(bids).bids[i]
                     : std::get<pa::MatrixBidProfile>(bids).bids[i][pos];
    csv << i + 1 << ',' << pos + 1 << ',' << fmt(bid) << ',' << fmt(out.payments[i]) << ','
        << fmt(out.utilities[i]) << ',' << fmt(pa::liquid_value(inst, i, pos)) << '\n';
  }
}

std::string profile_string(const pa::AnyProfile& p) {
  std::string s;
  if (const auto* sp = std::get_if<pa::ScalarBidProfile>(&p)) {
    for (std::size_t i = 0; i < sp->bids.size(); ++i)
      s += (i ? " " : "") + fmt(sp->bids[i]);
  } else {
    const auto& m = std::get<pa::MatrixBidProfile>(p).bids;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) s += " ; ";
      for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? " " : "") + fmt(m[i][j]);
    }
  }
  return s;
}

int default_jobs() {
  if (const char* env = std::getenv("POSAUCT_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // resolved to hardware concurrency downstream
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budget-constrained position auctions: GSP/VCG/EGFP mechanics, "
               "liquid welfare and empirical liquid price of anarchy"};
  app.require_subcommand(1);

  std::string mech_name = "gsp", instance_path, bids_arg, out_path, csv_path, eq_jsonl_path;
  bool as_json = false;
  double theta = 0.0, lambda = 100.0, eps = 0.01, delta = 1e-6;
  int grid_m = 41, jobs = default_jobs(), rand_n = 2;
  std::uint64_t seed = 1;
  std::string family = "theorem1";
  pa::RandomParams rand_params;

  auto* cmd_gen = app.add_subcommand("gen", "Generate an instance JSON file");
  cmd_gen->add_option("--family", family, "theorem1 or random")->default_val("theorem1");
  cmd_gen->add_option("--lambda", lambda, "theorem1 lambda (> 2)");
  cmd_gen->add_option("--eps", eps, "theorem1 eps in (0, 1/2)");
  cmd_gen->add_option("--seed", seed, "random family seed");
  cmd_gen->add_option("--n", rand_n, "random family size");
  cmd_gen->add_option("--ctr-max", rand_params.ctr_max);
  cmd_gen->add_option("--value-max", rand_params.value_max);
  cmd_gen->add_option("--budget-scale", rand_params.budget_scale);
  cmd_gen->add_option("-o,--output", out_path, "output file")->required();

  auto add_common = [&](CLI::App* c, bool needs_bids) {
    c->add_option("--mech", mech_name, "gsp, vcg or egfp")->required();
    c->add_option("--instance", instance_path, "instance JSON file")->required();
    if (needs_bids)
      c->add_option("--bids", bids_arg, "bids JSON file or inline (e.g. \"1.01,1\")")->required();
  };

  auto* cmd_eval = app.add_subcommand("eval", "Evaluate a mechanism on a bid profile");
  add_common(cmd_eval, true);
  cmd_eval->add_flag("--json", as_json, "emit JSON instead of a table");
  cmd_eval->add_option("--csv", csv_path, "write per-player CSV to this file");

  auto* cmd_verify = app.add_subcommand("verify", "Check whether a profile is a pure Nash equilibrium");
  add_common(cmd_verify, true);
  cmd_verify->add_option("--theta", theta, "equilibrium slack (EGFP needs > 0)");
  cmd_verify->add_flag("--json", as_json);

  auto* cmd_lpoa = app.add_subcommand("lpoa", "Enumerate equilibria on a grid and report LPoA/LPoS");
  add_common(cmd_lpoa, false);
  cmd_lpoa->add_option("--grid", grid_m, "bid levels per player")->default_val(20);
  cmd_lpoa->add_option("--theta", theta, "equilibrium slack");
  cmd_lpoa->add_option("--jobs", jobs, "worker threads (default: all cores)");
  cmd_lpoa->add_flag("--json", as_json);
  cmd_lpoa->add_option("--csv", csv_path, "equilibrium summary CSV (profile, lw, is_eq)");
  cmd_lpoa->add_option("--eq-jsonl", eq_jsonl_path, "equilibria as JSON lines");

  auto* cmd_thm = app.add_subcommand(
      "theorem1", "One-shot lower-bound family reproduction for one mechanism");
  cmd_thm->add_option("--mech", mech_name)->required();
  cmd_thm->add_option("--lambda", lambda)->default_val(100.0);
  cmd_thm->add_option("--eps", eps)->default_val(0.01);
  cmd_thm->add_option("--delta", delta, "EGFP fixture bid offset")->default_val(1e-6);
  cmd_thm->add_option("--grid", grid_m)->default_val(41);
  cmd_thm->add_option("--jobs", jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*cmd_gen) {
      pa::Instance inst = family == "random"
                              ? pa::gen_random(seed, rand_n, rand_params)
                              : pa::gen_theorem1({lambda, eps});
      pa::save_instance(inst, out_path);
      std::printf("wrote %s (n=%d)\n", out_path.c_str(), inst.n);
      return kExitOk;
    }

    if (*cmd_eval) {
      pa::MechanismId mech = pa::mechanism_from_name(mech_name);
      pa::Instance inst = pa::load_instance(instance_path);
      pa::AnyProfile bids = parse_bids_arg(mech, bids_arg);
      pa::Outcome out = pa::outcome(mech, inst, bids);
      if (!csv_path.empty()) write_outcome_csv(inst, mech, bids, out, csv_path);
      if (as_json) {
        pa::json j = pa::outcome_to_json(out);
        j["lw"] = pa::liquid_welfare(inst, out.assignment);
        j["sw"] = pa::social_welfare(inst, out.assignment);
        std::cout << j.dump(2) << '\n';
      } else {
        print_outcome_table(inst, mech, bids, out);
      }
      return kExitOk;
    }

    if (*cmd_verify) {
      pa::MechanismId mech = pa::mechanism_from_name(mech_name);
      pa::Instance inst = pa::load_instance(instance_path);
      pa::AnyProfile bids = parse_bids_arg(mech, bids_arg);
      pa::EquilibriumReport rep = pa::verify_equilibrium(mech, inst, bids, theta);
      if (as_json) {
        std::cout << pa::equilibrium_report_to_json(rep).dump(2) << '\n';
      } else {
        std::printf("%s: %s (theta=%s, LW=%s)\n", pa::mechanism_name(mech),
                    rep.is_equilibrium ? "equilibrium" : "NOT an equilibrium", fmt(theta).c_str(),
                    fmt(rep.lw).c_str());
        for (const auto& d : rep.best_deviation) {
          if (!d.feasible) continue;
          std::printf("  player %d best deviation -> %s %d: required_bid %s, utility %s, gain %s\n",
                      d.player + 1, mech == pa::MechanismId::EGFP ? "position" : "rank",
                      d.target + 1, fmt(d.required_bid).c_str(),
                      fmt(d.deviation_utility).c_str(),
                      d.gain == pa::kPosInf ? "inf" : fmt(d.gain).c_str());
        }
      }
      return rep.is_equilibrium ? kExitOk : kExitNegative;
    }

    if (*cmd_lpoa) {
      pa::MechanismId mech = pa::mechanism_from_name(mech_name);
      pa::Instance inst = pa::load_instance(instance_path);
      pa::GridSpec grid{grid_m, theta, jobs};
      auto eqs = pa::enumerate_equilibria(mech, inst, grid);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "profile,lw,is_eq\n";
        for (const auto& e : eqs)
          csv << '"' << profile_string(e.profile) << "\"," << fmt(e.lw) << ",1\n";
      }
      if (!eq_jsonl_path.empty()) {
        std::ofstream jl(eq_jsonl_path);
        for (const auto& e : eqs) jl << pa::equilibrium_report_to_json(e).dump() << '\n';
      }
      if (eqs.empty()) {
        std::fprintf(stderr, "no equilibrium found on the grid\n");
        return kExitNegative;
      }
      pa::LpoaReport rep;
      rep.grid = grid;
      rep.opt_lw = pa::optimal_assignment(inst).value;
      rep.min_eq_lw = pa::kPosInf;
      rep.max_eq_lw = pa::kNegInf;
      for (const auto& e : eqs) {
        rep.min_eq_lw = std::min(rep.min_eq_lw, e.lw);
        rep.max_eq_lw = std::max(rep.max_eq_lw, e.lw);
      }
      rep.lpoa = rep.opt_lw / rep.min_eq_lw;
      rep.lpos = rep.opt_lw / rep.max_eq_lw;
      rep.equilibria_found = static_cast<int>(eqs.size());
      if (as_json) {
        std::cout << pa::lpoa_report_to_json(rep).dump(2) << '\n';
      } else {
        std::printf("equilibria found: %d (grid m=%d, theta=%s)\n", rep.equilibria_found, grid_m,
                    fmt(theta).c_str());
        std::printf("opt_lw = %s   eq LW in [%s, %s]\n", fmt(rep.opt_lw).c_str(),
                    fmt(rep.min_eq_lw).c_str(), fmt(rep.max_eq_lw).c_str());
        std::printf("LPoA >= %s   LPoS <= %s\n", fmt(rep.lpoa).c_str(), fmt(rep.lpos).c_str());
        std::printf("note: grid enumeration can miss equilibria; lpoa is a lower bound, "
                    "lpos an upper bound\n");
      }
      return kExitOk;
    }

    if (*cmd_thm) {
      pa::MechanismId mech = pa::mechanism_from_name(mech_name);
      pa::Theorem1Params params{lambda, eps};
      pa::Instance inst = pa::gen_theorem1(params);
      pa::AnyProfile fixture;
      double th = 0.0;
      if (mech == pa::MechanismId::EGFP) {
        fixture = pa::theorem1_egfp_fixture(params, delta);
        th = delta;
      } else {
        fixture = pa::theorem1_scalar_fixture(params);
      }
      pa::EquilibriumReport rep = pa::verify_equilibrium(mech, inst, fixture, th);
      std::printf("[%s] fixture equilibrium check: %s\n", rep.is_equilibrium ? "PASS" : "FAIL",
                  pa::mechanism_name(mech));
      bool found_bad = false;
      pa::GridSpec grid{grid_m, th, jobs};
      for (const auto& e : pa::enumerate_equilibria(mech, inst, grid))
        if (e.assignment.sigma[0] == 1) found_bad = true;
      std::printf("[%s] no equilibrium induces the optimal assignment (2,1) (grid m=%d)\n",
                  found_bad ? "FAIL" : "PASS", grid_m);
      double opt = pa::optimal_assignment(inst).value;
      double lw_fix = rep.lw;
      std::printf("opt_lw/LW(fixture) = %s (closed form %s, tends to 2 as lambda grows)\n",
                  fmt(opt / lw_fix).c_str(), fmt(pa::theorem1_ratio(params)).c_str());
      return (rep.is_equilibrium && !found_bad) ? kExitOk : kExitNegative;
    }
  } catch (const pa::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code() == pa::Errc::NoEquilibriumFound ? kExitNegative : kExitInputError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}
