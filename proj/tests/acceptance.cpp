// Acceptance suite: prints one PASS/FAIL line per criterion and exits with
// the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "posauct/equilibrium.hpp"
#include "posauct/instances.hpp"
#include "posauct/welfare.hpp"
#include "test_helpers.hpp"

using namespace posauct;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool check(bool ok, int& fails, const char* name, const char* detail) {
  std::printf("%s criterion %s: %s\n", ok ? "PASS" : "FAIL", name, detail);
  if (!ok) ++fails;
  return ok;
}

DeviationReport best_feasible(const std::vector<DeviationReport>& devs) {
  DeviationReport best;
  for (const auto& d : devs)
    if (d.feasible && (!best.feasible || d.gain > best.gain)) best = d;
  return best;
}

// ---- criterion 1: lower-bound family reproduction --------------------------

bool criterion1() {
  const std::pair<double, double> cases[] = {{10.0, 0.1}, {100.0, 0.01}, {1000.0, 0.001}};
  for (auto mech : {MechanismId::GSP, MechanismId::VCG, MechanismId::EGFP}) {
    for (auto [lambda, eps] : cases) {
      auto t0 = Clock::now();
      Theorem1Params params{lambda, eps};
      Instance inst = gen_theorem1(params);
      AnyProfile fixture;
      double theta = 0.0;
      if (mech == MechanismId::EGFP) {
        fixture = theorem1_egfp_fixture(params, 1e-6);
        theta = 1e-6;
      } else {
        fixture = theorem1_scalar_fixture(params);
      }
      EquilibriumReport rep = verify_equilibrium(mech, inst, fixture, theta);
      if (!rep.is_equilibrium) {
        std::printf("  [1a] %s lambda=%g fixture not an equilibrium\n", mechanism_name(mech), lambda);
        return false;
      }
      bool bad_assignment = false;
      for (const auto& e : enumerate_equilibria(mech, inst, GridSpec{41, theta, 0}))
        if (e.assignment.sigma[0] == 1) bad_assignment = true;
      if (bad_assignment) {
        std::printf("  [1b] %s lambda=%g found an equilibrium inducing (2,1)\n",
                    mechanism_name(mech), lambda);
        return false;
      }
      double ratio = optimal_assignment(inst).value / rep.lw;
      if (std::abs(ratio - theorem1_ratio(params)) > 1e-9) {
        std::printf("  [1c] %s lambda=%g ratio %.12f vs closed form %.12f\n", mechanism_name(mech),
                    lambda, ratio, theorem1_ratio(params));
        return false;
      }
      double dt = seconds_since(t0);
      if (dt >= 1.0) {
        std::printf("  [1] %s lambda=%g took %.2fs (limit 1s)\n", mechanism_name(mech), lambda, dt);
        return false;
      }
    }
  }
  return true;
}

// ---- criterion 2: factor-2 bound over random enumerated equilibria ---------

bool criterion2() {
  auto t0 = Clock::now();
  int eq_count = 0, violations = 0;
  for (int seed = 1; seed <= 1000; ++seed) {
    int n = (seed % 10 < 7) ? 2 : 3;  // both sizes represented, n=3 dominates cost
    Instance inst = gen_random(seed, n);
    double opt = optimal_assignment(inst).value;
    for (auto mech : {MechanismId::GSP, MechanismId::VCG}) {
      for (const auto& e : enumerate_equilibria(mech, inst, GridSpec{20, 0.0, 0})) {
        ++eq_count;
        if (opt > 2.0 * e.lw + 1e-6 + n * 0.0) ++violations;
      }
    }
  }
  const double theta = 1e-9;
  for (int seed = 2001; seed <= 3000; ++seed) {
    Instance inst = gen_random(seed, 2);
    double opt = optimal_assignment(inst).value;
    for (const auto& e : enumerate_equilibria(MechanismId::EGFP, inst, GridSpec{15, theta, 0})) {
      ++eq_count;
      if (opt > 2.0 * e.lw + 1e-6 + 2 * theta) ++violations;
    }
  }
  double dt = seconds_since(t0);
  std::printf("  [2] %d equilibria checked, %d violations, %.1fs\n", eq_count, violations, dt);
  return eq_count > 0 && violations == 0 && dt < 120.0;
}

// ---- criterion 3: Hungarian vs brute-force oracle --------------------------

bool criterion3() {
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = gen_random(100 + trial, 2 + trial % 6);
    OptimalResult fast = optimal_assignment(inst);
    OptimalResult oracle = optimal_assignment_bruteforce(inst);
    if (std::abs(fast.value - oracle.value) > 1e-9) return false;
    if (fast.assignment.sigma != oracle.assignment.sigma) return false;
  }
  return true;
}

// ---- criterion 4: structured best response vs 10^4-point bid scan ----------

bool criterion4() {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    Instance inst = gen_random(40000 + trial, 2 + trial % 3);
    ScalarBidProfile bids = testing::random_no_over_profile(inst, rng);
    int player = trial % inst.n;
    for (auto mech : {MechanismId::GSP, MechanismId::VCG}) {
      Outcome cur = outcome(mech, inst, bids);
      auto devs = candidate_deviations_scalar(mech, inst, bids, player);
      double structured = best_feasible(devs).gain;
      int structured_rank = best_feasible(devs).target;
      double cap = std::min(inst.valuations[player], inst.budgets[player] / inst.ctrs[0]);
      double scan_best = kNegInf;
      std::vector<bool> rank_scanned(inst.n, false);
      for (int k = 0; k < 10000; ++k) {
        ScalarBidProfile dev = bids;
        dev.bids[player] = cap * k / 9999.0;
        Outcome out = outcome(mech, inst, dev);
        rank_scanned[out.assignment.sigma[player]] = true;
        scan_best = std::max(scan_best, out.utilities[player] - cur.utilities[player]);
      }
      if (structured < scan_best - 1e-9) return false;  // scan must never beat the structure
      // exact agreement whenever the structured target rank is reachable on the scan
      if (rank_scanned[structured_rank] && std::abs(structured - scan_best) > 1e-9) return false;
    }
  }
  return true;
}

// ---- criterion 5: VCG payments never exceed GSP payments -------------------

bool criterion5() {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    Instance inst = gen_random(50000 + trial, 2 + trial % 4);
    ScalarBidProfile bids = testing::random_scalar_profile(inst, rng, 12.0);
    Outcome g = gsp_outcome(inst, bids);
    Outcome v = vcg_outcome(inst, bids);
    for (int i = 0; i < inst.n; ++i)
      if (v.payments[i] > g.payments[i] + 1e-12 * (1.0 + g.payments[i])) return false;
  }
  return true;
}

// ---- criterion 6: VCG truthfulness dichotomy -------------------------------

bool criterion6() {
  // (a) budgets inactive: truthful bidding is a dominant-strategy equilibrium
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + trial % 4;
    Instance base = gen_random(60000 + trial, n);
    Instance inst = base;
    for (int i = 0; i < n; ++i) inst.budgets[i] = inst.ctrs[0] * inst.valuations[i] * 2.0 + 1.0;
    ScalarBidProfile truthful{inst.valuations};
    EquilibriumReport rep = verify_equilibrium(MechanismId::VCG, inst, truthful, 0.0);
    if (!rep.is_equilibrium) {
      std::printf("  [6a] truthful profile rejected at trial %d\n", trial);
      return false;
    }
    // dominant-strategy scan: with the others truthful, no bid beats truth
    double top = 2.0 * *std::max_element(inst.valuations.begin(), inst.valuations.end());
    for (int i = 0; i < n; ++i) {
      double u_truth = vcg_outcome(inst, truthful).utilities[i];
      for (int k = 0; k < 1000; ++k) {
        ScalarBidProfile dev = truthful;
        dev.bids[i] = top * k / 999.0;
        if (vcg_outcome(inst, dev).utilities[i] > u_truth + 1e-9) {
          std::printf("  [6a] player %d profits from bid %.6f at trial %d\n", i + 1,
                      dev.bids[i], trial);
          return false;
        }
      }
    }
  }
  // (b) with a binding budget, truthful bidding collapses to -inf and a
  // profitable deviation exists
  Instance inst = validate_instance({1.0, 0.1}, {10.0, 9.0}, {1.0, 100.0});
  ScalarBidProfile truthful{{10.0, 9.0}};
  Outcome out = vcg_outcome(inst, truthful);
  if (out.utilities[0] != kNegInf) return false;
  DeviationReport best = best_feasible(candidate_deviations_scalar(MechanismId::VCG, inst, truthful, 0));
  if (!best.feasible || std::abs(best.deviation_utility - 1.0) > 1e-12) return false;
  if (best.gain != kPosInf) return false;
  return true;
}

// ---- criterion 7: module-level property suites -----------------------------

bool criterion7() {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // EGFP losing-bid invariance
  for (int trial = 0; trial < 1200; ++trial) {
    Instance inst = gen_random(70000 + trial, 2 + trial % 3);
    MatrixBidProfile bids = testing::random_matrix_profile(inst, rng, 5.0);
    Outcome base = egfp_outcome(inst, bids);
    std::uniform_int_distribution<int> pick(0, inst.n - 1);
    int i = pick(rng), j = pick(rng);
    if (base.assignment.sigma[i] == j) continue;
    MatrixBidProfile zeroed = bids;
    zeroed.bids[i][j] = 0.0;
    Outcome out = egfp_outcome(inst, zeroed);
    if (out.assignment.sigma != base.assignment.sigma || out.payments != base.payments ||
        out.utilities != base.utilities)
      return false;
  }

  // ranking is a permutation with non-increasing bids; GSP payment chain is
  // non-increasing; last rank pays 0 under both scalar mechanisms
  for (int trial = 0; trial < 1000; ++trial) {
    Instance inst = gen_random(71000 + trial, 2 + trial % 4);
    ScalarBidProfile bids = testing::random_scalar_profile(inst, rng, 10.0);
    Assignment a = rank_by_bids(bids);
    std::vector<int> seen = a.sigma;
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < inst.n; ++i)
      if (seen[i] != i || a.pi[a.sigma[i]] != i) return false;
    Outcome g = gsp_outcome(inst, bids);
    for (int r = 0; r + 1 < inst.n; ++r) {
      if (bids.bids[a.pi[r]] < bids.bids[a.pi[r + 1]]) return false;
      if (g.payments[a.pi[r]] < g.payments[a.pi[r + 1]]) return false;
    }
    if (g.payments[a.pi[inst.n - 1]] != 0.0) return false;
    if (vcg_outcome(inst, bids).payments[a.pi[inst.n - 1]] != 0.0) return false;
  }

  // budget cutoff: -inf exactly when the payment exceeds the budget, with
  // both branches exercised
  int finite = 0, infinite = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Instance inst = gen_random(72000 + trial, 2 + trial % 3);
    ScalarBidProfile bids = testing::random_scalar_profile(inst, rng, 15.0);
    Outcome out = gsp_outcome(inst, bids);
    for (int i = 0; i < inst.n; ++i) {
      bool feasible = within_budget(out.payments[i], inst.budgets[i]);
      if (feasible != (out.utilities[i] != kNegInf)) return false;
      (out.utilities[i] == kNegInf ? infinite : finite)++;
    }
  }
  if (finite == 0 || infinite == 0) return false;

  // individual rationality inside the no-over strategy space
  for (int trial = 0; trial < 1000; ++trial) {
    Instance inst = gen_random(73000 + trial, 2 + trial % 3);
    ScalarBidProfile bids = testing::random_no_over_profile(inst, rng);
    for (Outcome out : {gsp_outcome(inst, bids), vcg_outcome(inst, bids)})
      for (double u : out.utilities)
        if (!(u >= -1e-12)) return false;
  }
  return true;
}

}  // namespace

int main() {
  int fails = 0;
  check(criterion1(), fails, "1", "lower-bound family: fixture equilibria, no (2,1) equilibrium, exact LW ratio");
  check(criterion2(), fails, "2", "factor-2 welfare bound over >=1000 random instances");
  check(criterion3(), fails, "3", "optimal assignment matches the brute-force oracle (value and tie-break)");
  check(criterion4(), fails, "4", "structured best responses dominate and agree with 10^4-point bid scans");
  check(criterion5(), fails, "5", "VCG payments never exceed GSP payments");
  check(criterion6(), fails, "6", "VCG truthfulness: dominant without budgets, broken with budgets");
  check(criterion7(), fails, "7", "module property suites (losing-bid invariance, ranking, cutoffs, IR)");
  if (fails == 0) std::printf("all acceptance criteria passed\n");
  return fails;
}
