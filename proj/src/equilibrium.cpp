#include "posauct/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>

namespace posauct {

namespace {

// Absorbs ulp-level noise in gain comparisons without admitting real
// theta-violations (grid gains are either ~0 or macroscopically positive).
constexpr double kGainSlack = 1e-9;

double ext_sub(double a, double b) {
  if (a == kNegInf) return b == kNegInf ? 0.0 : kNegInf;
  if (b == kNegInf) return kPosInf;
  return a - b;
}

struct OpponentBid {
  double bid;
  int idx;
};

std::vector<OpponentBid> sorted_opponents(const ScalarBidProfile& bids, int player) {
  std::vector<OpponentBid> opp;
  opp.reserve(bids.bids.size() - 1);
  for (int k = 0; k < static_cast<int>(bids.bids.size()); ++k)
    if (k != player) opp.push_back({bids.bids[k], k});
  std::sort(opp.begin(), opp.end(), [](const OpponentBid& a, const OpponentBid& b) {
    if (a.bid != b.bid) return a.bid > b.bid;
    return a.idx < b.idx;
  });
  return opp;
}

// Rank the deviating player would get at bid b against fixed opponents.
int rank_at_bid(double b, int player, const std::vector<OpponentBid>& opp) {
  int r = 0;
  for (const auto& o : opp)
    if (outranks(o.bid, o.idx, b, player)) ++r;
  return r;
}

// Representative bids covering every attainable rank in [0, cap]: the
// endpoints, each opponent bid, and midpoints between consecutive values
// (rank_at_bid is a step function with breakpoints at opponent bids).
std::vector<double> rank_probe_bids(double cap, const std::vector<OpponentBid>& opp) {
  std::vector<double> vals{0.0, cap};
  for (const auto& o : opp)
    if (o.bid <= cap) vals.push_back(o.bid);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<double> probes = vals;
  for (std::size_t k = 0; k + 1 < vals.size(); ++k) probes.push_back(0.5 * (vals[k] + vals[k + 1]));
  return probes;
}

DeviationReport scalar_deviation(MechanismId mech, const Instance& inst, int player, int r,
                                 const std::vector<OpponentBid>& opp, double u_cur,
                                 const FeasibilityConfig& cfg) {
  const int n = inst.n;
  DeviationReport rep;
  rep.player = player;
  rep.target = r;
  rep.required_bid = (r < n - 1) ? opp[r].bid : 0.0;  // infimum of the attaining interval

  double cap = std::min(inst.valuations[player], inst.budgets[player] / inst.ctrs[r]);
  rep.required_attained =
      rep.required_bid <= cap && rank_at_bid(rep.required_bid, player, opp) == r;

  bool attainable = rep.required_attained;
  if (!attainable) {
    for (double b : rank_probe_bids(cap, opp)) {
      if (rank_at_bid(b, player, opp) == r) { attainable = true; break; }
    }
  }
  if (!attainable) return rep;

  double pay;
  if (mech == MechanismId::GSP) {
    pay = inst.ctrs[r] * ((r + 1 < n) ? opp[r].bid : 0.0);
  } else {
    std::vector<double> bid_at_position(n, 0.0);
    for (int j = 0; j < n; ++j) {
      if (j < r) bid_at_position[j] = opp[j].bid;
      else if (j > r) bid_at_position[j] = opp[j - 1].bid;
    }
    pay = vcg_rank_payment(inst.ctrs, bid_at_position, r);
  }
  // Under no-over the payment is dominated by ctr_r * bid <= c_i; the guard
  // keeps the report honest near the tolerance boundary.
  if (!within_budget(pay, inst.budgets[player], cfg)) return rep;
  rep.feasible = true;
  rep.deviation_utility = inst.ctrs[r] * inst.valuations[player] - pay;
  rep.gain = ext_sub(rep.deviation_utility, u_cur);
  return rep;
}

DeviationReport egfp_deviation(const Instance& inst, const MatrixBidProfile& bids, int player,
                               int target, double u_cur, const FeasibilityConfig& cfg) {
  const int n = inst.n;
  DeviationReport rep;
  rep.player = player;
  rep.target = target;

  // Replay the sequential allocation with the deviator bidding 0 everywhere
  // before the target position.
  std::vector<bool> assigned(n, false);
  assigned[player] = true;  // excluded from the opponent argmax below
  for (int step = 0; step < target; ++step) {
    int k = -1;
    for (int i = 0; i < n; ++i) {
      if (assigned[i]) continue;
      if (k < 0 || bids.bids[i][step] > bids.bids[k][step]) k = i;
    }
    // A zero bid still wins the step when every remaining opponent bids 0 and
    // has a higher index; the target is then unreachable.
    if (bids.bids[k][step] == 0.0 && player < k) return rep;
    assigned[k] = true;
  }
  int k = -1;
  for (int i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    if (k < 0 || bids.bids[i][target] > bids.bids[k][target]) k = i;
  }
  double t = (k < 0) ? 0.0 : bids.bids[k][target];
  rep.required_bid = t;
  rep.required_attained = (k < 0) || player < k;
  rep.deviation_utility = inst.ctrs[target] * inst.valuations[player] - t;  // supremum
  rep.feasible = within_budget(t, inst.budgets[player], cfg);
  if (rep.feasible) rep.gain = ext_sub(rep.deviation_utility, u_cur);
  return rep;
}

void require_no_over(const Instance& inst, const ScalarBidProfile& bids,
                     const FeasibilityConfig& cfg) {
  auto ok = check_no_over(inst, bids, cfg);
  if (std::find(ok.begin(), ok.end(), false) != ok.end())
    throw Error(Errc::ProfileNotNoOverCompliant,
                "profile violates the no-over assumption; not in the GSP/VCG strategy space");
}

// Early-exit check used by grid scanning: rejects as soon as one player has a
// feasible deviation gaining more than theta.
bool passes_equilibrium(MechanismId mech, const Instance& inst, const AnyProfile& bids,
                        double theta, const FeasibilityConfig& cfg) {
  const int n = inst.n;
  if (mech == MechanismId::EGFP) {
    const auto& m = std::get<MatrixBidProfile>(bids);
    const Outcome out = egfp_outcome(inst, m, cfg);
    for (int i = 0; i < n; ++i)
      for (int target = 0; target < n; ++target) {
        DeviationReport d = egfp_deviation(inst, m, i, target, out.utilities[i], cfg);
        if (d.feasible && d.gain > theta + kGainSlack) return false;
      }
    return true;
  }
  const auto& s = std::get<ScalarBidProfile>(bids);
  const Outcome out = mech == MechanismId::GSP ? gsp_outcome(inst, s, cfg)
                                               : vcg_outcome(inst, s, cfg);
  for (int i = 0; i < n; ++i) {
    const auto opp = sorted_opponents(s, i);
    for (int r = 0; r < n; ++r) {
      DeviationReport d = scalar_deviation(mech, inst, i, r, opp, out.utilities[i], cfg);
      if (d.feasible && d.gain > theta + kGainSlack) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<DeviationReport> candidate_deviations_scalar(MechanismId mech, const Instance& inst,
                                                         const ScalarBidProfile& bids, int player,
                                                         const FeasibilityConfig& cfg) {
  if (mech == MechanismId::EGFP)
    throw Error(Errc::ProfileShapeMismatch, "scalar deviations apply to GSP/VCG only");
  validate_scalar_profile(inst, bids);
  const Outcome cur = mech == MechanismId::GSP ? gsp_outcome(inst, bids, cfg)
                                               : vcg_outcome(inst, bids, cfg);
  const auto opp = sorted_opponents(bids, player);
  std::vector<DeviationReport> reports;
  reports.reserve(inst.n);
  for (int r = 0; r < inst.n; ++r)
    reports.push_back(scalar_deviation(mech, inst, player, r, opp, cur.utilities[player], cfg));
  return reports;
}

std::vector<DeviationReport> candidate_deviations_egfp(const Instance& inst,
                                                       const MatrixBidProfile& bids, int player,
                                                       const FeasibilityConfig& cfg) {
  validate_matrix_profile(inst, bids);
  const Outcome cur = egfp_outcome(inst, bids, cfg);
  std::vector<DeviationReport> reports;
  reports.reserve(inst.n);
  for (int target = 0; target < inst.n; ++target)
    reports.push_back(egfp_deviation(inst, bids, player, target, cur.utilities[player], cfg));
  return reports;
}

EquilibriumReport verify_equilibrium(MechanismId mech, const Instance& inst,
                                     const AnyProfile& bids, double theta,
                                     const FeasibilityConfig& cfg) {
  EquilibriumReport rep;
  rep.mech = mech;
  rep.profile = bids;
  rep.theta = theta;
  rep.is_equilibrium = true;

  const int n = inst.n;
  std::vector<std::vector<DeviationReport>> all(n);
  if (mech == MechanismId::EGFP) {
    const auto* m = std::get_if<MatrixBidProfile>(&bids);
    if (!m) throw Error(Errc::ProfileShapeMismatch, "EGFP requires a matrix bid profile");
    rep.assignment = egfp_outcome(inst, *m, cfg).assignment;
    for (int i = 0; i < n; ++i) all[i] = candidate_deviations_egfp(inst, *m, i, cfg);
  } else {
    const auto* s = std::get_if<ScalarBidProfile>(&bids);
    if (!s) throw Error(Errc::ProfileShapeMismatch, "GSP/VCG require a scalar bid profile");
    require_no_over(inst, *s, cfg);
    rep.assignment = rank_by_bids(*s);
    for (int i = 0; i < n; ++i) all[i] = candidate_deviations_scalar(mech, inst, *s, i, cfg);
  }
  for (int i = 0; i < n; ++i) {
    DeviationReport best;
    best.player = i;
    for (const auto& d : all[i])
      if (d.feasible && (!best.feasible || d.gain > best.gain)) best = d;
    if (best.feasible && best.gain > theta + kGainSlack) rep.is_equilibrium = false;
    rep.best_deviation.push_back(best);
  }
  rep.lw = liquid_welfare(inst, rep.assignment);
  return rep;
}

std::vector<double> scalar_bid_levels(const Instance& inst, int player, int levels_per_player) {
  double cap = std::min(inst.valuations[player], inst.budgets[player] / inst.ctrs[0]);
  std::vector<double> levels;
  if (levels_per_player <= 1) {
    levels.push_back(0.0);
  } else {
    for (int k = 0; k < levels_per_player; ++k)
      levels.push_back(cap * k / (levels_per_player - 1));
  }
  // Opponent-relevant thresholds: every player's cap at every rank, so
  // threshold-supported equilibria (e.g. the two-player lower-bound family)
  // lie on-grid.
  for (int j = 0; j < inst.n; ++j)
    for (int r = 0; r < inst.n; ++r) {
      double t = std::min(inst.valuations[j], inst.budgets[j] / inst.ctrs[r]);
      if (t <= cap) levels.push_back(t);
    }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

std::vector<double> egfp_bid_levels(const Instance& inst, int player, int levels_per_player) {
  double cap = inst.budgets[player];
  std::vector<double> levels;
  if (levels_per_player <= 1) {
    levels.push_back(0.0);
  } else {
    for (int k = 0; k < levels_per_player; ++k)
      levels.push_back(cap * k / (levels_per_player - 1));
  }
  for (int j = 0; j < inst.n; ++j) {
    if (inst.budgets[j] <= cap) levels.push_back(inst.budgets[j]);
    for (int r = 0; r < inst.n; ++r) {
      double t = std::min(inst.ctrs[r] * inst.valuations[j], inst.budgets[j]);
      if (t <= cap) levels.push_back(t);
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

namespace {

int effective_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Scans strategy-index space [0, total) in parallel chunks; decode() builds
// the profile for one flat index. Results keep flat-index order, so the
// output is deterministic regardless of the worker count.
template <typename DecodeFn>
std::vector<EquilibriumReport> scan_profiles(MechanismId mech, const Instance& inst,
                                             std::uint64_t total, const GridSpec& grid,
                                             const FeasibilityConfig& cfg, DecodeFn decode) {
  const int jobs = static_cast<int>(
      std::min<std::uint64_t>(effective_jobs(grid.jobs), std::max<std::uint64_t>(total, 1)));
  std::vector<std::vector<EquilibriumReport>> partial(jobs);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      std::uint64_t lo = total * w / jobs, hi = total * (w + 1) / jobs;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        AnyProfile profile = decode(idx);
        if (const auto* s = std::get_if<ScalarBidProfile>(&profile)) {
          auto ok = check_no_over(inst, *s, cfg);
          if (std::find(ok.begin(), ok.end(), false) != ok.end()) continue;
        }
        if (!passes_equilibrium(mech, inst, profile, grid.theta, cfg)) continue;
        partial[w].push_back(verify_equilibrium(mech, inst, profile, grid.theta, cfg));
      }
    });
  }
  for (auto& t : workers) t.join();
  std::vector<EquilibriumReport> result;
  for (auto& p : partial)
    for (auto& r : p) result.push_back(std::move(r));
  return result;
}

}  // namespace

std::vector<EquilibriumReport> enumerate_equilibria(MechanismId mech, const Instance& inst,
                                                    const GridSpec& grid,
                                                    const FeasibilityConfig& cfg) {
  const int n = inst.n;
  if (mech == MechanismId::EGFP) {
    if (n > 3) throw Error(Errc::TooLarge, "EGFP enumeration limited to n <= 3");
    // One strategy per (position, positive level), plus the all-zero vector.
    // Losing bids are outcome-irrelevant and the constructed equilibria have
    // this single-positive-bid shape; completeness caveat applies.
    std::vector<std::vector<double>> levels(n);
    std::vector<std::uint64_t> strategies(n);
    for (int i = 0; i < n; ++i) {
      for (double b : egfp_bid_levels(inst, i, grid.levels_per_player))
        if (b > 0.0) levels[i].push_back(b);
      strategies[i] = 1 + static_cast<std::uint64_t>(n) * levels[i].size();
    }
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= strategies[i];
    auto decode = [&](std::uint64_t idx) -> AnyProfile {
      MatrixBidProfile p;
      p.bids.assign(n, std::vector<double>(n, 0.0));
      for (int i = 0; i < n; ++i) {
        std::uint64_t s = idx % strategies[i];
        idx /= strategies[i];
        if (s > 0) {
          --s;
          int pos = static_cast<int>(s / levels[i].size());
          p.bids[i][pos] = levels[i][s % levels[i].size()];
        }
      }
      return p;
    };
    return scan_profiles(mech, inst, total, grid, cfg, decode);
  }

  if (n > 4) throw Error(Errc::TooLarge, "scalar enumeration limited to n <= 4");
  std::vector<std::vector<double>> levels(n);
  for (int i = 0; i < n; ++i) levels[i] = scalar_bid_levels(inst, i, grid.levels_per_player);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= levels[i].size();
  auto decode = [&](std::uint64_t idx) -> AnyProfile {
    ScalarBidProfile p;
    p.bids.resize(n);
    for (int i = 0; i < n; ++i) {
      p.bids[i] = levels[i][idx % levels[i].size()];
      idx /= levels[i].size();
    }
    return p;
  };
  return scan_profiles(mech, inst, total, grid, cfg, decode);
}

LpoaReport lpoa_report(MechanismId mech, const Instance& inst, const GridSpec& grid,
                       const FeasibilityConfig& cfg) {
  auto eqs = enumerate_equilibria(mech, inst, grid, cfg);
  if (eqs.empty())
    throw Error(Errc::NoEquilibriumFound, "grid enumeration found no equilibrium");
  LpoaReport rep;
  rep.grid = grid;
  rep.opt_lw = optimal_assignment(inst).value;
  rep.min_eq_lw = kPosInf;
  rep.max_eq_lw = kNegInf;
  for (const auto& e : eqs) {
    rep.min_eq_lw = std::min(rep.min_eq_lw, e.lw);
    rep.max_eq_lw = std::max(rep.max_eq_lw, e.lw);
  }
  rep.lpoa = rep.opt_lw / rep.min_eq_lw;
  rep.lpos = rep.opt_lw / rep.max_eq_lw;
  rep.equilibria_found = static_cast<int>(eqs.size());
  return rep;
}

}  // namespace posauct
