#pragma once

#include <vector>

#include "posauct/mechanisms.hpp"
#include "posauct/welfare.hpp"

namespace posauct {

/// One candidate unilateral deviation for a player.
/// target is a rank for GSP/VCG and a position for EGFP (0-indexed).
/// required_bid is the infimum bid attaining the target; required_attained says
/// whether the index tie-break lets the player bid exactly that infimum.
/// deviation_utility is exact for GSP/VCG and a supremum for EGFP.
struct DeviationReport {
  int player = -1;
  int target = -1;
  double required_bid = 0.0;
  bool required_attained = false;
  double deviation_utility = kNegInf;
  double gain = kNegInf;  // deviation_utility - current utility (extended reals)
  bool feasible = false;
};

struct EquilibriumReport {
  MechanismId mech = MechanismId::GSP;
  AnyProfile profile;
  bool is_equilibrium = false;
  double theta = 0.0;
  std::vector<DeviationReport> best_deviation;  // one per player (best feasible)
  Assignment assignment;
  double lw = 0.0;
};

/// Exact best responses for GSP/VCG. Payments at a target rank depend only on
/// opponents' bids, so the utility of every rank is attained exactly by any
/// feasible bid in the rank's attaining interval; no epsilon is needed.
/// Deviations are restricted to the no-over strategy space
/// (b <= v_i and ctr_r * b <= c_i); ranks unreachable within it are infeasible.
std::vector<DeviationReport> candidate_deviations_scalar(MechanismId mech, const Instance& inst,
                                                         const ScalarBidProfile& bids, int player,
                                                         const FeasibilityConfig& cfg = {});

/// Single-position deviations for EGFP. Losing bids never affect any step's
/// winner, so bidding only for the target position reaches every
/// (position, payment) outcome that any deviation vector reaches. Utilities
/// are suprema (first-price payments make best responses limits).
std::vector<DeviationReport> candidate_deviations_egfp(const Instance& inst,
                                                       const MatrixBidProfile& bids, int player,
                                                       const FeasibilityConfig& cfg = {});

/// theta = 0 gives exact pure Nash for GSP/VCG; EGFP needs theta > 0
/// (theta-equilibrium) since its best responses are suprema.
/// Throws ProfileNotNoOverCompliant for GSP/VCG profiles outside the no-over
/// strategy space.
EquilibriumReport verify_equilibrium(MechanismId mech, const Instance& inst,
                                     const AnyProfile& bids, double theta,
                                     const FeasibilityConfig& cfg = {});

struct GridSpec {
  int levels_per_player = 20;
  double theta = 0.0;
  int jobs = 0;  // 0 = hardware concurrency
};

/// Scans a finite bid grid but verifies each candidate with exact off-grid
/// deviations, so every reported profile is a genuine (theta-)equilibrium of
/// the continuous game. The grid can miss equilibria; results are a subset.
/// GSP/VCG: per-player scalar grids over [0, min{v_i, c_i/ctr_1}] plus every
/// opponent-relevant threshold. EGFP: profiles with at most one positive bid
/// per player. Guards: n <= 4 scalar, n <= 3 EGFP.
std::vector<EquilibriumReport> enumerate_equilibria(MechanismId mech, const Instance& inst,
                                                    const GridSpec& grid,
                                                    const FeasibilityConfig& cfg = {});

struct LpoaReport {
  double opt_lw = 0.0;
  double min_eq_lw = 0.0;
  double max_eq_lw = 0.0;
  double lpoa = 0.0;  // opt_lw / min_eq_lw (lower bound on the true value)
  double lpos = 0.0;  // opt_lw / max_eq_lw (upper bound on the true value)
  int equilibria_found = 0;
  GridSpec grid;
};

LpoaReport lpoa_report(MechanismId mech, const Instance& inst, const GridSpec& grid,
                       const FeasibilityConfig& cfg = {});

/// The grid of bid levels enumerate_equilibria uses for one player (exposed
/// for tests and the CLI's grid description).
std::vector<double> scalar_bid_levels(const Instance& inst, int player, int levels_per_player);
std::vector<double> egfp_bid_levels(const Instance& inst, int player, int levels_per_player);

}  // namespace posauct
