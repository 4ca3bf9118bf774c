#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "posauct/model.hpp"

namespace posauct {

enum class MechanismId { GSP, VCG, EGFP };

const char* mechanism_name(MechanismId m);
MechanismId mechanism_from_name(const std::string& name);  // ParseError on unknown

/// Relative tolerance for the payment <= budget comparison; absorbs
/// floating-point accumulation in the VCG sum.
struct FeasibilityConfig {
  double budget_rel_tol = 1e-12;
};

inline bool within_budget(double payment, double budget, const FeasibilityConfig& cfg = {}) {
  double slack = cfg.budget_rel_tol * std::max(1.0, budget < 0 ? -budget : budget);
  return payment <= budget + slack;
}

/// Clarke payment of the player at `rank`, given the bid occupying each
/// position below it. bid_at_position[j] for j > rank must hold the bid of the
/// player assigned to position j.
double vcg_rank_payment(const std::vector<double>& ctrs,
                        const std::vector<double>& bid_at_position, int rank);

Outcome gsp_outcome(const Instance& inst, const ScalarBidProfile& bids,
                    const FeasibilityConfig& cfg = {});
Outcome vcg_outcome(const Instance& inst, const ScalarBidProfile& bids,
                    const FeasibilityConfig& cfg = {});
Outcome egfp_outcome(const Instance& inst, const MatrixBidProfile& bids,
                     const FeasibilityConfig& cfg = {});

/// Per-player no-over compliance at the assignment induced by the bids:
/// ctr_{sigma_i} * b_i <= min{ctr_{sigma_i} * v_i, c_i}. Advisory; profiles
/// violating it still evaluate mechanically.
std::vector<bool> check_no_over(const Instance& inst, const ScalarBidProfile& bids,
                                const FeasibilityConfig& cfg = {});

using AnyProfile = std::variant<ScalarBidProfile, MatrixBidProfile>;

Outcome outcome(MechanismId mech, const Instance& inst, const AnyProfile& bids,
                const FeasibilityConfig& cfg = {});

}  // namespace posauct
