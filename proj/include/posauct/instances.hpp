#pragma once

#include <cstdint>
#include <string>

#include "posauct/model.hpp"

namespace posauct {

/// Two-player family with v = (lambda, 1), c = (1+eps, 1), ctrs = (1, 1/lambda).
/// Its optimal assignment is (2,1) with LW 2, while every equilibrium induces
/// (1,2); the LW ratio 2*lambda/((1+eps)*lambda+1) tends to 2.
struct Theorem1Params {
  double lambda = 100.0;  // > 2
  double eps = 0.01;      // in (0, 1/2)
};

Instance gen_theorem1(const Theorem1Params& p);

/// The family's reference equilibrium profiles: b = (1+eps, 1) for GSP/VCG,
/// and first-position-only bids (1+delta, 0) / (1, 0) for EGFP.
ScalarBidProfile theorem1_scalar_fixture(const Theorem1Params& p);
MatrixBidProfile theorem1_egfp_fixture(const Theorem1Params& p, double delta);

/// Closed-form LW ratio of the family: 2*lambda / ((1+eps)*lambda + 1).
double theorem1_ratio(const Theorem1Params& p);

struct RandomParams {
  double ctr_max = 1.0;
  double value_max = 10.0;
  // Budgets drawn from (0, budget_scale * ctr_1 * v_i], straddling the
  // binding threshold so both budget-capped and uncapped players occur.
  double budget_scale = 2.0;
};

Instance gen_random(std::uint64_t seed, int n, const RandomParams& params = {});

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace posauct
