#pragma once

#include "posauct/model.hpp"

namespace posauct {

struct OptimalResult {
  Assignment assignment;
  double value = 0.0;
};

struct WelfareReport {
  double lw = 0.0;
  double sw = 0.0;
  double opt_lw = 0.0;
  Assignment opt_assignment;
};

/// min{ctr_j * v_i, c_i}, the matching weight of player i at position j.
inline double liquid_value(const Instance& inst, int player, int position) {
  double v = inst.ctrs[position] * inst.valuations[player];
  return v < inst.budgets[player] ? v : inst.budgets[player];
}

double liquid_welfare(const Instance& inst, const Assignment& a);
double social_welfare(const Instance& inst, const Assignment& a);

/// Max-weight assignment under liquid-value weights (Hungarian, O(n^3) core),
/// with ties between optima broken to the lexicographically smallest sigma.
OptimalResult optimal_assignment(const Instance& inst);

/// Exhaustive oracle over all n! permutations; same tie-break. n <= 8.
OptimalResult optimal_assignment_bruteforce(const Instance& inst);

WelfareReport welfare_report(const Instance& inst, const Assignment& a);

}  // namespace posauct
