#pragma once

#include <limits>
#include <vector>

#include "posauct/errors.hpp"

namespace posauct {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

/// A position game: n players competing for n positions.
/// ctrs are non-increasing; valuations are per click; budgets cap total payments.
/// Players and positions are 0-indexed internally, 1-indexed in user-facing output.
struct Instance {
  int n = 0;
  std::vector<double> ctrs;
  std::vector<double> valuations;
  std::vector<double> budgets;
};

struct ScalarBidProfile {
  std::vector<double> bids;
};

/// bids[i][j] = player i's bid for position j.
struct MatrixBidProfile {
  std::vector<std::vector<double>> bids;
};

/// sigma[i] = position of player i; pi[j] = player at position j.
/// Always kept mutually inverse.
struct Assignment {
  std::vector<int> sigma;
  std::vector<int> pi;
};

inline Assignment assignment_from_pi(std::vector<int> pi) {
  Assignment a;
  a.pi = std::move(pi);
  a.sigma.assign(a.pi.size(), -1);
  for (int j = 0; j < static_cast<int>(a.pi.size()); ++j) a.sigma[a.pi[j]] = j;
  return a;
}

inline Assignment assignment_from_sigma(std::vector<int> sigma) {
  Assignment a;
  a.sigma = std::move(sigma);
  a.pi.assign(a.sigma.size(), -1);
  for (int i = 0; i < static_cast<int>(a.sigma.size()); ++i) a.pi[a.sigma[i]] = i;
  return a;
}

struct Outcome {
  Assignment assignment;
  std::vector<double> payments;   // totals, not per click
  std::vector<double> utilities;  // finite or -inf (budget exceeded)
};

Instance validate_instance(std::vector<double> ctrs, std::vector<double> valuations,
                           std::vector<double> budgets);

void validate_scalar_profile(const Instance& inst, const ScalarBidProfile& bids);
void validate_matrix_profile(const Instance& inst, const MatrixBidProfile& bids);

/// Sort players by bid, non-increasing; ties go to the lower player index.
Assignment rank_by_bids(const ScalarBidProfile& bids);

/// True when player i at bid b outranks player k at bid bk.
inline bool outranks(double b, int i, double bk, int k) {
  return b > bk || (b == bk && i < k);
}

}  // namespace posauct
