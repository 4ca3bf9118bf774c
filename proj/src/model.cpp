#include "posauct/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace posauct {

namespace {

void require_positive_finite(const std::vector<double>& xs, const char* what) {
  for (double x : xs) {
    if (!(x > 0.0) || !std::isfinite(x))
      throw Error(Errc::NonPositiveEntry, std::string(what) + " entries must be strictly positive and finite");
  }
}

}  // namespace

Instance validate_instance(std::vector<double> ctrs, std::vector<double> valuations,
                           std::vector<double> budgets) {
  const auto n = ctrs.size();
  if (n == 0 || valuations.size() != n || budgets.size() != n)
    throw Error(Errc::LengthMismatch, "ctrs, valuations and budgets must have equal nonzero length");
  require_positive_finite(ctrs, "ctr");
  require_positive_finite(valuations, "valuation");
  require_positive_finite(budgets, "budget");
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (ctrs[j] < ctrs[j + 1])
      throw Error(Errc::CtrsNotSorted, "ctrs must be non-increasing");
  }
  Instance inst;
  inst.n = static_cast<int>(n);
  inst.ctrs = std::move(ctrs);
  inst.valuations = std::move(valuations);
  inst.budgets = std::move(budgets);
  return inst;
}

void validate_scalar_profile(const Instance& inst, const ScalarBidProfile& bids) {
  if (static_cast<int>(bids.bids.size()) != inst.n)
    throw Error(Errc::LengthMismatch, "bid profile length does not match instance");
  for (double b : bids.bids) {
    if (!(b >= 0.0) || !std::isfinite(b))
      throw Error(Errc::NonPositiveEntry, "bids must be finite and non-negative");
  }
}

void validate_matrix_profile(const Instance& inst, const MatrixBidProfile& bids) {
  if (static_cast<int>(bids.bids.size()) != inst.n)
    throw Error(Errc::LengthMismatch, "bid matrix row count does not match instance");
  for (const auto& row : bids.bids) {
    if (static_cast<int>(row.size()) != inst.n)
      throw Error(Errc::LengthMismatch, "bid matrix must be n x n");
    for (double b : row) {
      if (!(b >= 0.0) || !std::isfinite(b))
        throw Error(Errc::NonPositiveEntry, "bids must be finite and non-negative");
    }
  }
}

Assignment rank_by_bids(const ScalarBidProfile& bids) {
  const int n = static_cast<int>(bids.bids.size());
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::sort(pi.begin(), pi.end(), [&](int a, int b) {
    if (bids.bids[a] != bids.bids[b]) return bids.bids[a] > bids.bids[b];
    return a < b;
  });
  return assignment_from_pi(std::move(pi));
}

}  // namespace posauct
