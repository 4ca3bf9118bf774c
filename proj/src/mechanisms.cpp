#include "posauct/mechanisms.hpp"

#include <algorithm>
#include <cctype>

namespace posauct {

const char* mechanism_name(MechanismId m) {
  switch (m) {
    case MechanismId::GSP: return "gsp";
    case MechanismId::VCG: return "vcg";
    case MechanismId::EGFP: return "egfp";
  }
  return "?";
}

MechanismId mechanism_from_name(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "gsp") return MechanismId::GSP;
  if (s == "vcg") return MechanismId::VCG;
  if (s == "egfp") return MechanismId::EGFP;
  throw Error(Errc::ParseError, "unknown mechanism '" + name + "' (expected gsp, vcg or egfp)");
}

double vcg_rank_payment(const std::vector<double>& ctrs,
                        const std::vector<double>& bid_at_position, int rank) {
  const int n = static_cast<int>(ctrs.size());
  double p = 0.0;
  for (int j = rank + 1; j < n; ++j) p += bid_at_position[j] * (ctrs[j - 1] - ctrs[j]);
  return p;
}

namespace {

// Fills utilities from payments with the -inf budget cutoff.
void finish_utilities(const Instance& inst, Outcome& out, const FeasibilityConfig& cfg) {
  const int n = inst.n;
  out.utilities.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (within_budget(out.payments[i], inst.budgets[i], cfg))
      out.utilities[i] = inst.ctrs[out.assignment.sigma[i]] * inst.valuations[i] - out.payments[i];
    else
      out.utilities[i] = kNegInf;
  }
}

}  // namespace

Outcome gsp_outcome(const Instance& inst, const ScalarBidProfile& bids,
                    const FeasibilityConfig& cfg) {
  validate_scalar_profile(inst, bids);
  const int n = inst.n;
  Outcome out;
  out.assignment = rank_by_bids(bids);
  out.payments.assign(n, 0.0);
  for (int r = 0; r < n; ++r) {
    // Next-highest bid per click; the last rank pays the implicit (n+1)-th bid of 0.
    double next = (r + 1 < n) ? bids.bids[out.assignment.pi[r + 1]] : 0.0;
    out.payments[out.assignment.pi[r]] = inst.ctrs[r] * next;
  }
  finish_utilities(inst, out, cfg);
  return out;
}

Outcome vcg_outcome(const Instance& inst, const ScalarBidProfile& bids,
                    const FeasibilityConfig& cfg) {
  validate_scalar_profile(inst, bids);
  const int n = inst.n;
  Outcome out;
  out.assignment = rank_by_bids(bids);
  out.payments.assign(n, 0.0);
  std::vector<double> bid_at_position(n);
  for (int j = 0; j < n; ++j) bid_at_position[j] = bids.bids[out.assignment.pi[j]];
  for (int r = 0; r < n; ++r)
    out.payments[out.assignment.pi[r]] = vcg_rank_payment(inst.ctrs, bid_at_position, r);
  finish_utilities(inst, out, cfg);
  return out;
}

Outcome egfp_outcome(const Instance& inst, const MatrixBidProfile& bids,
                     const FeasibilityConfig& cfg) {
  validate_matrix_profile(inst, bids);
  const int n = inst.n;
  Outcome out;
  out.payments.assign(n, 0.0);
  std::vector<int> pi(n, -1);
  std::vector<bool> assigned(n, false);
  for (int j = 0; j < n; ++j) {
    int winner = -1;
    for (int i = 0; i < n; ++i) {
      if (assigned[i]) continue;
      if (winner < 0 || bids.bids[i][j] > bids.bids[winner][j]) winner = i;
    }
    assigned[winner] = true;
    pi[j] = winner;
    out.payments[winner] = bids.bids[winner][j];
  }
  out.assignment = assignment_from_pi(std::move(pi));
  finish_utilities(inst, out, cfg);
  return out;
}

std::vector<bool> check_no_over(const Instance& inst, const ScalarBidProfile& bids,
                                const FeasibilityConfig& cfg) {
  validate_scalar_profile(inst, bids);
  const Assignment a = rank_by_bids(bids);
  std::vector<bool> ok(inst.n, true);
  for (int i = 0; i < inst.n; ++i) {
    double alpha = inst.ctrs[a.sigma[i]];
    double lhs = alpha * bids.bids[i];
    double rhs = std::min(alpha * inst.valuations[i], inst.budgets[i]);
    double slack = cfg.budget_rel_tol * std::max(1.0, rhs);
    ok[i] = lhs <= rhs + slack;
  }
  return ok;
}

Outcome outcome(MechanismId mech, const Instance& inst, const AnyProfile& bids,
                const FeasibilityConfig& cfg) {
  if (mech == MechanismId::EGFP) {
    const auto* m = std::get_if<MatrixBidProfile>(&bids);
    if (!m) throw Error(Errc::ProfileShapeMismatch, "EGFP requires a matrix bid profile");
    return egfp_outcome(inst, *m, cfg);
  }
  const auto* s = std::get_if<ScalarBidProfile>(&bids);
  if (!s) throw Error(Errc::ProfileShapeMismatch, "GSP/VCG require a scalar bid profile");
  return mech == MechanismId::GSP ? gsp_outcome(inst, *s, cfg) : vcg_outcome(inst, *s, cfg);
}

}  // namespace posauct
