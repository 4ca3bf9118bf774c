#include "posauct/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace posauct {

double liquid_welfare(const Instance& inst, const Assignment& a) {
  double total = 0.0;
  for (int i = 0; i < inst.n; ++i) total += liquid_value(inst, i, a.sigma[i]);
  return total;
}

double social_welfare(const Instance& inst, const Assignment& a) {
  double total = 0.0;
  for (int i = 0; i < inst.n; ++i) total += inst.ctrs[a.sigma[i]] * inst.valuations[i];
  return total;
}

namespace {

// Jonker-Volgenant style O(n^3) min-cost assignment on a square matrix.
// Returns rowsol[i] = column assigned to row i.
double hungarian_min(const std::vector<std::vector<double>>& cost, std::vector<int>& rowsol) {
  const int n = static_cast<int>(cost.size());
  rowsol.assign(n, -1);
  if (n == 0) return 0.0;
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, std::numeric_limits<double>::infinity());
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      double delta = std::numeric_limits<double>::infinity();
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) { minv[j] = cur; way[j] = j0; }
        if (minv[j] < delta) { delta = minv[j]; j1 = j; }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) { u[p[j]] += delta; v[j] -= delta; }
        else minv[j] -= delta;
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  double total = 0.0;
  for (int j = 1; j <= n; ++j) {
    if (p[j]) rowsol[p[j] - 1] = j - 1;
  }
  for (int i = 0; i < n; ++i) total += cost[i][rowsol[i]];
  return total;
}

// Best achievable weight when assigning players `players` to positions `positions`.
double best_subassignment(const Instance& inst, const std::vector<int>& players,
                          const std::vector<int>& positions) {
  const int m = static_cast<int>(players.size());
  if (m == 0) return 0.0;
  double wmax = 0.0;
  for (int i : players)
    for (int j : positions) wmax = std::max(wmax, liquid_value(inst, i, j));
  // Maximization via negation with an offset, so all costs stay non-negative.
  std::vector<std::vector<double>> cost(m, std::vector<double>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) cost[a][b] = wmax - liquid_value(inst, players[a], positions[b]);
  std::vector<int> rowsol;
  double c = hungarian_min(cost, rowsol);
  return m * wmax - c;
}

double value_of_sigma(const Instance& inst, const std::vector<int>& sigma) {
  double total = 0.0;
  for (int i = 0; i < inst.n; ++i) total += liquid_value(inst, i, sigma[i]);
  return total;
}

}  // namespace

OptimalResult optimal_assignment(const Instance& inst) {
  const int n = inst.n;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  double best = best_subassignment(inst, all, all);
  double tol = 1e-9 * (1.0 + std::abs(best));

  // Fix positions player by player, lowest index first, always taking the
  // smallest position that still permits an optimal completion.
  std::vector<int> sigma(n, -1);
  std::vector<int> free_pos = all;
  double prefix = 0.0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> rest_players(all.begin() + i + 1, all.end());
    for (std::size_t k = 0; k < free_pos.size(); ++k) {
      int j = free_pos[k];
      std::vector<int> rest_pos;
      rest_pos.reserve(free_pos.size() - 1);
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        if (t != k) rest_pos.push_back(free_pos[t]);
      double candidate = prefix + liquid_value(inst, i, j) +
                         best_subassignment(inst, rest_players, rest_pos);
      if (candidate >= best - tol) {
        sigma[i] = j;
        prefix += liquid_value(inst, i, j);
        free_pos.erase(free_pos.begin() + static_cast<long>(k));
        break;
      }
    }
  }
  OptimalResult res;
  res.value = value_of_sigma(inst, sigma);
  res.assignment = assignment_from_sigma(std::move(sigma));
  return res;
}

OptimalResult optimal_assignment_bruteforce(const Instance& inst) {
  const int n = inst.n;
  if (n > 8) throw Error(Errc::TooLarge, "brute-force assignment limited to n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best_sigma;
  double best = -std::numeric_limits<double>::infinity();
  do {
    double total = value_of_sigma(inst, perm);
    if (total > best) {  // strict: keeps the lexicographically first argmax
      best = total;
      best_sigma = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  OptimalResult res;
  res.value = best;
  res.assignment = assignment_from_sigma(std::move(best_sigma));
  return res;
}

WelfareReport welfare_report(const Instance& inst, const Assignment& a) {
  WelfareReport rep;
  rep.lw = liquid_welfare(inst, a);
  rep.sw = social_welfare(inst, a);
  OptimalResult opt = optimal_assignment(inst);
  rep.opt_lw = opt.value;
  rep.opt_assignment = std::move(opt.assignment);
  return rep;
}

}  // namespace posauct
