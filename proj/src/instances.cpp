#include "posauct/instances.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "posauct/io.hpp"

namespace posauct {

Instance gen_theorem1(const Theorem1Params& p) {
  if (!(p.lambda > 2.0))
    throw Error(Errc::ParamOutOfRange, "lambda must be > 2");
  if (!(p.eps > 0.0 && p.eps < 0.5))
    throw Error(Errc::ParamOutOfRange, "eps must lie in (0, 1/2)");
  return validate_instance({1.0, 1.0 / p.lambda}, {p.lambda, 1.0}, {1.0 + p.eps, 1.0});
}

ScalarBidProfile theorem1_scalar_fixture(const Theorem1Params& p) {
  return ScalarBidProfile{{1.0 + p.eps, 1.0}};
}

MatrixBidProfile theorem1_egfp_fixture(const Theorem1Params& p, double delta) {
  if (!(delta > 0.0)) throw Error(Errc::ParamOutOfRange, "delta must be > 0");
  (void)p;
  return MatrixBidProfile{{{1.0 + delta, 0.0}, {1.0, 0.0}}};
}

double theorem1_ratio(const Theorem1Params& p) {
  return 2.0 * p.lambda / ((1.0 + p.eps) * p.lambda + 1.0);
}

Instance gen_random(std::uint64_t seed, int n, const RandomParams& params) {
  if (n < 1) throw Error(Errc::ParamOutOfRange, "n must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw_positive = [&](double max) {
    // (0, max]: flip the half-open unit interval
    return max * (1.0 - unit(rng));
  };
  std::vector<double> ctrs(n), vals(n), budgets(n);
  for (int j = 0; j < n; ++j) ctrs[j] = draw_positive(params.ctr_max);
  std::sort(ctrs.begin(), ctrs.end(), std::greater<>());
  for (int i = 0; i < n; ++i) vals[i] = draw_positive(params.value_max);
  for (int i = 0; i < n; ++i) budgets[i] = draw_positive(params.budget_scale * ctrs[0] * vals[i]);
  return validate_instance(std::move(ctrs), std::move(vals), std::move(budgets));
}

Instance load_instance(const std::string& path) {
  return instance_from_json(parse_json_file(path));
}

void save_instance(const Instance& inst, const std::string& path) {
  write_json_file(instance_to_json(inst), path);
}

}  // namespace posauct
