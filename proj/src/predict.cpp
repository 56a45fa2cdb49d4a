#include "rfset/predict.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rfset/rng.hpp"

namespace rfset {

namespace {

// Compensated accumulator: totals do not depend on summation order at the
// target precision.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double log_binomial_pmf(int n, int x, double p) {
  if (x < 0 || x > n) return -std::numeric_limits<double>::infinity();
  if (p <= 0.0) return x == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  if (p >= 1.0) return x == n ? 0.0 : -std::numeric_limits<double>::infinity();
  double logc = std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0);
  return logc + x * std::log(p) + (n - x) * std::log1p(-p);
}

// Membership of each band {theta : #(u <= theta) = y} as the maximum
// likelihood grade over the grid points inside it; one pass over the grid.
void push_forward_into(const std::vector<double>& theta, const std::vector<double>& lik,
                       const std::vector<double>& u_sorted, std::vector<double>& mu_out) {
  const std::size_t r = u_sorted.size();
  std::fill(mu_out.begin(), mu_out.end(), 0.0);
  std::size_t band = 0;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    while (band < r && u_sorted[band] <= theta[j]) ++band;
    mu_out[band] = std::max(mu_out[band], lik[j]);
  }
}

std::vector<double> sorted_uniforms(std::uint64_t seed, std::uint64_t stream, int r) {
  std::vector<double> u(r);
  for (int i = 0; i < r; ++i) u[i] = uniform01(seed, stream, i);
  std::sort(u.begin(), u.end());
  return u;
}

// Belief of every subset of the outcome frame from binned cut patterns:
// a subset-sum (zeta) transform of the pattern counts.
std::vector<double> belief_from_counts(std::vector<double> counts, int bits,
                                       double num_samples) {
  for (int b = 0; b < bits; ++b)
    for (std::size_t a = 0; a < counts.size(); ++a)
      if (a & (std::size_t{1} << b)) counts[a] += counts[a ^ (std::size_t{1} << b)];
  for (double& c : counts) c /= num_samples;
  return counts;
}

}  // namespace

PredictionSetup make_prediction_setup(int grid_size, int trials, int x, int r) {
  if (x < 0 || x > trials) throw std::invalid_argument("observed count outside 0..n");
  if (r < 1) throw std::invalid_argument("future trial count must be positive");
  DiscreteModel model = binomial_model(grid_size, trials);
  std::vector<std::string> labels;
  for (int y = 0; y <= r; ++y) labels.push_back(std::to_string(y));
  return PredictionSetup{std::move(model), x, r, Frame(std::move(labels))};
}

FuzzySet push_forward(const PredictionSetup& setup, const LikelihoodFuzzySet& likelihood,
                      std::span<const double> u) {
  require_same_frame(setup.model.theta_frame, likelihood.base.frame(), "push_forward");
  if (u.size() != static_cast<std::size_t>(setup.r))
    throw std::invalid_argument("need one auxiliary uniform per future trial");
  std::vector<double> u_sorted(u.begin(), u.end());
  std::sort(u_sorted.begin(), u_sorted.end());
  std::vector<double> mu(setup.r + 1);
  push_forward_into(setup.model.theta, likelihood.base.grades(), u_sorted, mu);
  return FuzzySet(setup.y_frame, std::move(mu));
}

PredictiveSample sample_predictive(const PredictionSetup& setup,
                                   const LikelihoodFuzzySet& likelihood,
                                   std::size_t num_samples, std::uint64_t seed) {
  require_same_frame(setup.model.theta_frame, likelihood.base.frame(), "sample_predictive");
  PredictiveSample out{setup.y_frame, {}, seed};
  out.sets.reserve(num_samples);
  std::vector<double> mu(setup.r + 1);
  for (std::size_t k = 0; k < num_samples; ++k) {
    std::vector<double> u = sorted_uniforms(seed, k, setup.r);
    push_forward_into(setup.model.theta, likelihood.base.grades(), u, mu);
    out.sets.emplace_back(setup.y_frame, mu);
  }
  return out;
}

LowerUpper predictive_measures(const PredictiveSample& sample, const FuzzySet& event,
                               FuzzyMeasureKind kind) {
  require_same_frame(sample.y_frame, event.frame(), "predictive_measures");
  if (sample.sets.empty()) throw std::invalid_argument("empty predictive sample");
  KahanSum lower, upper;
  const bool crisp = event.is_crisp();
  for (const FuzzySet& set : sample.sets) {
    if (crisp) {
      lower.add(necessity_crisp(set, event));
      upper.add(possibility_crisp(set, event));
    } else {
      MeasureBundle bundle = kind == FuzzyMeasureKind::Sugeno
                                 ? measures_fuzzy_sugeno(set, event)
                                 : measures_fuzzy_choquet(set, event);
      lower.add(bundle.necessity);
      upper.add(bundle.possibility);
    }
  }
  double k = static_cast<double>(sample.sets.size());
  return LowerUpper{lower.sum / k, upper.sum / k};
}

PredictiveSummary contour_and_cdfs(const PredictiveSample& sample) {
  if (sample.sets.empty()) throw std::invalid_argument("empty predictive sample");
  const std::size_t m = sample.y_frame.size();
  std::vector<KahanSum> mean(m), lower(m), upper(m);
  std::vector<double> suffix_max(m + 1);
  for (const FuzzySet& set : sample.sets) {
    suffix_max[m] = 0.0;
    for (std::size_t y = m; y-- > 0;)
      suffix_max[y] = std::max(suffix_max[y + 1], set.grade(y));
    double prefix_max = 0.0;
    for (std::size_t y = 0; y < m; ++y) {
      prefix_max = std::max(prefix_max, set.grade(y));
      mean[y].add(set.grade(y));
      lower[y].add(1.0 - suffix_max[y + 1]);  // necessity of {0..y}
      upper[y].add(prefix_max);               // possibility of {0..y}
    }
  }
  double k = static_cast<double>(sample.sets.size());
  std::vector<double> mu(m), lo(m), hi(m);
  for (std::size_t y = 0; y < m; ++y) {
    mu[y] = std::min(mean[y].sum / k, 1.0);
    lo[y] = lower[y].sum / k;
    hi[y] = upper[y].sum / k;
  }
  return PredictiveSummary{FuzzySet(sample.y_frame, std::move(mu)), std::move(lo),
                           std::move(hi)};
}

namespace {

// Shared machinery for the dominance experiments: for one observed count,
// bins the alpha-cut patterns of the pushed predictive sets.
struct CutBinner {
  std::vector<double> cut_levels;
  std::vector<std::vector<double>> counts;  // one histogram per cut level

  CutBinner(const std::vector<double>& levels, int r)
      : cut_levels(levels),
        counts(levels.size(), std::vector<double>(std::size_t{1} << (r + 1), 0.0)) {}

  void bin(const std::vector<double>& mu) {
    for (std::size_t a = 0; a < cut_levels.size(); ++a) {
      std::uint32_t pattern = 0;
      for (std::size_t y = 0; y < mu.size(); ++y)
        if (mu[y] >= cut_levels[a]) pattern |= std::uint32_t{1} << y;
      counts[a][pattern] += 1.0;
    }
  }
};

}  // namespace

std::vector<double> dominance_coverage(int grid_size, int trials, double theta0, int r,
                                       const std::vector<double>& alphas,
                                       std::size_t num_samples, std::uint64_t seed) {
  if (r < 1 || r > 16) throw std::invalid_argument("dominance needs 1 <= r <= 16");
  DiscreteModel model = binomial_model(grid_size, trials);
  bool on_grid = false;
  for (double t : model.theta) on_grid |= std::abs(t - theta0) <= 1e-12;
  if (!on_grid) throw std::invalid_argument("theta0 is not a grid point");

  const int m = r + 1;
  std::vector<double> event_prob(std::size_t{1} << m, 0.0);
  for (std::size_t a = 0; a < event_prob.size(); ++a) {
    double p = 0.0;
    for (int y = 0; y < m; ++y)
      if (a & (std::size_t{1} << y)) p += std::exp(log_binomial_pmf(r, y, theta0));
    event_prob[a] = p;
  }

  std::vector<double> cut_levels(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a)
    cut_levels[a] = wilks_cut_level(alphas[a]);

  std::vector<double> coverage(alphas.size(), 0.0);
  std::vector<double> mu(m);
  for (int x = 0; x <= trials; ++x) {
    double log_px = log_binomial_pmf(trials, x, theta0);
    if (log_px == -std::numeric_limits<double>::infinity()) continue;
    LikelihoodFuzzySet lik = relative_likelihood(model, x);
    CutBinner binner(cut_levels, r);
    for (std::size_t k = 0; k < num_samples; ++k) {
      // Stream keyed by (x, k): any partition draws the same variates.
      std::vector<double> u =
          sorted_uniforms(seed, (static_cast<std::uint64_t>(x) << 40) + k, r);
      push_forward_into(model.theta, lik.base.grades(), u, mu);
      binner.bin(mu);
    }
    double px = std::exp(log_px);
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      std::vector<double> bel = belief_from_counts(std::move(binner.counts[a]), m,
                                                   static_cast<double>(num_samples));
      // The belief values are sample frequencies, so dominance can only be
      // asserted up to estimator noise; a strict comparison would fail on
      // coin flips at every event whose slack is below the noise floor.
      bool dominated = true;
      for (std::size_t e = 0; e < bel.size(); ++e) {
        double se = std::sqrt(std::max(bel[e] * (1.0 - bel[e]), 0.0) /
                              static_cast<double>(num_samples));
        if (bel[e] > event_prob[e] + 4.0 * se + 1e-9) {
          dominated = false;
          break;
        }
      }
      if (dominated) coverage[a] += px;
    }
  }
  return coverage;
}

std::vector<ScatterRow> dominance_scatter(const std::vector<int>& xs, double alpha,
                                          int grid_size, int trials, double theta0, int r,
                                          std::size_t num_samples, std::uint64_t seed) {
  if (r < 1 || r > 16) throw std::invalid_argument("dominance needs 1 <= r <= 16");
  DiscreteModel model = binomial_model(grid_size, trials);
  const int m = r + 1;
  std::vector<double> event_prob(std::size_t{1} << m, 0.0);
  for (std::size_t a = 0; a < event_prob.size(); ++a) {
    double p = 0.0;
    for (int y = 0; y < m; ++y)
      if (a & (std::size_t{1} << y)) p += std::exp(log_binomial_pmf(r, y, theta0));
    event_prob[a] = p;
  }
  std::vector<double> cut_levels{wilks_cut_level(alpha)};

  std::vector<ScatterRow> rows;
  std::vector<double> mu(m);
  for (int x : xs) {
    if (x < 0 || x > trials) throw std::invalid_argument("observed count outside 0..n");
    LikelihoodFuzzySet lik = relative_likelihood(model, x);
    CutBinner binner(cut_levels, r);
    for (std::size_t k = 0; k < num_samples; ++k) {
      std::vector<double> u =
          sorted_uniforms(seed, (static_cast<std::uint64_t>(x) << 40) + k, r);
      push_forward_into(model.theta, lik.base.grades(), u, mu);
      binner.bin(mu);
    }
    std::vector<double> bel = belief_from_counts(std::move(binner.counts[0]), m,
                                                 static_cast<double>(num_samples));
    for (std::size_t e = 0; e < bel.size(); ++e)
      rows.push_back(ScatterRow{x, static_cast<std::uint32_t>(e), bel[e], event_prob[e]});
  }
  return rows;
}

}  // namespace rfset
