#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rfset/frame.hpp"
#include "rfset/fuzzy_set.hpp"
#include "rfset/likelihood.hpp"
#include "rfset/possibility.hpp"

namespace rfset {

// Context for predicting the number of successes in r future trials after
// observing x successes in the model's past trials.
struct PredictionSetup {
  DiscreteModel model;
  int x;            // observed count
  int r;            // future trials
  Frame y_frame;    // outcomes 0 .. r
};

PredictionSetup make_prediction_setup(int grid_size, int trials, int x, int r);

// Image of the relative likelihood under the map theta -> #{i : u_i <= theta}
// for fixed auxiliary uniforms u.  The grade of y is the maximum likelihood
// over the grid points mapping to y; grid bands containing no grid point get
// grade 0.  Always normal: the band of the likelihood's mode is nonempty.
FuzzySet push_forward(const PredictionSetup& setup, const LikelihoodFuzzySet& likelihood,
                      std::span<const double> u);

// K pushed-forward fuzzy sets from counter-based uniforms; sample k uses
// stream k, so any partition of 0..K-1 reproduces the sequential result.
struct PredictiveSample {
  Frame y_frame;
  std::vector<FuzzySet> sets;  // size K, kept unaggregated
  std::uint64_t seed;
};

PredictiveSample sample_predictive(const PredictionSetup& setup,
                                   const LikelihoodFuzzySet& likelihood,
                                   std::size_t num_samples, std::uint64_t seed);

// Monte-Carlo lower / upper measures of an event: averages of the
// per-sample necessity and possibility.  Crisp events use the crisp
// measures; fuzzy events use the requested extension.  Sums are
// compensated, so accumulation order cannot shift the result.
struct LowerUpper {
  double lower;
  double upper;
};

LowerUpper predictive_measures(const PredictiveSample& sample, const FuzzySet& event,
                               FuzzyMeasureKind kind);

// Contour (mean membership per outcome) and the lower / upper cumulative
// distribution functions Bel([0, y]) and Pl([0, y]).
struct PredictiveSummary {
  FuzzySet contour;
  std::vector<double> lower_cdf;
  std::vector<double> upper_cdf;
};

PredictiveSummary contour_and_cdfs(const PredictiveSample& sample);

// Probability that the predictive lower measure is dominated by the true
// predictive distribution on every event simultaneously, at the cut level
// for each alpha: sum over x of Binom(x) * [for all A: Bel_x(A) <= P(A)].
// Requires r <= 16.
std::vector<double> dominance_coverage(int grid_size, int trials, double theta0, int r,
                                       const std::vector<double>& alphas,
                                       std::size_t num_samples, std::uint64_t seed);

// Per-event belief vs true probability pairs for chosen observed counts.
struct ScatterRow {
  int x;
  std::uint32_t event_bits;
  double belief;
  double probability;
};

std::vector<ScatterRow> dominance_scatter(const std::vector<int>& xs, double alpha,
                                          int grid_size, int trials, double theta0, int r,
                                          std::size_t num_samples, std::uint64_t seed);

}  // namespace rfset
