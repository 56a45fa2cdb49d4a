#include "rfset/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rfset {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log C(n, x) via lgamma.
double log_binomial_coefficient(int n, int x) {
  return std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0);
}

// Newton refinement of the inverse error function from a Winitzki start.
double erf_inverse(double x) {
  if (!(x > -1.0 && x < 1.0)) throw std::invalid_argument("erf_inverse domain is (-1, 1)");
  if (x == 0.0) return 0.0;
  constexpr double a = 0.147;
  double ln1mx2 = std::log1p(-x * x);
  double t1 = 2.0 / (3.14159265358979323846 * a) + 0.5 * ln1mx2;
  double guess = std::sqrt(std::sqrt(t1 * t1 - ln1mx2 / a) - t1);
  if (x < 0.0) guess = -guess;
  constexpr double kTwoOverSqrtPi = 1.1283791670955125739;
  for (int i = 0; i < 4; ++i) {
    double err = std::erf(guess) - x;
    guess -= err / (kTwoOverSqrtPi * std::exp(-guess * guess));
  }
  return guess;
}

}  // namespace

double DiscreteModel::pmf(std::size_t theta_index, int x) const {
  return std::exp(log_pmf(theta.at(theta_index), x));
}

void DiscreteModel::validate(double tol) const {
  if (theta.size() != theta_frame.size())
    throw std::invalid_argument("grid size differs from parameter frame size");
  for (std::size_t i = 0; i < theta.size(); ++i) {
    double sum = 0.0;
    for (int x = 0; x < static_cast<int>(sample_space_size); ++x)
      sum += std::exp(log_pmf(theta[i], x));
    if (std::abs(sum - 1.0) > tol)
      throw std::invalid_argument("pmf row does not sum to 1 at grid index " +
                                  std::to_string(i));
  }
}

DiscreteModel binomial_model(int grid_size, int trials) {
  if (grid_size < 1) throw std::invalid_argument("grid size must be positive");
  if (trials < 1) throw std::invalid_argument("trial count must be positive");
  std::vector<std::string> labels;
  std::vector<double> grid;
  labels.reserve(grid_size + 1);
  grid.reserve(grid_size + 1);
  for (int i = 0; i <= grid_size; ++i) {
    labels.push_back(std::to_string(i) + "/" + std::to_string(grid_size));
    grid.push_back(static_cast<double>(i) / grid_size);
  }
  const int n = trials;
  auto log_pmf = [n](double theta, int x) {
    if (x < 0 || x > n) return kNegInf;
    if (theta <= 0.0) return x == 0 ? 0.0 : kNegInf;  // 0^0 = 1 at the boundary
    if (theta >= 1.0) return x == n ? 0.0 : kNegInf;
    return log_binomial_coefficient(n, x) + x * std::log(theta) +
           (n - x) * std::log1p(-theta);
  };
  return DiscreteModel{Frame(std::move(labels)), std::move(grid),
                       static_cast<std::size_t>(n + 1), log_pmf};
}

LikelihoodFuzzySet relative_likelihood(const DiscreteModel& model, int x) {
  const std::size_t q = model.theta.size();
  std::vector<double> ll(q);
  std::size_t best = 0;
  for (std::size_t i = 0; i < q; ++i) {
    ll[i] = model.log_pmf(model.theta[i], x);
    if (ll[i] > ll[best]) best = i;
  }
  if (ll[best] == kNegInf)
    throw std::invalid_argument("observation has probability 0 on the whole grid");
  std::vector<double> mu(q);
  for (std::size_t i = 0; i < q; ++i)
    mu[i] = ll[i] == kNegInf ? 0.0 : std::exp(ll[i] - ll[best]);
  mu[best] = 1.0;
  return LikelihoodFuzzySet{FuzzySet(model.theta_frame, std::move(mu)), best};
}

FuzzyMassFunction likelihood_mass(const DiscreteModel& model, int x) {
  return FuzzyMassFunction::logical(relative_likelihood(model, x).base);
}

MassFunction posterior(const MassFunction& bayesian_prior, const DiscreteModel& model,
                       int x) {
  require_same_frame(bayesian_prior.frame(), model.theta_frame, "posterior");
  if (!bayesian_prior.is_bayesian())
    throw std::invalid_argument("posterior requires a Bayesian prior");
  LikelihoodFuzzySet lik = relative_likelihood(model, x);
  std::vector<double> weights(model.theta_frame.size(), 0.0);
  for (const auto& [set, mass] : bayesian_prior.focal())
    weights[set.support().front()] = mass;
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    weights[i] *= lik.base.grade(i);
    total += weights[i];
  }
  if (total <= 0.0)
    throw TotalConflictError("posterior: observation contradicts the prior");
  for (double& w : weights) w /= total;
  return MassFunction::bayesian(model.theta_frame, weights);
}

double chi_square1_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("chi_square1_quantile needs p in (0, 1)");
  double z = erf_inverse(p);
  return 2.0 * z * z;
}

double wilks_cut_level(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("wilks_cut_level needs alpha in (0, 1)");
  return std::exp(-0.5 * chi_square1_quantile(1.0 - alpha));
}

FuzzySet confidence_region(const LikelihoodFuzzySet& likelihood, double alpha) {
  return alpha_cut(likelihood.base, wilks_cut_level(alpha));
}

std::vector<double> coverage_experiment(const DiscreteModel& model, double theta0,
                                        const std::vector<double>& alphas) {
  std::size_t t0 = model.theta.size();
  for (std::size_t i = 0; i < model.theta.size(); ++i)
    if (std::abs(model.theta[i] - theta0) <= 1e-12) {
      t0 = i;
      break;
    }
  if (t0 == model.theta.size())
    throw std::invalid_argument("theta0 is not a grid point");

  std::vector<double> cuts(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a) cuts[a] = wilks_cut_level(alphas[a]);

  std::vector<double> coverage(alphas.size(), 0.0);
  for (int x = 0; x < static_cast<int>(model.sample_space_size); ++x) {
    double ll0 = model.log_pmf(model.theta[t0], x);
    if (ll0 == kNegInf) continue;  // outcome impossible under theta0
    double ll_max = kNegInf;
    for (double theta : model.theta)
      ll_max = std::max(ll_max, model.log_pmf(theta, x));
    double rel = std::exp(ll0 - ll_max);
    double px = std::exp(ll0);
    for (std::size_t a = 0; a < alphas.size(); ++a)
      if (rel >= cuts[a]) coverage[a] += px;
  }
  return coverage;
}

}  // namespace rfset
