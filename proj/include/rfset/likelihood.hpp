#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "rfset/frame.hpp"
#include "rfset/fuzzy_mass.hpp"
#include "rfset/fuzzy_set.hpp"
#include "rfset/mass.hpp"

namespace rfset {

// Discrete statistical model: a finite parameter grid and a finite sample
// space, with the pmf supplied in log space (-inf for zero probability).
struct DiscreteModel {
  Frame theta_frame;                 // one label per grid point
  std::vector<double> theta;        // grid values, increasing
  std::size_t sample_space_size;    // outcomes are 0 .. size-1
  std::function<double(double, int)> log_pmf;  // (theta value, outcome)

  double pmf(std::size_t theta_index, int x) const;

  // Checks every row of the pmf sums to 1 within tol.
  void validate(double tol = 1e-10) const;
};

// Binomial sampling model on the evenly spaced parameter grid
// {0, 1/N, ..., 1} with n trials.
DiscreteModel binomial_model(int grid_size, int trials);

// Relative likelihood: the likelihood normalized by its maximum over the
// grid.  A normal fuzzy set on the parameter frame.
struct LikelihoodFuzzySet {
  FuzzySet base;
  std::size_t mle_index;  // first grid index attaining the maximum
};

LikelihoodFuzzySet relative_likelihood(const DiscreteModel& model, int x);

// The relative likelihood as a single-focal (logical) fuzzy mass function.
FuzzyMassFunction likelihood_mass(const DiscreteModel& model, int x);

// Bayesian posterior: prior probabilities reweighted by the likelihood.
MassFunction posterior(const MassFunction& bayesian_prior, const DiscreteModel& model, int x);

// Quantile of the chi-square distribution with 1 degree of freedom,
// computed from the inverse error function.
double chi_square1_quantile(double p);

// Relative-likelihood threshold whose cut is an asymptotic level-(1-alpha)
// confidence region: exp(-chi_square1_quantile(1 - alpha) / 2).
double wilks_cut_level(double alpha);

// Alpha-cut of the relative likelihood at the threshold for alpha.
FuzzySet confidence_region(const LikelihoodFuzzySet& likelihood, double alpha);

// Exact coverage probability of the confidence cuts at theta0: enumerates
// the whole sample space and sums the probabilities of the outcomes whose
// cut contains theta0.  One value per requested alpha.  Deterministic.
std::vector<double> coverage_experiment(const DiscreteModel& model, double theta0,
                                        const std::vector<double>& alphas);

}  // namespace rfset
