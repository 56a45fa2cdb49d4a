#include <doctest.h>

#include <cmath>
#include <vector>

#include "rfset/likelihood.hpp"
#include "rfset/possibility.hpp"
#include "support.hpp"

using namespace rfset;
using testsupport::TestRng;

TEST_SUITE("likelihood") {

TEST_CASE("model validation") {
  DiscreteModel model = binomial_model(10, 7);
  CHECK(model.theta.size() == 11);
  CHECK(model.sample_space_size == 8);
  model.validate();
  CHECK(std::abs(model.pmf(5, 3) -
                 35.0 * std::pow(0.5, 7)) <= 1e-15);

  DiscreteModel broken = model;
  broken.log_pmf = [](double, int) { return std::log(0.3); };
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);

  CHECK_THROWS_AS(binomial_model(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(binomial_model(5, 0), std::invalid_argument);
}

TEST_CASE("relative likelihood closed forms at the sample-space edges") {
  DiscreteModel model = binomial_model(4, 10);
  LikelihoodFuzzySet zero = relative_likelihood(model, 0);
  CHECK(zero.mle_index == 0);
  CHECK(zero.base.grade(0) == 1.0);
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(std::abs(zero.base.grade(i) - std::pow(1.0 - model.theta[i], 10)) <= 1e-12);
  CHECK(zero.base.grade(4) == 0.0);

  LikelihoodFuzzySet full = relative_likelihood(model, 10);
  CHECK(full.mle_index == 4);
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(std::abs(full.base.grade(i) - std::pow(model.theta[i], 10)) <= 1e-12);

  CHECK_THROWS_AS(relative_likelihood(model, 11), std::invalid_argument);
}

TEST_CASE("relative likelihood of the benchmark sample") {
  DiscreteModel model = binomial_model(100, 100);
  LikelihoodFuzzySet lik = relative_likelihood(model, 28);
  CHECK(lik.mle_index == 28);
  CHECK(lik.base.grade(28) == 1.0);
  double want = std::pow(0.3 / 0.28, 28) * std::pow(0.7 / 0.72, 72);
  CHECK(std::abs(lik.base.grade(30) - want) <= 1e-12);
  CHECK(lik.base.is_normal());
}

TEST_CASE("the grid maximum always has grade exactly 1") {
  TestRng rng(301);
  for (int i = 0; i < 50; ++i) {
    int grid = static_cast<int>(rng.uniform_int(1, 40));
    int n = static_cast<int>(rng.uniform_int(1, 60));
    int x = rng.uniform_int(0, n);
    // A size-1 grid is just {0, 1}, where any mixed sample has zero
    // probability everywhere; that combination is rejected, not normalized.
    if (grid == 1 && x > 0 && x < n) continue;
    LikelihoodFuzzySet lik = relative_likelihood(binomial_model(grid, n), x);
    CHECK(lik.base.grade(lik.mle_index) == 1.0);
    CHECK(lik.base.is_normal());
  }
}

TEST_CASE("the likelihood mass is logical on the relative likelihood") {
  DiscreteModel model = binomial_model(20, 15);
  FuzzyMassFunction m = likelihood_mass(model, 4);
  CHECK(m.focal_count() == 1);
  CHECK(m.mass_of(relative_likelihood(model, 4).base) == 1.0);
}

TEST_CASE("combining likelihoods of independent samples pools the data") {
  // Two batches of Bernoulli trials on a shared parameter grid.
  DiscreteModel batch1 = binomial_model(100, 60);
  DiscreteModel batch2 = binomial_model(100, 40);
  DiscreteModel pooled = binomial_model(100, 100);

  FuzzyCombinationResult combined =
      orthogonal_sum(likelihood_mass(batch1, 20), likelihood_mass(batch2, 8));
  CHECK(combined.mass.focal_count() == 1);
  const FuzzySet& got = combined.mass.focal().front().set;
  FuzzySet want = relative_likelihood(pooled, 28).base;
  // Focal sets live on the 12-decimal storage grid, so each operand carries
  // up to 5e-13 of quantization that renormalization then scales up.
  for (std::size_t i = 0; i < want.size(); ++i)
    CHECK(std::abs(got.grade(i) - want.grade(i)) <= 5e-12);
}

TEST_CASE("commonality of the consonant likelihood mass is the minimum contour") {
  DiscreteModel model = binomial_model(7, 12);
  LikelihoodFuzzySet lik = relative_likelihood(model, 5);
  MassFunction m0 = consonant_mass(lik.base);
  CHECK(m0.is_consonant());
  testsupport::for_each_event(model.theta_frame, [&](std::uint32_t bits,
                                                     const FuzzySet& event) {
    double q = bel_pl_q(m0, event).q;
    if (bits == 0) {
      CHECK(std::abs(q - 1.0) <= 1e-12);
      return;
    }
    double low = 1.0;
    for (std::size_t i = 0; i < event.size(); ++i)
      if (event.grade(i) == 1.0) low = std::min(low, lik.base.grade(i));
    CHECK(std::abs(q - low) <= 1e-12);
  });
}

TEST_CASE("posterior updating") {
  DiscreteModel model = binomial_model(4, 2);
  Frame frame = model.theta_frame;
  MassFunction uniform = MassFunction::bayesian(frame, {0.2, 0.2, 0.2, 0.2, 0.2});
  MassFunction post = posterior(uniform, model, 1);
  const std::vector<double> want{0.0, 0.3, 0.4, 0.3, 0.0};
  for (std::size_t i = 0; i < want.size(); ++i)
    CHECK(std::abs(post.mass_of(FuzzySet::singleton(frame, i)) - want[i]) <= 1e-12);

  // A dogmatic prior is immune to data that does not contradict it.
  MassFunction point = MassFunction::bayesian(frame, {0.0, 0.0, 1.0, 0.0, 0.0});
  MassFunction still = posterior(point, model, 1);
  CHECK(still.mass_of(FuzzySet::singleton(frame, 2)) == doctest::Approx(1.0));

  // Impossible observations under the prior's support are rejected.
  MassFunction edge = MassFunction::bayesian(frame, {1.0, 0.0, 0.0, 0.0, 0.0});
  CHECK_THROWS_AS(posterior(edge, model, 1), TotalConflictError);
}

TEST_CASE("posterior equals fuzzy-event conditioning on the relative likelihood") {
  TestRng rng(307);
  for (int i = 0; i < 100; ++i) {
    int grid = static_cast<int>(rng.uniform_int(2, 12));
    int n = static_cast<int>(rng.uniform_int(1, 30));
    int x = rng.uniform_int(0, n);
    DiscreteModel model = binomial_model(grid, n);
    MassFunction prior = testsupport::random_bayesian(rng, model.theta_frame);
    LikelihoodFuzzySet lik = relative_likelihood(model, x);
    MassFunction direct = [&] {
      try {
        return posterior(prior, model, x);
      } catch (const TotalConflictError&) {
        return prior;  // sentinel; checked below
      }
    }();
    MassFunction via = [&] {
      try {
        return bayes_condition(prior, lik.base);
      } catch (const TotalConflictError&) {
        return prior;
      }
    }();
    for (std::size_t j = 0; j < model.theta_frame.size(); ++j)
      CHECK(std::abs(direct.mass_of(FuzzySet::singleton(model.theta_frame, j)) -
                     via.mass_of(FuzzySet::singleton(model.theta_frame, j))) <= 1e-12);
  }
}

TEST_CASE("chi-square quantiles with one degree of freedom") {
  CHECK(std::abs(chi_square1_quantile(0.99) - 6.6348966010212145) <= 1e-8);
  CHECK(std::abs(chi_square1_quantile(0.95) - 3.841458820694124) <= 1e-8);
  CHECK(std::abs(chi_square1_quantile(0.90) - 2.705543454095404) <= 1e-8);
  CHECK_THROWS_AS(chi_square1_quantile(0.0), std::invalid_argument);
  CHECK_THROWS_AS(chi_square1_quantile(1.0), std::invalid_argument);
}

TEST_CASE("confidence cut levels") {
  CHECK(std::abs(wilks_cut_level(0.01) - 0.03624520071516962) <= 1e-10);
  CHECK(std::abs(wilks_cut_level(0.05) - 0.14650006448608432) <= 1e-10);
  CHECK(std::abs(wilks_cut_level(0.10) - 0.2585227122870817) <= 1e-10);
  CHECK_THROWS_AS(wilks_cut_level(0.0), std::invalid_argument);
  CHECK_THROWS_AS(wilks_cut_level(1.0), std::invalid_argument);

  // The level rises toward 1 as the confidence demand vanishes.
  double prev = 0.0;
  for (double alpha : {0.001, 0.01, 0.1, 0.5, 0.9, 0.999}) {
    double c = wilks_cut_level(alpha);
    CHECK(c > prev);
    prev = c;
  }
  CHECK(wilks_cut_level(0.9999) > 1.0 - 1e-7);
  CHECK(wilks_cut_level(0.9999) < 1.0);
}

TEST_CASE("confidence regions are likelihood cuts") {
  DiscreteModel model = binomial_model(10, 10);
  LikelihoodFuzzySet lik = relative_likelihood(model, 0);
  FuzzySet region = confidence_region(lik, 0.05);
  double cut = wilks_cut_level(0.05);
  for (std::size_t i = 0; i < model.theta.size(); ++i) {
    bool in = std::pow(1.0 - model.theta[i], 10) >= cut;
    CHECK(region.grade(i) == (in ? 1.0 : 0.0));
  }

  DiscreteModel bench = binomial_model(100, 100);
  FuzzySet bench_region = confidence_region(relative_likelihood(bench, 28), 0.05);
  CHECK(bench_region.grade(30) == 1.0);

  TestRng rng(311);
  for (int i = 0; i < 50; ++i) {
    int grid = static_cast<int>(rng.uniform_int(2, 25));
    int n = static_cast<int>(rng.uniform_int(1, 40));
    int x = rng.uniform_int(0, n);
    LikelihoodFuzzySet l = relative_likelihood(binomial_model(grid, n), x);
    double a1 = rng.uniform() * 0.4 + 0.01;
    double a2 = a1 + rng.uniform() * 0.4;
    FuzzySet wide = confidence_region(l, a1);
    FuzzySet narrow = confidence_region(l, a2);
    CHECK(wide.grade(l.mle_index) == 1.0);  // the MLE is always covered
    for (std::size_t j = 0; j < wide.size(); ++j)
      CHECK(narrow.grade(j) <= wide.grade(j));  // regions nest as alpha grows
  }
}

TEST_CASE("exact coverage of the confidence cuts") {
  std::vector<double> c50 = coverage_experiment(binomial_model(100, 50), 0.3, {0.05});
  CHECK(std::abs(c50[0] - 0.9570) <= 5e-4);

  std::vector<double> c1000 =
      coverage_experiment(binomial_model(1000, 1000), 0.3, {0.01});
  CHECK(std::abs(c1000[0] - 0.9894) <= 5e-4);

  // Deterministic: repeated runs agree bitwise.
  std::vector<double> again = coverage_experiment(binomial_model(100, 50), 0.3, {0.05});
  CHECK(again[0] == c50[0]);

  CHECK_THROWS_AS(coverage_experiment(binomial_model(100, 50), 0.305, {0.05}),
                  std::invalid_argument);
}

TEST_CASE("coverage approaches the point-probability limit as alpha grows") {
  // With alpha near 1 the cut keeps only the grid MLE, so coverage at
  // theta0 collapses to the probability of the one sample whose maximum
  // sits at theta0.
  std::vector<double> cov = coverage_experiment(binomial_model(100, 100), 0.3, {0.9999});
  double point = std::exp(testsupport::log_binomial_pmf(100, 30, 0.3));
  CHECK(std::abs(cov[0] - point) <= 1e-12);
}

TEST_CASE("large-sample coverage approaches nominal confidence") {
  DiscreteModel model = binomial_model(1000, 1000);
  std::vector<double> cov = coverage_experiment(model, 0.3, {0.01, 0.05, 0.1});
  CHECK(std::abs(cov[0] - 0.99) <= 0.01);
  CHECK(std::abs(cov[1] - 0.95) <= 0.01);
  CHECK(std::abs(cov[2] - 0.90) <= 0.01);
}

}  // TEST_SUITE
