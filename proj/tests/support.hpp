#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "rfset/frame.hpp"
#include "rfset/fuzzy_mass.hpp"
#include "rfset/fuzzy_set.hpp"
#include "rfset/mass.hpp"

namespace testsupport {

// Deterministic generator for randomized test cases; splitmix64 steps.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline rfset::Frame make_frame(std::size_t q) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < q; ++i) labels.push_back("e" + std::to_string(i));
  return rfset::Frame(labels);
}

// Grades quantized to 3 decimals so algebraically equal combination results
// collide often enough to exercise focal merging.
inline rfset::FuzzySet random_fuzzy_set(TestRng& rng, const rfset::Frame& frame) {
  std::vector<double> mu(frame.size());
  for (double& g : mu) {
    int roll = rng.uniform_int(0, 9);
    if (roll == 0)
      g = 0.0;
    else if (roll == 1)
      g = 1.0;
    else
      g = rng.uniform_int(0, 1000) / 1000.0;
  }
  return rfset::FuzzySet(frame, std::move(mu));
}

inline rfset::FuzzySet random_normal_set(TestRng& rng, const rfset::Frame& frame) {
  rfset::FuzzySet s = random_fuzzy_set(rng, frame);
  std::vector<double> mu = s.grades();
  mu[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(frame.size()) - 1))] = 1.0;
  return rfset::FuzzySet(frame, std::move(mu));
}

inline rfset::FuzzySet random_crisp_set(TestRng& rng, const rfset::Frame& frame,
                                        bool allow_empty = false) {
  std::vector<double> mu(frame.size(), 0.0);
  bool any = false;
  for (double& g : mu)
    if (rng.uniform() < 0.5) {
      g = 1.0;
      any = true;
    }
  if (!any && !allow_empty)
    mu[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(frame.size()) - 1))] = 1.0;
  return rfset::FuzzySet(frame, std::move(mu));
}

// Random positive masses that sum to 1 exactly: the last one closes the gap.
inline std::vector<double> random_masses(TestRng& rng, int count) {
  std::vector<double> masses(count);
  double used = 0.0;
  for (int i = 0; i + 1 < count; ++i) {
    masses[i] = (1.0 - used) * (0.1 + 0.8 * rng.uniform());
    used += masses[i];
  }
  masses[count - 1] = 1.0 - used;
  return masses;
}

inline rfset::MassFunction random_mass(TestRng& rng, const rfset::Frame& frame,
                                       int max_focal) {
  int count = rng.uniform_int(1, max_focal);
  std::vector<double> masses = random_masses(rng, count);
  std::vector<rfset::MassFunction::Focal> focal;
  for (int i = 0; i < count; ++i)
    focal.push_back({random_crisp_set(rng, frame), masses[i]});
  return rfset::MassFunction(frame, focal);
}

inline rfset::MassFunction random_bayesian(TestRng& rng, const rfset::Frame& frame) {
  std::vector<double> p = random_masses(rng, static_cast<int>(frame.size()));
  return rfset::MassFunction::bayesian(frame, p);
}

inline rfset::FuzzyMassFunction random_fuzzy_mass(TestRng& rng, const rfset::Frame& frame,
                                                  int max_focal) {
  int count = rng.uniform_int(1, max_focal);
  std::vector<double> masses = random_masses(rng, count);
  std::vector<rfset::FuzzyMassFunction::Focal> focal;
  for (int i = 0; i < count; ++i)
    focal.push_back({random_normal_set(rng, frame), masses[i]});
  return rfset::FuzzyMassFunction(frame, focal);
}

inline std::uint32_t bits_of(const rfset::FuzzySet& crisp) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < crisp.size(); ++i)
    if (crisp.grade(i) == 1.0) bits |= 1u << i;
  return bits;
}

inline rfset::FuzzySet set_from_bits(const rfset::Frame& frame, std::uint32_t bits) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < frame.size(); ++i)
    if (bits & (1u << i)) members.push_back(i);
  return rfset::FuzzySet::crisp(frame, members);
}

inline void for_each_event(const rfset::Frame& frame,
                           const std::function<void(std::uint32_t, const rfset::FuzzySet&)>& fn) {
  for (std::uint32_t bits = 0; bits < (1u << frame.size()); ++bits)
    fn(bits, set_from_bits(frame, bits));
}

// Integral over (0, 1] of a function of alpha that is constant between
// consecutive values of `grades`; each segment is evaluated at its midpoint,
// which is exact for cut-based integrands whose jumps sit on the grades.
inline double piecewise_integral(std::vector<double> grades,
                                 const std::function<double(double)>& value_at) {
  grades.push_back(1.0);
  std::sort(grades.begin(), grades.end());
  grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
  double total = 0.0;
  double prev = 0.0;
  for (double g : grades) {
    if (g <= 0.0) continue;
    total += (g - prev) * value_at(0.5 * (prev + g));
    prev = g;
  }
  return total;
}

// Membership cut computed directly from a grade vector, as a bitmask.
inline std::uint32_t cut_bits(const std::vector<double>& grades, double alpha) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < grades.size(); ++i)
    if (grades[i] >= alpha) bits |= 1u << i;
  return bits;
}

inline double log_binomial_pmf(int n, int x, double p) {
  if (x < 0 || x > n) return -std::numeric_limits<double>::infinity();
  if (p <= 0.0) return x == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  if (p >= 1.0) return x == n ? 0.0 : -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0) +
         x * std::log(p) + (n - x) * std::log1p(-p);
}

}  // namespace testsupport
