#include "rfset/fuzzy_mass.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace rfset {

namespace {

constexpr double kMassDropTolerance = 1e-15;
constexpr double kMassSumTolerance = 1e-12;

using CanonKey = std::vector<long long>;

CanonKey canon_key(const FuzzySet& set) {
  CanonKey key(set.size());
  for (std::size_t i = 0; i < set.size(); ++i)
    key[i] = std::llround(set.grade(i) * 1e12);
  return key;
}

FuzzySet from_canon_key(const Frame& frame, const CanonKey& key) {
  std::vector<double> mu(key.size());
  for (std::size_t i = 0; i < key.size(); ++i)
    mu[i] = static_cast<double>(key[i]) / 1e12;
  return FuzzySet(frame, std::move(mu));
}

}  // namespace

FuzzyMassFunction::FuzzyMassFunction(Frame frame, const std::vector<Focal>& focal)
    : frame_(std::move(frame)) {
  std::map<CanonKey, double> acc;
  for (const auto& [set, mass] : focal) {
    require_same_frame(frame_, set.frame(), "FuzzyMassFunction");
    if (mass < 0.0)
      throw std::invalid_argument("focal masses must be nonnegative");
    CanonKey key = canon_key(set);
    if (std::none_of(key.begin(), key.end(), [](long long g) { return g == 1000000000000LL; }))
      throw std::invalid_argument("focal elements must be normal fuzzy sets");
    acc[std::move(key)] += mass;
  }
  std::erase_if(acc, [](const auto& e) { return e.second < kMassDropTolerance; });
  if (acc.empty())
    throw std::invalid_argument("fuzzy mass function needs at least one focal element");
  double sum = 0.0;
  for (const auto& [key, mass] : acc) sum += mass;
  if (std::abs(sum - 1.0) > kMassSumTolerance)
    throw std::invalid_argument("focal masses must sum to 1");
  for (const auto& [key, mass] : acc)
    focal_.push_back({from_canon_key(frame_, key), mass});
}

FuzzyMassFunction FuzzyMassFunction::vacuous(const Frame& frame) {
  return logical(FuzzySet::full(frame));
}

FuzzyMassFunction FuzzyMassFunction::logical(const FuzzySet& set) {
  return FuzzyMassFunction(set.frame(), {{set, 1.0}});
}

FuzzyMassFunction FuzzyMassFunction::bayesian(const Frame& frame,
                                              const std::vector<double>& p) {
  return from_crisp(MassFunction::bayesian(frame, p));
}

FuzzyMassFunction FuzzyMassFunction::from_crisp(const MassFunction& m) {
  std::vector<Focal> focal;
  for (const auto& [set, mass] : m.focal()) focal.push_back({set, mass});
  return FuzzyMassFunction(m.frame(), focal);
}

double FuzzyMassFunction::mass_of(const FuzzySet& set) const {
  CanonKey key = canon_key(set);
  for (const auto& [candidate, mass] : focal_)
    if (canon_key(candidate) == key) return mass;
  return 0.0;
}

bool FuzzyMassFunction::is_crisp() const {
  return std::all_of(focal_.begin(), focal_.end(),
                     [](const Focal& f) { return f.set.is_crisp(); });
}

MassFunction FuzzyMassFunction::to_crisp() const {
  if (!is_crisp())
    throw std::invalid_argument("to_crisp: focal elements are not all crisp");
  std::vector<MassFunction::Focal> focal;
  for (const auto& [set, mass] : focal_) focal.push_back({set, mass});
  return MassFunction(frame_, focal);
}

BelPlQ bel_pl_q_crisp(const FuzzyMassFunction& m, const FuzzySet& event) {
  require_same_frame(m.frame(), event.frame(), "bel_pl_q_crisp");
  if (!event.is_crisp())
    throw std::invalid_argument("bel_pl_q_crisp: event must be crisp");
  BelPlQ out{0.0, 0.0, 0.0};
  for (const auto& [set, mass] : m.focal()) {
    double in_hi = 0.0, in_lo = 1.0, out_hi = 0.0;
    for (std::size_t i = 0; i < event.size(); ++i) {
      if (event.grade(i) == 1.0) {
        in_hi = std::max(in_hi, set.grade(i));
        in_lo = std::min(in_lo, set.grade(i));
      } else {
        out_hi = std::max(out_hi, set.grade(i));
      }
    }
    out.bel += mass * (1.0 - out_hi);
    out.pl += mass * in_hi;
    out.q += mass * in_lo;
  }
  return out;
}

FuzzySet contour(const FuzzyMassFunction& m) {
  std::vector<double> mu(m.frame().size(), 0.0);
  for (const auto& [set, mass] : m.focal())
    for (std::size_t i = 0; i < mu.size(); ++i) mu[i] += mass * set.grade(i);
  for (double& g : mu) g = std::min(g, 1.0);
  return FuzzySet(m.frame(), std::move(mu));
}

MassFunction alpha_cut_mass(const FuzzyMassFunction& m, double alpha) {
  std::vector<MassFunction::Focal> focal;
  for (const auto& [set, mass] : m.focal())
    focal.push_back({alpha_cut(set, alpha), mass});
  return MassFunction(m.frame(), focal);
}

FuzzyCombinationResult combine_soft(const FuzzyMassFunction& a,
                                    const FuzzyMassFunction& b, TNormKind t,
                                    double warn_threshold) {
  require_same_frame(a.frame(), b.frame(), "combine_soft");
  std::vector<FuzzyMassFunction::Focal> focal;
  double total = 0.0;
  for (const auto& [fa, ma] : a.focal()) {
    for (const auto& [fb, mb] : b.focal()) {
      FuzzySet raw = combine(fa, fb, t);
      double h = raw.height();
      if (h <= 0.0) continue;  // fully conflicting pair
      std::vector<double> mu(raw.size());
      for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = raw.grade(i) / h;
      double weight = ma * mb * h;
      focal.push_back({FuzzySet(a.frame(), std::move(mu)), weight});
      total += weight;
    }
  }
  if (total <= 0.0)
    throw TotalConflictError("combine_soft: evidence is completely conflicting");
  for (auto& f : focal) f.mass /= total;
  double conflict = 1.0 - total;
  return FuzzyCombinationResult{FuzzyMassFunction(a.frame(), focal), conflict,
                                conflict >= warn_threshold};
}

FuzzyCombinationResult orthogonal_sum(const FuzzyMassFunction& a,
                                      const FuzzyMassFunction& b) {
  return combine_soft(a, b, TNormKind::Product);
}

FuzzyMassFunction combine_disjunctive(const FuzzyMassFunction& a,
                                      const FuzzyMassFunction& b, TConormKind s) {
  require_same_frame(a.frame(), b.frame(), "combine_disjunctive");
  std::vector<FuzzyMassFunction::Focal> focal;
  for (const auto& [fa, ma] : a.focal())
    for (const auto& [fb, mb] : b.focal())
      focal.push_back({combine_disjunctive(fa, fb, s), ma * mb});
  return FuzzyMassFunction(a.frame(), focal);
}

BelPlQ bel_pl_q_fuzzy(const FuzzyMassFunction& m, const FuzzySet& event,
                      FuzzyMeasureKind kind) {
  require_same_frame(m.frame(), event.frame(), "bel_pl_q_fuzzy");
  BelPlQ out{0.0, 0.0, 0.0};
  for (const auto& [set, mass] : m.focal()) {
    MeasureBundle bundle = kind == FuzzyMeasureKind::Sugeno
                               ? measures_fuzzy_sugeno(set, event)
                               : measures_fuzzy_choquet(set, event);
    out.bel += mass * bundle.necessity;
    out.pl += mass * bundle.possibility;
    out.q += mass * bundle.guaranteed;
  }
  return out;
}

MassFunction bayes_condition(const MassFunction& bayesian_prior, const FuzzySet& event) {
  require_same_frame(bayesian_prior.frame(), event.frame(), "bayes_condition");
  if (!bayesian_prior.is_bayesian())
    throw std::invalid_argument("bayes_condition requires a Bayesian mass function");
  const Frame& frame = bayesian_prior.frame();
  std::vector<double> weights(frame.size(), 0.0);
  for (const auto& [set, mass] : bayesian_prior.focal())
    weights[set.support().front()] = mass;
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    weights[i] *= event.grade(i);
    total += weights[i];
  }
  if (total <= 0.0)
    throw TotalConflictError("bayes_condition: event has zero prior probability");
  for (double& w : weights) w /= total;
  return MassFunction::bayesian(frame, weights);
}

bool check_bel0_representation(const FuzzyMassFunction& m, const FuzzySet& contour_target) {
  require_same_frame(m.frame(), contour_target.frame(), "check_bel0_representation");
  if (!(contour(m) == contour_target)) return false;

  // A common order under which every focal element is non-increasing exists
  // iff the pairwise strict-order constraints form a DAG.
  const std::size_t q = m.frame().size();
  std::vector<std::vector<bool>> edge(q, std::vector<bool>(q, false));
  for (const auto& [set, mass] : m.focal()) {
    const auto grades = set.canonical_grades();
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j)
        if (grades[i] > grades[j]) edge[i][j] = true;
  }
  std::vector<int> indegree(q, 0);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      if (edge[i][j]) ++indegree[j];
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < q; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  std::size_t placed = 0;
  while (!ready.empty()) {
    std::size_t i = ready.front();
    ready.pop_front();
    ++placed;
    for (std::size_t j = 0; j < q; ++j)
      if (edge[i][j] && --indegree[j] == 0) ready.push_back(j);
  }
  return placed == q;
}

}  // namespace rfset
