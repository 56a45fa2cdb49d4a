#include "rfset/possibility.hpp"

#include <algorithm>
#include <cmath>

namespace rfset {

namespace {

void check_inputs(const FuzzySet& distribution, const FuzzySet& event, const char* where) {
  require_same_frame(distribution.frame(), event.frame(), where);
  if (!distribution.is_normal())
    throw std::invalid_argument(std::string(where) + ": distribution must be normal");
}

void check_crisp(const FuzzySet& event, const char* where) {
  if (!event.is_crisp())
    throw std::invalid_argument(std::string(where) + ": event must be crisp");
}

// Guaranteed possibility of the empty cut; pairs with the subset convention
// Q(empty) = 1 so the Choquet integral matches the consonant mass bridge.
constexpr double kGuaranteedEmpty = 1.0;

double choquet_guaranteed(const FuzzySet& distribution, const FuzzySet& event) {
  LevelDecomposition d = level_decompose(event);
  double value = 0.0;
  for (std::size_t j = 0; j < d.levels.size(); ++j)
    value += d.weights[j] * guaranteed_crisp(distribution, d.cuts[j]);
  value += (1.0 - event.height()) * kGuaranteedEmpty;
  return value;
}

}  // namespace

double possibility_crisp(const FuzzySet& distribution, const FuzzySet& event) {
  check_inputs(distribution, event, "possibility_crisp");
  check_crisp(event, "possibility_crisp");
  double v = 0.0;
  for (std::size_t i = 0; i < event.size(); ++i)
    if (event.grade(i) == 1.0) v = std::max(v, distribution.grade(i));
  return v;
}

double necessity_crisp(const FuzzySet& distribution, const FuzzySet& event) {
  check_inputs(distribution, event, "necessity_crisp");
  check_crisp(event, "necessity_crisp");
  double outside = 0.0;
  for (std::size_t i = 0; i < event.size(); ++i)
    if (event.grade(i) == 0.0) outside = std::max(outside, distribution.grade(i));
  return 1.0 - outside;
}

double guaranteed_crisp(const FuzzySet& distribution, const FuzzySet& event) {
  check_inputs(distribution, event, "guaranteed_crisp");
  check_crisp(event, "guaranteed_crisp");
  if (event.is_empty())
    throw std::invalid_argument("guaranteed_crisp: event must be nonempty");
  double v = 1.0;
  for (std::size_t i = 0; i < event.size(); ++i)
    if (event.grade(i) == 1.0) v = std::min(v, distribution.grade(i));
  return v;
}

double potential_crisp(const FuzzySet& distribution, const FuzzySet& event) {
  check_inputs(distribution, event, "potential_crisp");
  check_crisp(event, "potential_crisp");
  double v = 0.0;
  for (std::size_t i = 0; i < event.size(); ++i)
    if (event.grade(i) == 0.0) v = std::max(v, 1.0 - distribution.grade(i));
  return v;
}

MeasureBundle measures_crisp(const FuzzySet& distribution, const FuzzySet& event) {
  check_inputs(distribution, event, "measures_crisp");
  check_crisp(event, "measures_crisp");
  if (event.is_empty())
    throw std::invalid_argument("measures_crisp: event must be nonempty");
  return MeasureBundle{
      possibility_crisp(distribution, event),
      necessity_crisp(distribution, event),
      guaranteed_crisp(distribution, event),
      potential_crisp(distribution, event),
  };
}

MeasureBundle measures_fuzzy_sugeno(const FuzzySet& distribution, const FuzzySet& event) {
  check_inputs(distribution, event, "measures_fuzzy_sugeno");
  double pl = degree_intersection(event, distribution);
  double bel = degree_inclusion(event, distribution);
  double guaranteed = degree_inclusion(distribution, event);
  double anti = 1.0;  // min over the frame of max(event, distribution)
  for (std::size_t i = 0; i < event.size(); ++i)
    anti = std::min(anti, std::max(event.grade(i), distribution.grade(i)));
  return MeasureBundle{pl, bel, guaranteed, 1.0 - anti};
}

MeasureBundle measures_fuzzy_choquet(const FuzzySet& distribution, const FuzzySet& event) {
  check_inputs(distribution, event, "measures_fuzzy_choquet");
  LevelDecomposition d = level_decompose(event);
  double pl = 0.0, bel = 0.0;
  for (std::size_t j = 0; j < d.levels.size(); ++j) {
    pl += d.weights[j] * possibility_crisp(distribution, d.cuts[j]);
    bel += d.weights[j] * necessity_crisp(distribution, d.cuts[j]);
  }
  double guaranteed = choquet_guaranteed(distribution, event);
  double potential = 1.0 - choquet_guaranteed(distribution, complement(event));
  return MeasureBundle{pl, bel, guaranteed, potential};
}

MassFunction consonant_mass(const FuzzySet& distribution) {
  if (!distribution.is_normal())
    throw std::invalid_argument("consonant_mass: distribution must be normal");
  LevelDecomposition d = level_decompose(distribution);
  std::vector<MassFunction::Focal> focal;
  for (std::size_t j = 0; j < d.levels.size(); ++j)
    focal.push_back({d.cuts[j], d.weights[j]});
  return MassFunction(distribution.frame(), focal);
}

}  // namespace rfset
