#pragma once

#include "rfset/fuzzy_set.hpp"
#include "rfset/mass.hpp"

namespace rfset {

// The four set measures induced by a possibility distribution.
struct MeasureBundle {
  double possibility;
  double necessity;
  double guaranteed;
  double potential;
};

enum class FuzzyMeasureKind { Sugeno, Choquet };

// Measures of a crisp event under a normal possibility distribution.
// The event must be nonempty: the guaranteed measure has no value on the
// empty set (possibility and necessity of the empty set are 0 by
// convention, available through the scalar helpers below).
MeasureBundle measures_crisp(const FuzzySet& distribution, const FuzzySet& event);

double possibility_crisp(const FuzzySet& distribution, const FuzzySet& event);
double necessity_crisp(const FuzzySet& distribution, const FuzzySet& event);
double guaranteed_crisp(const FuzzySet& distribution, const FuzzySet& event);
double potential_crisp(const FuzzySet& distribution, const FuzzySet& event);

// Sugeno extension of the four measures to a fuzzy event.
MeasureBundle measures_fuzzy_sugeno(const FuzzySet& distribution, const FuzzySet& event);

// Choquet extension: the exact integral of each crisp measure over the
// event's alpha-cuts, evaluated through the finite level decomposition.
MeasureBundle measures_fuzzy_choquet(const FuzzySet& distribution, const FuzzySet& event);

// Consonant mass function equivalent to a normal possibility distribution:
// focal sets are the distinct alpha-cuts, masses are the level gaps.
MassFunction consonant_mass(const FuzzySet& distribution);

}  // namespace rfset
