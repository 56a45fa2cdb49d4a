#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rfset/frame.hpp"
#include "rfset/fuzzy_set.hpp"
#include "rfset/mass.hpp"
#include "rfset/possibility.hpp"

namespace rfset {

// Mass function whose focal elements are normal fuzzy subsets of the frame.
// Masses are positive and sum to 1; focal elements are distinct under
// 12-decimal canonical equality and are stored in canonical form.
class FuzzyMassFunction {
 public:
  struct Focal {
    FuzzySet set;  // normal
    double mass;
  };

  FuzzyMassFunction(Frame frame, const std::vector<Focal>& focal);

  static FuzzyMassFunction vacuous(const Frame& frame);
  static FuzzyMassFunction logical(const FuzzySet& set);
  static FuzzyMassFunction bayesian(const Frame& frame, const std::vector<double>& p);
  static FuzzyMassFunction from_crisp(const MassFunction& m);

  const Frame& frame() const { return frame_; }
  std::size_t focal_count() const { return focal_.size(); }
  const std::vector<Focal>& focal() const { return focal_; }

  // Mass of a fuzzy set under canonical equality; 0 if not focal.
  double mass_of(const FuzzySet& set) const;

  bool is_crisp() const;          // every focal element crisp
  MassFunction to_crisp() const;  // requires is_crisp()

 private:
  Frame frame_;
  std::vector<Focal> focal_;  // sorted by canonical grades
};

struct FuzzyCombinationResult {
  FuzzyMassFunction mass;
  double conflict;        // 1 - sum of height-weighted pair masses
  bool conflict_warning;  // conflict at or above the warning threshold
};

// Bel / Pl / Q of a crisp event: mixtures over the focal elements of their
// necessity, possibility and guaranteed-possibility at the event.
BelPlQ bel_pl_q_crisp(const FuzzyMassFunction& m, const FuzzySet& event);

// Pointwise mixture of the focal elements: plausibility of each singleton.
FuzzySet contour(const FuzzyMassFunction& m);

// Crisp mass function of the alpha-cuts of the focal elements.
MassFunction alpha_cut_mass(const FuzzyMassFunction& m, double alpha);

// Combination under a t-norm with soft normalization: each focal pair is
// t-norm-combined, renormalized to height 1, and weighted by the product
// mass times the raw height.  Associative for the product t-norm only; for
// the min t-norm the fold order matters and must be chosen by the caller.
FuzzyCombinationResult combine_soft(const FuzzyMassFunction& a,
                                    const FuzzyMassFunction& b, TNormKind t,
                                    double warn_threshold = 0.99);

// combine_soft under the product t-norm: the associative rule used for
// independent evidence.
FuzzyCombinationResult orthogonal_sum(const FuzzyMassFunction& a,
                                      const FuzzyMassFunction& b);

// Disjunctive combination under a t-conorm; never conflicts.
FuzzyMassFunction combine_disjunctive(const FuzzyMassFunction& a,
                                      const FuzzyMassFunction& b,
                                      TConormKind s = TConormKind::ProbabilisticSum);

// Bel / Pl / Q of a fuzzy event: mixtures of the focal elements'
// Sugeno or Choquet measure bundles.  The kind must be chosen explicitly.
BelPlQ bel_pl_q_fuzzy(const FuzzyMassFunction& m, const FuzzySet& event,
                      FuzzyMeasureKind kind);

// Bayesian conditioning on a fuzzy event: reweights p by the event's grades
// and renormalizes.  Throws TotalConflictError when the weights vanish.
MassFunction bayes_condition(const MassFunction& bayesian_prior, const FuzzySet& event);

// True when m has contour `contour_target` (canonically) and all focal
// elements are simultaneously monotone under one common element order,
// decided through pairwise order constraints and a topological sort.
bool check_bel0_representation(const FuzzyMassFunction& m, const FuzzySet& contour_target);

}  // namespace rfset
