#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rfset/frame.hpp"

namespace rfset {

enum class TNormKind { Min, Product };
enum class TConormKind { Max, ProbabilisticSum };

// Dual t-conorm of a t-norm under the standard complement.
TConormKind dual_of(TNormKind t);
TNormKind dual_of(TConormKind s);

double apply_tnorm(TNormKind t, double a, double b);
double apply_tconorm(TConormKind s, double a, double b);

// Fuzzy subset of a finite frame: one membership grade in [0, 1] per element.
class FuzzySet {
 public:
  FuzzySet(Frame frame, std::vector<double> mu);

  static FuzzySet full(const Frame& frame);   // grade 1 everywhere
  static FuzzySet empty(const Frame& frame);  // grade 0 everywhere
  static FuzzySet crisp(const Frame& frame, const std::vector<std::size_t>& members);
  static FuzzySet singleton(const Frame& frame, std::size_t element);

  const Frame& frame() const { return frame_; }
  std::size_t size() const { return mu_.size(); }
  double grade(std::size_t i) const { return mu_[i]; }
  const std::vector<double>& grades() const { return mu_; }

  double height() const;
  bool is_normal() const;  // height == 1 exactly
  bool is_crisp() const;   // every grade 0 or 1
  bool is_empty() const;   // every grade 0

  // Members of the support / of a crisp set, as element indices.
  std::vector<std::size_t> support() const;

  // Grades rounded to 12 decimals; basis for canonical equality and
  // serialization.
  std::vector<double> canonical_grades() const;

  // Canonical equality: compatible frames and equal 12-decimal grades.
  friend bool operator==(const FuzzySet& a, const FuzzySet& b);

 private:
  Frame frame_;
  std::vector<double> mu_;
};

// Round a grade to the 12-decimal canonical grid.
double canonical_round(double x);

// Pointwise t-norm combination.
FuzzySet combine(const FuzzySet& a, const FuzzySet& b, TNormKind t);

// Pointwise t-conorm combination.
FuzzySet combine_disjunctive(const FuzzySet& a, const FuzzySet& b, TConormKind s);

FuzzySet complement(const FuzzySet& a);

// Product-then-normalize combination of two normal fuzzy sets.  `height`
// is the height of the raw pointwise product (the agreement between the
// operands); `conflict_warning` is set when that height falls below the
// threshold.
struct NormalizedProduct {
  FuzzySet set;
  double height;
  bool conflict_warning;
};

NormalizedProduct normalized_product(const FuzzySet& a, const FuzzySet& b,
                                     double warn_threshold = 1e-6);

// Crisp set of elements with grade >= alpha; requires alpha in (0, 1].
FuzzySet alpha_cut(const FuzzySet& a, double alpha);

// Height of the pointwise minimum of a and f.
double degree_intersection(const FuzzySet& a, const FuzzySet& f);

// Minimum over the frame of max(a, 1 - f).
double degree_inclusion(const FuzzySet& a, const FuzzySet& f);

// Exact finite decomposition of a fuzzy set into its distinct alpha-cuts.
// Levels are the distinct nonzero grades in increasing order; cuts[j] is the
// cut at levels[j] (so cuts shrink as j grows); weights[j] = levels[j] -
// levels[j-1] (with levels[-1] = 0) sum to the height.  Integrating any set
// function g over alpha in (0, height] reduces to sum_j weights[j] *
// g(cuts[j]).
struct LevelDecomposition {
  std::vector<double> levels;
  std::vector<FuzzySet> cuts;
  std::vector<double> weights;

  // Rebuilds the original set bit-exactly.
  FuzzySet reconstruct(const Frame& frame) const;
};

LevelDecomposition level_decompose(const FuzzySet& a);

}  // namespace rfset
