#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rfset/frame.hpp"
#include "rfset/fuzzy_set.hpp"

namespace rfset {

struct BelPlQ {
  double bel;
  double pl;
  double q;
};

// Mass function with crisp focal sets: nonempty subsets of the frame with
// positive masses summing to 1.  Duplicate sets are merged on construction;
// masses below 1e-15 are dropped after merging.
class MassFunction {
 public:
  struct Focal {
    FuzzySet set;  // crisp
    double mass;
  };

  MassFunction(Frame frame, const std::vector<Focal>& focal);

  static MassFunction vacuous(const Frame& frame);
  // All mass on one crisp nonempty set.
  static MassFunction logical(const FuzzySet& set);
  // Masses on singletons; p must sum to 1.
  static MassFunction bayesian(const Frame& frame, const std::vector<double>& p);

  const Frame& frame() const { return frame_; }
  std::size_t focal_count() const { return focal_.size(); }
  std::vector<Focal> focal() const;

  // Mass of a crisp set; 0 if it is not focal.
  double mass_of(const FuzzySet& set) const;

  bool is_bayesian() const;  // all focal sets singletons
  bool is_logical() const;   // single focal set
  bool is_consonant() const; // focal sets totally ordered by inclusion

  // Internal bit-pattern key of a crisp set, exposed for the i/o layer.
  using Key = std::vector<std::uint64_t>;
  static Key key_of(const FuzzySet& crisp_set);
  const std::map<Key, double>& entries() const { return focal_; }

 private:
  MassFunction(Frame frame, std::map<Key, double> focal, bool checked);

  Frame frame_;
  std::map<Key, double> focal_;

  friend class MassFunctionBuilder;
};

// Incremental builder used by combination rules: accumulates mass over
// bit-pattern keys and validates once at the end.
class MassFunctionBuilder {
 public:
  explicit MassFunctionBuilder(Frame frame) : frame_(std::move(frame)) {}
  void add(const MassFunction::Key& key, double mass);
  // Normalizes by the given total (1 for already-normal input).
  MassFunction build(double total = 1.0);

 private:
  Frame frame_;
  std::map<MassFunction::Key, double> acc_;
};

struct CombinationResult {
  MassFunction mass;
  double conflict;  // mass assigned to the empty set before normalization
};

// Belief, plausibility and commonality of a crisp event.
BelPlQ bel_pl_q(const MassFunction& m, const FuzzySet& event);

// Plausibility of each singleton.
FuzzySet contour(const MassFunction& m);

// Conjunctive combination with normalization; throws TotalConflictError
// when the operands conflict completely.
CombinationResult dempster(const MassFunction& a, const MassFunction& b);

// Disjunctive (union) combination; never conflicts.
MassFunction disjunctive(const MassFunction& a, const MassFunction& b);

// Expected min / max / tail-min of a fuzzy event's grades over the focal
// sets: the fuzzy-event extension of Bel, Pl and Q.
BelPlQ bel_pl_q_fuzzy(const MassFunction& m, const FuzzySet& event);

// Probability of a fuzzy event under a Bayesian mass function.
double probability_fuzzy_event(const MassFunction& bayesian, const FuzzySet& event);

}  // namespace rfset
