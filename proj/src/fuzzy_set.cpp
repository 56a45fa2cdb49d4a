#include "rfset/fuzzy_set.hpp"

#include <algorithm>
#include <cmath>

namespace rfset {

double canonical_round(double x) {
  return static_cast<double>(std::llround(x * 1e12)) / 1e12;
}

TConormKind dual_of(TNormKind t) {
  return t == TNormKind::Min ? TConormKind::Max : TConormKind::ProbabilisticSum;
}

TNormKind dual_of(TConormKind s) {
  return s == TConormKind::Max ? TNormKind::Min : TNormKind::Product;
}

double apply_tnorm(TNormKind t, double a, double b) {
  return t == TNormKind::Min ? std::min(a, b) : a * b;
}

double apply_tconorm(TConormKind s, double a, double b) {
  // Dual construction: keeps grade 1 absorbing even in floating point.
  return s == TConormKind::Max ? std::max(a, b) : 1.0 - (1.0 - a) * (1.0 - b);
}

FuzzySet::FuzzySet(Frame frame, std::vector<double> mu)
    : frame_(std::move(frame)), mu_(std::move(mu)) {
  if (mu_.size() != frame_.size())
    throw std::invalid_argument("membership vector length differs from frame size");
  for (double g : mu_)
    if (!(g >= 0.0 && g <= 1.0))
      throw std::invalid_argument("membership grade outside [0, 1]");
}

FuzzySet FuzzySet::full(const Frame& frame) {
  return FuzzySet(frame, std::vector<double>(frame.size(), 1.0));
}

FuzzySet FuzzySet::empty(const Frame& frame) {
  return FuzzySet(frame, std::vector<double>(frame.size(), 0.0));
}

FuzzySet FuzzySet::crisp(const Frame& frame, const std::vector<std::size_t>& members) {
  std::vector<double> mu(frame.size(), 0.0);
  for (std::size_t i : members) mu.at(i) = 1.0;
  return FuzzySet(frame, std::move(mu));
}

FuzzySet FuzzySet::singleton(const Frame& frame, std::size_t element) {
  return crisp(frame, {element});
}

double FuzzySet::height() const {
  double h = 0.0;
  for (double g : mu_) h = std::max(h, g);
  return h;
}

bool FuzzySet::is_normal() const { return height() == 1.0; }

bool FuzzySet::is_crisp() const {
  return std::all_of(mu_.begin(), mu_.end(), [](double g) { return g == 0.0 || g == 1.0; });
}

bool FuzzySet::is_empty() const {
  return std::all_of(mu_.begin(), mu_.end(), [](double g) { return g == 0.0; });
}

std::vector<std::size_t> FuzzySet::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mu_.size(); ++i)
    if (mu_[i] > 0.0) out.push_back(i);
  return out;
}

std::vector<double> FuzzySet::canonical_grades() const {
  std::vector<double> out(mu_.size());
  std::transform(mu_.begin(), mu_.end(), out.begin(), canonical_round);
  return out;
}

bool operator==(const FuzzySet& a, const FuzzySet& b) {
  return a.frame_.compatible_with(b.frame_) && a.canonical_grades() == b.canonical_grades();
}

FuzzySet combine(const FuzzySet& a, const FuzzySet& b, TNormKind t) {
  require_same_frame(a.frame(), b.frame(), "combine");
  std::vector<double> mu(a.size());
  for (std::size_t i = 0; i < mu.size(); ++i)
    mu[i] = apply_tnorm(t, a.grade(i), b.grade(i));
  return FuzzySet(a.frame(), std::move(mu));
}

FuzzySet combine_disjunctive(const FuzzySet& a, const FuzzySet& b, TConormKind s) {
  require_same_frame(a.frame(), b.frame(), "combine_disjunctive");
  std::vector<double> mu(a.size());
  for (std::size_t i = 0; i < mu.size(); ++i)
    mu[i] = apply_tconorm(s, a.grade(i), b.grade(i));
  return FuzzySet(a.frame(), std::move(mu));
}

FuzzySet complement(const FuzzySet& a) {
  std::vector<double> mu(a.size());
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = 1.0 - a.grade(i);
  return FuzzySet(a.frame(), std::move(mu));
}

NormalizedProduct normalized_product(const FuzzySet& a, const FuzzySet& b,
                                     double warn_threshold) {
  require_same_frame(a.frame(), b.frame(), "normalized_product");
  if (!a.is_normal() || !b.is_normal())
    throw std::invalid_argument("normalized_product requires normal operands");
  FuzzySet raw = combine(a, b, TNormKind::Product);
  double h = raw.height();
  if (h <= 0.0)
    throw TotalConflictError("normalized_product: operands have disjoint supports");
  std::vector<double> mu(raw.size());
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = raw.grade(i) / h;
  return NormalizedProduct{FuzzySet(a.frame(), std::move(mu)), h, h < warn_threshold};
}

FuzzySet alpha_cut(const FuzzySet& a, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in (0, 1]");
  std::vector<double> mu(a.size());
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = a.grade(i) >= alpha ? 1.0 : 0.0;
  return FuzzySet(a.frame(), std::move(mu));
}

double degree_intersection(const FuzzySet& a, const FuzzySet& f) {
  require_same_frame(a.frame(), f.frame(), "degree_intersection");
  double h = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    h = std::max(h, std::min(a.grade(i), f.grade(i)));
  return h;
}

double degree_inclusion(const FuzzySet& a, const FuzzySet& f) {
  require_same_frame(a.frame(), f.frame(), "degree_inclusion");
  double v = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    v = std::min(v, std::max(a.grade(i), 1.0 - f.grade(i)));
  return v;
}

LevelDecomposition level_decompose(const FuzzySet& a) {
  std::vector<double> levels;
  for (double g : a.grades())
    if (g > 0.0) levels.push_back(g);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  LevelDecomposition d;
  d.levels = levels;
  double prev = 0.0;
  for (double level : levels) {
    d.cuts.push_back(alpha_cut(a, level));
    d.weights.push_back(level - prev);
    prev = level;
  }
  return d;
}

FuzzySet LevelDecomposition::reconstruct(const Frame& frame) const {
  std::vector<double> mu(frame.size(), 0.0);
  for (std::size_t j = 0; j < levels.size(); ++j) {
    for (std::size_t i = 0; i < frame.size(); ++i)
      if (cuts[j].grade(i) == 1.0) mu[i] = std::max(mu[i], levels[j]);
  }
  return FuzzySet(frame, std::move(mu));
}

}  // namespace rfset
