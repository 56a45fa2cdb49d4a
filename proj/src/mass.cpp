#include "rfset/mass.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace rfset {

namespace {

constexpr double kMassDropTolerance = 1e-15;
constexpr double kMassSumTolerance = 1e-12;

std::size_t word_count(std::size_t q) { return (q + 63) / 64; }

MassFunction::Key intersect_key(const MassFunction::Key& a, const MassFunction::Key& b) {
  MassFunction::Key out(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
  return out;
}

MassFunction::Key union_key(const MassFunction::Key& a, const MassFunction::Key& b) {
  MassFunction::Key out(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] | b[w];
  return out;
}

bool key_empty(const MassFunction::Key& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t w) { return w == 0; });
}

bool key_subset(const MassFunction::Key& a, const MassFunction::Key& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if ((a[w] & ~b[w]) != 0) return false;
  return true;
}

int key_popcount(const MassFunction::Key& a) {
  int n = 0;
  for (std::uint64_t w : a) n += std::popcount(w);
  return n;
}

bool key_test(const MassFunction::Key& a, std::size_t i) {
  return (a[i / 64] >> (i % 64)) & 1u;
}

FuzzySet key_to_set(const Frame& frame, const MassFunction::Key& key) {
  std::vector<double> mu(frame.size(), 0.0);
  for (std::size_t i = 0; i < frame.size(); ++i)
    if (key_test(key, i)) mu[i] = 1.0;
  return FuzzySet(frame, std::move(mu));
}

void validate_sum(const std::map<MassFunction::Key, double>& focal) {
  if (focal.empty())
    throw std::invalid_argument("mass function needs at least one focal set");
  double sum = 0.0;
  for (const auto& [key, mass] : focal) sum += mass;
  if (std::abs(sum - 1.0) > kMassSumTolerance)
    throw std::invalid_argument("focal masses must sum to 1");
}

}  // namespace

MassFunction::Key MassFunction::key_of(const FuzzySet& set) {
  if (!set.is_crisp())
    throw std::invalid_argument("expected a crisp set");
  Key key(word_count(set.size()), 0);
  for (std::size_t i = 0; i < set.size(); ++i)
    if (set.grade(i) == 1.0) key[i / 64] |= std::uint64_t{1} << (i % 64);
  return key;
}

MassFunction::MassFunction(Frame frame, const std::vector<Focal>& focal)
    : frame_(std::move(frame)) {
  for (const auto& [set, mass] : focal) {
    require_same_frame(frame_, set.frame(), "MassFunction");
    if (set.is_empty())
      throw std::invalid_argument("focal sets must be nonempty");
    if (mass < 0.0)
      throw std::invalid_argument("focal masses must be nonnegative");
    focal_[key_of(set)] += mass;
  }
  std::erase_if(focal_, [](const auto& e) { return e.second < kMassDropTolerance; });
  validate_sum(focal_);
}

MassFunction::MassFunction(Frame frame, std::map<Key, double> focal, bool)
    : frame_(std::move(frame)), focal_(std::move(focal)) {}

MassFunction MassFunction::vacuous(const Frame& frame) {
  return logical(FuzzySet::full(frame));
}

MassFunction MassFunction::logical(const FuzzySet& set) {
  return MassFunction(set.frame(), {{set, 1.0}});
}

MassFunction MassFunction::bayesian(const Frame& frame, const std::vector<double>& p) {
  if (p.size() != frame.size())
    throw std::invalid_argument("probability vector length differs from frame size");
  std::vector<Focal> focal;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) focal.push_back({FuzzySet::singleton(frame, i), p[i]});
  return MassFunction(frame, focal);
}

std::vector<MassFunction::Focal> MassFunction::focal() const {
  std::vector<Focal> out;
  out.reserve(focal_.size());
  for (const auto& [key, mass] : focal_)
    out.push_back({key_to_set(frame_, key), mass});
  return out;
}

double MassFunction::mass_of(const FuzzySet& set) const {
  auto it = focal_.find(key_of(set));
  return it == focal_.end() ? 0.0 : it->second;
}

bool MassFunction::is_bayesian() const {
  return std::all_of(focal_.begin(), focal_.end(),
                     [](const auto& e) { return key_popcount(e.first) == 1; });
}

bool MassFunction::is_logical() const { return focal_.size() == 1; }

bool MassFunction::is_consonant() const {
  std::vector<const Key*> keys;
  keys.reserve(focal_.size());
  for (const auto& [key, mass] : focal_) keys.push_back(&key);
  std::sort(keys.begin(), keys.end(),
            [](const Key* a, const Key* b) { return key_popcount(*a) < key_popcount(*b); });
  for (std::size_t i = 1; i < keys.size(); ++i)
    if (!key_subset(*keys[i - 1], *keys[i])) return false;
  return true;
}

void MassFunctionBuilder::add(const MassFunction::Key& key, double mass) {
  acc_[key] += mass;
}

MassFunction MassFunctionBuilder::build(double total) {
  std::map<MassFunction::Key, double> focal;
  for (const auto& [key, mass] : acc_) {
    double normalized = mass / total;
    if (normalized >= kMassDropTolerance) focal[key] = normalized;
  }
  validate_sum(focal);
  return MassFunction(frame_, std::move(focal), true);
}

BelPlQ bel_pl_q(const MassFunction& m, const FuzzySet& event) {
  require_same_frame(m.frame(), event.frame(), "bel_pl_q");
  const auto key = MassFunction::key_of(event);
  BelPlQ out{0.0, 0.0, 0.0};
  for (const auto& [focal, mass] : m.entries()) {
    if (key_subset(focal, key)) out.bel += mass;
    if (!key_empty(intersect_key(focal, key))) out.pl += mass;
    if (key_subset(key, focal)) out.q += mass;
  }
  return out;
}

FuzzySet contour(const MassFunction& m) {
  std::vector<double> mu(m.frame().size(), 0.0);
  for (const auto& [focal, mass] : m.entries())
    for (std::size_t i = 0; i < mu.size(); ++i)
      if (key_test(focal, i)) mu[i] += mass;
  for (double& g : mu) g = std::min(g, 1.0);
  return FuzzySet(m.frame(), std::move(mu));
}

CombinationResult dempster(const MassFunction& a, const MassFunction& b) {
  require_same_frame(a.frame(), b.frame(), "dempster");
  MassFunctionBuilder builder(a.frame());
  double conflict = 0.0;
  double total = 0.0;
  for (const auto& [ka, ma] : a.entries()) {
    for (const auto& [kb, mb] : b.entries()) {
      auto inter = intersect_key(ka, kb);
      double pair_mass = ma * mb;
      if (key_empty(inter)) {
        conflict += pair_mass;
      } else {
        builder.add(inter, pair_mass);
        total += pair_mass;
      }
    }
  }
  if (total <= 0.0)
    throw TotalConflictError("dempster: all focal intersections are empty");
  return CombinationResult{builder.build(total), conflict};
}

MassFunction disjunctive(const MassFunction& a, const MassFunction& b) {
  require_same_frame(a.frame(), b.frame(), "disjunctive");
  MassFunctionBuilder builder(a.frame());
  for (const auto& [ka, ma] : a.entries())
    for (const auto& [kb, mb] : b.entries())
      builder.add(union_key(ka, kb), ma * mb);
  return builder.build();
}

BelPlQ bel_pl_q_fuzzy(const MassFunction& m, const FuzzySet& event) {
  require_same_frame(m.frame(), event.frame(), "bel_pl_q_fuzzy");
  BelPlQ out{0.0, 0.0, 0.0};
  for (const auto& [focal, mass] : m.entries()) {
    double lo = 1.0, hi = 0.0, out_hi = 0.0;
    for (std::size_t i = 0; i < event.size(); ++i) {
      if (key_test(focal, i)) {
        lo = std::min(lo, event.grade(i));
        hi = std::max(hi, event.grade(i));
      } else {
        out_hi = std::max(out_hi, event.grade(i));
      }
    }
    out.bel += mass * lo;
    out.pl += mass * hi;
    out.q += mass * (1.0 - out_hi);
  }
  return out;
}

double probability_fuzzy_event(const MassFunction& bayesian, const FuzzySet& event) {
  require_same_frame(bayesian.frame(), event.frame(), "probability_fuzzy_event");
  if (!bayesian.is_bayesian())
    throw std::invalid_argument("probability_fuzzy_event requires a Bayesian mass function");
  double p = 0.0;
  for (const auto& [focal, mass] : bayesian.entries())
    for (std::size_t i = 0; i < event.size(); ++i)
      if (key_test(focal, i)) p += mass * event.grade(i);
  return p;
}

}  // namespace rfset
