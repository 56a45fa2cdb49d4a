#include "rfset/frame.hpp"

#include <unordered_set>

namespace rfset {

namespace {

std::uint64_t fnv1a(const std::vector<std::string>& labels) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto eat = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& label : labels) {
    for (unsigned char c : label) eat(c);
    eat(0x1f);  // separator: {"ab","c"} and {"a","bc"} must differ
  }
  return h;
}

}  // namespace

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty()) throw std::invalid_argument("frame needs at least one element");
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second)
      throw std::invalid_argument("duplicate frame label: " + label);
  }
  id_ = fnv1a(labels);
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::size_t Frame::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_->size(); ++i)
    if ((*labels_)[i] == label) return i;
  throw std::out_of_range("label not in frame: " + label);
}

void require_same_frame(const Frame& a, const Frame& b, const char* where) {
  if (!a.compatible_with(b))
    throw FrameMismatchError(std::string(where) + ": operands live on different frames");
}

}  // namespace rfset
