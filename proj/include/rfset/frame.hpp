#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfset {

// Two mass functions (or sets) can only interact when their frames agree.
class FrameMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a normalized combination has nothing left to normalize.
class TotalConflictError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite frame of discernment: an ordered list of distinct element labels.
// Frames are immutable; copies share storage.  Two frames are compatible
// when they share storage or have equal label sequences.
class Frame {
 public:
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const { return labels_->size(); }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  const std::vector<std::string>& labels() const { return *labels_; }

  // Index of a label; throws std::out_of_range if absent.
  std::size_t index_of(const std::string& label) const;

  // Stable identity token derived from the label sequence.
  std::uint64_t id() const { return id_; }

  bool compatible_with(const Frame& other) const {
    return labels_ == other.labels_ ||
           (id_ == other.id_ && *labels_ == *other.labels_);
  }

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.compatible_with(b);
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::uint64_t id_;
};

// Throws FrameMismatchError unless a and b are compatible.
void require_same_frame(const Frame& a, const Frame& b, const char* where);

}  // namespace rfset
