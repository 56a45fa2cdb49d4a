#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rfset/frame.hpp"
#include "rfset/fuzzy_mass.hpp"
#include "rfset/fuzzy_set.hpp"
#include "rfset/mass.hpp"
#include "rfset/possibility.hpp"

namespace rfset {

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Encoders write grades and masses in 12-decimal canonical form and embed
// the frame, so documents stand alone; frame_id allows cross-checking
// documents against each other without repeating labels.
nlohmann::json encode(const Frame& frame);
nlohmann::json encode(const FuzzySet& set);
nlohmann::json encode(const MassFunction& mass);
nlohmann::json encode(const FuzzyMassFunction& mass);
nlohmann::json encode(const MeasureBundle& bundle);

// Decoders accept an embedded "frame" or fall back to the caller's frame;
// when both are present their identities must agree.  Malformed documents
// raise DecodeError.
Frame decode_frame(const nlohmann::json& j);
FuzzySet decode_fuzzy_set(const nlohmann::json& j, const std::optional<Frame>& frame = {});
MassFunction decode_mass(const nlohmann::json& j, const std::optional<Frame>& frame = {});
FuzzyMassFunction decode_fuzzy_mass(const nlohmann::json& j,
                                    const std::optional<Frame>& frame = {});
MeasureBundle decode_measure_bundle(const nlohmann::json& j);

// Reads a mass document of either focal shape ("set" index lists or "mu"
// grade vectors) and returns the matching representation.
std::variant<MassFunction, FuzzyMassFunction> decode_any_mass(
    const nlohmann::json& j, const std::optional<Frame>& frame = {});

// Bel / Pl / Q over all 2^q events of the frame (q <= 16).
// Columns: event_bits, event, bel, pl, q.
std::string bel_pl_q_csv(const MassFunction& mass);
std::string bel_pl_q_csv(const FuzzyMassFunction& mass);

// Coverage table: one row per confidence level, one column per setting.
// Columns: "1-alpha, cov_N{N}_n{n}, ...".
struct CoverageSetting {
  int grid_size;
  int trials;
};
std::string coverage_csv(const std::vector<CoverageSetting>& settings,
                         const std::vector<double>& alphas,
                         const std::vector<std::vector<double>>& values_per_setting);

// Dominance-coverage table: "1-alpha, coverage" rows.
std::string dominance_csv(const std::vector<double>& alphas,
                          const std::vector<double>& values);

}  // namespace rfset
