#include "rfset/json_io.hpp"

#include <cstdio>

namespace rfset {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Frame resolve_frame(const json& j, const std::optional<Frame>& frame, const char* what) {
  std::optional<Frame> embedded;
  if (j.contains("frame")) embedded = decode_frame(j.at("frame"));
  if (embedded && frame && !embedded->compatible_with(*frame))
    throw DecodeError(std::string(what) + ": embedded frame differs from the expected one");
  if (!embedded && !frame)
    throw DecodeError(std::string(what) + ": no frame embedded and none supplied");
  Frame out = embedded ? *embedded : *frame;
  if (j.contains("frame_id")) {
    if (!j.at("frame_id").is_number_unsigned())
      throw DecodeError(std::string(what) + ": frame_id must be an unsigned integer");
    if (j.at("frame_id").get<std::uint64_t>() != out.id())
      throw DecodeError(std::string(what) + ": frame_id does not match the frame");
  }
  return out;
}

std::vector<double> decode_grades(const json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected)
    throw DecodeError(std::string(what) + ": mu must be an array of one grade per element");
  std::vector<double> mu;
  mu.reserve(expected);
  for (const auto& g : j) {
    if (!g.is_number())
      throw DecodeError(std::string(what) + ": grades must be numbers");
    double v = g.get<double>();
    if (!(v >= 0.0 && v <= 1.0))
      throw DecodeError(std::string(what) + ": grades must lie in [0, 1]");
    mu.push_back(canonical_round(v));
  }
  return mu;
}

double decode_mass_value(const json& entry, const char* what) {
  if (!entry.contains("mass") || !entry.at("mass").is_number())
    throw DecodeError(std::string(what) + ": each focal entry needs a numeric mass");
  return entry.at("mass").get<double>();
}

}  // namespace

json encode(const Frame& frame) { return json{{"labels", frame.labels()}}; }

json encode(const FuzzySet& set) {
  return json{{"frame_id", set.frame().id()},
              {"frame", encode(set.frame())},
              {"mu", set.canonical_grades()}};
}

json encode(const MassFunction& mass) {
  json focal = json::array();
  for (const auto& [set, value] : mass.focal()) {
    json members = json::array();
    for (std::size_t i : set.support()) members.push_back(i);
    focal.push_back(json{{"set", members}, {"mass", value}});
  }
  return json{{"frame_id", mass.frame().id()},
              {"frame", encode(mass.frame())},
              {"focal", focal}};
}

json encode(const FuzzyMassFunction& mass) {
  json focal = json::array();
  for (const auto& [set, value] : mass.focal())
    focal.push_back(json{{"mu", set.canonical_grades()}, {"mass", value}});
  return json{{"frame_id", mass.frame().id()},
              {"frame", encode(mass.frame())},
              {"focal", focal}};
}

json encode(const MeasureBundle& bundle) {
  return json{{"possibility", bundle.possibility},
              {"necessity", bundle.necessity},
              {"guaranteed", bundle.guaranteed},
              {"potential", bundle.potential}};
}

Frame decode_frame(const json& j) {
  if (!j.is_object() || !j.contains("labels") || !j.at("labels").is_array())
    throw DecodeError("frame: expected an object with a labels array");
  std::vector<std::string> labels;
  for (const auto& l : j.at("labels")) {
    if (!l.is_string()) throw DecodeError("frame: labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  try {
    return Frame(std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw DecodeError(std::string("frame: ") + e.what());
  }
}

FuzzySet decode_fuzzy_set(const json& j, const std::optional<Frame>& frame) {
  if (!j.is_object() || !j.contains("mu"))
    throw DecodeError("fuzzy set: expected an object with a mu array");
  Frame f = resolve_frame(j, frame, "fuzzy set");
  return FuzzySet(f, decode_grades(j.at("mu"), f.size(), "fuzzy set"));
}

MassFunction decode_mass(const json& j, const std::optional<Frame>& frame) {
  if (!j.is_object() || !j.contains("focal") || !j.at("focal").is_array())
    throw DecodeError("mass function: expected an object with a focal array");
  Frame f = resolve_frame(j, frame, "mass function");
  std::vector<MassFunction::Focal> focal;
  for (const auto& entry : j.at("focal")) {
    if (!entry.is_object() || !entry.contains("set") || !entry.at("set").is_array())
      throw DecodeError("mass function: each focal entry needs a set of element indices");
    std::vector<std::size_t> members;
    for (const auto& i : entry.at("set")) {
      if (!i.is_number_unsigned() || i.get<std::size_t>() >= f.size())
        throw DecodeError("mass function: focal set indices must address the frame");
      members.push_back(i.get<std::size_t>());
    }
    focal.push_back({FuzzySet::crisp(f, members), decode_mass_value(entry, "mass function")});
  }
  try {
    return MassFunction(f, focal);
  } catch (const std::invalid_argument& e) {
    throw DecodeError(std::string("mass function: ") + e.what());
  }
}

FuzzyMassFunction decode_fuzzy_mass(const json& j, const std::optional<Frame>& frame) {
  if (!j.is_object() || !j.contains("focal") || !j.at("focal").is_array())
    throw DecodeError("fuzzy mass function: expected an object with a focal array");
  Frame f = resolve_frame(j, frame, "fuzzy mass function");
  std::vector<FuzzyMassFunction::Focal> focal;
  for (const auto& entry : j.at("focal")) {
    if (!entry.is_object() || !entry.contains("mu"))
      throw DecodeError("fuzzy mass function: each focal entry needs a mu array");
    focal.push_back({FuzzySet(f, decode_grades(entry.at("mu"), f.size(), "fuzzy mass")),
                     decode_mass_value(entry, "fuzzy mass function")});
  }
  try {
    return FuzzyMassFunction(f, focal);
  } catch (const std::invalid_argument& e) {
    throw DecodeError(std::string("fuzzy mass function: ") + e.what());
  }
}

MeasureBundle decode_measure_bundle(const json& j) {
  for (const char* key : {"possibility", "necessity", "guaranteed", "potential"})
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number())
      throw DecodeError("measure bundle: four numeric measures required");
  return MeasureBundle{j.at("possibility").get<double>(), j.at("necessity").get<double>(),
                       j.at("guaranteed").get<double>(), j.at("potential").get<double>()};
}

std::variant<MassFunction, FuzzyMassFunction> decode_any_mass(
    const json& j, const std::optional<Frame>& frame) {
  if (!j.is_object() || !j.contains("focal") || !j.at("focal").is_array() ||
      j.at("focal").empty())
    throw DecodeError("mass document: expected a nonempty focal array");
  const auto& first = j.at("focal").front();
  if (first.is_object() && first.contains("set")) return decode_mass(j, frame);
  if (first.is_object() && first.contains("mu")) return decode_fuzzy_mass(j, frame);
  throw DecodeError("mass document: focal entries need either a set or a mu field");
}

namespace {

std::string event_label(const Frame& frame, std::size_t bits) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (bits & (std::size_t{1} << i)) {
      if (!first) out += "|";
      out += frame.label(i);
      first = false;
    }
  }
  return out + "}";
}

template <typename BelPlQFn>
std::string bel_pl_q_csv_impl(const Frame& frame, BelPlQFn&& fn) {
  if (frame.size() > 16)
    throw std::invalid_argument("event table needs a frame with at most 16 elements");
  std::string out = "event_bits, event, bel, pl, q\n";
  for (std::size_t bits = 0; bits < (std::size_t{1} << frame.size()); ++bits) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < frame.size(); ++i)
      if (bits & (std::size_t{1} << i)) members.push_back(i);
    BelPlQ v = fn(FuzzySet::crisp(frame, members));
    out += std::to_string(bits) + ", " + event_label(frame, bits) + ", " +
           format_double(v.bel) + ", " + format_double(v.pl) + ", " + format_double(v.q) +
           "\n";
  }
  return out;
}

}  // namespace

std::string bel_pl_q_csv(const MassFunction& mass) {
  return bel_pl_q_csv_impl(mass.frame(),
                           [&](const FuzzySet& event) { return bel_pl_q(mass, event); });
}

std::string bel_pl_q_csv(const FuzzyMassFunction& mass) {
  return bel_pl_q_csv_impl(
      mass.frame(), [&](const FuzzySet& event) { return bel_pl_q_crisp(mass, event); });
}

std::string coverage_csv(const std::vector<CoverageSetting>& settings,
                         const std::vector<double>& alphas,
                         const std::vector<std::vector<double>>& values_per_setting) {
  if (settings.size() != values_per_setting.size())
    throw std::invalid_argument("one value column per setting required");
  std::string out = "1-alpha";
  for (const auto& s : settings)
    out += ", cov_N" + std::to_string(s.grid_size) + "_n" + std::to_string(s.trials);
  out += "\n";
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    out += format_double(1.0 - alphas[a]);
    for (const auto& column : values_per_setting) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", column.at(a));
      out += std::string(", ") + buf;
    }
    out += "\n";
  }
  return out;
}

std::string dominance_csv(const std::vector<double>& alphas,
                          const std::vector<double>& values) {
  if (alphas.size() != values.size())
    throw std::invalid_argument("one coverage value per alpha required");
  std::string out = "1-alpha, coverage\n";
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", values[a]);
    out += format_double(1.0 - alphas[a]) + ", " + buf + "\n";
  }
  return out;
}

}  // namespace rfset
