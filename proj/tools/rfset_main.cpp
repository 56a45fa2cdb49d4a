#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "rfset/json_io.hpp"
#include "rfset/likelihood.hpp"
#include "rfset/predict.hpp"

namespace {

using nlohmann::json;
using namespace rfset;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DecodeError(path + ": " + e.what());
  }
  return j;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

// Decodes two mass documents that must share one frame; at least one of the
// files has to embed it.
std::pair<std::variant<MassFunction, FuzzyMassFunction>,
          std::variant<MassFunction, FuzzyMassFunction>>
decode_mass_pair(const json& j1, const json& j2) {
  auto frame_of = [](const std::variant<MassFunction, FuzzyMassFunction>& m) {
    return std::visit([](const auto& v) { return v.frame(); }, m);
  };
  if (j1.is_object() && j1.contains("frame")) {
    auto a = decode_any_mass(j1);
    auto b = decode_any_mass(j2, frame_of(a));
    return {std::move(a), std::move(b)};
  }
  auto b = decode_any_mass(j2);
  auto a = decode_any_mass(j1, frame_of(b));
  return {std::move(a), std::move(b)};
}

FuzzyMassFunction lift(const std::variant<MassFunction, FuzzyMassFunction>& m) {
  if (std::holds_alternative<MassFunction>(m))
    return FuzzyMassFunction::from_crisp(std::get<MassFunction>(m));
  return std::get<FuzzyMassFunction>(m);
}

// Emits the slimmest representation: crisp schema when all focal elements
// are crisp, fuzzy schema otherwise.
json encode_any(const FuzzyMassFunction& m) {
  if (m.is_crisp()) return encode(m.to_crisp());
  return encode(m);
}

int run_combine(const std::string& file1, const std::string& file2,
                const std::string& rule, const std::string& out) {
  auto [a, b] = decode_mass_pair(read_json_file(file1), read_json_file(file2));
  json result;
  if (rule == "dempster") {
    if (!std::holds_alternative<MassFunction>(a) || !std::holds_alternative<MassFunction>(b))
      throw std::invalid_argument(
          "dempster needs crisp operands; use soft-product for fuzzy ones");
    CombinationResult r = dempster(std::get<MassFunction>(a), std::get<MassFunction>(b));
    result = json{{"mass", encode(r.mass)}, {"conflict", r.conflict}};
  } else if (rule == "soft-min" || rule == "soft-product") {
    TNormKind t = rule == "soft-min" ? TNormKind::Min : TNormKind::Product;
    FuzzyCombinationResult r = combine_soft(lift(a), lift(b), t);
    result = json{{"mass", encode_any(r.mass)},
                  {"conflict", r.conflict},
                  {"conflict_warning", r.conflict_warning}};
  } else if (rule == "disjunctive-max" || rule == "disjunctive-probsum") {
    TConormKind s =
        rule == "disjunctive-max" ? TConormKind::Max : TConormKind::ProbabilisticSum;
    if (std::holds_alternative<MassFunction>(a) && std::holds_alternative<MassFunction>(b)) {
      MassFunction r = disjunctive(std::get<MassFunction>(a), std::get<MassFunction>(b));
      result = json{{"mass", encode(r)}};
    } else {
      result = json{{"mass", encode_any(combine_disjunctive(lift(a), lift(b), s))}};
    }
  } else {
    throw std::invalid_argument("unknown rule: " + rule);
  }
  write_output(out, result.dump(2));
  return 0;
}

int run_measures(const std::string& dist_file, const std::string& event_file,
                 std::string kind, const std::string& out) {
  FuzzySet dist = decode_fuzzy_set(read_json_file(dist_file));
  FuzzySet event = decode_fuzzy_set(read_json_file(event_file), dist.frame());
  if (kind.empty()) {
    if (!event.is_crisp())
      throw std::invalid_argument("fuzzy event: choose --kind sugeno or --kind choquet");
    kind = "crisp";
  }
  MeasureBundle bundle;
  if (kind == "crisp")
    bundle = measures_crisp(dist, event);
  else if (kind == "sugeno")
    bundle = measures_fuzzy_sugeno(dist, event);
  else if (kind == "choquet")
    bundle = measures_fuzzy_choquet(dist, event);
  else
    throw std::invalid_argument("unknown kind: " + kind);
  write_output(out, encode(bundle).dump(2));
  return 0;
}

int run_likelihood(int grid, int trials, int x, const std::string& out) {
  DiscreteModel model = binomial_model(grid, trials);
  LikelihoodFuzzySet lik = relative_likelihood(model, x);
  json j = encode(lik.base);
  j["mle_index"] = lik.mle_index;
  write_output(out, j.dump(2));
  return 0;
}

int run_coverage(const std::vector<int>& grids, const std::vector<int>& trials,
                 double theta0, const std::vector<double>& alphas,
                 const std::string& out) {
  if (grids.size() != trials.size())
    throw std::invalid_argument("--N and --n need the same number of entries");
  std::vector<CoverageSetting> settings;
  std::vector<std::vector<double>> values;
  for (std::size_t s = 0; s < grids.size(); ++s) {
    settings.push_back({grids[s], trials[s]});
    values.push_back(coverage_experiment(binomial_model(grids[s], trials[s]), theta0, alphas));
  }
  write_output(out, coverage_csv(settings, alphas, values));
  return 0;
}

int run_predict(int grid, int trials, int x, int r, std::size_t num_samples,
                std::uint64_t seed, const std::string& event_file,
                const std::string& kind, const std::string& out) {
  PredictionSetup setup = make_prediction_setup(grid, trials, x, r);
  LikelihoodFuzzySet lik = relative_likelihood(setup.model, x);
  PredictiveSample sample = sample_predictive(setup, lik, num_samples, seed);
  PredictiveSummary summary = contour_and_cdfs(sample);
  json j{{"contour", encode(summary.contour)},
         {"lower_cdf", summary.lower_cdf},
         {"upper_cdf", summary.upper_cdf}};
  if (!event_file.empty()) {
    FuzzySet event = decode_fuzzy_set(read_json_file(event_file), setup.y_frame);
    FuzzyMeasureKind mk;
    if (kind == "sugeno")
      mk = FuzzyMeasureKind::Sugeno;
    else if (kind == "choquet")
      mk = FuzzyMeasureKind::Choquet;
    else if (kind.empty() && event.is_crisp())
      mk = FuzzyMeasureKind::Sugeno;  // crisp events use the crisp measures
    else
      throw std::invalid_argument("fuzzy event: choose --kind sugeno or --kind choquet");
    LowerUpper lu = predictive_measures(sample, event, mk);
    j["event_measures"] = json{{"lower", lu.lower},
                               {"upper", lu.upper},
                               {"kind", event.is_crisp() ? "crisp" : kind}};
  }
  write_output(out, j.dump(2));
  return 0;
}

int run_dominance(int grid, int trials, double theta0, int r,
                  const std::vector<double>& alphas, std::size_t num_samples,
                  std::uint64_t seed, const std::vector<int>& scatter_xs,
                  const std::string& out) {
  if (scatter_xs.empty()) {
    std::vector<double> cov =
        dominance_coverage(grid, trials, theta0, r, alphas, num_samples, seed);
    write_output(out, dominance_csv(alphas, cov));
    return 0;
  }
  if (alphas.size() != 1)
    throw std::invalid_argument("--scatter needs exactly one --alphas entry");
  std::vector<ScatterRow> rows = dominance_scatter(scatter_xs, alphas[0], grid, trials,
                                                   theta0, r, num_samples, seed);
  std::string csv = "x, event_bits, belief, probability\n";
  for (const ScatterRow& row : rows) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d, %u, %.6f, %.6f\n", row.x, row.event_bits,
                  row.belief, row.probability);
    csv += buf;
  }
  write_output(out, csv);
  return 0;
}

// Bundled worked examples with their published values; each check returns
// the list of mismatches (empty = pass).
struct ExampleCheck {
  std::string name;
  std::function<std::vector<std::string>()> run;
};

std::string describe_delta(const std::string& what, double got, double want) {
  std::ostringstream os;
  os.precision(12);
  os << what << ": got " << got << ", want " << want << " (delta " << (got - want) << ")";
  return os.str();
}

void expect_near(std::vector<std::string>& failures, const std::string& what, double got,
                 double want, double tol) {
  if (!(std::abs(got - want) <= tol)) failures.push_back(describe_delta(what, got, want));
}

std::vector<ExampleCheck> example_checks() {
  const Frame frame({"th1", "th2", "th3", "th4"});
  const FuzzySet f(frame, {0.5, 1.0, 0.8, 0.3});
  const FuzzySet g(frame, {0.3, 0.7, 1.0, 0.2});
  std::vector<ExampleCheck> checks;

  checks.push_back({"normalized-product", [=] {
    std::vector<std::string> fails;
    NormalizedProduct p = normalized_product(f, g);
    expect_near(fails, "height", p.height, 0.8, 1e-12);
    const std::vector<double> want{0.1875, 0.875, 1.0, 0.075};
    for (std::size_t i = 0; i < want.size(); ++i)
      expect_near(fails, "grade " + frame.label(i), p.set.grade(i), want[i], 1e-12);
    return fails;
  }});

  checks.push_back({"consonant-masses", [=] {
    std::vector<std::string> fails;
    MassFunction m = consonant_mass(normalized_product(f, g).set);
    expect_near(fails, "m({th3})", m.mass_of(FuzzySet::crisp(frame, {2})), 0.125, 1e-12);
    expect_near(fails, "m({th2,th3})", m.mass_of(FuzzySet::crisp(frame, {1, 2})), 0.6875,
                1e-12);
    expect_near(fails, "m({th1,th2,th3})", m.mass_of(FuzzySet::crisp(frame, {0, 1, 2})),
                0.1125, 1e-12);
    expect_near(fails, "m(frame)", m.mass_of(FuzzySet::full(frame)), 0.075, 1e-12);
    return fails;
  }});

  checks.push_back({"dempster-of-consonant-projections", [=] {
    std::vector<std::string> fails;
    CombinationResult r = dempster(consonant_mass(f), consonant_mass(g));
    expect_near(fails, "conflict", r.conflict, 0.06, 1e-12);
    expect_near(fails, "m({th3})", r.mass.mass_of(FuzzySet::crisp(frame, {2})), 0.255, 5e-4);
    expect_near(fails, "m({th2})", r.mass.mass_of(FuzzySet::crisp(frame, {1})), 0.149, 5e-4);
    expect_near(fails, "m({th2,th3})", r.mass.mass_of(FuzzySet::crisp(frame, {1, 2})), 0.436,
                5e-4);
    expect_near(fails, "m({th1,th2,th3})",
                r.mass.mass_of(FuzzySet::crisp(frame, {0, 1, 2})), 0.0957, 5e-4);
    expect_near(fails, "m(frame)", r.mass.mass_of(FuzzySet::full(frame)), 0.0638, 5e-4);
    return fails;
  }});

  checks.push_back({"contour-proportionality", [=] {
    std::vector<std::string> fails;
    FuzzySet product = normalized_product(f, g).set;
    FuzzySet pl = contour(dempster(consonant_mass(f), consonant_mass(g)).mass);
    for (std::size_t i = 0; i < frame.size(); ++i)
      expect_near(fails, "ratio at " + frame.label(i), product.grade(i) / pl.grade(i),
                  1.175, 5e-3);
    return fails;
  }});

  checks.push_back({"fuzzy-event-measures", [=] {
    std::vector<std::string> fails;
    MeasureBundle s = measures_fuzzy_sugeno(f, g);
    MeasureBundle c = measures_fuzzy_choquet(f, g);
    expect_near(fails, "sugeno possibility", s.possibility, 0.8, 1e-12);
    expect_near(fails, "sugeno necessity", s.necessity, 0.5, 1e-12);
    expect_near(fails, "choquet possibility", c.possibility, 0.94, 1e-12);
    expect_near(fails, "choquet necessity", c.necessity, 0.47, 1e-12);
    return fails;
  }});

  checks.push_back({"guaranteed-possibility", [=] {
    std::vector<std::string> fails;
    const FuzzySet h(frame, {1.0, 0.6, 0.0, 0.1});
    const FuzzySet gh = combine_disjunctive(g, h, TConormKind::Max);
    double sg = measures_fuzzy_sugeno(f, g).guaranteed;
    double cg = measures_fuzzy_choquet(f, g).guaranteed;
    double sh = measures_fuzzy_sugeno(f, h).guaranteed;
    double ch = measures_fuzzy_choquet(f, h).guaranteed;
    double sgh = measures_fuzzy_sugeno(f, gh).guaranteed;
    double cgh = measures_fuzzy_choquet(f, gh).guaranteed;
    expect_near(fails, "sugeno guaranteed (first event)", sg, 0.7, 1e-12);
    expect_near(fails, "choquet guaranteed (first event)", cg, 0.67, 1e-12);
    expect_near(fails, "sugeno guaranteed (second event)", sh, 0.5, 1e-12);
    expect_near(fails, "choquet guaranteed (second event)", ch, 0.48, 1e-12);
    expect_near(fails, "sugeno guaranteed (union)", sgh, 0.5, 1e-12);
    expect_near(fails, "choquet guaranteed (union)", cgh, 0.46, 1e-12);
    if (std::abs(cgh - std::min(cg, ch)) <= 1e-12)
      fails.push_back("choquet guaranteed unexpectedly satisfies the min law");
    return fails;
  }});

  checks.push_back({"product-intersection-rule", [=] {
    std::vector<std::string> fails;
    FuzzyMassFunction m1(frame, {{f, 0.6}, {FuzzySet::full(frame), 0.4}});
    FuzzyMassFunction m2(frame, {{g, 0.7}, {FuzzySet::full(frame), 0.3}});
    FuzzyCombinationResult r = orthogonal_sum(m1, m2);
    expect_near(fails, "conflict", r.conflict, 0.084, 1e-12);
    FuzzySet fg = normalized_product(f, g).set;
    expect_near(fails, "m(product)", r.mass.mass_of(fg), 0.336 / 0.916, 5e-4);
    expect_near(fails, "m(first operand)", r.mass.mass_of(f), 0.18 / 0.916, 5e-4);
    expect_near(fails, "m(second operand)", r.mass.mass_of(g), 0.28 / 0.916, 5e-4);
    expect_near(fails, "m(frame)", r.mass.mass_of(FuzzySet::full(frame)), 0.12 / 0.916,
                5e-4);
    return fails;
  }});

  checks.push_back({"binomial-likelihood", [] {
    std::vector<std::string> fails;
    DiscreteModel model = binomial_model(100, 100);
    LikelihoodFuzzySet lik = relative_likelihood(model, 28);
    double want = std::pow(0.3 / 0.28, 28) * std::pow(0.7 / 0.72, 72);
    expect_near(fails, "relative likelihood at 0.3", lik.base.grade(30), want, 1e-12);
    expect_near(fails, "cut level alpha=0.05", wilks_cut_level(0.05),
                0.14650006448608432, 1e-10);
    FuzzySet region = confidence_region(lik, 0.05);
    if (region.grade(30) != 1.0)
      fails.push_back("0.3 missing from the 95% confidence cut");
    return fails;
  }});

  return checks;
}

int run_examples(bool list_only) {
  int failed = 0;
  for (const ExampleCheck& check : example_checks()) {
    if (list_only) {
      std::cout << check.name << "\n";
      continue;
    }
    std::vector<std::string> fails = check.run();
    if (fails.empty()) {
      std::cout << check.name << ": PASS\n";
    } else {
      ++failed;
      std::cout << check.name << ": FAIL\n";
      for (const std::string& f : fails) std::cout << "  " << f << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief functions with fuzzy focal elements on finite frames"};
  app.require_subcommand(1);

  std::string file1, file2, rule, out, kind, event_file;
  std::vector<int> grids{100}, trial_list{100};
  int grid = 100, trials = 100, x = 0, r = 1;
  double theta0 = 0.5;
  std::vector<double> alphas{0.01, 0.05, 0.1};
  std::size_t num_samples = 15000;
  std::uint64_t seed = 1;
  std::vector<int> scatter_xs;
  bool list_only = false;

  CLI::App* combine = app.add_subcommand("combine", "Combine two mass function files");
  combine->add_option("first", file1, "First mass function (JSON)")->required();
  combine->add_option("second", file2, "Second mass function (JSON)")->required();
  combine->add_option("--rule", rule,
                      "dempster | soft-min | soft-product | disjunctive-max |"
                      " disjunctive-probsum")
      ->required();
  combine->add_option("-o,--out", out, "Output path (default: stdout)");

  CLI::App* measures =
      app.add_subcommand("measures", "Measures of an event under a possibility distribution");
  measures->add_option("distribution", file1, "Normal fuzzy set (JSON)")->required();
  measures->add_option("event", file2, "Event fuzzy set (JSON)")->required();
  measures->add_option("--kind", kind, "crisp | sugeno | choquet");
  measures->add_option("-o,--out", out, "Output path (default: stdout)");

  CLI::App* likelihood = app.add_subcommand("likelihood", "Relative likelihood fuzzy set");
  likelihood->add_option("--N", grid, "Parameter grid resolution")->required();
  likelihood->add_option("--n", trials, "Number of trials")->required();
  likelihood->add_option("--x", x, "Observed success count")->required();
  likelihood->add_option("-o,--out", out, "Output path (default: stdout)");

  CLI::App* coverage =
      app.add_subcommand("coverage", "Exact coverage of likelihood confidence cuts");
  coverage->add_option("--N", grids, "Grid resolutions (comma separated)")
      ->required()
      ->delimiter(',');
  coverage->add_option("--n", trial_list, "Trial counts (comma separated)")
      ->required()
      ->delimiter(',');
  coverage->add_option("--theta0", theta0, "True parameter (grid point)")->required();
  coverage->add_option("--alphas", alphas, "Significance levels")->delimiter(',');
  coverage->add_option("-o,--out", out, "Output path (default: stdout)");

  CLI::App* predict = app.add_subcommand("predict", "Predictive belief over future counts");
  predict->add_option("--N", grid, "Parameter grid resolution")->required();
  predict->add_option("--n", trials, "Number of past trials")->required();
  predict->add_option("--x", x, "Observed success count")->required();
  predict->add_option("--r", r, "Number of future trials")->required();
  predict->add_option("--K", num_samples, "Monte-Carlo sample count");
  predict->add_option("--seed", seed, "RNG seed (default 1; fixed seed = fixed output)");
  predict->add_option("--event", event_file, "Event on the outcome frame (JSON)");
  predict->add_option("--kind", kind, "sugeno | choquet (fuzzy events)");
  predict->add_option("-o,--out", out, "Output path (default: stdout)");

  CLI::App* dominance =
      app.add_subcommand("dominance", "Coverage of the predictive belief function");
  dominance->add_option("--N", grid, "Parameter grid resolution")->required();
  dominance->add_option("--n", trials, "Number of past trials")->required();
  dominance->add_option("--theta0", theta0, "True parameter (grid point)")->required();
  dominance->add_option("--r", r, "Number of future trials")->required();
  dominance->add_option("--alphas", alphas, "Significance levels")->delimiter(',');
  dominance->add_option("--K", num_samples, "Monte-Carlo sample count");
  dominance->add_option("--seed", seed, "RNG seed (default 1; fixed seed = fixed output)");
  dominance->add_option("--scatter", scatter_xs, "Observed counts for per-event output")
      ->delimiter(',');
  dominance->add_option("-o,--out", out, "Output path (default: stdout)");

  CLI::App* examples =
      app.add_subcommand("paper-examples", "Check the bundled worked examples");
  examples->add_flag("--list", list_only, "List check names without running them");

  CLI11_PARSE(app, argc, argv);

  try {
    if (combine->parsed()) return run_combine(file1, file2, rule, out);
    if (measures->parsed()) return run_measures(file1, file2, kind, out);
    if (likelihood->parsed()) return run_likelihood(grid, trials, x, out);
    if (coverage->parsed()) return run_coverage(grids, trial_list, theta0, alphas, out);
    if (predict->parsed())
      return run_predict(grid, trials, x, r, num_samples, seed, event_file, kind, out);
    if (dominance->parsed())
      return run_dominance(grid, trials, theta0, r, alphas, num_samples, seed, scatter_xs,
                           out);
    if (examples->parsed()) return run_examples(list_only);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
