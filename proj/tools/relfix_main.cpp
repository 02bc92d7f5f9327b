// relfix: coincidence and common fixed points of mapping pairs on metric
// spaces with binary relations, with hypothesis certification for the
// supported theorems and a brute-force differential oracle.

#include <CLI11.hpp>

#include "relfix/certifier.hpp"
#include "relfix/instance.hpp"
#include "relfix/oracle.hpp"
#include "relfix/report.hpp"
#include "relfix/solver.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitHypothesisFailure = 2;
constexpr int kExitBugVerdict = 3;

std::string load_instance_text(const std::string& source) {
  if (const char* bundled = relfix::bundled_instance(source)) return bundled;
  std::ifstream in(source);
  if (!in) throw relfix::InputError("cannot open instance file '" + source + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

relfix::Instance load_instance(const std::string& source) {
  return relfix::parse_instance(load_instance_text(source));
}

void require_valid_metric(const relfix::Instance& instance) {
  if (!instance.space.is_finite()) return;
  relfix::MetricAxiomReport report = metric_axioms_check(instance.space.finite());
  if (!report.ok()) {
    std::string detail = report.violations.front().detail;
    throw relfix::InputError("metric axioms violated: " + detail);
  }
}

struct ConditionFlags {
  std::string variant;
  std::string phi_k;
  std::string alpha;
  std::string k;
  std::string a, b, c;

  void attach(CLI::App* cmd) {
    cmd->add_option("--variant", variant,
                    "override the contraction condition variant (m,q,j,q1,q2,q3,q4,B)");
    cmd->add_option("--phi-k", phi_k, "linear comparison coefficient for m/q/B");
    cmd->add_option("--alpha", alpha, "coefficient for the linear condition (j)");
    cmd->add_option("--k", k, "coefficient for q1/q3/q4");
    cmd->add_option("--a", a, "Hardy-Rogers a");
    cmd->add_option("--b", b, "Hardy-Rogers b");
    cmd->add_option("--c", c, "Hardy-Rogers c");
  }

  std::optional<relfix::ContractionCondition> build(
      const std::optional<relfix::ContractionCondition>& from_instance) const {
    using relfix::ContractionCondition;
    using relfix::Variant;
    if (variant.empty()) {
      if (!phi_k.empty() && from_instance) {
        ContractionCondition cond = *from_instance;
        cond.phi = relfix::ComparisonFunction::linear(relfix::rat_parse(phi_k));
        return cond;
      }
      return from_instance;
    }
    auto v = relfix::variant_from_label(variant);
    if (!v) throw relfix::InputError("unknown condition variant '" + variant + "'");
    ContractionCondition cond;
    cond.variant = *v;
    switch (*v) {
      case Variant::MType:
      case Variant::NType:
      case Variant::UniversalN:
        if (!phi_k.empty()) {
          cond.phi = relfix::ComparisonFunction::linear(relfix::rat_parse(phi_k));
        } else if (from_instance && from_instance->phi) {
          cond.phi = from_instance->phi;
        } else {
          throw relfix::InputError("variant needs --phi-k or an instance phi");
        }
        break;
      case Variant::Linear:
        if (alpha.empty()) throw relfix::InputError("variant j needs --alpha");
        cond.alpha = relfix::rat_parse(alpha);
        break;
      case Variant::ScaledN:
      case Variant::Kannan:
      case Variant::Chatterjea:
        if (k.empty()) throw relfix::InputError("variant needs --k");
        cond.k = relfix::rat_parse(k);
        break;
      case Variant::HardyRogers:
        if (a.empty() || b.empty() || c.empty())
          throw relfix::InputError("variant q2 needs --a --b --c");
        cond.a = relfix::rat_parse(a);
        cond.b = relfix::rat_parse(b);
        cond.c = relfix::rat_parse(c);
        break;
    }
    cond.validate_constants();
    return cond;
  }
};

int run_check(const std::string& source, const std::string& theorem_flag,
              const ConditionFlags& flags, const std::string& format) {
  relfix::Instance instance = load_instance(source);
  require_valid_metric(instance);

  relfix::TheoremId theorem = relfix::TheoremId::Th1;
  if (!theorem_flag.empty()) {
    auto parsed = relfix::theorem_from_name(theorem_flag);
    if (!parsed) throw relfix::InputError("unknown theorem '" + theorem_flag + "'");
    theorem = *parsed;
  } else if (instance.theorem) {
    theorem = *instance.theorem;
  }

  std::optional<relfix::ContractionCondition> condition = flags.build(instance.condition);
  relfix::HypothesisReport report = relfix::check_theorem(
      theorem, instance.space, instance.pair, condition, instance.asserted);

  std::string name = instance.name.empty() ? source : instance.name;
  if (format == "json") {
    std::cout << relfix::report_json(report, name, instance.space);
  } else {
    std::cout << relfix::report_text(report, name, instance.space);
  }

  if (report.certified && report.oracle_agreement && !report.oracle_agreement->agrees) {
    return kExitBugVerdict;
  }
  return report.certified ? kExitOk : kExitHypothesisFailure;
}

int run_solve(const std::string& source, const std::string& start,
              long max_iterations, const std::string& epsilon,
              const std::string& format) {
  relfix::Instance instance = load_instance(source);
  require_valid_metric(instance);

  relfix::SolverConfig config;
  if (max_iterations > 0) config.max_iterations = max_iterations;
  if (!epsilon.empty()) config.epsilon = relfix::rat_parse(epsilon);
  if (config.epsilon <= 0) throw relfix::InputError("epsilon must be positive");

  relfix::IterationTrace trace;
  if (instance.space.is_finite()) {
    const auto& space = instance.space.finite();
    const auto& pair = instance.pair.finite();
    int w0 = -1;
    if (!start.empty()) {
      auto index = space.label_index(start);
      if (!index) throw relfix::InputError("unknown start label '" + start + "'");
      w0 = *index;
    } else if (auto found = relfix::find_starting_point(space, pair)) {
      w0 = *found;
    } else {
      std::cerr << "no starting point: hypothesis (h) fails\n";
      return kExitHypothesisFailure;
    }
    trace = relfix::picard_jungck(space, pair, w0, config);
  } else {
    const auto& space = instance.space.computable();
    const auto& pair = instance.pair.computable();
    relfix::Point w0;
    if (!start.empty()) {
      w0 = relfix::Point::val(relfix::rat_parse(start));
      if (!space.carrier.contains(w0.value)) {
        throw relfix::InputError("start point is outside the carrier");
      }
    } else if (auto found = relfix::find_starting_point(space, pair)) {
      w0 = *found;
    } else {
      std::cerr << "no starting point found: hypothesis (h) is not witnessed\n";
      return kExitHypothesisFailure;
    }
    trace = relfix::picard_jungck(space, pair, w0, config);
  }

  if (format == "json") {
    std::cout << relfix::trace_json(trace, instance.space);
  } else {
    std::cout << relfix::trace_text(trace, instance.space);
  }
  return trace.outcome == relfix::IterationTrace::Outcome::Coincidence
             ? kExitOk
             : kExitHypothesisFailure;
}

int run_oracle(const std::string& source, const std::string& format) {
  relfix::Instance instance = load_instance(source);
  if (!instance.space.is_finite()) {
    throw relfix::InputError("the brute-force oracle needs a finite instance");
  }
  require_valid_metric(instance);
  relfix::FiniteProfile profile =
      relfix::oracle::brute_force_solutions(instance.pair.finite(), instance.space.finite());
  if (format == "json") {
    std::cout << relfix::profile_json(profile, instance.space.finite());
  } else {
    std::cout << relfix::profile_text(profile, instance.space.finite());
  }
  return kExitOk;
}

int run_fuzz(long seeds, int size, int min_size, int max_size,
             const std::string& density, std::uint64_t base_seed, int jobs,
             const std::string& format) {
  relfix::oracle::FuzzConfig config;
  config.count = seeds;
  config.base_seed = base_seed;
  config.jobs = jobs;
  if (size > 0) {
    config.min_size = config.max_size = size;
  } else {
    config.min_size = min_size;
    config.max_size = max_size;
  }
  if (!density.empty()) config.relation_density = relfix::rat_parse(density);
  relfix::oracle::FuzzSummary summary = relfix::oracle::run_fuzz(config);
  if (format == "json") {
    std::cout << relfix::fuzz_json(summary);
  } else {
    std::cout << relfix::fuzz_text(summary);
  }
  if (summary.theorem_violations > 0 || summary.profile_disagreements > 0 ||
      summary.trace_bound_failures > 0 || summary.closure_equivalence_failures > 0 ||
      summary.functional_order_failures > 0) {
    return kExitBugVerdict;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coincidence / common fixed point workbench for mapping pairs on "
               "relational metric spaces"};
  app.require_subcommand(1);

  std::string source, theorem, format = "text", start, epsilon, density;
  long max_iterations = 0, seeds = 1000;
  int size = 0, min_size = 2, max_size = 8, jobs = 1;
  std::uint64_t seed = 1;
  ConditionFlags condition_flags;

  CLI::App* check = app.add_subcommand("check", "certify a theorem's hypotheses");
  check->add_option("instance", source, "instance file or bundled name")->required();
  check->add_option("--theorem", theorem, "th1..th4, cor0, cor2, cor5..cor10");
  check->add_option("--format", format, "text|json");
  condition_flags.attach(check);

  CLI::App* report = app.add_subcommand("report", "like check, JSON by default");
  report->add_option("instance", source, "instance file or bundled name")->required();
  report->add_option("--theorem", theorem, "theorem selector");
  report->add_option("--format", format, "text|json");
  condition_flags.attach(report);

  CLI::App* solve = app.add_subcommand("solve", "run the Picard-Jungck iteration");
  solve->add_option("instance", source, "instance file or bundled name")->required();
  solve->add_option("--start", start, "starting point (label or rational)");
  solve->add_option("--max-iter", max_iterations, "iteration budget");
  solve->add_option("--eps", epsilon, "stop tolerance as p/q (computable carriers)");
  solve->add_option("--format", format, "text|json");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force solution sets");
  oracle_cmd->add_option("instance", source, "instance file or bundled name")->required();
  oracle_cmd->add_option("--format", format, "text|json");

  CLI::App* fuzz = app.add_subcommand("fuzz", "seeded differential sweep");
  fuzz->add_option("--seeds", seeds, "number of seeded instances");
  fuzz->add_option("--size", size, "fixed carrier size (2..8)");
  fuzz->add_option("--min-size", min_size, "minimum carrier size");
  fuzz->add_option("--max-size", max_size, "maximum carrier size");
  fuzz->add_option("--density", density, "relation density as p/q");
  CLI::Option* seed_option = fuzz->add_option("--seed", seed, "base seed");
  fuzz->add_option("--jobs", jobs, "parallel workers");
  fuzz->add_option("--format", format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*check || *report) {
      if (*report && format == "text" && report->get_option("--format")->count() == 0) {
        format = "json";
      }
      return run_check(source, theorem, condition_flags, format);
    }
    if (*solve) return run_solve(source, start, max_iterations, epsilon, format);
    if (*oracle_cmd) return run_oracle(source, format);
    if (*fuzz) {
      if (seed_option->count() == 0) {
        if (const char* env = std::getenv("RELFIX_SEED")) {
          seed = std::strtoull(env, nullptr, 10);
        }
      }
      return run_fuzz(seeds, size, min_size, max_size, density, seed, jobs, format);
    }
  } catch (const relfix::InputError& e) {
    std::cerr << "input error";
    if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.col;
    if (!e.path.empty()) std::cerr << " at " << e.path;
    std::cerr << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
