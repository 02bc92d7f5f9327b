#include "relfix/oracle.hpp"

#include "relfix/certifier.hpp"
#include "relfix/solver.hpp"

#include <future>
#include <stdexcept>

namespace relfix {
namespace oracle {

FiniteProfile brute_force_solutions(const FiniteMappingPair& pair,
                                    const FiniteSpace& space) {
  FiniteProfile out;
  int n = space.size();
  for (int u = 0; u < n; ++u) {
    if (pair.f[u] == pair.g[u]) out.coincidence_points.push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    bool attained = false;
    for (int u = 0; u < n && !attained; ++u) {
      attained = (pair.f[u] == v && pair.g[u] == v);
    }
    if (attained) out.points_of_coincidence.push_back(v);
  }
  for (int u = 0; u < n; ++u) {
    if (pair.f[u] == u && pair.g[u] == u) out.common_fixed_points.push_back(u);
  }
  return out;
}

namespace {

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Exact Bernoulli(density) from one 64-bit draw.
bool bernoulli(SplitMix64& rng, const Rat& density) {
  mpz_class draw;
  std::uint64_t r = rng.next();
  mpz_import(draw.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
  mpz_class scale = mpz_class(1) << 64;
  // draw / 2^64 < density
  Rat sample(draw, scale);
  sample.canonicalize();
  return sample < density;
}

std::vector<std::vector<Rat>> random_metric_table(SplitMix64& rng, int n,
                                                  MetricFlavor flavor) {
  const Rat inf(1000000);
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  if (flavor == MetricFlavor::RandomTable) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        Rat w(static_cast<long>(1 + rng.below(9)));
        d[u][v] = d[v][u] = w;
      }
    }
  } else {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v) d[u][v] = inf;
      }
    }
    for (int v = 1; v < n; ++v) {
      int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
      Rat w(static_cast<long>(1 + rng.below(9)));
      d[v][parent] = d[parent][v] = w;
    }
  }
  // Shortest-path closure repairs the triangle inequality in both flavors.
  for (int w = 0; w < n; ++w) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        Rat via = d[u][w] + d[w][v];
        if (via < d[u][v]) d[u][v] = via;
      }
    }
  }
  return d;
}

}  // namespace

GeneratedInstance random_instance(const InstanceGeneratorConfig& config) {
  if (config.carrier_size < 2 || config.carrier_size > 8) {
    throw std::invalid_argument("carrier_size must be in 2..8");
  }
  if (config.relation_density <= 0 || config.relation_density > 1) {
    throw std::invalid_argument("relation_density must be in (0,1]");
  }
  SplitMix64 rng(config.seed);
  int n = config.carrier_size;

  GeneratedInstance out;
  out.space.labels.reserve(n);
  for (int i = 0; i < n; ++i) out.space.labels.push_back(std::to_string(i));
  out.space.dist = random_metric_table(rng, n, config.metric);

  constexpr int kMaxRelationRetries = 64;
  for (int attempt = 0;; ++attempt) {
    FiniteRelation relation;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (bernoulli(rng, config.relation_density)) relation.pairs.insert({u, v});
      }
    }
    if (!relation.empty()) {
      out.space.relation = std::move(relation);
      break;
    }
    if (attempt + 1 >= kMaxRelationRetries) {
      throw std::runtime_error("relation density too low: no nonempty relation drawn");
    }
  }

  out.pair.f.resize(n);
  out.pair.g.resize(n);
  for (int i = 0; i < n; ++i) out.pair.f[i] = static_cast<int>(rng.below(n));
  for (int i = 0; i < n; ++i) out.pair.g[i] = static_cast<int>(rng.below(n));
  out.phi_k = Rat(static_cast<long>(1 + rng.below(9)), 10);
  out.phi_k.canonicalize();
  return out;
}

DifferentialResult differential_check(const FiniteSpace& space,
                                      const FiniteMappingPair& pair,
                                      const ContractionCondition& cond) {
  DifferentialResult out;
  RelationalSpace rspace{space};
  MappingPair rpair{pair};
  CheckOptions options;

  HypothesisReport th1 = check_theorem(TheoremId::Th1, rspace, rpair, cond, {}, options);
  out.th1_certified = th1.certified;
  if (!th1.certified) {
    out.verdict = DiffVerdict::Skipped;
    out.detail = "th1 hypotheses not fully certified";
    return out;
  }

  auto violated = [&](const std::string& what) {
    out.verdict = DiffVerdict::TheoremViolated;
    out.detail = what;
  };

  if (!th1.oracle_agreement || !th1.oracle_agreement->agrees) {
    violated("th1: " + (th1.oracle_agreement ? th1.oracle_agreement->detail
                                             : std::string("no conclusion produced")));
    return out;
  }

  HypothesisReport th2 = check_theorem(TheoremId::Th2, rspace, rpair, cond, {}, options);
  out.th2_certified = th2.certified;
  if (th2.certified && (!th2.oracle_agreement || !th2.oracle_agreement->agrees)) {
    violated("th2: " + (th2.oracle_agreement ? th2.oracle_agreement->detail
                                             : std::string("no conclusion produced")));
    return out;
  }

  HypothesisReport th3 = check_theorem(TheoremId::Th3, rspace, rpair, cond, {}, options);
  out.th3_certified = th3.certified;
  if (th3.certified && (!th3.oracle_agreement || !th3.oracle_agreement->agrees)) {
    violated("th3: " + (th3.oracle_agreement ? th3.oracle_agreement->detail
                                             : std::string("no conclusion produced")));
    return out;
  }

  HypothesisReport th4 = check_theorem(TheoremId::Th4, rspace, rpair, cond, {}, options);
  out.th4_certified = th4.certified;
  if (th4.certified && (!th4.oracle_agreement || !th4.oracle_agreement->agrees)) {
    violated("th4: " + (th4.oracle_agreement ? th4.oracle_agreement->detail
                                             : std::string("no conclusion produced")));
    return out;
  }

  out.verdict = DiffVerdict::Pass;
  return out;
}

namespace {

void fuzz_one(std::uint64_t seed, const FuzzConfig& config, FuzzSummary& summary) {
  InstanceGeneratorConfig gen;
  SplitMix64 mixer(seed * 0x9E3779B97F4A7C15ull + 1);
  int span = config.max_size - config.min_size + 1;
  gen.carrier_size = config.min_size + static_cast<int>(mixer.below(span));
  gen.metric = (mixer.below(4) == 0) ? MetricFlavor::PathMetric : MetricFlavor::RandomTable;
  gen.relation_density = config.relation_density;
  gen.seed = seed;
  GeneratedInstance instance = random_instance(gen);
  const FiniteSpace& space = instance.space;
  const FiniteMappingPair& pair = instance.pair;
  ++summary.instances;

  // Profile agreement between the two independent computations.
  FiniteProfile mine = coincidence_profile(pair, space);
  FiniteProfile truth = brute_force_solutions(pair, space);
  if (mine.coincidence_points != truth.coincidence_points ||
      mine.points_of_coincidence != truth.points_of_coincidence ||
      mine.common_fixed_points != truth.common_fixed_points) {
    ++summary.profile_disagreements;
    summary.violation_details.push_back("seed " + std::to_string(seed) +
                                        ": profile disagreement");
  }

  // Functional order N <= M on every pair.
  for (int u = 0; u < space.size(); ++u) {
    for (int v = 0; v < space.size(); ++v) {
      if (n_value(pair, space, u, v) > m_value(pair, space, u, v)) {
        ++summary.functional_order_failures;
        summary.violation_details.push_back("seed " + std::to_string(seed) +
                                            ": N_f > M_f at (" + space.labels[u] + "," +
                                            space.labels[v] + ")");
      }
    }
  }

  ContractionCondition cond;
  cond.variant = Variant::MType;
  cond.phi = ComparisonFunction::linear(instance.phi_k);

  if (!closure_equivalence_check(cond, pair, space, space.relation)) {
    ++summary.closure_equivalence_failures;
    summary.violation_details.push_back("seed " + std::to_string(seed) +
                                        ": closure equivalence failed");
  }

  DifferentialResult diff = differential_check(space, pair, cond);
  if (diff.th1_certified) ++summary.th1_certified;
  if (diff.th2_certified) ++summary.th2_certified;
  if (diff.th3_certified) ++summary.th3_certified;
  if (diff.th4_certified) ++summary.th4_certified;
  if (diff.verdict == DiffVerdict::TheoremViolated) {
    ++summary.theorem_violations;
    summary.violation_details.push_back("seed " + std::to_string(seed) + ": " +
                                        diff.detail);
  }

  // Certified traces obey the iterate and tail bounds, and each step stays
  // inside the relation when the closedness hypothesis holds.
  if (diff.th1_certified) {
    int w0 = find_starting_point(space, pair).value_or(0);
    IterationTrace trace = picard_jungck(space, pair, w0, SolverConfig{});
    for (std::size_t i = 0; i + 1 < trace.gw.size(); ++i) {
      if (!space.relation.member(trace.gw[i].index, trace.gw[i + 1].index)) {
        ++summary.trace_r_preservation_failures;
        summary.violation_details.push_back("seed " + std::to_string(seed) +
                                            ": trace not R-preserving");
        break;
      }
    }
    const ComparisonFunction& phi = *cond.phi;
    if (!trace.step_distances.empty()) {
      Rat d0 = trace.step_distances.front();
      for (std::size_t i = 0; i < trace.step_distances.size(); ++i) {
        if (trace.step_distances[i] > phi.iterate(d0, i)) {
          ++summary.trace_bound_failures;
          summary.violation_details.push_back("seed " + std::to_string(seed) +
                                              ": step distance exceeds phi^n(d0)");
          break;
        }
      }
      for (std::size_t a = 0; a + 1 < trace.gw.size(); ++a) {
        Rat bound = error_bound(phi, d0, a);
        for (std::size_t b = a; b < trace.gw.size(); ++b) {
          Rat observed = space.d(trace.gw[a].index, trace.gw[b].index);
          if (observed > bound) {
            ++summary.trace_bound_failures;
            summary.violation_details.push_back("seed " + std::to_string(seed) +
                                                ": tail bound violated");
            a = trace.gw.size();
            break;
          }
        }
      }
    }
  }
}

}  // namespace

FuzzSummary run_fuzz(const FuzzConfig& config) {
  int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    FuzzSummary summary;
    for (long i = 0; i < config.count; ++i) {
      fuzz_one(config.base_seed + static_cast<std::uint64_t>(i), config, summary);
    }
    return summary;
  }

  // Deterministic parallel run: fixed chunks merged in seed order.
  std::vector<std::future<FuzzSummary>> parts;
  long chunk = (config.count + jobs - 1) / jobs;
  for (int j = 0; j < jobs; ++j) {
    long begin = j * chunk;
    long end = std::min(config.count, begin + chunk);
    if (begin >= end) break;
    parts.push_back(std::async(std::launch::async, [=] {
      FuzzSummary partial;
      for (long i = begin; i < end; ++i) {
        fuzz_one(config.base_seed + static_cast<std::uint64_t>(i), config, partial);
      }
      return partial;
    }));
  }
  FuzzSummary summary;
  for (auto& part : parts) {
    FuzzSummary partial = part.get();
    summary.instances += partial.instances;
    summary.profile_disagreements += partial.profile_disagreements;
    summary.closure_equivalence_failures += partial.closure_equivalence_failures;
    summary.functional_order_failures += partial.functional_order_failures;
    summary.trace_bound_failures += partial.trace_bound_failures;
    summary.trace_r_preservation_failures += partial.trace_r_preservation_failures;
    summary.th1_certified += partial.th1_certified;
    summary.th2_certified += partial.th2_certified;
    summary.th3_certified += partial.th3_certified;
    summary.th4_certified += partial.th4_certified;
    summary.theorem_violations += partial.theorem_violations;
    summary.violation_details.insert(summary.violation_details.end(),
                                     partial.violation_details.begin(),
                                     partial.violation_details.end());
  }
  return summary;
}

}  // namespace oracle
}  // namespace relfix
