#include <doctest.h>

#include "enumeration_oracle.hpp"
#include "relfix/certifier.hpp"
#include "relfix/instance.hpp"
#include "relfix/oracle.hpp"

using namespace relfix;

namespace {

Instance load_bundled(const std::string& name) {
  return parse_instance(bundled_instance(name));
}

FiniteSpace small_space(int n) {
  FiniteSpace space;
  for (int i = 0; i < n; ++i) space.labels.push_back(std::to_string(i));
  space.dist.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) space.dist[u][v] = rat_abs(Rat(u) - Rat(v));
  return space;
}

}  // namespace

TEST_CASE("finite decision procedures carry trivially-holds verdicts") {
  FiniteSpace space = small_space(3);
  space.relation.pairs = {{0, 1}};
  CHECK(r_complete_finite(space).kind == VerdictKind::TriviallyHolds);
  CHECK(d_self_closed_finite(space, space.relation, nullptr).kind ==
        VerdictKind::TriviallyHolds);
}

TEST_CASE("finite reports mark the sequence-quantified entries as trivially-holds") {
  FiniteSpace space = small_space(2);
  space.relation.pairs = {{0, 0}, {0, 1}};
  FiniteMappingPair pair{{0, 0}, {0, 1}};
  RelationalSpace rspace{space};
  MappingPair rpair{pair};
  ContractionCondition cond;
  cond.variant = Variant::MType;
  cond.phi = ComparisonFunction::linear(Rat(1, 2));
  HypothesisReport report = check_theorem(TheoremId::Th1, rspace, rpair, cond);
  for (const char* label : {"f", "k2", "l2", "l3"}) {
    CAPTURE(label);
    REQUIRE(report.find(label));
    CHECK(report.find(label)->kind == VerdictKind::TriviallyHolds);
  }
}

TEST_CASE("the g-variant of self-closedness transports diagonal loops") {
  FiniteSpace space = small_space(3);
  FiniteRelation r;
  r.pairs = {{0, 0}, {1, 2}};
  std::vector<int> good_g = {0, 2, 1};  // g(0)=0 keeps the loop
  CHECK(d_self_closed_finite(space, r, &good_g).kind == VerdictKind::Holds);
  std::vector<int> bad_g = {1, 0, 2};  // (0,0) in R but (g0,g0) = (1,1) is not
  Verdict verdict = d_self_closed_finite(space, r, &bad_g);
  CHECK(verdict.kind == VerdictKind::Fails);
  CHECK(verdict.witness == std::vector<std::string>{"0"});
}

TEST_CASE("the identity g reduces the g-variant to the plain one") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    oracle::InstanceGeneratorConfig config;
    config.carrier_size = 2 + static_cast<int>(seed % 3);
    config.seed = seed * 7 + 5;
    oracle::GeneratedInstance instance = oracle::random_instance(config);
    std::vector<int> identity(instance.space.size());
    for (int i = 0; i < instance.space.size(); ++i) identity[i] = i;
    Verdict with_identity =
        d_self_closed_finite(instance.space, instance.space.relation, &identity);
    CHECK(with_identity.certifies());
  }
}

TEST_CASE("R-compatibility flags the constant-sequence counterexample") {
  FiniteSpace space = small_space(3);
  FiniteRelation r;
  r.pairs = {{1, 1}};
  // u=0 has f(0)=g(0)=1, so v=1 is a point of coincidence with (1,1) in R,
  // but f(1) != g(1).
  FiniteMappingPair pair{{1, 2, 2}, {1, 1, 0}};
  Verdict verdict = r_compatible_finite(space, r, pair);
  CHECK(verdict.kind == VerdictKind::Fails);
  CHECK(verdict.witness == std::vector<std::string>{"1"});

  // A commuting pair is compatible.
  FiniteMappingPair commuting{{1, 1, 1}, {1, 1, 1}};
  CHECK(r_compatible_finite(space, r, commuting).certifies());
}

TEST_CASE("derived characterizations agree with bounded sequence enumeration") {
  long checked = 0;
  for (std::uint64_t seed = 1; checked < 150; ++seed) {
    oracle::InstanceGeneratorConfig config;
    config.carrier_size = 2 + static_cast<int>(seed % 3);  // 2..4
    config.relation_density = (seed % 2 == 0) ? Rat(1, 3) : Rat(3, 5);
    config.seed = seed * 101 + 17;
    oracle::GeneratedInstance instance = oracle::random_instance(config);
    ++checked;
    CAPTURE(seed);

    bool complete_claim = r_complete_finite(instance.space).certifies();
    CHECK(complete_claim ==
          testing::oracle_r_complete(instance.space, instance.space.relation));

    Verdict dsc =
        d_self_closed_finite(instance.space, instance.space.relation, &instance.pair.g);
    CHECK(dsc.certifies() == testing::oracle_d_self_closed_g(
                                 instance.space, instance.space.relation, instance.pair.g));

    Verdict compat =
        r_compatible_finite(instance.space, instance.space.relation, instance.pair);
    CHECK(compat.certifies() == testing::oracle_r_compatible(
                                    instance.space, instance.space.relation, instance.pair));
  }
}

TEST_CASE("the cone example certifies th1 with exact h, i, m verdicts") {
  Instance instance = load_bundled("example_5_1");
  HypothesisReport report = check_theorem(TheoremId::Th1, instance.space, instance.pair,
                                          instance.condition, instance.asserted);
  CHECK(report.certified);
  REQUIRE(report.find("h"));
  CHECK(report.find("h")->kind == VerdictKind::Holds);
  CHECK(report.find("i")->kind == VerdictKind::Holds);
  CHECK(report.find("m")->kind == VerdictKind::Holds);
  CHECK(report.find("g")->kind == VerdictKind::Holds);
  CHECK(report.find("k1")->kind == VerdictKind::Holds);
  CHECK(report.find("f")->kind == VerdictKind::AssertedHolds);
  CHECK(report.find("k2")->kind == VerdictKind::AssertedHolds);
  REQUIRE(report.conclusion);
  CHECK(report.conclusion->coincidence_points == std::vector<std::string>{"0"});
}

TEST_CASE("the cone example certifies th2 and th4 with the unique fixed point 0") {
  Instance instance = load_bundled("example_5_1");
  for (TheoremId theorem : {TheoremId::Th2, TheoremId::Th4}) {
    HypothesisReport report = check_theorem(theorem, instance.space, instance.pair,
                                            instance.condition, instance.asserted);
    CAPTURE(theorem_name(theorem));
    CHECK(report.certified);
    REQUIRE(report.conclusion);
    CHECK(report.conclusion->common_fixed_points == std::vector<std::string>{"0"});
    CHECK(report.conclusion->unique_common_fixed_point);
  }
}

TEST_CASE("the cone example rejects cor0 through the asserted incompleteness of X") {
  Instance instance = load_bundled("example_5_1");
  HypothesisReport report = check_theorem(TheoremId::Cor0, instance.space, instance.pair,
                                          instance.condition, instance.asserted);
  CHECK(!report.certified);
  REQUIRE(report.find("n"));
  CHECK(report.find("n")->kind == VerdictKind::AssertedFails);
}

TEST_CASE("the split example certifies th1/th2/th4 without any assertions") {
  Instance instance = load_bundled("example_5_2");
  CHECK(instance.asserted.empty());
  for (TheoremId theorem : {TheoremId::Th1, TheoremId::Th2, TheoremId::Th4}) {
    HypothesisReport report = check_theorem(theorem, instance.space, instance.pair,
                                            instance.condition, instance.asserted);
    CAPTURE(theorem_name(theorem));
    CHECK(report.certified);
    REQUIRE(report.conclusion);
    CHECK(report.conclusion->coincidence_points == std::vector<std::string>{"0"});
  }
  HypothesisReport th1 = check_theorem(TheoremId::Th1, instance.space, instance.pair,
                                       instance.condition, instance.asserted);
  CHECK(th1.find("f")->kind == VerdictKind::TriviallyHolds);
  CHECK(th1.find("k2")->kind == VerdictKind::TriviallyHolds);
  const Verdict* m = th1.find("m");
  REQUIRE(m);
  REQUIRE(m->binding);
  CHECK(m->binding->u == "2");
  CHECK(m->binding->lhs == Rat(1));
  CHECK(m->binding->rhs == Rat(5, 3));
}

TEST_CASE("the split example refutes the linear condition with the class witness") {
  Instance instance = load_bundled("example_5_2");
  ContractionCondition linear;
  linear.variant = Variant::Linear;
  linear.alpha = Rat(9, 10);
  HypothesisReport report = check_theorem(TheoremId::Th1, instance.space, instance.pair,
                                          linear, instance.asserted);
  CHECK(!report.certified);
  const Verdict* j = report.find("j");
  REQUIRE(j);
  CHECK(j->kind == VerdictKind::Fails);
  REQUIRE(j->binding);
  CHECK(j->binding->u == "2");
  CHECK(j->binding->v == "irrational(0,4)");
  CHECK(j->binding->lhs == Rat(1));
  CHECK(j->binding->rhs == Rat(9, 10));
}

TEST_CASE("th3 certifies on an injective instance and counts C(f,g)") {
  FiniteSpace space = small_space(2);
  space.relation.pairs = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  FiniteMappingPair pair{{0, 0}, {0, 1}};  // g injective, C(f,g) = {0}
  RelationalSpace rspace{space};
  MappingPair rpair{pair};
  ContractionCondition cond;
  cond.variant = Variant::MType;
  cond.phi = ComparisonFunction::linear(Rat(1, 2));
  HypothesisReport report = check_theorem(TheoremId::Th3, rspace, rpair, cond);
  CHECK(report.certified);
  REQUIRE(report.conclusion);
  CHECK(report.conclusion->unique_coincidence_point);
}

TEST_CASE("cor10 on the universal relation certifies and finds the unique point") {
  FiniteSpace space = small_space(2);
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v) space.relation.pairs.insert({u, v});
  FiniteMappingPair pair{{0, 0}, {0, 1}};
  RelationalSpace rspace{space};
  MappingPair rpair{pair};
  ContractionCondition cond;
  cond.variant = Variant::UniversalN;
  cond.phi = ComparisonFunction::linear(Rat(1, 2));
  HypothesisReport report = check_theorem(TheoremId::Cor10, rspace, rpair, cond);
  CHECK(report.certified);
  REQUIRE(report.conclusion);
  CHECK(report.conclusion->unique_common_fixed_point);
}

TEST_CASE("computable injectivity refutes (s) when both maps collapse cells") {
  // f constant everywhere, g constant on an interval piece: neither map is
  // one-to-one, decided exactly.
  Instance instance = parse_instance(bundled_instance("example_5_1"));
  HypothesisReport report = check_theorem(TheoremId::Th3, instance.space, instance.pair,
                                          instance.condition, instance.asserted);
  REQUIRE(report.find("s"));
  CHECK(report.find("s")->kind == VerdictKind::Fails);
  CHECK(!report.certified);
}

TEST_CASE("cor5 derives its coefficient from a linear M-type condition") {
  FiniteSpace space = small_space(2);
  space.relation.pairs = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  FiniteMappingPair pair{{0, 0}, {0, 1}};
  RelationalSpace rspace{space};
  MappingPair rpair{pair};
  ContractionCondition m_type;
  m_type.variant = Variant::MType;
  m_type.phi = ComparisonFunction::linear(Rat(2, 5));
  HypothesisReport report = check_theorem(TheoremId::Cor5, rspace, rpair, m_type);
  REQUIRE(report.find("q1"));
  CHECK(report.find("q1")->kind == VerdictKind::Holds);
  CHECK(report.certified);
}

TEST_CASE("corollary variants enforce their own condition shapes") {
  FiniteSpace space = small_space(2);
  space.relation.pairs = {{0, 0}};
  FiniteMappingPair pair{{0, 0}, {0, 1}};
  RelationalSpace rspace{space};
  MappingPair rpair{pair};
  ContractionCondition kannan;
  kannan.variant = Variant::Kannan;
  kannan.k = Rat(1, 3);
  CHECK_THROWS_AS(check_theorem(TheoremId::Cor9, rspace, rpair, kannan),
                  std::invalid_argument);
  CHECK(check_theorem(TheoremId::Cor8, rspace, rpair, kannan).certified);
}

TEST_CASE("a certified cor5 instance also certifies cor2 with the linear phi") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    oracle::InstanceGeneratorConfig config;
    config.carrier_size = 2 + static_cast<int>(seed % 3);
    config.seed = seed * 23 + 11;
    oracle::GeneratedInstance generated = oracle::random_instance(config);
    RelationalSpace rspace{generated.space};
    MappingPair rpair{generated.pair};
    ContractionCondition scaled;
    scaled.variant = Variant::ScaledN;
    scaled.k = generated.phi_k;
    HypothesisReport cor5 = check_theorem(TheoremId::Cor5, rspace, rpair, scaled);
    if (!cor5.certified) continue;
    ContractionCondition ntype;
    ntype.variant = Variant::NType;
    ntype.phi = ComparisonFunction::linear(generated.phi_k);
    HypothesisReport cor2 = check_theorem(TheoremId::Cor2, rspace, rpair, ntype);
    CAPTURE(seed);
    CHECK(cor2.certified);
  }
}

TEST_CASE("the split instance and its finite class model certify identically") {
  // The computable instance factors through seven classes; a finite model
  // with one labeled point per class (slot coordinates immaterial to the
  // hypotheses, which only read image values) must reach the same verdicts.
  Instance computable = parse_instance(bundled_instance("example_5_2"));

  FiniteSpace model;
  model.labels = {"0", "1", "2", "3", "q1", "q2", "q3", "s"};
  std::vector<Rat> coords = {Rat(0),    Rat(1),    Rat(2),    Rat(3),
                             Rat(1, 2), Rat(3, 2), Rat(7, 2), Rat(5, 2)};
  model.dist.assign(8, std::vector<Rat>(8, Rat(0)));
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) model.dist[u][v] = rat_abs(coords[u] - coords[v]);
  model.relation.pairs = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 3}};
  model.subspace = std::vector<int>{0, 1};
  // Classes: points 0,1,2; rational cells q1,q2,q3 (f=0, g=3); irrational s
  // (f=1, g=3).
  FiniteMappingPair pair{{0, 0, 0, 0, 0, 0, 0, 1}, {0, 1, 2, 3, 3, 3, 3, 3}};
  RelationalSpace model_space{model};
  MappingPair model_pair{pair};

  for (TheoremId theorem : {TheoremId::Th1, TheoremId::Th2, TheoremId::Th4}) {
    CAPTURE(theorem_name(theorem));
    HypothesisReport a = check_theorem(theorem, computable.space, computable.pair,
                                       computable.condition, computable.asserted);
    HypothesisReport b = check_theorem(theorem, model_space, model_pair,
                                       computable.condition, {});
    CHECK(a.certified == b.certified);
    for (const auto& entry : a.entries) {
      // The (l)-branch is decidable on finite carriers only; every other
      // entry must agree across the two presentations.
      if (entry.label == "l1" || entry.label == "l2" || entry.label == "l3") continue;
      const Verdict* other = b.find(entry.label);
      if (!other) continue;
      CAPTURE(entry.label);
      CHECK(entry.verdict.certifies() == other->certifies());
    }
    if (a.conclusion && b.conclusion) {
      CHECK(a.conclusion->coincidence_points == b.conclusion->coincidence_points);
      CHECK(a.conclusion->common_fixed_points == b.conclusion->common_fixed_points);
    }
  }
}

TEST_CASE("sampling still refutes exactly: a found counterexample is a real witness") {
  ComputableSpace space;
  space.carrier = Region::interval(Rat(0), false, Rat(1), false);
  space.relation.kind = CRelKind::Universal;
  CMappingPair pair;
  pair.f = CMap(space.carrier, {{space.carrier, MapRule::affine(Rat(1, 2), Rat(1, 4))}});
  pair.g = CMap(space.carrier, {{space.carrier, MapRule::affine(Rat(1), Rat(0))}});
  ContractionCondition cond;
  cond.variant = Variant::MType;
  cond.phi = ComparisonFunction::linear(Rat(1, 10));
  ContractionOutcome outcome =
      check_contraction(cond, pair, space, space.relation, CheckMode::Auto, 64);
  REQUIRE(!outcome.holds);
  REQUIRE(outcome.violation);
  // Re-evaluate the reported witness independently.
  Rat u = rat_parse(outcome.violation->u), v = rat_parse(outcome.violation->v);
  Rat lhs = space.d(pair.f.eval(u), pair.f.eval(v));
  CHECK(lhs == outcome.violation->lhs);
  CHECK(lhs > outcome.violation->rhs);
}

TEST_CASE("tabulated comparison functions run through the whole pipeline") {
  std::string text = R"({
    "carrier": ["0", "1"],
    "metric": {"table": [["0", "1"], ["1", "0"]]},
    "relation": {"pairs": [["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"]]},
    "f": ["0", "0"],
    "g": ["0", "1"],
    "condition": {"variant": "m",
                  "phi": {"kind": "tabulated",
                          "points": [["0", "0"], ["1", "1/2"], ["2", "1"]],
                          "tail_ratio": "1/2", "tail_from": 1}}
  })";
  Instance instance = parse_instance(text);
  REQUIRE(instance.condition);
  CHECK(instance.condition->phi->kind == PhiKind::Tabulated);
  HypothesisReport report = check_theorem(TheoremId::Th1, instance.space, instance.pair,
                                          instance.condition, instance.asserted);
  CHECK(report.certified);
  CHECK(error_bound(*instance.condition->phi, Rat(1), 0) > 0);
}

TEST_CASE("non-reducible computable instances fall back to flagged sampling") {
  ComputableSpace space;
  space.carrier = Region::interval(Rat(0), false, Rat(1), false);
  space.relation.kind = CRelKind::Universal;
  CMappingPair pair;
  pair.f = CMap(space.carrier, {{space.carrier, MapRule::affine(Rat(1, 2), Rat(1, 4))}});
  pair.g = CMap(space.carrier, {{space.carrier, MapRule::affine(Rat(1), Rat(0))}});
  REQUIRE(!build_quotient(space, pair));

  ContractionCondition cond;
  cond.variant = Variant::MType;
  cond.phi = ComparisonFunction::linear(Rat(2, 3));
  ContractionOutcome outcome =
      check_contraction(cond, pair, space, space.relation, CheckMode::Auto, 24);
  CHECK(outcome.holds);
  CHECK(!outcome.exhaustive);
  CHECK(outcome.note.find("sampled") != std::string::npos);
  CHECK_THROWS_AS(check_contraction(cond, pair, space, space.relation,
                                    CheckMode::Exhaustive),
                  std::invalid_argument);

  RelationalSpace rspace{space};
  MappingPair rpair{pair};
  HypothesisReport report = check_theorem(TheoremId::Th1, rspace, rpair, cond);
  const Verdict* m = report.find("m");
  REQUIRE(m);
  CHECK(m->kind == VerdictKind::HoldsOnSamples);
  CHECK(!report.certified);  // sampled verdicts never certify
}

TEST_CASE("an invalid comparison function fails the contraction hypothesis") {
  Instance instance = load_bundled("example_5_2");
  ContractionCondition cond;
  cond.variant = Variant::MType;
  cond.phi = ComparisonFunction::linear(Rat(1));  // identity is outside the family
  HypothesisReport report = check_theorem(TheoremId::Th1, instance.space, instance.pair,
                                          cond, instance.asserted);
  CHECK(!report.certified);
  CHECK(report.find("m")->kind == VerdictKind::Fails);
}
