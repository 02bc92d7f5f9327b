#include <doctest.h>

#include "relfix/contraction.hpp"
#include "relfix/oracle.hpp"

using namespace relfix;

namespace {

FiniteSpace table_space(const std::vector<Rat>& coords) {
  FiniteSpace space;
  int n = static_cast<int>(coords.size());
  for (int i = 0; i < n; ++i) space.labels.push_back(std::to_string(i));
  space.dist.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) space.dist[u][v] = rat_abs(coords[u] - coords[v]);
  return space;
}

ComputableSpace example52_space() {
  ComputableSpace space;
  space.carrier = Region::interval(Rat(0), true, Rat(4), false);
  space.relation.kind = CRelKind::List;
  space.relation.pairs = {{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(0)},
                          {Rat(1), Rat(1)}, {Rat(1), Rat(2)}, {Rat(2), Rat(3)}};
  return space;
}

CMappingPair example52_pair(const ComputableSpace& space) {
  Region rationals = Region(space.carrier.rationals(), IrrSet());
  CMappingPair pair;
  pair.f = CMap(space.carrier, {{rationals, MapRule::constant(Rat(0))},
                                {space.carrier, MapRule::constant(Rat(1))}});
  pair.g = CMap(space.carrier, {{Region::point(Rat(0)), MapRule::constant(Rat(0))},
                                {Region::point(Rat(1)), MapRule::constant(Rat(1))},
                                {Region::point(Rat(2)), MapRule::constant(Rat(2))},
                                {space.carrier, MapRule::constant(Rat(3))}});
  return pair;
}

std::vector<Rat> grid100() {
  std::vector<Rat> grid;
  for (int j = 1; j <= 100; ++j) {
    Rat s(j, 10);
    s.canonicalize();
    grid.push_back(s);
  }
  return grid;
}

}  // namespace

TEST_CASE("M and N functionals reproduce the worked case values") {
  // Image distances of the (2, irrational) class pair: d(2,3)=1, d(2,0)=2,
  // d(3,1)=2, d(2,1)=1, d(3,0)=3.
  ComputableSpace space = example52_space();
  CMappingPair pair = example52_pair(space);
  Point u = Point::val(Rat(2));
  Point v = Point::irr(Rat(0), Rat(4));
  CHECK(m_value(pair, space, u, v) == Rat(2));  // max{1,2,2,2}
  CHECK(n_value(pair, space, u, v) == Rat(2));  // max{1,2,2}
}

TEST_CASE("M and N vanish when u = v is a coincidence point") {
  FiniteSpace space = table_space({Rat(0), Rat(1), Rat(2)});
  FiniteMappingPair pair{{0, 0, 0}, {0, 2, 1}};  // f(0)=g(0)=0
  CHECK(m_value(pair, space, 0, 0) == Rat(0));
  CHECK(n_value(pair, space, 0, 0) == Rat(0));
}

TEST_CASE("m_value equals an independent recomputation of the four terms") {
  FiniteSpace space = table_space({Rat(0), Rat(2), Rat(5), Rat(9, 2)});
  FiniteMappingPair pair{{1, 3, 0, 2}, {2, 0, 3, 1}};
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      int fu = pair.f[u], gu = pair.g[u], fv = pair.f[v], gv = pair.g[v];
      Rat t1 = space.d(gu, gv), t2 = space.d(gu, fu), t3 = space.d(gv, fv);
      Rat t4 = (space.d(gu, fv) + space.d(gv, fu)) / 2;
      Rat expected = std::max(std::max(t1, t2), std::max(t3, t4));
      CHECK(m_value(pair, space, u, v) == expected);
      CHECK(n_value(pair, space, u, v) <= m_value(pair, space, u, v));
    }
  }
}

TEST_CASE("validate_phi accepts the worked linear candidates") {
  PhiValidation third = validate_phi(ComparisonFunction::linear(Rat(1, 3)), grid100(), 24, Rat(0));
  CHECK(third.valid);
  CHECK(third.summability_exact);
  PhiValidation five_sixth =
      validate_phi(ComparisonFunction::linear(Rat(5, 6)), grid100(), 24, Rat(0));
  CHECK(five_sixth.valid);
}

TEST_CASE("validate_phi rejects the identity and k >= 1") {
  PhiValidation identity = validate_phi(ComparisonFunction::linear(Rat(1)), grid100(), 8, Rat(0));
  CHECK(!identity.valid);
  PhiValidation above = validate_phi(ComparisonFunction::linear(Rat(3, 2)), grid100(), 8, Rat(0));
  CHECK(!above.valid);
}

TEST_CASE("validate_phi checks tabulated candidates against their declaration") {
  ComparisonFunction phi;
  phi.kind = PhiKind::Tabulated;
  phi.table = {{Rat(0), Rat(0)}, {Rat(1), Rat(1, 2)}, {Rat(2), Rat(1)}, {Rat(10), Rat(5)}};
  phi.tail_ratio = Rat(1, 2);
  phi.tail_from = 1;
  PhiValidation ok = validate_phi(phi, grid100(), 16, Rat(0));
  CHECK(ok.valid);
  CHECK(!ok.summability_exact);  // checked, not proved

  ComparisonFunction bad = phi;
  bad.tail_ratio = Rat(1, 3);  // orbit contracts by 1/2, not 1/3
  CHECK(!validate_phi(bad, grid100(), 16, Rat(0)).valid);
}

TEST_CASE("contraction certificate for the worked instance pins the binding class") {
  ComputableSpace space = example52_space();
  CMappingPair pair = example52_pair(space);
  ContractionCondition cond;
  cond.variant = Variant::MType;
  cond.phi = ComparisonFunction::linear(Rat(5, 6));
  ContractionOutcome outcome =
      check_contraction(cond, pair, space, space.relation);
  REQUIRE(outcome.holds);
  CHECK(outcome.exhaustive);
  REQUIRE(outcome.binding);
  CHECK(outcome.binding->u == "2");
  CHECK(outcome.binding->v == "irrational(0,4)");
  CHECK(outcome.binding->lhs == Rat(1));
  CHECK(outcome.binding->rhs == Rat(5, 3));
}

TEST_CASE("the linear condition is refuted on the worked instance for every alpha") {
  ComputableSpace space = example52_space();
  CMappingPair pair = example52_pair(space);
  for (const Rat& alpha : {Rat(0), Rat(1, 2), Rat(9, 10), Rat(99, 100)}) {
    ContractionCondition cond;
    cond.variant = Variant::Linear;
    cond.alpha = alpha;
    ContractionOutcome outcome = check_contraction(cond, pair, space, space.relation);
    REQUIRE(!outcome.holds);
    REQUIRE(outcome.violation);
    CHECK(outcome.violation->u == "2");
    CHECK(outcome.violation->v == "irrational(0,4)");
    CHECK(outcome.violation->lhs == Rat(1));
    CHECK(outcome.violation->rhs == Rat(alpha * 1));
  }
}

TEST_CASE("a constant f certifies every variant with a zero left side") {
  ComputableSpace space;
  space.carrier = Region::interval(Rat(-2), false, Rat(4), false);
  space.relation.kind = CRelKind::Cone;
  CMappingPair pair;
  pair.f = CMap(space.carrier, {{space.carrier, MapRule::constant(Rat(0))}});
  pair.g = CMap(space.carrier,
                {{Region::interval(Rat(-2), false, Rat(3), true),
                  MapRule::affine(Rat(1, 3), Rat(0))},
                 {space.carrier, MapRule::constant(Rat(1))}});
  for (Variant variant : {Variant::MType, Variant::NType, Variant::Linear,
                          Variant::Kannan, Variant::UniversalN}) {
    ContractionCondition cond;
    cond.variant = variant;
    cond.phi = ComparisonFunction::linear(Rat(1, 3));
    cond.alpha = Rat(1, 2);
    cond.k = Rat(1, 3);
    ContractionOutcome outcome = check_contraction(cond, pair, space, space.relation);
    CHECK(outcome.holds);
    CHECK(outcome.exhaustive);
  }
}

TEST_CASE("condition constants are range-checked") {
  ContractionCondition cond;
  cond.variant = Variant::Linear;
  cond.alpha = Rat(1);
  CHECK_THROWS_AS(cond.validate_constants(), std::invalid_argument);
  cond.variant = Variant::ScaledN;
  cond.k = Rat(1);
  CHECK_THROWS_AS(cond.validate_constants(), std::invalid_argument);
  cond.variant = Variant::Kannan;
  cond.k = Rat(1, 2);
  CHECK_THROWS_AS(cond.validate_constants(), std::invalid_argument);
  cond.variant = Variant::HardyRogers;
  cond.a = Rat(1, 2);
  cond.b = Rat(1, 4);
  cond.c = Rat(0);
  CHECK_THROWS_AS(cond.validate_constants(), std::invalid_argument);
}

TEST_CASE("an N-type certificate implies the M-type certificate with the same phi") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    oracle::InstanceGeneratorConfig config;
    config.carrier_size = 2 + static_cast<int>(seed % 4);
    config.seed = seed;
    oracle::GeneratedInstance instance = oracle::random_instance(config);
    ContractionCondition n_cond, m_cond;
    n_cond.variant = Variant::NType;
    m_cond.variant = Variant::MType;
    n_cond.phi = m_cond.phi = ComparisonFunction::linear(instance.phi_k);
    ContractionOutcome n_out =
        check_contraction(n_cond, instance.pair, instance.space, instance.space.relation);
    if (n_out.holds) {
      ContractionOutcome m_out = check_contraction(m_cond, instance.pair, instance.space,
                                                   instance.space.relation);
      CHECK(m_out.holds);
    }
  }
}

TEST_CASE("a Hardy-Rogers certificate implies the scaled-N certificate") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    oracle::InstanceGeneratorConfig config;
    config.carrier_size = 2 + static_cast<int>(seed % 4);
    config.seed = seed * 31 + 7;
    oracle::GeneratedInstance instance = oracle::random_instance(config);
    ContractionCondition hr;
    hr.variant = Variant::HardyRogers;
    hr.a = Rat(1, 4);
    hr.b = Rat(1, 8);
    hr.c = Rat(1, 8);
    ContractionOutcome hr_out =
        check_contraction(hr, instance.pair, instance.space, instance.space.relation);
    if (hr_out.holds) {
      ContractionCondition scaled;
      scaled.variant = Variant::ScaledN;
      scaled.k = Rat(hr.a + 2 * hr.b + 2 * hr.c);
      ContractionOutcome scaled_out = check_contraction(scaled, instance.pair,
                                                        instance.space,
                                                        instance.space.relation);
      CHECK(scaled_out.holds);
    }
  }
}

TEST_CASE("closure equivalence holds on generated instances") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    oracle::InstanceGeneratorConfig config;
    config.carrier_size = 2 + static_cast<int>(seed % 5);
    config.seed = seed * 17 + 3;
    oracle::GeneratedInstance instance = oracle::random_instance(config);
    ContractionCondition cond;
    cond.variant = Variant::MType;
    cond.phi = ComparisonFunction::linear(instance.phi_k);
    CHECK(closure_equivalence_check(cond, instance.pair, instance.space,
                                    instance.space.relation));
  }
}

TEST_CASE("closure equivalence is vacuously true off the image of g") {
  FiniteSpace space = table_space({Rat(0), Rat(1), Rat(2)});
  space.relation.pairs = {{2, 2}};  // g never attains 2
  FiniteMappingPair pair{{0, 0, 0}, {0, 1, 0}};
  ContractionCondition cond;
  cond.variant = Variant::MType;
  cond.phi = ComparisonFunction::linear(Rat(1, 2));
  CHECK(closure_equivalence_check(cond, pair, space, space.relation));
  ContractionOutcome outcome = check_contraction(cond, pair, space, space.relation);
  CHECK(outcome.holds);
  CHECK(!outcome.binding);  // no quantified pairs at all
}
