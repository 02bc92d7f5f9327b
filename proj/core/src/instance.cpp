#include "relfix/instance.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace relfix {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message, const std::string& path) {
  throw InputError(message, 0, 0, path);
}

Rat parse_rat_at(const Json& j, const std::string& path) {
  if (!j.is_string()) fail("expected a rational written as a string", path);
  auto parsed = rat_try_parse(j.get<std::string>());
  if (!parsed) fail("not a rational: '" + j.get<std::string>() + "'", path);
  return *parsed;
}

// ---- computable regions ----

Region parse_interval(const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi")) {
    fail("interval needs lo/hi", path);
  }
  Rat lo = parse_rat_at(j.at("lo"), path + ".lo");
  Rat hi = parse_rat_at(j.at("hi"), path + ".hi");
  bool lo_open = j.value("lo_open", false);
  bool hi_open = j.value("hi_open", false);
  if (lo > hi || (lo == hi && (lo_open || hi_open))) fail("empty interval", path);
  return Region::interval(lo, !lo_open, hi, !hi_open);
}

Region parse_region(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("interval")) {
    return parse_interval(j.at("interval"), path + ".interval");
  }
  if (j.is_object() && j.contains("points")) {
    Region out;
    const Json& pts = j.at("points");
    if (!pts.is_array() || pts.empty()) fail("points must be a nonempty array", path);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out = out.unite(Region::point(
          parse_rat_at(pts[i], path + ".points[" + std::to_string(i) + "]")));
    }
    return out;
  }
  fail("expected {\"interval\": ...} or {\"points\": [...]}", path);
}

// A map-piece cell: a point, an interval (optionally restricted to rationals
// or irrationals), or the remainder marker "otherwise".
struct CellDecl {
  bool otherwise = false;
  Region region;
};

CellDecl parse_cell(const Json& j, const std::string& path) {
  CellDecl out;
  if (j.is_string() && j.get<std::string>() == "otherwise") {
    out.otherwise = true;
    return out;
  }
  if (j.is_object() && j.contains("point")) {
    out.region = Region::point(parse_rat_at(j.at("point"), path + ".point"));
    return out;
  }
  if (j.is_object() && j.contains("interval")) {
    Region full = parse_interval(j.at("interval"), path + ".interval");
    std::string numbers = j.value("numbers", "all");
    if (numbers == "all") {
      out.region = full;
    } else if (numbers == "rational") {
      out.region = Region(full.rationals(), IrrSet());
    } else if (numbers == "irrational") {
      out.region = Region(RatSet(), full.irrationals());
    } else {
      fail("numbers must be all/rational/irrational", path + ".numbers");
    }
    return out;
  }
  fail("cell must be {\"point\":..}, {\"interval\":..} or \"otherwise\"", path);
}

CMap parse_cmap(const Json& j, const Region& carrier, const std::string& path) {
  std::vector<std::pair<Region, MapRule>> declared;
  if (j.is_object() && j.contains("constant")) {
    declared.emplace_back(carrier,
                          MapRule::constant(parse_rat_at(j.at("constant"), path)));
  } else if (j.is_object() && j.contains("pieces")) {
    const Json& pieces = j.at("pieces");
    if (!pieces.is_array() || pieces.empty()) fail("pieces must be nonempty", path);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const Json& piece = pieces[i];
      std::string piece_path = path + ".pieces[" + std::to_string(i) + "]";
      if (!piece.is_object() || !piece.contains("on")) fail("piece needs 'on'", piece_path);
      CellDecl cell = parse_cell(piece.at("on"), piece_path + ".on");
      Region region = cell.otherwise ? carrier : cell.region;
      MapRule rule = MapRule::constant(Rat(0));
      if (piece.contains("value")) {
        rule = MapRule::constant(parse_rat_at(piece.at("value"), piece_path + ".value"));
      } else if (piece.contains("affine")) {
        const Json& affine = piece.at("affine");
        rule = MapRule::affine(parse_rat_at(affine.at("scale"), piece_path + ".affine.scale"),
                               parse_rat_at(affine.at("offset"), piece_path + ".affine.offset"));
      } else {
        fail("piece needs 'value' or 'affine'", piece_path);
      }
      declared.emplace_back(std::move(region), rule);
    }
  } else {
    fail("map needs 'constant' or 'pieces'", path);
  }
  try {
    return CMap(carrier, std::move(declared));
  } catch (const std::invalid_argument& e) {
    fail(e.what(), path);
  }
}

// ---- serialization helpers ----

Json interval_json(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed) {
  Json j;
  j["lo"] = rat_str(lo);
  j["hi"] = rat_str(hi);
  if (!lo_closed) j["lo_open"] = true;
  if (!hi_closed) j["hi_open"] = true;
  return j;
}

// Emits a region as a piece-cell list (points, rational/irrational/full
// interval cells). Used for map cells on serialization.
std::vector<Json> region_cells_json(const Region& region) {
  std::vector<Json> cells;
  IrrSet remaining_irr = region.irrationals();
  for (const auto& span : region.rationals().spans()) {
    if (span.lo == span.hi) {
      Json c;
      c["point"] = rat_str(span.lo.x);
      cells.push_back(std::move(c));
      continue;
    }
    Json c;
    c["interval"] =
        interval_json(span.lo.x, span.lo.eps == 0, span.hi.x, span.hi.eps == 0);
    if (IrrSet::interval(span.lo.x, span.hi.x).subset_of(remaining_irr)) {
      remaining_irr = remaining_irr.subtract(IrrSet::interval(span.lo.x, span.hi.x));
    } else {
      c["numbers"] = "rational";
    }
    cells.push_back(std::move(c));
  }
  for (const auto& span : remaining_irr.spans()) {
    Json c;
    c["interval"] = interval_json(span.lo, true, span.hi, true);
    c["numbers"] = "irrational";
    cells.push_back(std::move(c));
  }
  return cells;
}

Json cmap_json(const CMap& map) {
  Json out;
  Json pieces = Json::array();
  for (const auto& piece : map.pieces()) {
    for (auto& cell : region_cells_json(piece.cell)) {
      Json p;
      p["on"] = std::move(cell);
      if (piece.rule.is_constant()) {
        p["value"] = rat_str(piece.rule.offset);
      } else {
        p["affine"] = Json{{"scale", rat_str(piece.rule.scale)},
                           {"offset", rat_str(piece.rule.offset)}};
      }
      pieces.push_back(std::move(p));
    }
  }
  out["pieces"] = std::move(pieces);
  return out;
}

Json region_json(const Region& region) {
  if (region.is_finite_point_set()) {
    Json points = Json::array();
    for (const Rat& p : region.finite_points()) points.push_back(rat_str(p));
    return Json{{"points", std::move(points)}};
  }
  const auto& spans = region.rationals().spans();
  if (spans.size() == 1 &&
      IrrSet::interval(spans[0].lo.x, spans[0].hi.x) == region.irrationals()) {
    return Json{{"interval", interval_json(spans[0].lo.x, spans[0].lo.eps == 0,
                                           spans[0].hi.x, spans[0].hi.eps == 0)}};
  }
  // General case: emit as a cell list under "cells".
  Json cells = Json::array();
  for (auto& c : region_cells_json(region)) cells.push_back(std::move(c));
  return Json{{"cells", std::move(cells)}};
}

Region parse_region_general(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("cells")) {
    Region out;
    const Json& cells = j.at("cells");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      CellDecl cell =
          parse_cell(cells[i], path + ".cells[" + std::to_string(i) + "]");
      if (cell.otherwise) fail("'otherwise' is not allowed here", path);
      out = out.unite(cell.region);
    }
    return out;
  }
  return parse_region(j, path);
}

// ---- conditions ----

ComparisonFunction parse_phi(const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("kind")) fail("phi needs 'kind'", path);
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "linear") {
    Rat k = parse_rat_at(j.at("k"), path + ".k");
    if (k < 0) fail("linear coefficient must be nonnegative", path + ".k");
    return ComparisonFunction::linear(k);
  }
  if (kind == "tabulated") {
    ComparisonFunction phi;
    phi.kind = PhiKind::Tabulated;
    const Json& points = j.at("points");
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Json& entry = points[i];
      if (!entry.is_array() || entry.size() != 2) fail("table entries are pairs", path);
      phi.table.emplace_back(
          parse_rat_at(entry[0], path + ".points[" + std::to_string(i) + "][0]"),
          parse_rat_at(entry[1], path + ".points[" + std::to_string(i) + "][1]"));
    }
    phi.tail_ratio = parse_rat_at(j.at("tail_ratio"), path + ".tail_ratio");
    phi.tail_from = j.value("tail_from", 1);
    return phi;
  }
  fail("phi kind must be linear or tabulated", path + ".kind");
}

Json phi_json(const ComparisonFunction& phi) {
  Json j;
  if (phi.kind == PhiKind::Linear) {
    j["kind"] = "linear";
    j["k"] = rat_str(phi.k);
    return j;
  }
  j["kind"] = "tabulated";
  Json points = Json::array();
  for (const auto& [t, value] : phi.table) {
    points.push_back(Json::array({rat_str(t), rat_str(value)}));
  }
  j["points"] = std::move(points);
  j["tail_ratio"] = rat_str(phi.tail_ratio);
  j["tail_from"] = phi.tail_from;
  return j;
}

ContractionCondition parse_condition(const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("variant")) fail("condition needs 'variant'", path);
  ContractionCondition cond;
  auto variant = variant_from_label(j.at("variant").get<std::string>());
  if (!variant) fail("unknown condition variant", path + ".variant");
  cond.variant = *variant;
  switch (cond.variant) {
    case Variant::MType:
    case Variant::NType:
    case Variant::UniversalN:
      if (!j.contains("phi")) fail("variant requires 'phi'", path);
      cond.phi = parse_phi(j.at("phi"), path + ".phi");
      break;
    case Variant::Linear:
      cond.alpha = parse_rat_at(j.at("alpha"), path + ".alpha");
      break;
    case Variant::ScaledN:
    case Variant::Kannan:
    case Variant::Chatterjea:
      cond.k = parse_rat_at(j.at("k"), path + ".k");
      break;
    case Variant::HardyRogers:
      cond.a = parse_rat_at(j.at("a"), path + ".a");
      cond.b = parse_rat_at(j.at("b"), path + ".b");
      cond.c = parse_rat_at(j.at("c"), path + ".c");
      break;
  }
  try {
    cond.validate_constants();
  } catch (const std::invalid_argument& e) {
    fail(e.what(), path);
  }
  return cond;
}

Json condition_json(const ContractionCondition& cond) {
  Json j;
  j["variant"] = variant_label(cond.variant);
  switch (cond.variant) {
    case Variant::MType:
    case Variant::NType:
    case Variant::UniversalN:
      j["phi"] = phi_json(*cond.phi);
      break;
    case Variant::Linear:
      j["alpha"] = rat_str(cond.alpha);
      break;
    case Variant::ScaledN:
    case Variant::Kannan:
    case Variant::Chatterjea:
      j["k"] = rat_str(cond.k);
      break;
    case Variant::HardyRogers:
      j["a"] = rat_str(cond.a);
      j["b"] = rat_str(cond.b);
      j["c"] = rat_str(cond.c);
      break;
  }
  return j;
}

// ---- finite instances ----

Instance parse_finite(const Json& j, std::string name) {
  FiniteSpace space;
  const Json& carrier = j.at("carrier");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (!carrier[i].is_string()) fail("carrier labels must be strings", "carrier");
    std::string label = carrier[i].get<std::string>();
    if (!seen.insert(label).second) fail("duplicate label '" + label + "'", "carrier");
    space.labels.push_back(std::move(label));
  }
  if (space.labels.empty()) fail("carrier must be nonempty", "carrier");
  int n = space.size();

  if (!j.contains("metric") || !j.at("metric").is_object() ||
      !j.at("metric").contains("table")) {
    fail("finite instance needs {\"metric\": {\"table\": ...}}", "metric");
  }
  const Json& table = j.at("metric").at("table");
  if (!table.is_array() || static_cast<int>(table.size()) != n) {
    fail("metric table must have one row per carrier point", "metric.table");
  }
  space.dist.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int u = 0; u < n; ++u) {
    const Json& row = table[u];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      fail("metric row " + std::to_string(u) + " has wrong length", "metric.table");
    }
    for (int v = 0; v < n; ++v) {
      space.dist[u][v] =
          parse_rat_at(row[v], "metric.table[" + std::to_string(u) + "][" +
                                   std::to_string(v) + "]");
    }
  }

  auto resolve = [&](const Json& label_json, const std::string& path) {
    if (!label_json.is_string()) fail("expected a carrier label", path);
    std::string label = label_json.get<std::string>();
    auto index = space.label_index(label);
    if (!index) fail("dangling point label '" + label + "'", path);
    return *index;
  };

  if (!j.contains("relation") || !j.at("relation").is_object() ||
      !j.at("relation").contains("pairs")) {
    fail("finite instance needs {\"relation\": {\"pairs\": ...}}", "relation");
  }
  const Json& pairs = j.at("relation").at("pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Json& pair = pairs[i];
    if (!pair.is_array() || pair.size() != 2) fail("relation entries are pairs", "relation.pairs");
    std::string path = "relation.pairs[" + std::to_string(i) + "]";
    space.relation.pairs.insert({resolve(pair[0], path), resolve(pair[1], path)});
  }
  if (space.relation.empty()) fail("the relation must be nonempty", "relation.pairs");

  auto parse_map = [&](const char* key) {
    const Json& map_json = j.at(key);
    const Json& values = map_json.is_object() ? map_json.at("values") : map_json;
    if (!values.is_array() || static_cast<int>(values.size()) != n) {
      fail(std::string(key) + " needs one value per carrier point", key);
    }
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i) {
      map[i] = resolve(values[i], std::string(key) + "[" + std::to_string(i) + "]");
    }
    return map;
  };
  FiniteMappingPair pair;
  pair.f = parse_map("f");
  pair.g = parse_map("g");

  if (j.contains("Y")) {
    const Json& y = j.at("Y");
    if (!y.is_array() || y.empty()) fail("Y must be a nonempty label array", "Y");
    std::vector<int> subspace;
    for (std::size_t i = 0; i < y.size(); ++i) {
      subspace.push_back(resolve(y[i], "Y[" + std::to_string(i) + "]"));
    }
    std::sort(subspace.begin(), subspace.end());
    subspace.erase(std::unique(subspace.begin(), subspace.end()), subspace.end());
    space.subspace = std::move(subspace);
  }

  return Instance{std::move(name), RelationalSpace(std::move(space)),
                  MappingPair(std::move(pair)), std::nullopt, std::nullopt, {}};
}

// ---- computable instances ----

Instance parse_computable(const Json& j, std::string name) {
  ComputableSpace space;
  space.carrier = parse_region(j.at("carrier"), "carrier");
  if (space.carrier.empty()) fail("carrier must be nonempty", "carrier");

  if (!j.contains("metric") || !j.at("metric").is_string() ||
      j.at("metric").get<std::string>() != "absolute-difference") {
    fail("computable instances use \"metric\": \"absolute-difference\"", "metric");
  }

  const Json& relation = j.at("relation");
  if (!relation.is_object() || !relation.contains("kind")) {
    fail("relation needs 'kind'", "relation");
  }
  std::string kind = relation.at("kind").get<std::string>();
  if (kind == "cone") {
    space.relation.kind = CRelKind::Cone;
  } else if (kind == "universal") {
    space.relation.kind = CRelKind::Universal;
  } else if (kind == "list") {
    space.relation.kind = CRelKind::List;
    const Json& pairs = relation.at("pairs");
    if (!pairs.is_array() || pairs.empty()) {
      fail("the relation must be nonempty", "relation.pairs");
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const Json& pair = pairs[i];
      std::string path = "relation.pairs[" + std::to_string(i) + "]";
      if (!pair.is_array() || pair.size() != 2) fail("relation entries are pairs", path);
      Rat a = parse_rat_at(pair[0], path + "[0]");
      Rat b = parse_rat_at(pair[1], path + "[1]");
      if (!space.carrier.contains(a) || !space.carrier.contains(b)) {
        fail("relation pair references a point outside the carrier", path);
      }
      space.relation.pairs.emplace_back(std::move(a), std::move(b));
    }
  } else {
    fail("relation kind must be cone/universal/list", "relation.kind");
  }
  space.relation.symmetrized = relation.value("symmetrized", false);

  CMappingPair pair;
  pair.f = parse_cmap(j.at("f"), space.carrier, "f");
  pair.g = parse_cmap(j.at("g"), space.carrier, "g");
  for (const char* key : {"f", "g"}) {
    const CMap& map = (key[0] == 'f') ? pair.f : pair.g;
    Region escape = map.image_all().subtract(space.carrier);
    if (!escape.empty()) {
      fail(std::string(key) + " maps outside the carrier on " + escape.to_text(), key);
    }
  }

  if (j.contains("Y")) {
    Region y = parse_region_general(j.at("Y"), "Y");
    if (y.empty()) fail("Y must be nonempty", "Y");
    if (!y.subset_of(space.carrier)) fail("Y must be a subset of the carrier", "Y");
    space.subspace = std::move(y);
  }

  return Instance{std::move(name), RelationalSpace(std::move(space)),
                  MappingPair(std::move(pair)), std::nullopt, std::nullopt, {}};
}

void line_col_from_offset(const std::string& text, std::size_t offset, int* line,
                          int* col) {
  int l = 1, c = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++l;
      c = 1;
    } else {
      ++c;
    }
  }
  *line = l;
  *col = c;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 0, col = 0;
    line_col_from_offset(text, e.byte > 0 ? e.byte - 1 : 0, &line, &col);
    throw InputError(std::string("JSON parse error: ") + e.what(), line, col);
  }
  if (!j.is_object()) throw InputError("instance document must be a JSON object");
  if (!j.contains("carrier")) throw InputError("instance needs 'carrier'", 0, 0, "carrier");

  std::string name = j.value("name", "");
  Instance instance = j.at("carrier").is_array() ? parse_finite(j, name)
                                                 : parse_computable(j, name);

  try {
    if (j.contains("condition")) {
      instance.condition = parse_condition(j.at("condition"), "condition");
    }
    if (j.contains("theorem")) {
      auto theorem = theorem_from_name(j.at("theorem").get<std::string>());
      if (!theorem) fail("unknown theorem selector", "theorem");
      instance.theorem = theorem;
    }
    if (j.contains("asserted")) {
      for (const auto& [label, value] : j.at("asserted").items()) {
        if (value.is_boolean()) {
          instance.asserted[label] = value.get<bool>();
        } else if (value.is_string() &&
                   (value == "holds" || value == "fails")) {
          instance.asserted[label] = (value == "holds");
        } else {
          fail("asserted entries are 'holds'/'fails' or booleans", "asserted." + label);
        }
      }
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  Json j;
  if (!instance.name.empty()) j["name"] = instance.name;
  if (instance.space.is_finite()) {
    const FiniteSpace& space = instance.space.finite();
    const FiniteMappingPair& pair = instance.pair.finite();
    j["carrier"] = space.labels;
    Json table = Json::array();
    for (int u = 0; u < space.size(); ++u) {
      Json row = Json::array();
      for (int v = 0; v < space.size(); ++v) row.push_back(rat_str(space.d(u, v)));
      table.push_back(std::move(row));
    }
    j["metric"] = Json{{"table", std::move(table)}};
    Json pairs = Json::array();
    for (const auto& [u, v] : space.relation.pairs) {
      pairs.push_back(Json::array({space.labels[u], space.labels[v]}));
    }
    j["relation"] = Json{{"pairs", std::move(pairs)}};
    auto map_values = [&](const std::vector<int>& map) {
      Json values = Json::array();
      for (int v : map) values.push_back(space.labels[v]);
      return Json{{"values", std::move(values)}};
    };
    j["f"] = map_values(pair.f);
    j["g"] = map_values(pair.g);
    if (space.subspace) {
      Json y = Json::array();
      for (int u : *space.subspace) y.push_back(space.labels[u]);
      j["Y"] = std::move(y);
    }
  } else {
    const ComputableSpace& space = instance.space.computable();
    const CMappingPair& pair = instance.pair.computable();
    j["carrier"] = region_json(space.carrier);
    j["metric"] = "absolute-difference";
    Json relation;
    switch (space.relation.kind) {
      case CRelKind::Cone: relation["kind"] = "cone"; break;
      case CRelKind::Universal: relation["kind"] = "universal"; break;
      case CRelKind::List: {
        relation["kind"] = "list";
        Json pairs = Json::array();
        for (const auto& [a, b] : space.relation.pairs) {
          pairs.push_back(Json::array({rat_str(a), rat_str(b)}));
        }
        relation["pairs"] = std::move(pairs);
        break;
      }
    }
    if (space.relation.symmetrized) relation["symmetrized"] = true;
    j["relation"] = std::move(relation);
    j["f"] = cmap_json(pair.f);
    j["g"] = cmap_json(pair.g);
    if (space.subspace) j["Y"] = region_json(*space.subspace);
  }
  if (instance.condition) j["condition"] = condition_json(*instance.condition);
  if (instance.theorem) j["theorem"] = theorem_name(*instance.theorem);
  if (!instance.asserted.empty()) {
    Json asserted;
    for (const auto& [label, value] : instance.asserted) {
      asserted[label] = value ? "holds" : "fails";
    }
    j["asserted"] = std::move(asserted);
  }
  return j.dump(2) + "\n";
}

namespace {

bool phi_equal(const ComparisonFunction& a, const ComparisonFunction& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == PhiKind::Linear) return a.k == b.k;
  return a.table == b.table && a.tail_ratio == b.tail_ratio && a.tail_from == b.tail_from;
}

bool condition_equal(const ContractionCondition& a, const ContractionCondition& b) {
  if (a.variant != b.variant) return false;
  if (a.phi.has_value() != b.phi.has_value()) return false;
  if (a.phi && !phi_equal(*a.phi, *b.phi)) return false;
  return a.alpha == b.alpha && a.k == b.k && a.a == b.a && a.b == b.b && a.c == b.c;
}

// Semantic equality: same domain and pointwise-equal values. The piece lists
// may differ (serialization expands remainder cells).
bool cmap_equal(const CMap& a, const CMap& b) {
  Region domain_a, domain_b;
  for (const auto& p : a.pieces()) domain_a = domain_a.unite(p.cell);
  for (const auto& p : b.pieces()) domain_b = domain_b.unite(p.cell);
  if (!(domain_a == domain_b)) return false;
  return domain_a.subset_of(a.equal_set(b));
}

}  // namespace

bool instances_equal(const Instance& a, const Instance& b) {
  if (a.name != b.name) return false;
  if (a.space.is_finite() != b.space.is_finite()) return false;
  if (a.space.is_finite()) {
    const FiniteSpace& sa = a.space.finite();
    const FiniteSpace& sb = b.space.finite();
    if (sa.labels != sb.labels || sa.dist != sb.dist ||
        sa.relation.pairs != sb.relation.pairs || sa.subspace != sb.subspace)
      return false;
    if (a.pair.finite().f != b.pair.finite().f) return false;
    if (a.pair.finite().g != b.pair.finite().g) return false;
  } else {
    const ComputableSpace& sa = a.space.computable();
    const ComputableSpace& sb = b.space.computable();
    if (!(sa.carrier == sb.carrier)) return false;
    if (sa.relation.kind != sb.relation.kind ||
        sa.relation.symmetrized != sb.relation.symmetrized ||
        sa.relation.pairs != sb.relation.pairs)
      return false;
    if (sa.subspace.has_value() != sb.subspace.has_value()) return false;
    if (sa.subspace && !(*sa.subspace == *sb.subspace)) return false;
    if (!cmap_equal(a.pair.computable().f, b.pair.computable().f)) return false;
    if (!cmap_equal(a.pair.computable().g, b.pair.computable().g)) return false;
  }
  if (a.condition.has_value() != b.condition.has_value()) return false;
  if (a.condition && !condition_equal(*a.condition, *b.condition)) return false;
  return a.theorem == b.theorem && a.asserted == b.asserted;
}

namespace {

const char* kExample51 = R"json({
  "name": "example_5_1",
  "carrier": {"interval": {"lo": "-2", "hi": "4", "lo_open": true, "hi_open": true}},
  "metric": "absolute-difference",
  "relation": {"kind": "cone"},
  "f": {"pieces": [{"on": "otherwise", "value": "0"}]},
  "g": {"pieces": [
    {"on": {"interval": {"lo": "-2", "hi": "3", "lo_open": true}}, "affine": {"scale": "1/3", "offset": "0"}},
    {"on": "otherwise", "value": "1"}
  ]},
  "Y": {"interval": {"lo": "-1/2", "hi": "1", "hi_open": true}},
  "condition": {"variant": "m", "phi": {"kind": "linear", "k": "1/3"}},
  "theorem": "th1",
  "asserted": {"f": "holds", "k2": "holds", "n": "fails"}
})json";

const char* kExample52 = R"json({
  "name": "example_5_2",
  "carrier": {"interval": {"lo": "0", "hi": "4", "hi_open": true}},
  "metric": "absolute-difference",
  "relation": {"kind": "list", "pairs": [
    ["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"], ["1", "2"], ["2", "3"]
  ]},
  "f": {"pieces": [
    {"on": {"interval": {"lo": "0", "hi": "4", "hi_open": true}, "numbers": "rational"}, "value": "0"},
    {"on": "otherwise", "value": "1"}
  ]},
  "g": {"pieces": [
    {"on": {"point": "0"}, "value": "0"},
    {"on": {"point": "1"}, "value": "1"},
    {"on": {"point": "2"}, "value": "2"},
    {"on": "otherwise", "value": "3"}
  ]},
  "Y": {"points": ["0", "1"]},
  "condition": {"variant": "m", "phi": {"kind": "linear", "k": "5/6"}},
  "theorem": "th1"
})json";

}  // namespace

const char* bundled_instance(const std::string& name) {
  if (name == "example_5_1") return kExample51;
  if (name == "example_5_2") return kExample52;
  return nullptr;
}

std::vector<std::string> bundled_instance_names() {
  return {"example_5_1", "example_5_2"};
}

}  // namespace relfix
