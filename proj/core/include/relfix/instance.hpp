#pragma once

#include "relfix/certifier.hpp"
#include "relfix/contraction.hpp"
#include "relfix/mappings.hpp"
#include "relfix/relspace.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace relfix {

// Malformed input, with a position when one is known. Structural JSON errors
// carry line/column; semantic errors carry the offending document path.
struct InputError : std::runtime_error {
  int line = 0;
  int col = 0;
  std::string path;

  InputError(const std::string& message, int line_ = 0, int col_ = 0,
             std::string path_ = "")
      : std::runtime_error(message), line(line_), col(col_), path(std::move(path_)) {}
};

struct Instance {
  std::string name;
  RelationalSpace space;
  MappingPair pair;
  std::optional<ContractionCondition> condition;
  std::optional<TheoremId> theorem;
  AssertionMap asserted;
};

// Parses the JSON instance format. All numerics are exact rationals written
// as "p" or "p/q" strings. Throws InputError on malformed documents; metric
// axiom violations are NOT rejected here (run metric_axioms_check).
Instance parse_instance(const std::string& text);

// Canonical serialization; parse(serialize(parse(text))) equals parse(text).
std::string serialize_instance(const Instance& instance);

bool instances_equal(const Instance& a, const Instance& b);

// Bundled instances by name ("example_5_1", "example_5_2"); nullptr if absent.
const char* bundled_instance(const std::string& name);
std::vector<std::string> bundled_instance_names();

}  // namespace relfix
