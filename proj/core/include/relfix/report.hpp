#pragma once

#include "relfix/certifier.hpp"
#include "relfix/oracle.hpp"

#include <string>

namespace relfix {

// Deterministic renderings: byte-identical output for identical inputs.

std::string report_text(const HypothesisReport& report, const std::string& instance_name,
                        const RelationalSpace& space);
std::string report_json(const HypothesisReport& report, const std::string& instance_name,
                        const RelationalSpace& space);

std::string trace_text(const IterationTrace& trace, const RelationalSpace& space);
std::string trace_json(const IterationTrace& trace, const RelationalSpace& space);

std::string profile_text(const FiniteProfile& profile, const FiniteSpace& space);
std::string profile_json(const FiniteProfile& profile, const FiniteSpace& space);

std::string fuzz_text(const oracle::FuzzSummary& summary);
std::string fuzz_json(const oracle::FuzzSummary& summary);

}  // namespace relfix
