#include "relfix/report.hpp"

#include <json.hpp>

#include <sstream>

namespace relfix {

namespace {

using Json = nlohmann::ordered_json;

std::string outcome_name(IterationTrace::Outcome outcome) {
  switch (outcome) {
    case IterationTrace::Outcome::Coincidence: return "coincidence";
    case IterationTrace::Outcome::BudgetExhausted: return "budget-exhausted";
    case IterationTrace::Outcome::NoPreimage: return "no-preimage";
  }
  return "?";
}

Json trace_to_json(const IterationTrace& trace, const RelationalSpace& space) {
  Json j;
  j["outcome"] = outcome_name(trace.outcome);
  if (trace.coincidence_point) {
    j["coincidence_point"] = point_name(space, *trace.coincidence_point);
  }
  if (trace.fail_step >= 0) j["fail_step"] = trace.fail_step;
  Json w = Json::array(), gw = Json::array(), steps = Json::array();
  for (const auto& p : trace.w) w.push_back(point_name(space, p));
  for (const auto& p : trace.gw) gw.push_back(point_name(space, p));
  for (const auto& d : trace.step_distances) steps.push_back(rat_str(d));
  j["w"] = std::move(w);
  j["gw"] = std::move(gw);
  j["step_distances"] = std::move(steps);
  return j;
}

Json verdict_to_json(const Verdict& verdict) {
  Json j;
  j["verdict"] = verdict_kind_name(verdict.kind);
  if (!verdict.detail.empty()) j["detail"] = verdict.detail;
  if (!verdict.witness.empty()) j["witness"] = verdict.witness;
  if (verdict.binding) {
    j["binding"] = Json{{"u", verdict.binding->u},
                        {"v", verdict.binding->v},
                        {"lhs", rat_str(verdict.binding->lhs)},
                        {"rhs", rat_str(verdict.binding->rhs)}};
  }
  if (verdict.samples > 0) j["samples"] = verdict.samples;
  return j;
}

Json report_to_json(const HypothesisReport& report, const std::string& instance_name,
                    const RelationalSpace& space) {
  Json j;
  j["instance"] = instance_name;
  j["theorem"] = theorem_name(report.theorem);
  j["certified"] = report.certified;
  if (report.moreover_certified != report.certified) {
    j["moreover_certified"] = report.moreover_certified;
  }
  Json hypotheses = Json::array();
  for (const auto& entry : report.entries) {
    Json e = verdict_to_json(entry.verdict);
    e["label"] = entry.label;
    // label first for readability
    Json ordered;
    ordered["label"] = entry.label;
    for (auto& [key, value] : e.items()) {
      if (key != "label") ordered[key] = value;
    }
    hypotheses.push_back(std::move(ordered));
  }
  j["hypotheses"] = std::move(hypotheses);
  if (report.conclusion) {
    const Conclusion& c = *report.conclusion;
    Json conclusion;
    conclusion["coincidence_points"] = c.coincidence_points;
    conclusion["points_of_coincidence"] = c.points_of_coincidence;
    conclusion["common_fixed_points"] = c.common_fixed_points;
    if (!c.coincidence_finite) conclusion["coincidence_region"] = c.region_text;
    conclusion["exists_coincidence"] = c.exists_coincidence;
    conclusion["unique_coincidence_point"] = c.unique_coincidence_point;
    conclusion["unique_point_of_coincidence"] = c.unique_point_of_coincidence;
    conclusion["unique_common_fixed_point"] = c.unique_common_fixed_point;
    if (c.trace) {
      Json t = trace_to_json(*c.trace, space);
      t["start"] = c.trace_start;
      conclusion["trace"] = std::move(t);
    }
    j["conclusion"] = std::move(conclusion);
  } else {
    j["conclusion"] = nullptr;
  }
  if (report.oracle_agreement) {
    j["oracle_agreement"] = Json{{"available", report.oracle_agreement->available},
                                 {"agrees", report.oracle_agreement->agrees},
                                 {"detail", report.oracle_agreement->detail}};
  } else {
    j["oracle_agreement"] = nullptr;
  }
  return j;
}

std::string join(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + "}";
}

}  // namespace

std::string report_text(const HypothesisReport& report, const std::string& instance_name,
                        const RelationalSpace& space) {
  std::ostringstream os;
  os << "instance: " << instance_name << "\n";
  os << "theorem:  " << theorem_name(report.theorem) << "\n";
  os << "hypotheses:\n";
  for (const auto& entry : report.entries) {
    os << "  (" << entry.label << ") " << verdict_kind_name(entry.verdict.kind);
    if (!entry.verdict.detail.empty()) os << " - " << entry.verdict.detail;
    if (entry.verdict.binding && entry.verdict.kind != VerdictKind::Fails) {
      os << " [binding (" << entry.verdict.binding->u << ", " << entry.verdict.binding->v
         << "): lhs " << rat_str(entry.verdict.binding->lhs) << " <= rhs "
         << rat_str(entry.verdict.binding->rhs) << "]";
    }
    os << "\n";
  }
  os << "certified: " << (report.certified ? "yes" : "no") << "\n";
  if (report.moreover_certified != report.certified) {
    os << "moreover (directed + weakly compatible): "
       << (report.moreover_certified ? "yes" : "no") << "\n";
  }
  if (report.conclusion) {
    const Conclusion& c = *report.conclusion;
    os << "conclusion:\n";
    if (c.coincidence_finite) {
      os << "  coincidence points: " << join(c.coincidence_points) << "\n";
    } else {
      os << "  coincidence region: " << c.region_text << "\n";
    }
    os << "  points of coincidence: " << join(c.points_of_coincidence) << "\n";
    os << "  common fixed points: " << join(c.common_fixed_points) << "\n";
    if (c.trace) {
      os << "  solver: start " << c.trace_start << " -> " << outcome_name(c.trace->outcome);
      if (c.trace->coincidence_point) {
        os << " at " << point_name(space, *c.trace->coincidence_point) << " after "
           << c.trace->step_distances.size() << " step(s)";
      }
      os << "\n";
    }
  }
  if (report.oracle_agreement) {
    os << "oracle agreement: "
       << (report.oracle_agreement->available
               ? (report.oracle_agreement->agrees ? "agrees" : "DISAGREES")
               : "n/a")
       << (report.oracle_agreement->detail.empty()
               ? ""
               : " (" + report.oracle_agreement->detail + ")")
       << "\n";
  }
  return os.str();
}

std::string report_json(const HypothesisReport& report, const std::string& instance_name,
                        const RelationalSpace& space) {
  return report_to_json(report, instance_name, space).dump(2) + "\n";
}

std::string trace_text(const IterationTrace& trace, const RelationalSpace& space) {
  std::ostringstream os;
  os << "outcome: " << outcome_name(trace.outcome);
  if (trace.coincidence_point) {
    os << " at " << point_name(space, *trace.coincidence_point);
  }
  if (trace.fail_step >= 0) os << " (step " << trace.fail_step << ")";
  os << "\n";
  os << "w:  ";
  for (std::size_t i = 0; i < trace.w.size(); ++i) {
    os << (i ? " " : "") << point_name(space, trace.w[i]);
  }
  os << "\ngw: ";
  for (std::size_t i = 0; i < trace.gw.size(); ++i) {
    os << (i ? " " : "") << point_name(space, trace.gw[i]);
  }
  os << "\nstep distances: ";
  for (std::size_t i = 0; i < trace.step_distances.size(); ++i) {
    os << (i ? " " : "") << rat_str(trace.step_distances[i]);
  }
  os << "\n";
  return os.str();
}

std::string trace_json(const IterationTrace& trace, const RelationalSpace& space) {
  return trace_to_json(trace, space).dump(2) + "\n";
}

std::string profile_text(const FiniteProfile& profile, const FiniteSpace& space) {
  auto names = [&](const std::vector<int>& points) {
    std::vector<std::string> out;
    for (int u : points) out.push_back(space.labels[u]);
    return join(out);
  };
  std::ostringstream os;
  os << "coincidence points C(f,g): " << names(profile.coincidence_points) << "\n";
  os << "points of coincidence:     " << names(profile.points_of_coincidence) << "\n";
  os << "common fixed points:       " << names(profile.common_fixed_points) << "\n";
  return os.str();
}

std::string profile_json(const FiniteProfile& profile, const FiniteSpace& space) {
  auto names = [&](const std::vector<int>& points) {
    Json out = Json::array();
    for (int u : points) out.push_back(space.labels[u]);
    return out;
  };
  Json j;
  j["coincidence_points"] = names(profile.coincidence_points);
  j["points_of_coincidence"] = names(profile.points_of_coincidence);
  j["common_fixed_points"] = names(profile.common_fixed_points);
  return j.dump(2) + "\n";
}

namespace {

Json fuzz_to_json(const oracle::FuzzSummary& summary) {
  Json j;
  j["instances"] = summary.instances;
  j["profile_disagreements"] = summary.profile_disagreements;
  j["closure_equivalence_failures"] = summary.closure_equivalence_failures;
  j["functional_order_failures"] = summary.functional_order_failures;
  j["trace_bound_failures"] = summary.trace_bound_failures;
  j["trace_r_preservation_failures"] = summary.trace_r_preservation_failures;
  j["th1_certified"] = summary.th1_certified;
  j["th2_certified"] = summary.th2_certified;
  j["th3_certified"] = summary.th3_certified;
  j["th4_certified"] = summary.th4_certified;
  j["theorem_violations"] = summary.theorem_violations;
  j["violations"] = summary.violation_details;
  j["clean"] = summary.clean();
  return j;
}

}  // namespace

std::string fuzz_text(const oracle::FuzzSummary& summary) {
  std::ostringstream os;
  os << "instances:                    " << summary.instances << "\n";
  os << "profile disagreements:        " << summary.profile_disagreements << "\n";
  os << "closure equivalence failures: " << summary.closure_equivalence_failures << "\n";
  os << "N<=M order failures:          " << summary.functional_order_failures << "\n";
  os << "trace bound failures:         " << summary.trace_bound_failures << "\n";
  os << "trace R-preservation failures:" << summary.trace_r_preservation_failures << "\n";
  os << "th1 certified:                " << summary.th1_certified << "\n";
  os << "th2 certified:                " << summary.th2_certified << "\n";
  os << "th3 certified:                " << summary.th3_certified << "\n";
  os << "th4 certified:                " << summary.th4_certified << "\n";
  os << "theorem violations:           " << summary.theorem_violations << "\n";
  for (const auto& detail : summary.violation_details) {
    os << "  ! " << detail << "\n";
  }
  os << (summary.clean() ? "clean" : "VIOLATIONS FOUND") << "\n";
  return os.str();
}

std::string fuzz_json(const oracle::FuzzSummary& summary) {
  return fuzz_to_json(summary).dump(2) + "\n";
}

}  // namespace relfix
