#include "drg/verdict.hpp"

#include <array>
#include <utility>

#include "drg/error.hpp"

namespace drg {

namespace {

constexpr std::array<std::pair<Reason, std::string_view>, 14> kReasonNames{{
    {Reason::kEq1, "Eq1"},
    {Reason::kObs2, "Obs2"},
    {Reason::kObs1Srg, "Obs1/SRG"},
    {Reason::kAntipodalD3, "AntipodalD3"},
    {Reason::kAntipodalD45, "AntipodalD45"},
    {Reason::kBipartiteD3, "BipartiteD3"},
    {Reason::kDoubleOdd, "DoubleOdd"},
    {Reason::kLGQ, "LGQ"},
    {Reason::kLGH, "LGH"},
    {Reason::kSearch, "Search"},
    {Reason::kCompleteGraph, "CompleteGraph"},
    {Reason::kCoxeterProp, "CoxeterProp"},
    {Reason::kSylvesterProp, "SylvesterProp"},
    {Reason::kFig1, "Fig1"},
}};

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kYes: return "yes";
    case Status::kNo: return "no";
    case Status::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::kCompleteGraph: return "R0:complete-graph";
    case Rule::kDivisibility: return "R1:divisibility";
    case Rule::kDiameterTwo: return "R2:diameter-2";
    case Rule::kEigenvalueMinus1: return "R3:eigenvalue-minus-1";
    case Rule::kAntipodalD3: return "R4:antipodal-d3";
    case Rule::kAntipodalD45: return "R5:antipodal-d45";
    case Rule::kBipartiteD3: return "R6:bipartite-d3";
    case Rule::kBipartiteD4: return "R7:bipartite-d4";
    case Rule::kDoubledOdd: return "R8:doubled-odd";
    case Rule::kLineGraph: return "R9:line-graph";
    case Rule::kSearch: return "R10:search";
    case Rule::kAssumed: return "assumed";
    case Rule::kNone: return "none";
  }
  return "none";
}

std::string_view to_string(Reason r) {
  for (auto [tag, name] : kReasonNames)
    if (tag == r) return name;
  return "?";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kYes: return "yes";
    case Outcome::kNo: return "no";
    case Outcome::kPass: return "pass";
    case Outcome::kNotApplicable: return "n/a";
    case Outcome::kUnknown: return "unknown";
  }
  return "n/a";
}

Status parse_status(std::string_view s) {
  if (s == "yes" || s == "Yes") return Status::kYes;
  if (s == "no" || s == "No") return Status::kNo;
  if (s == "unknown") return Status::kUnknown;
  throw Error("unknown status '" + std::string(s) + "'");
}

Reason parse_reason(std::string_view s) {
  for (auto [tag, name] : kReasonNames)
    if (name == s) return tag;
  throw Error("unknown reason tag '" + std::string(s) + "'");
}

Rule rule_for(Reason r) {
  switch (r) {
    case Reason::kEq1: return Rule::kDivisibility;
    case Reason::kObs2: return Rule::kEigenvalueMinus1;
    case Reason::kObs1Srg: return Rule::kDiameterTwo;
    case Reason::kAntipodalD3: return Rule::kAntipodalD3;
    case Reason::kAntipodalD45: return Rule::kAntipodalD45;
    case Reason::kBipartiteD3: return Rule::kBipartiteD3;
    case Reason::kDoubleOdd: return Rule::kDoubledOdd;
    case Reason::kLGQ: return Rule::kLineGraph;
    case Reason::kLGH: return Rule::kLineGraph;
    case Reason::kCompleteGraph: return Rule::kCompleteGraph;
    case Reason::kSearch:
    case Reason::kCoxeterProp:
    case Reason::kSylvesterProp:
    case Reason::kFig1: return Rule::kSearch;
  }
  return Rule::kNone;
}

bool Verdict::decided_by(Rule r, Status s) const {
  const Outcome want = s == Status::kYes ? Outcome::kYes : s == Status::kNo ? Outcome::kNo : Outcome::kUnknown;
  for (const auto& step : trace)
    if (step.rule == r && step.outcome == want) return true;
  return false;
}

}  // namespace drg
