#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "drg/graph.hpp"

namespace drg {

enum class Status { kYes, kNo, kUnknown };

/// Rules of the decision pipeline, in evaluation order.
enum class Rule {
  kCompleteGraph,     // R0
  kDivisibility,      // R1
  kDiameterTwo,       // R2
  kEigenvalueMinus1,  // R3
  kAntipodalD3,       // R4
  kAntipodalD45,      // R5
  kBipartiteD3,       // R6
  kBipartiteD4,       // R7
  kDoubledOdd,        // R8
  kLineGraph,         // R9
  kSearch,            // R10
  kAssumed,           // registered verdict taken as given
  kNone,
};

/// Reason tags used by the catalog's reference column.
enum class Reason {
  kEq1,
  kObs2,
  kObs1Srg,
  kAntipodalD3,
  kAntipodalD45,
  kBipartiteD3,
  kDoubleOdd,
  kLGQ,
  kLGH,
  kSearch,
  kCompleteGraph,
  kCoxeterProp,
  kSylvesterProp,
  kFig1,
};

std::string_view to_string(Status s);
std::string_view to_string(Rule r);
std::string_view to_string(Reason r);
Status parse_status(std::string_view s);
Reason parse_reason(std::string_view s);

/// Rule whose firing reproduces the tag, or kSearch for search-backed tags.
Rule rule_for(Reason r);

enum class Outcome { kYes, kNo, kPass, kNotApplicable, kUnknown };
std::string_view to_string(Outcome o);

struct TraceStep {
  Rule rule = Rule::kNone;
  Outcome outcome = Outcome::kNotApplicable;
  std::string detail;
};

struct Verdict {
  Status status = Status::kUnknown;
  Rule rule = Rule::kNone;  // first decisive rule
  std::string reason;       // human-readable explanation
  std::vector<Vertex> witness;
  bool witness_verified = false;
  std::vector<TraceStep> trace;

  /// Whether `r` decided with `s` somewhere in the trace.
  bool decided_by(Rule r, Status s) const;
};

}  // namespace drg
