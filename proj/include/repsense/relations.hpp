#pragma once

#include <string>
#include <vector>

#include "repsense/measures.hpp"
#include "repsense/rational.hpp"
#include "repsense/text.hpp"

namespace repsense {

enum class RelationStatus { Pass, Fail, Skipped };
const char* to_string(RelationStatus s);

struct RelationResult {
  std::string name;  // e.g. "delta <= gamma"
  std::string lhs, rhs;
  Rational lhs_value, rhs_value;
  RelationStatus status = RelationStatus::Skipped;
  friend bool operator==(const RelationResult&, const RelationResult&) = default;
};

struct RelationReport {
  Text t;
  std::vector<RelationResult> results;
  bool ok() const;  // no failures (skips allowed)
  friend bool operator==(const RelationReport&, const RelationReport&) = default;
};

// pairs (lhs, rhs) meaning lhs <= rhs
const std::vector<std::pair<std::string, std::string>>& relation_suite();

RelationReport check_relations(const Text& t, const Limits& lim = Limits::from_env());

struct SqueezeInput {
  std::string alpha;  // the measure with constant sensitivity
  std::string beta;   // the measure being bounded
  Rational alpha_t, alpha_edited;
  std::size_t n = 0;
};

// instantiated bound text; informational only
std::string squeeze_report(const SqueezeInput& in);

}  // namespace repsense
