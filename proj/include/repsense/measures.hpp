#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repsense/rational.hpp"
#include "repsense/text.hpp"

namespace repsense {

// caps for the exponential searches; REPSENSE_LIMITS="gamma=20,b=12,e=5000,gamma_budget=1e7,b_budget=1e8"
struct Limits {
  std::size_t gamma_max_n = 40;
  std::size_t b_max_n = 18;
  std::size_t e_max_n = 5000;
  std::optional<std::uint64_t> gamma_budget = 50'000'000;
  std::optional<std::uint64_t> b_budget = 200'000'000;

  static Limits parse(std::string_view spec);
  static Limits parse(std::string_view spec, Limits base);
  static Limits from_env();
  std::string str() const;
};

enum class CostClass { Linear, Quadratic, Exponential };

struct MeasureValue {
  Rational value;
  // false: the search hit a limit; value is then only an upper bound (0 if none)
  bool conclusive = true;
  friend bool operator==(const MeasureValue&, const MeasureValue&) = default;
};

struct MeasureInfo {
  std::string id;
  std::string description;
  bool order_insensitive = true;  // invariant under renaming symbols
  CostClass cost = CostClass::Linear;
  bool exact = true;  // false when evaluation may be inconclusive
};

const std::vector<MeasureInfo>& measures();
const MeasureInfo& measure_info(std::string_view id);  // throws Error naming close matches
MeasureValue evaluate(std::string_view id, const Text& t, const Limits& lim = {});

// a few closest names, for error messages
std::vector<std::string> suggest(std::string_view name, const std::vector<std::string>& pool);

}  // namespace repsense
