#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "repsense/measures.hpp"
#include "repsense/rational.hpp"
#include "repsense/text.hpp"

namespace repsense::families {

using Params = std::map<std::string, int>;

enum class Target { Original, Edited, Diff };  // Diff = C(T') - C(T)
enum class Cmp { Eq, Ge, Le };

const char* to_string(Target t);
const char* to_string(Cmp c);

struct Expectation {
  std::string measure;
  Target target = Target::Original;
  Cmp cmp = Cmp::Eq;
  Rational value;
  std::string formula;          // closed form in the family parameters
  std::string source = "paper";  // "paper" or "derived"
  friend bool operator==(const Expectation&, const Expectation&) = default;
};

struct FamilyInstance {
  std::string id;
  Params params;
  Text t;
  EditOp edit;
  std::vector<Expectation> expected;
  std::size_t closed_form_length = 0;
  std::string layout;  // which integer stands for which letter

  Text t_edited() const { return apply_edit(t, edit); }
};

struct FamilyInfo {
  std::string id;
  std::vector<std::pair<std::string, int>> params;  // name and default
  std::string summary;
};

const std::vector<FamilyInfo>& catalog();
const FamilyInfo& family_info(std::string_view id);  // throws Error with suggestions

// unspecified parameters take their defaults
FamilyInstance generate(std::string_view id, const Params& params = {});

struct ExpectationResult {
  Expectation expectation;
  Rational actual;
  bool conclusive = true;
  bool pass = false;
  friend bool operator==(const ExpectationResult&, const ExpectationResult&) = default;
};

struct VerifyReport {
  std::string id;
  Params params;
  std::size_t length = 0;
  bool length_ok = false;
  std::vector<ExpectationResult> results;

  bool passed() const;      // everything conclusive and passing
  bool conclusive() const;  // no limit was hit
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

VerifyReport verify(const FamilyInstance& inst, const Limits& lim = Limits::from_env());

// LZ78 family helpers, by direct scan
int lz78_ell(int j);
int lz78_y(int j, int k);
// sum over j = 2..k of (y_j - j - 1) / l_j, exact
Rational lz78_formula_sum(int k);

// order-2 de Bruijn sequence over 0..s-1 (length s^2) with its first symbol appended
std::vector<Symbol> de_bruijn_wrapped(int s);

}  // namespace repsense::families
