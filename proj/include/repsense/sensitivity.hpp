#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "repsense/measures.hpp"
#include "repsense/rational.hpp"
#include "repsense/text.hpp"

namespace repsense {

struct EditResult {
  EditOp edit;  // first edit, in (position, symbol) order, producing this T'
  MeasureValue value;
  Rational ratio;  // value / C(T)
  friend bool operator==(const EditResult&, const EditResult&) = default;
};

struct SensitivityReport {
  std::string measure;
  Text t;
  EditKind kind = EditKind::Sub;
  std::string policy;
  MeasureValue base;
  std::vector<EditResult> results;  // one per distinct T'
  Rational ms, as;
  std::optional<EditOp> ms_witness, as_witness;
  std::size_t unknown = 0;  // edits whose value is only an upper bound

  // false when some value is only an upper bound; maxima are then lower bounds
  bool conclusive() const { return base.conclusive && unknown == 0; }
  friend bool operator==(const SensitivityReport&, const SensitivityReport&) = default;
};

SensitivityReport sensitivity(const std::string& measure, const Text& t, EditKind kind,
                              const AlphabetPolicy& policy = {}, const Limits& lim = Limits::from_env());

// all strings of length n over 0..sigma-1, in lexicographic order; with canonical, only
// first-occurrence-normalized ones
std::vector<Text> all_strings(std::size_t n, int sigma, bool canonical);

struct SweepOptions {
  bool fresh = true;  // edits may also write one symbol absent from T
  int jobs = 1;
  Limits limits = Limits::from_env();
  // canonical dedup for order-insensitive measures
  bool use_canonical = true;
};

// symbols an edit may write in a sweep over sigma letters
std::vector<Symbol> sweep_symbols(const Text& t, int sigma, bool canonical, bool fresh);

struct SweepCase {
  const Text& t;
  MeasureValue base;
  const EditOp& edit;
  const Text& edited;
  MeasureValue value;
};

// visits every (T, T') pair once per distinct T'; return false from the visitor to stop early.
// Returns the number of strings visited. With jobs > 1 the visitor must be thread safe.
std::size_t sweep(const std::string& measure, std::size_t n, int sigma, EditKind kind, const SweepOptions& opt,
                  const std::function<bool(const SweepCase&)>& visit);

struct GlobalWorst {
  std::string measure;
  std::size_t n = 0;
  int sigma = 0;
  EditKind kind = EditKind::Sub;
  Rational ms, as;
  Text ms_text, as_text;
  EditOp ms_edit, as_edit;
  Rational ms_base, as_base;
  std::size_t strings = 0;
  std::size_t unknown = 0;
  bool conclusive() const { return unknown == 0; }
  friend bool operator==(const GlobalWorst&, const GlobalWorst&) = default;
};

GlobalWorst global_worst(const std::string& measure, std::size_t n, int sigma, EditKind kind,
                         const SweepOptions& opt = {});

}  // namespace repsense
