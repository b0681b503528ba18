#include "repsense/table.hpp"

#include <algorithm>

#include "repsense/bwt.hpp"
#include "repsense/sensitivity.hpp"

namespace repsense {

namespace {

struct Spec {
  std::string measure;
  EditKind kind;
  const char* upper;
  const char* lower;
  std::string family;  // designated instance; empty with a text source
  families::Params params;
  std::string text_id;  // "unary8" or "revfib14"
};

constexpr auto S = EditKind::Sub;
constexpr auto I = EditKind::Ins;
constexpr auto D = EditKind::Del;

std::string fam(const std::string& base, EditKind k) { return base + to_string(k); }

std::vector<Spec> specs() {
  std::vector<Spec> v;
  v.push_back({"delta", S, "2", "2", "", {}, "unary8"});
  v.push_back({"delta", I, "2", "2", "", {}, "unary8"});
  v.push_back({"delta", D, "1.5", "1.5", "delta-del", {{"m", 20}}, ""});
  for (auto k : {S, I, D}) v.push_back({"gamma", k, "O(log n) (squeeze)", "2", fam("gamma-", k), {{"k", 2}}, ""});
  v.push_back({"r", S, "O(log n log r) (squeeze)", "-", "", {}, ""});
  v.push_back({"r", I, "O(log n log r) (squeeze)", "Omega(log n)", "", {}, "revfib14"});
  v.push_back({"r", D, "O(log n log r) (squeeze)", "-", "", {}, ""});
  v.push_back({"b", S, "2", "2", "b-unary-sub", {{"n", 6}}, ""});
  v.push_back({"b", I, "2", "2", "b-unary-ins", {{"n", 6}}, ""});
  v.push_back({"b", D, "2", "1.5", "b-family-del", {{"k", 2}}, ""});
  for (auto k : {S, I, D}) v.push_back({"z77", k, "2", "2", fam("lz77-q-", k), {{"p", 8}}, ""});
  for (auto k : {S, I, D}) v.push_back({"z77sr", k, "2", "2", fam("lz77sr-r-", k), {{"p", 8}}, ""});
  for (const char* m : {"zss", "zsssr"}) {
    v.push_back({m, S, "3", "3", "lzss-sub", {{"p", 4}}, ""});
    v.push_back({m, I, "2", "2", "lzss-ins", {{"p", 4}}, ""});
    v.push_back({m, D, "3", "3", "lzss-del", {{"p", 4}}, ""});
  }
  v.push_back({"z78", S, "O((n/log n)^(2/3)) (squeeze)", "Omega(n^(1/4))", "lz78-sub", {{"k", 16}}, ""});
  v.push_back({"z78", I, "O((n/log n)^(2/3)) (squeeze)", "Omega(n^(1/4))", "lz78-ins", {{"k", 16}}, ""});
  v.push_back({"z78", D, "O((n/log n)^(2/3)) (squeeze)", "Omega(n^(1/4))", "lz78-del", {{"k", 16}}, ""});
  for (auto k : {S, I, D}) v.push_back({"zend", k, "O(log^2(n/delta)) (squeeze)", "2", fam("lzend-", k), {{"p", 5}}, ""});
  v.push_back({"gbsc", S, "2", "2", "bisection-sub", {{"k", 8}}, ""});
  v.push_back({"gbsc", I, "|Sigma|+1", "|Sigma|", "bisection-ins", {{"p", 4}, {"s", 2}}, ""});
  v.push_back({"gbsc", D, "|Sigma|+1", "|Sigma|", "bisection-del", {{"p", 4}, {"s", 2}}, ""});
  for (auto k : {S, I, D}) v.push_back({"gis", k, "4", "4", fam("gcis-", k), {{"p", 10}}, ""});
  v.push_back({"e", S, "-", "2", "cdawg-sub", {{"m", 10}}, ""});
  v.push_back({"e", I, "-", "2", "cdawg-ins", {{"n", 10}}, ""});
  v.push_back({"e", D, "-", "2", "cdawg-del", {{"m", 10}}, ""});
  return v;
}

std::string params_str(const families::Params& p) {
  std::string s;
  for (auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return s;
}

}  // namespace

const std::vector<std::string>& table_measures() {
  static const std::vector<std::string> m = [] {
    std::vector<std::string> out;
    for (auto& s : specs())
      if (std::find(out.begin(), out.end(), s.measure) == out.end()) out.push_back(s.measure);
    return out;
  }();
  return m;
}

std::vector<TableRow> emit_table(const TableOptions& opt) {
  for (auto& m : opt.measures)
    if (std::find(table_measures().begin(), table_measures().end(), measure_info(m).id) == table_measures().end())
      throw Error("table: no row for measure '" + m + "'");
  std::vector<TableRow> rows;
  for (auto& sp : specs()) {
    if (!opt.measures.empty() &&
        std::none_of(opt.measures.begin(), opt.measures.end(), [&](auto& m) { return measure_info(m).id == sp.measure; }))
      continue;
    TableRow row;
    row.measure = sp.measure;
    row.kind = sp.kind;
    row.paper_upper = sp.upper;
    row.paper_lower = sp.lower;

    if (!sp.family.empty()) {
      auto inst = families::generate(sp.family, sp.params);
      auto a = evaluate(sp.measure, inst.t, opt.limits), b = evaluate(sp.measure, inst.t_edited(), opt.limits);
      row.lower_source = "family";
      row.lower_provenance = sp.family + "(" + params_str(inst.params) + ")";
      row.lower_conclusive = a.conclusive && b.conclusive;
      if (a.value > Rational(0)) row.lower_ms = b.value / a.value;
    } else if (!sp.text_id.empty()) {
      Text t = sp.text_id == "unary8" ? Text(std::vector<Symbol>(8, 0)) : reversed_fibonacci(14);
      auto rep = sensitivity(sp.measure, t, sp.kind, AlphabetPolicy::extend_by_fresh(1), opt.limits);
      row.lower_source = "text";
      row.lower_provenance = sp.text_id == "unary8" ? "a^8, worst edit" : "reversed Fibonacci k=14, worst insertion";
      row.lower_conclusive = rep.conclusive();
      row.lower_ms = rep.ms;
    }

    if (opt.sweep) {
      const bool costly = measure_info(sp.measure).cost == CostClass::Exponential;
      const std::size_t n = costly ? opt.n_costly : opt.n_cheap;
      SweepOptions so;
      so.jobs = opt.jobs;
      so.limits = opt.limits;
      Rational ms = 0, as = 0;
      bool any = false;
      for (std::size_t len = 1; len <= n; ++len) {
        auto g = global_worst(sp.measure, len, opt.sigma, sp.kind, so);
        if (g.strings == 0) continue;
        if (!any || g.ms > ms) ms = g.ms;
        if (!any || g.as > as) as = g.as;
        any = true;
        row.upper_conclusive = row.upper_conclusive && g.conclusive();
      }
      if (any) row.upper_ms = ms, row.upper_as = as;
      row.upper_provenance = "all strings n<=" + std::to_string(n) + ", sigma=" + std::to_string(opt.sigma) + "+1 fresh";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace repsense
