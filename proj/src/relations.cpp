#include "repsense/relations.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace repsense {

const char* to_string(RelationStatus s) {
  switch (s) {
    case RelationStatus::Pass: return "pass";
    case RelationStatus::Fail: return "fail";
    case RelationStatus::Skipped: return "skipped";
  }
  return "?";
}

bool RelationReport::ok() const {
  for (auto& r : results)
    if (r.status == RelationStatus::Fail) return false;
  return true;
}

const std::vector<std::pair<std::string, std::string>>& relation_suite() {
  static const std::vector<std::pair<std::string, std::string>> v = {
      {"delta", "gamma"}, {"gamma", "zsssr"}, {"zsssr", "zend"}, {"zsssr", "zss"},
      {"z77sr", "z77"},   {"zss", "gbsc"},    {"zss", "gis"},    {"gamma", "e"},
  };
  return v;
}

RelationReport check_relations(const Text& t, const Limits& lim) {
  RelationReport rep;
  rep.t = t;
  std::map<std::string, MeasureValue> cache;
  auto get = [&](const std::string& m) {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, evaluate(m, t, lim)).first;
    return it->second;
  };
  for (auto& [a, b] : relation_suite()) {
    RelationResult r;
    r.name = a + " <= " + b;
    r.lhs = a;
    r.rhs = b;
    auto x = get(a), y = get(b);
    r.lhs_value = x.value;
    r.rhs_value = y.value;
    if (!x.conclusive || !y.conclusive) r.status = RelationStatus::Skipped;
    else r.status = x.value <= y.value ? RelationStatus::Pass : RelationStatus::Fail;
    rep.results.push_back(r);
  }
  return rep;
}

std::string squeeze_report(const SqueezeInput& in) {
  // templates f(n, alpha) for beta <= alpha * f
  static const std::map<std::string, std::string> tmpl = {
      {"r", "log n log r"},  {"gamma", "log n"},   {"b", "log n"},     {"z77", "log n"},
      {"z77sr", "log n"},    {"zss", "log n"},     {"zsssr", "log n"}, {"zend", "log^2 n"},
      {"gbsc", "log n"},     {"e", "n"},
  };
  std::ostringstream o;
  auto it = tmpl.find(in.beta);
  std::string f = it == tmpl.end() ? "f(n, " + in.alpha + ")" : it->second;
  Rational ratio = in.alpha_t > Rational(0) ? in.alpha_edited / in.alpha_t : Rational(0);
  o << in.beta << "(T')/" << in.beta << "(T) = O(" << in.alpha << "(T')/" << in.alpha << "(T) * " << f << ")";
  o << " with " << in.alpha << "(T) = " << in.alpha_t.str() << ", " << in.alpha << "(T') = " << in.alpha_edited.str()
    << " (ratio " << ratio.str() << ")";
  if (in.n > 1) o << ", n = " << in.n << ", log2 n = " << std::log2(double(in.n));
  if (ratio == Rational(1)) o << "; the ratio is 1, so the template collapses to O(" << f << ")";
  o << "; constants left symbolic";
  return o.str();
}

}  // namespace repsense
