#include "repsense/records.hpp"

#include <json.hpp>
#include <sstream>

namespace repsense::records {

using nlohmann::json;

namespace {

json rat(const Rational& r) { return r.str(); }

json txt(const Text& t) { return t.symbols(); }
Text txt_of(const json& j) { return Text(j.get<std::vector<Symbol>>()); }

json edit(const EditOp& e) {
  json j = {{"kind", to_string(e.kind)}, {"pos", e.pos}};
  if (e.kind != EditKind::Del) j["sym"] = e.sym;
  return j;
}
EditOp edit_of(const json& j) {
  EditOp e;
  e.kind = parse_edit_kind(j.at("kind").get<std::string>());
  e.pos = j.at("pos").get<std::size_t>();
  e.sym = j.contains("sym") ? j.at("sym").get<Symbol>() : 0;
  return e;
}

json mv(const MeasureValue& v) { return {{"value", rat(v.value)}, {"conclusive", v.conclusive}}; }
MeasureValue mv_of(const json& j) { return {parse_rational(j.at("value").get<std::string>()), j.at("conclusive").get<bool>()}; }

Rational r_of(const json& j) { return parse_rational(j.get<std::string>()); }

std::vector<json> lines_of(std::string_view s) {
  std::vector<json> out;
  std::istringstream in{std::string(s)};
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(json::parse(line));
  if (out.empty()) throw Error("records: empty input");
  return out;
}

void expect_type(const json& j, const char* t) {
  if (j.value("type", "") != t) throw Error(std::string("records: expected a '") + t + "' record");
}

}  // namespace

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(std::stoll(std::string(s)));
    return Rational(std::stoll(std::string(s.substr(0, slash))), std::stoll(std::string(s.substr(slash + 1))));
  } catch (const std::logic_error&) {
    throw Error("records: bad rational '" + std::string(s) + "'");
  }
}

std::string emit(const MeasureRecord& m) {
  json j = {{"type", "measure"}, {"measure", m.measure}, {"text", txt(m.t)}, {"value", rat(m.value.value)},
            {"conclusive", m.value.conclusive}};
  return j.dump() + "\n";
}

MeasureRecord parse_measure(std::string_view s) {
  const json j = lines_of(s).at(0);
  expect_type(j, "measure");
  return {j.at("measure"), txt_of(j.at("text")), {r_of(j.at("value")), j.at("conclusive").get<bool>()}};
}

namespace {
json opt_rat(const std::optional<Rational>& r) { return r ? rat(*r) : json(nullptr); }
std::optional<Rational> opt_rat_of(const json& j) {
  if (j.is_null()) return std::nullopt;
  return r_of(j);
}
}  // namespace

std::string emit(const std::vector<TableRow>& rows) {
  std::string out;
  for (auto& r : rows) {
    json j = {{"type", "table_row"},
              {"measure", r.measure},
              {"kind", to_string(r.kind)},
              {"paper_upper", r.paper_upper},
              {"paper_lower", r.paper_lower},
              {"lower_source", r.lower_source},
              {"lower_provenance", r.lower_provenance},
              {"lower_ms", opt_rat(r.lower_ms)},
              {"lower_conclusive", r.lower_conclusive},
              {"upper_provenance", r.upper_provenance},
              {"upper_ms", opt_rat(r.upper_ms)},
              {"upper_as", opt_rat(r.upper_as)},
              {"upper_conclusive", r.upper_conclusive}};
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<TableRow> parse_table(std::string_view s) {
  std::vector<TableRow> rows;
  for (auto& j : lines_of(s)) {
    expect_type(j, "table_row");
    TableRow r;
    r.measure = j.at("measure");
    r.kind = parse_edit_kind(j.at("kind").get<std::string>());
    r.paper_upper = j.at("paper_upper");
    r.paper_lower = j.at("paper_lower");
    r.lower_source = j.at("lower_source");
    r.lower_provenance = j.at("lower_provenance");
    r.lower_ms = opt_rat_of(j.at("lower_ms"));
    r.lower_conclusive = j.at("lower_conclusive");
    r.upper_provenance = j.at("upper_provenance");
    r.upper_ms = opt_rat_of(j.at("upper_ms"));
    r.upper_as = opt_rat_of(j.at("upper_as"));
    r.upper_conclusive = j.at("upper_conclusive");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string emit(const SensitivityReport& r) {
  json h = {{"type", "sensitivity"}, {"measure", r.measure}, {"text", txt(r.t)},  {"kind", to_string(r.kind)},
            {"policy", r.policy},    {"base", mv(r.base)},   {"ms", rat(r.ms)},   {"as", rat(r.as)},
            {"unknown", r.unknown},  {"edits", r.results.size()}};
  h["ms_witness"] = r.ms_witness ? edit(*r.ms_witness) : json(nullptr);
  h["as_witness"] = r.as_witness ? edit(*r.as_witness) : json(nullptr);
  std::string out = h.dump() + "\n";
  for (auto& e : r.results) {
    json j = edit(e.edit);
    j["type"] = "edit";
    if (!j.contains("sym")) j["sym"] = nullptr;
    j["value"] = rat(e.value.value);
    j["conclusive"] = e.value.conclusive;
    j["ratio"] = rat(e.ratio);
    out += j.dump() + "\n";
  }
  return out;
}

SensitivityReport parse_sensitivity(std::string_view s) {
  auto ls = lines_of(s);
  const json& h = ls[0];
  expect_type(h, "sensitivity");
  SensitivityReport r;
  r.measure = h.at("measure");
  r.t = txt_of(h.at("text"));
  r.kind = parse_edit_kind(h.at("kind").get<std::string>());
  r.policy = h.at("policy");
  r.base = mv_of(h.at("base"));
  r.ms = r_of(h.at("ms"));
  r.as = r_of(h.at("as"));
  r.unknown = h.at("unknown");
  if (!h.at("ms_witness").is_null()) r.ms_witness = edit_of(h.at("ms_witness"));
  if (!h.at("as_witness").is_null()) r.as_witness = edit_of(h.at("as_witness"));
  std::size_t n = h.at("edits");
  if (ls.size() != n + 1) throw Error("records: edit count mismatch");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    expect_type(ls[i], "edit");
    json e = ls[i];
    if (e["sym"].is_null()) e.erase("sym");
    EditResult x;
    x.edit = edit_of(e);
    x.value = {r_of(e.at("value")), e.at("conclusive").get<bool>()};
    x.ratio = r_of(e.at("ratio"));
    r.results.push_back(x);
  }
  return r;
}

std::string emit(const GlobalWorst& g) {
  json j = {{"type", "sweep"},
            {"measure", g.measure},
            {"n", g.n},
            {"sigma", g.sigma},
            {"kind", to_string(g.kind)},
            {"ms", rat(g.ms)},
            {"as", rat(g.as)},
            {"ms_text", txt(g.ms_text)},
            {"as_text", txt(g.as_text)},
            {"ms_edit", edit(g.ms_edit)},
            {"as_edit", edit(g.as_edit)},
            {"ms_base", rat(g.ms_base)},
            {"as_base", rat(g.as_base)},
            {"strings", g.strings},
            {"unknown", g.unknown}};
  return j.dump() + "\n";
}

GlobalWorst parse_global_worst(std::string_view s) {
  auto ls = lines_of(s);
  const json& j = ls[0];
  expect_type(j, "sweep");
  GlobalWorst g;
  g.measure = j.at("measure");
  g.n = j.at("n");
  g.sigma = j.at("sigma");
  g.kind = parse_edit_kind(j.at("kind").get<std::string>());
  g.ms = r_of(j.at("ms"));
  g.as = r_of(j.at("as"));
  g.ms_text = txt_of(j.at("ms_text"));
  g.as_text = txt_of(j.at("as_text"));
  g.ms_edit = edit_of(j.at("ms_edit"));
  g.as_edit = edit_of(j.at("as_edit"));
  g.ms_base = r_of(j.at("ms_base"));
  g.as_base = r_of(j.at("as_base"));
  g.strings = j.at("strings");
  g.unknown = j.at("unknown");
  return g;
}

std::string emit(const families::VerifyReport& v) {
  json h = {{"type", "family"}, {"id", v.id},         {"params", v.params},
            {"length", v.length}, {"length_ok", v.length_ok}, {"expectations", v.results.size()},
            {"passed", v.passed()}};
  std::string out = h.dump() + "\n";
  for (auto& r : v.results) {
    const auto& e = r.expectation;
    json j = {{"type", "expectation"}, {"measure", e.measure},  {"target", to_string(e.target)},
              {"cmp", to_string(e.cmp)}, {"expected", rat(e.value)}, {"formula", e.formula},
              {"source", e.source},      {"actual", rat(r.actual)},  {"conclusive", r.conclusive},
              {"pass", r.pass}};
    out += j.dump() + "\n";
  }
  return out;
}

families::VerifyReport parse_verify(std::string_view s) {
  using namespace families;
  auto ls = lines_of(s);
  const json& h = ls[0];
  expect_type(h, "family");
  VerifyReport v;
  v.id = h.at("id");
  v.params = h.at("params").get<Params>();
  v.length = h.at("length");
  v.length_ok = h.at("length_ok");
  std::size_t n = h.at("expectations");
  if (ls.size() != n + 1) throw Error("records: expectation count mismatch");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const json& j = ls[i];
    expect_type(j, "expectation");
    ExpectationResult r;
    auto& e = r.expectation;
    e.measure = j.at("measure");
    std::string t = j.at("target"), c = j.at("cmp");
    e.target = t == "T" ? Target::Original : t == "T'" ? Target::Edited : Target::Diff;
    e.cmp = c == "==" ? Cmp::Eq : c == ">=" ? Cmp::Ge : Cmp::Le;
    e.value = r_of(j.at("expected"));
    e.formula = j.at("formula");
    e.source = j.at("source");
    r.actual = r_of(j.at("actual"));
    r.conclusive = j.at("conclusive");
    r.pass = j.at("pass");
    v.results.push_back(r);
  }
  return v;
}

std::string emit(const RelationReport& r) {
  json h = {{"type", "relations"}, {"text", txt(r.t)}, {"relations", r.results.size()}, {"ok", r.ok()}};
  std::string out = h.dump() + "\n";
  for (auto& x : r.results) {
    json j = {{"type", "relation"},       {"name", x.name}, {"lhs", x.lhs}, {"rhs", x.rhs}, {"lhs_value", rat(x.lhs_value)},
              {"rhs_value", rat(x.rhs_value)}, {"status", to_string(x.status)}};
    out += j.dump() + "\n";
  }
  return out;
}

RelationReport parse_relations(std::string_view s) {
  auto ls = lines_of(s);
  const json& h = ls[0];
  expect_type(h, "relations");
  RelationReport r;
  r.t = txt_of(h.at("text"));
  std::size_t n = h.at("relations");
  if (ls.size() != n + 1) throw Error("records: relation count mismatch");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const json& j = ls[i];
    expect_type(j, "relation");
    RelationResult x;
    x.name = j.at("name");
    x.lhs = j.at("lhs");
    x.rhs = j.at("rhs");
    x.lhs_value = r_of(j.at("lhs_value"));
    x.rhs_value = r_of(j.at("rhs_value"));
    std::string st = j.at("status");
    x.status = st == "pass" ? RelationStatus::Pass : st == "fail" ? RelationStatus::Fail : RelationStatus::Skipped;
    r.results.push_back(x);
  }
  return r;
}

}  // namespace repsense::records
