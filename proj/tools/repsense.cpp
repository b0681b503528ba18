#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "repsense/attractor.hpp"
#include "repsense/bidirectional.hpp"
#include "repsense/bwt.hpp"
#include "repsense/cdawg.hpp"
#include "repsense/delta.hpp"
#include "repsense/families.hpp"
#include "repsense/gcis.hpp"
#include "repsense/lz.hpp"
#include "repsense/measures.hpp"
#include "repsense/records.hpp"
#include "repsense/relations.hpp"
#include "repsense/sensitivity.hpp"
#include "repsense/slp.hpp"
#include "repsense/table.hpp"

using namespace repsense;

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5EED;

enum Exit { Ok = 0, Failed = 1, Usage = 2, Inconclusive = 3 };

struct Input {
  std::string text, tokens, file, family;
  std::vector<std::string> params;
  bool given() const { return !text.empty() || !tokens.empty() || !file.empty() || !family.empty(); }
};

struct Common {
  std::string format = "table";
  int jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string limits;
  std::size_t limit = 0;
};

bool records(const Common& c) { return c.format == "records"; }

Limits limits_of(const Common& c) {
  Limits l = c.limits.empty() ? Limits::from_env() : Limits::parse(c.limits, Limits::from_env());
  if (c.limit) l.gamma_max_n = l.b_max_n = l.e_max_n = c.limit;
  return l;
}

families::Params parse_params(const std::vector<std::string>& ps) {
  families::Params out;
  for (auto& p : ps) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("--param expects name=value, got '" + p + "'");
    try {
      std::size_t used = 0;
      int v = std::stoi(p.substr(eq + 1), &used);
      if (used != p.size() - eq - 1) throw std::invalid_argument(p);
      out[p.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw Error("--param value must be an integer: '" + p + "'");
    }
  }
  return out;
}

Text read_input(const Input& in, bool allow_family = true) {
  int n = !in.text.empty() + !in.tokens.empty() + !in.file.empty() + (allow_family && !in.family.empty());
  if (n != 1) throw Error(allow_family ? "give exactly one of --text, --tokens, --file, --family"
                                       : "give exactly one of --text, --tokens, --file");
  if (!in.text.empty()) return Text::from_bytes(in.text);
  if (!in.tokens.empty()) return Text::from_tokens(in.tokens);
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw Error("cannot read " + in.file);
    std::stringstream ss;
    ss << f.rdbuf();
    return Text::from_tokens(ss.str());
  }
  return families::generate(in.family, parse_params(in.params)).t;
}

void add_input(CLI::App* c, Input& in, bool family) {
  c->add_option("--text", in.text, "input text, one symbol per byte");
  c->add_option("--tokens", in.tokens, "input text as whitespace separated nonnegative integers");
  c->add_option("--file", in.file, "file holding the text in token mode");
  if (family) {
    c->add_option("--family", in.family, "use the text of a generated family instance");
    c->add_option("--param", in.params, "family parameter name=value (repeatable)");
  }
}

std::string dec(const Rational& r) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(6) << r.to_double();
  return o.str();
}

std::string val(const MeasureValue& v) {
  std::string s = v.value.is_integer() ? std::to_string(v.value.num()) : v.value.str();
  return v.conclusive ? s : s + " (upper bound, limit hit)";
}

AlphabetPolicy parse_policy(const std::string& s) {
  if (s == "fresh") return AlphabetPolicy::extend_by_fresh(1);
  if (s.rfind("fresh:", 0) == 0) return AlphabetPolicy::extend_by_fresh(std::stoi(s.substr(6)));
  if (s.rfind("fixed:", 0) == 0) {
    std::string body = s.substr(6);
    for (auto& ch : body)
      if (ch == ',') ch = ' ';
    return AlphabetPolicy::fixed(Text::from_tokens(body).symbols());
  }
  throw Error("--policy must be fresh, fresh:<k> or fixed:<c,c,...>");
}

// ---- measure

struct MeasureCmd {
  Input in;
  std::vector<std::string> names;
  bool show_factors = false, dump_levels = false, dump_grammar = false;
};

int run_measure(const MeasureCmd& m, const Common& c) {
  Text t = read_input(m.in);
  require_nonempty(t, "measure");
  Limits lim = limits_of(c);
  std::vector<std::string> names;
  for (auto& n : m.names) {
    if (n == "all")
      for (auto& info : measures()) names.push_back(info.id);
    else
      names.push_back(measure_info(n).id);
  }
  bool inconclusive = false;
  for (auto& id : names) {
    MeasureValue v = evaluate(id, t, lim);
    inconclusive |= !v.conclusive;
    if (records(c)) {
      std::cout << records::emit(records::MeasureRecord{id, t, v});
      continue;
    }
    if (id == "delta") {
      auto st = substr_table(t);
      std::cout << "delta = " << st.delta.str() << " (" << dec(st.delta) << ") argmax_k = " << st.argmax_k << "\n";
      continue;
    }
    std::cout << id << " = " << val(v) << "\n";
    if (id == "gamma" && v.conclusive) {
      auto g = gamma_exact(t, lim.gamma_budget, lim.gamma_max_n);
      std::cout << "  witness:";
      for (auto p : g.witness) std::cout << " " << p;
      std::cout << "\n";
    } else if (id == "b" && v.conclusive) {
      auto b = b_exact(t, lim.b_max_n, lim.b_budget);
      bool bytes = t.render() != t.tokens();
      std::cout << "  scheme: " << b.witness.str(bytes) << "\n";
    } else if (id == "r") {
      std::cout << "  bwt: " << bwt(t).bwt.render() << "\n";
    } else if (m.show_factors && id.size() > 1 && id[0] == 'z') {
      auto f = factorize(t, parse_lz_variant(id));
      std::cout << "  factors: " << f.render(t) << "\n";
    } else if (m.dump_grammar && (id == "gbsc" || id == "gbsc-nodes")) {
      std::cout << bisection(t).dump();
    } else if (m.dump_levels && id == "gis") {
      std::cout << gcis_build(t).dump();
    }
  }
  return inconclusive ? Inconclusive : Ok;
}

// ---- sensitivity

struct SensCmd {
  Input in;
  std::string measure, edit = "sub", policy = "fresh";
};

int run_sensitivity(const SensCmd& s, const Common& c) {
  Text t = read_input(s.in);
  auto rep = sensitivity(s.measure, t, parse_edit_kind(s.edit), parse_policy(s.policy), limits_of(c));
  if (records(c)) {
    std::cout << records::emit(rep);
  } else {
    std::cout << rep.measure << " on n=" << t.size() << ", " << s.edit << " edits, policy " << rep.policy
              << ": C(T) = " << val(rep.base) << "\n";
    std::cout << std::left << std::setw(6) << "kind" << std::setw(6) << "pos" << std::setw(6) << "sym"
              << std::setw(14) << "C(T')" << "ratio\n";
    for (auto& r : rep.results) {
      std::cout << std::setw(6) << to_string(r.edit.kind) << std::setw(6) << r.edit.pos << std::setw(6)
                << (r.edit.kind == EditKind::Del ? std::string("-") : std::to_string(r.edit.sym)) << std::setw(14)
                << val(r.value) << r.ratio.str() << "\n";
    }
    std::cout << "max AS = " << rep.as.str() << (rep.as_witness ? " at " + rep.as_witness->str() : "")
              << ", max MS = " << rep.ms.str() << (rep.ms_witness ? " at " + rep.ms_witness->str() : "") << "\n";
    if (!rep.conclusive()) std::cout << rep.unknown << " edit(s) inconclusive; maxima are lower bounds\n";
  }
  return rep.conclusive() ? Ok : Inconclusive;
}

// ---- sweep

struct SweepCmd {
  std::string measure, edit = "sub";
  std::size_t n = 8;
  int sigma = 2;
  bool no_fresh = false, no_canonical = false;
};

int run_sweep(const SweepCmd& s, const Common& c) {
  SweepOptions o;
  o.fresh = !s.no_fresh;
  o.jobs = c.jobs;
  o.limits = limits_of(c);
  o.use_canonical = !s.no_canonical;
  auto g = global_worst(s.measure, s.n, s.sigma, parse_edit_kind(s.edit), o);
  if (records(c)) {
    std::cout << records::emit(g);
  } else {
    std::cout << "max AS = " << g.as.str() << ", max MS = " << g.ms.str() << "\n";
    std::cout << "  " << g.measure << ", n=" << g.n << ", sigma=" << g.sigma << (o.fresh ? "+1 fresh" : "") << ", "
              << to_string(g.kind) << ", " << g.strings << " strings\n";
    std::cout << "  AS witness: T=" << g.as_text.render() << " " << g.as_edit.str() << " C(T)=" << g.as_base.str()
              << "\n";
    std::cout << "  MS witness: T=" << g.ms_text.render() << " " << g.ms_edit.str() << " C(T)=" << g.ms_base.str()
              << "\n";
    if (!g.conclusive()) std::cout << "  " << g.unknown << " value(s) inconclusive; maxima are lower bounds\n";
  }
  return g.conclusive() ? Ok : Inconclusive;
}

// ---- family

struct FamilyCmd {
  std::string name, edit;
  std::vector<std::string> params;
  bool verify = false, dump = false, list = false;
};

int run_family(const FamilyCmd& f, const Common& c) {
  if (f.list) {
    for (auto& info : families::catalog()) {
      std::cout << std::left << std::setw(22) << info.id;
      std::string ps;
      for (auto& [k, d] : info.params) ps += (ps.empty() ? "" : " ") + k + "=" + std::to_string(d);
      std::cout << std::setw(10) << ps << info.summary << "\n";
    }
    return Ok;
  }
  if (f.name.empty()) throw Error("family: --name is required (or --list)");
  auto inst = families::generate(f.name, parse_params(f.params));
  Limits lim = limits_of(c);

  std::vector<EditOp> edits{inst.edit};
  bool prepend_max = false;
  if (!f.edit.empty()) {
    if (f.edit.rfind("prepend:", 0) != 0) throw Error("--edit expects prepend:<sym> or prepend:max");
    std::string s = f.edit.substr(8);
    if (s == "max") {
      prepend_max = true;
      edits.clear();
      for (Symbol x : AlphabetPolicy::extend_by_fresh(1).symbols_for(inst.t)) edits.push_back(EditOp::ins(1, x));
    } else {
      edits = {EditOp::ins(1, Text::from_tokens(s).at(1))};
    }
    inst.edit = edits.front();
  }

  int rc = Ok;
  if (!f.edit.empty()) {
    // measures named by the expectations, on T and each prepended T'
    std::vector<std::string> ms;
    for (auto& e : inst.expected)
      if (std::find(ms.begin(), ms.end(), e.measure) == ms.end()) ms.push_back(e.measure);
    for (auto& m : ms) {
      MeasureValue base = evaluate(m, inst.t, lim), best;
      EditOp arg = edits.front();
      bool first = true;
      for (auto& e : edits) {
        auto v = evaluate(m, apply_edit(inst.t, e), lim);
        if (!v.conclusive || !base.conclusive) rc = Inconclusive;
        if (first || v.value > best.value) best = v, arg = e;
        first = false;
      }
      if (records(c)) {
        std::cout << records::emit(records::MeasureRecord{m, inst.t, base});
        std::cout << records::emit(records::MeasureRecord{m, apply_edit(inst.t, arg), best});
      } else {
        std::cout << m << "(T) = " << val(base) << ", " << m << "(T') = " << val(best) << " with " << arg.str()
                  << (prepend_max ? " (max over prepended symbols)" : "") << "\n";
      }
    }
    return rc;
  }

  if (f.dump && !records(c)) {
    std::cout << "layout: " << inst.layout << "\n";
    std::cout << "T  (n=" << inst.t.size() << "): " << inst.t.tokens() << "\n";
    std::cout << "edit: " << inst.edit.str() << "\n";
    std::cout << "T' (n=" << inst.t_edited().size() << "): " << inst.t_edited().tokens() << "\n";
  }
  if (f.verify) {
    auto rep = families::verify(inst, lim);
    if (records(c)) {
      std::cout << records::emit(rep);
    } else {
      std::cout << inst.id << " length " << rep.length << (rep.length_ok ? " ok" : " MISMATCH (closed form " + std::to_string(inst.closed_form_length) + ")") << "\n";
      for (auto& r : rep.results) {
        auto& e = r.expectation;
        std::cout << "  " << std::left << std::setw(8) << e.measure << std::setw(6) << families::to_string(e.target)
                  << std::setw(3) << families::to_string(e.cmp) << " " << std::setw(22)
                  << (e.formula + " = " + e.value.str()) << " actual " << std::setw(8) << r.actual.str()
                  << (r.conclusive ? (r.pass ? "PASS" : "FAIL") : "INCONCLUSIVE")
                  << (e.source == "derived" ? " (derived)" : "") << "\n";
      }
      std::cout << (rep.passed() ? "PASS" : rep.conclusive() ? "FAIL" : "INCONCLUSIVE") << "\n";
    }
    rc = rep.passed() ? Ok : rep.conclusive() ? Failed : Inconclusive;
  }
  if (!f.verify && !f.dump) {
    if (records(c)) {
      nlohmann::json j = {{"type", "family_instance"}, {"id", inst.id},         {"params", inst.params},
                          {"text", inst.t.symbols()},  {"edit", inst.edit.str()}, {"layout", inst.layout}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << inst.id << " n=" << inst.t.size() << " edit " << inst.edit.str() << " layout " << inst.layout
                << "\n";
    }
  }
  return rc;
}

// ---- relations

struct RelCmd {
  Input in;
  std::vector<long long> random;
};

void print_relations(const RelationReport& r) {
  std::cout << "T = " << r.t.render() << "\n";
  for (auto& x : r.results)
    std::cout << "  " << std::left << std::setw(16) << x.name << x.lhs_value.str() << " <= " << x.rhs_value.str()
              << "  " << to_string(x.status) << "\n";
}

int run_relations(const RelCmd& rc, const Common& c) {
  Limits lim = limits_of(c);
  std::vector<Text> texts;
  if (!rc.random.empty()) {
    if (rc.in.given()) throw Error("relations: --random excludes --text/--tokens/--file");
    if (rc.random.size() != 3 || rc.random[0] < 1 || rc.random[1] < 1 || rc.random[2] < 1)
      throw Error("relations: --random takes n sigma count, all >= 1");
    std::mt19937_64 rng(c.seed);
    for (long long s = 0; s < rc.random[2]; ++s) {
      std::vector<Symbol> v(std::size_t(rc.random[0]));
      for (auto& x : v) x = Symbol(rng() % std::uint64_t(rc.random[1]));
      texts.emplace_back(std::move(v));
    }
  } else {
    texts.push_back(read_input(rc.in, false));
  }
  std::size_t failed = 0, skipped = 0;
  for (auto& t : texts) {
    auto rep = check_relations(t, lim);
    failed += !rep.ok();
    for (auto& x : rep.results) skipped += x.status == RelationStatus::Skipped;
    if (records(c))
      std::cout << records::emit(rep);
    else if (texts.size() == 1 || !rep.ok())
      print_relations(rep);
  }
  if (!records(c) && texts.size() > 1)
    std::cout << (texts.size() - failed) << "/" << texts.size() << " strings satisfy every relation"
              << (skipped ? ", " + std::to_string(skipped) + " check(s) skipped" : "") << "\n";
  return failed ? Failed : skipped ? Inconclusive : Ok;
}

// ---- table

struct TableCmd {
  std::vector<std::string> measures;
  std::size_t n = 9, n_costly = 6;
  bool no_sweep = false;
};

std::string cell(const std::optional<Rational>& r) { return r ? r->str() : "-"; }

int run_table(const TableCmd& tc, const Common& c) {
  TableOptions o;
  o.measures = tc.measures;
  o.n_cheap = tc.n;
  o.n_costly = tc.n_costly;
  o.sweep = !tc.no_sweep;
  o.jobs = c.jobs;
  o.limits = limits_of(c);
  auto rows = emit_table(o);
  if (records(c)) {
    std::cout << records::emit(rows);
    return Ok;
  }
  std::cout << std::left << std::setw(7) << "measure" << std::setw(5) << "edit" << std::setw(30) << "paper upper"
            << std::setw(16) << "paper lower" << std::setw(44) << "measured lower (MS on instance)"
            << "measured upper (max MS / max AS over sweep)\n";
  for (auto& r : rows) {
    std::string lo = r.lower_source.empty() ? "-" : cell(r.lower_ms) + " [" + r.lower_provenance + "]";
    if (!r.lower_conclusive) lo += " (inconclusive)";
    std::string up = r.upper_provenance.empty()
                         ? "-"
                         : cell(r.upper_ms) + " / " + cell(r.upper_as) + " [" + r.upper_provenance + "]";
    if (!r.upper_conclusive) up += " (inconclusive)";
    std::cout << std::setw(7) << r.measure << std::setw(5) << to_string(r.kind) << std::setw(30) << r.paper_upper
              << std::setw(16) << r.paper_lower << std::setw(44) << lo << up << "\n";
  }
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "repsense: repetitiveness measures and their sensitivity to single-character edits.\n"
      "Text input: --text takes raw bytes (each byte is one symbol, its code point);\n"
      "--tokens and --file take token mode (whitespace separated nonnegative integers).\n"
      "Exit status: 0 ok, 1 failed verification, 2 usage error, 3 inconclusive (resource limit).\n"
      "REPSENSE_LIMITS=\"gamma=N,b=N,e=N,gamma_budget=X,b_budget=X\" overrides the exact-search caps."};
  app.require_subcommand(1);
  Common c;
  app.add_option("--format", c.format, "table (for people) or records (line-delimited JSON)")
      ->check(CLI::IsMember({"table", "records"}));
  app.add_option("--jobs", c.jobs, "worker threads for sweeps")->check(CLI::Range(1, 1024));
  app.add_option("--seed", c.seed, "64-bit seed for randomized modes (default 24301 = 0x5EED)");
  app.add_option("--limits", c.limits, "cap overrides, same syntax as REPSENSE_LIMITS");
  app.add_option("--limit", c.limit, "length cap for the exact gamma, b and e searches")->check(CLI::Range(1, 1 << 30));

  MeasureCmd mc;
  auto* m = app.add_subcommand("measure", "evaluate measures on one text");
  add_input(m, mc.in, true);
  m->add_option("--measure", mc.names, "measure id, repeatable, or 'all'")->required();
  m->add_flag("--show-factors", mc.show_factors, "print LZ factors separated by '|'");
  m->add_flag("--dump-levels", mc.dump_levels, "print the GCIS levels");
  m->add_flag("--dump-grammar", mc.dump_grammar, "print the bisection grammar");

  SensCmd sc;
  auto* s = app.add_subcommand("sensitivity", "every single edit of one text");
  add_input(s, sc.in, true);
  s->add_option("--measure", sc.measure, "measure id")->required();
  s->add_option("--edit", sc.edit, "sub, ins or del")->check(CLI::IsMember({"sub", "ins", "del"}));
  s->add_option("--policy", sc.policy, "symbols an edit may write: fresh, fresh:<k> or fixed:<c,c,...>");

  SweepCmd wc;
  auto* w = app.add_subcommand("sweep", "worst case over every string of one length");
  w->add_option("--measure", wc.measure, "measure id")->required();
  w->add_option("--n", wc.n, "string length")->check(CLI::Range(1, 24));
  w->add_option("--sigma", wc.sigma, "alphabet size")->check(CLI::Range(1, 8));
  w->add_option("--edit", wc.edit, "sub, ins or del")->check(CLI::IsMember({"sub", "ins", "del"}));
  w->add_flag("--no-fresh", wc.no_fresh, "edits only write symbols of the sweep alphabet");
  w->add_flag("--no-canonical", wc.no_canonical, "visit every string, not one per renaming class");

  FamilyCmd fc;
  auto* f = app.add_subcommand("family", "generate, dump and verify lower-bound families");
  f->add_option("--name", fc.name, "family id (see --list)");
  f->add_option("--param", fc.params, "parameter name=value (repeatable)");
  f->add_flag("--verify", fc.verify, "compare every expectation with the computed value");
  f->add_flag("--dump", fc.dump, "print T, the edit and T'");
  f->add_flag("--list", fc.list, "list families and their default parameters");
  f->add_option("--edit", fc.edit, "replace the designated edit: prepend:<sym> or prepend:max");

  RelCmd rcmd;
  auto* r = app.add_subcommand("relations", "check the inequalities between measures");
  add_input(r, rcmd.in, false);
  r->add_option("--random", rcmd.random, "n sigma count: random strings drawn with --seed")->expected(3);

  TableCmd tcmd;
  auto* t = app.add_subcommand("table", "measured counterpart of the multiplicative sensitivity table");
  t->add_option("--measure", tcmd.measures, "restrict to these measures (repeatable)");
  t->add_option("--n", tcmd.n, "sweep length for polynomial measures")->check(CLI::Range(1, 14));
  t->add_option("--n-costly", tcmd.n_costly, "sweep length for gamma and b")->check(CLI::Range(1, 10));
  t->add_flag("--no-sweep", tcmd.no_sweep, "skip the exhaustive sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (*m) return run_measure(mc, c);
    if (*s) return run_sensitivity(sc, c);
    if (*w) return run_sweep(wc, c);
    if (*f) return run_family(fc, c);
    if (*r) return run_relations(rcmd, c);
    if (*t) return run_table(tcmd, c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}
