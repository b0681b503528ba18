#include "repsense/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "repsense/bwt.hpp"

namespace repsense::families {

namespace {

struct Builder {
  std::vector<Symbol> v;
  Builder& put(Symbol c, std::int64_t times = 1) {
    for (std::int64_t i = 0; i < times; ++i) v.push_back(c);
    return *this;
  }
  Builder& put(const std::vector<Symbol>& w) {
    v.insert(v.end(), w.begin(), w.end());
    return *this;
  }
  std::size_t pos() const { return v.size(); }  // 0-based index of the next symbol
};

int pow2(int e) { return 1 << e; }

void need(bool ok, std::string_view id, const std::string& what) {
  if (!ok) throw Error(std::string(id) + ": " + what);
}

int param(const Params& p, const FamilyInfo& info, const std::string& name) {
  auto it = p.find(name);
  if (it != p.end()) return it->second;
  for (auto& [k, d] : info.params)
    if (k == name) return d;
  throw Error(info.id + ": missing parameter " + name);
}

Expectation ex(std::string m, Target t, Cmp c, Rational v, std::string f, std::string src = "paper") {
  return {std::move(m), t, c, v, std::move(f), std::move(src)};
}

constexpr Target O = Target::Original, E = Target::Edited, D = Target::Diff;
constexpr Cmp EQ = Cmp::Eq, GE = Cmp::Ge, LE = Cmp::Le;

using Gen = std::function<void(FamilyInstance&, const std::function<int(const std::string&)>&)>;

struct Entry {
  FamilyInfo info;
  Gen gen;
};

// a^k x a^(k+1), then #_j a^(k-j+shift) x a^j for j = 1..k
std::vector<Symbol> hash_blocks(int k, int shift, Symbol a, Symbol x, Symbol first_hash) {
  Builder b;
  b.put(a, k).put(x).put(a, k + 1);
  for (int j = 1; j <= k; ++j) b.put(first_hash + j - 1).put(a, k - j + shift).put(x).put(a, j);
  return b.v;
}

std::vector<Symbol> q_family(int p) {
  std::vector<Symbol> t;
  for (int k = 1; k <= p; ++k) {
    if (k == 1) t = {0};
    else {
      auto prev = t;
      t.insert(t.end(), prev.begin(), prev.end());
      t.push_back(1);
    }
  }
  return t;
}

std::vector<Symbol> r_family(int p) {
  std::vector<Symbol> t = {0, 0};
  for (int k = 2; k <= p; ++k) {
    auto prev = t;
    t.insert(t.end(), prev.begin(), prev.end());
    t.push_back(1);
  }
  return t;
}

std::vector<Entry> build_catalog() {
  std::vector<Entry> c;
  auto add = [&](std::string id, std::vector<std::pair<std::string, int>> ps, std::string summary, Gen g) {
    c.push_back({{std::move(id), std::move(ps), std::move(summary)}, std::move(g)});
  };

  add("delta-del", {{"m", 3}}, "(abb)^m a (bba)^(m+1) a^(3m) (bba)^m, delete T[3m+1]", [](FamilyInstance& f, auto P) {
    int m = P("m");
    need(m >= 1, f.id, "m >= 1");
    Builder b;
    for (int i = 0; i < m; ++i) b.put(0).put(1).put(1);
    b.put(0);
    for (int i = 0; i <= m; ++i) b.put(1).put(1).put(0);
    b.put(0, 3 * m);
    for (int i = 0; i < m; ++i) b.put(1).put(1).put(0);
    f.t = Text(b.v);
    f.edit = EditOp::del(3 * m + 1);
    f.closed_form_length = 12 * m + 4;
    f.layout = "a=0 b=1";
    f.expected = {ex("delta", O, EQ, 2, "2"), ex("delta", E, GE, Rational(9 * m + 2, 3 * m + 1), "(9m+2)/(3m+1)")};
  });

  for (auto kind : {EditKind::Sub, EditKind::Ins, EditKind::Del}) {
    std::string id = std::string("gamma-") + to_string(kind);
    add(id, {{"k", 2}}, "a^k x a^(k+1) #_1 a^(k-1) x a ... #_k x a^k", [kind](FamilyInstance& f, auto P) {
      int k = P("k");
      need(k >= 1, f.id, "k >= 1");
      f.t = Text(hash_blocks(k, 0, 0, 1, 3));
      f.layout = "a=0 x=1 b=2 #_j=2+j";
      f.closed_form_length = std::size_t(k * k + 4 * k + 2);
      f.expected = {ex("gamma", O, EQ, k + 2, "k+2")};
      if (kind == EditKind::Sub) {
        f.edit = EditOp::sub(k + 1, 2);
        f.expected.push_back(ex("gamma", E, EQ, 2 * k + 2, "2k+2"));
      } else if (kind == EditKind::Ins) {
        f.edit = EditOp::ins(k + 2, 2);
        f.expected.push_back(ex("gamma", E, EQ, 2 * k + 2, "2k+2"));
      } else {
        f.edit = EditOp::del(k + 1);
        f.expected.push_back(ex("gamma", E, EQ, 2 * k + 1, "2k+1"));
      }
    });
  }

  add("b-unary-sub", {{"n", 6}}, "a^n -> a^(ceil(n/2)-1) b a^(floor(n/2))", [](FamilyInstance& f, auto P) {
    int n = P("n");
    need(n >= 4, f.id, "n >= 4");
    f.t = Text(std::vector<Symbol>(n, 0));
    f.edit = EditOp::sub((n + 1) / 2, 1);
    f.closed_form_length = n;
    f.layout = "a=0 b=1";
    f.expected = {ex("b", O, EQ, 2, "2"), ex("b", E, EQ, 4, "4")};
  });
  add("b-unary-ins", {{"n", 6}}, "a^n -> a^(ceil(n/2)) b a^(floor(n/2))", [](FamilyInstance& f, auto P) {
    int n = P("n");
    need(n >= 3, f.id, "n >= 3");
    f.t = Text(std::vector<Symbol>(n, 0));
    f.edit = EditOp::ins((n + 1) / 2 + 1, 1);
    f.closed_form_length = n;
    f.layout = "a=0 b=1";
    f.expected = {ex("b", O, EQ, 2, "2"), ex("b", E, EQ, 4, "4")};
  });

  for (auto kind : {EditKind::Sub, EditKind::Ins, EditKind::Del}) {
    std::string id = std::string("b-family-") + to_string(kind);
    add(id, {{"k", 2}}, "a^k x a^(k+1) #_1 a^k x a #_2 ... #_k a x a^k", [kind](FamilyInstance& f, auto P) {
      int k = P("k");
      need(k >= 1, f.id, "k >= 1");
      f.t = Text(hash_blocks(k, 1, 0, 1, 3));
      f.layout = "a=0 x=1 y=2 #_j=2+j";
      f.closed_form_length = std::size_t(k * k + 5 * k + 2);
      f.expected = {ex("b", O, LE, 2 * k + 4, "2k+4")};
      if (kind == EditKind::Sub) {
        f.edit = EditOp::sub(k + 1, 2);
        f.expected.push_back(ex("b", E, EQ, 3 * k + 5, "3k+5"));
        f.expected.push_back(ex("b", D, GE, k + 1, "b/2-1 with b=2k+4"));
      } else if (kind == EditKind::Ins) {
        f.edit = EditOp::ins(k + 2, 2);
        f.expected.push_back(ex("b", D, GE, k + 1, "b/2-1 with b=2k+4"));
      } else {
        f.edit = EditOp::del(k + 1);
        f.expected.push_back(ex("b", D, GE, k - 1, "b/2-3 with b=2k+4"));
      }
    });
  }

  for (auto kind : {EditKind::Sub, EditKind::Ins, EditKind::Del}) {
    std::string id = std::string("lz77-q-") + to_string(kind);
    add(id, {{"p", 4}}, "Q_1 = 0, Q_k = Q_1...Q_(k-1) 1, T = Q_1...Q_p", [kind](FamilyInstance& f, auto P) {
      int p = P("p");
      need(p >= 2 && p <= 24, f.id, "2 <= p <= 24");
      f.t = Text(q_family(p));
      f.layout = "0=0 1=1 fresh=2";
      f.closed_form_length = std::size_t(pow2(p) - 1);
      f.expected = {ex("z77", O, EQ, p, "p")};
      if (kind == EditKind::Sub) {
        f.edit = EditOp::sub(1, 2);
        f.expected.push_back(ex("z77", E, EQ, 2 * p - 1, "2p-1"));
      } else if (kind == EditKind::Ins) {
        f.edit = EditOp::ins(2, 2);
        f.expected.push_back(ex("z77", E, EQ, 2 * p - 1, "2p-1"));
      } else {
        f.edit = EditOp::del(1);
        f.expected.push_back(ex("z77", E, EQ, 2 * p - 2, "2p-2"));
      }
    });
  }

  for (auto kind : {EditKind::Sub, EditKind::Ins}) {
    std::string id = std::string("lz77sr-r-") + to_string(kind);
    add(id, {{"p", 4}}, "R_1 = 00, R_k = R_1...R_(k-1) 1, T = R_1...R_p", [kind](FamilyInstance& f, auto P) {
      int p = P("p");
      need(p >= 2 && p <= 24, f.id, "2 <= p <= 24");
      f.t = Text(r_family(p));
      f.layout = "0=0 1=1 fresh=2";
      f.closed_form_length = std::size_t(3 * pow2(p - 1) - 1);
      f.edit = kind == EditKind::Sub ? EditOp::sub(2, 2) : EditOp::ins(2, 2);
      f.expected = {ex("z77sr", O, EQ, p, "p"), ex("z77sr", E, EQ, 2 * p, "2p")};
    });
  }
  add("lz77sr-r-del", {{"p", 4}}, "Q family of z77, delete T[1], measured with z77sr", [](FamilyInstance& f, auto P) {
    int p = P("p");
    need(p >= 2 && p <= 24, f.id, "2 <= p <= 24");
    f.t = Text(q_family(p));
    f.layout = "0=0 1=1";
    f.closed_form_length = std::size_t(pow2(p) - 1);
    f.edit = EditOp::del(1);
    f.expected = {ex("z77sr", O, EQ, p, "p"), ex("z77sr", E, EQ, 2 * p - 2, "2p-2")};
  });

  // p = 2^h
  for (auto kind : {EditKind::Sub, EditKind::Ins}) {
    std::string id = std::string("lz77-sqrtn-") + to_string(kind);
    add(id, {{"h", 2}}, "p = 2^h; a^(2p-2) b . a^(p+j-1) b #_j (j = 1..p-1)", [kind](FamilyInstance& f, auto P) {
      int h = P("h");
      need(h >= 1 && h <= 10, f.id, "1 <= h <= 10");
      int p = pow2(h);
      Builder b;
      b.put(0, 2 * p - 2).put(1);
      for (int j = 1; j <= p - 1; ++j) b.put(0, p + j - 1).put(1).put(2 + j);
      f.t = Text(b.v);
      f.layout = "a=0 b=1 c=2 #_j=2+j";
      f.closed_form_length = std::size_t(2 * p - 1 + (p - 1) * (p + 1) + (p - 1) * p / 2);
      f.edit = kind == EditKind::Sub ? EditOp::sub(p, 2) : EditOp::ins(p, 2);
      f.expected = {ex("z77", O, EQ, h + p, "h+p"), ex("z77", E, EQ, h + 2 * p, "h+2p")};
    });
  }
  add("lz77-sqrtn-del", {{"h", 2}}, "p = 2^h; a^(p-1) c b . a^j c b #_j (j = 1..p-1), delete the first c",
      [](FamilyInstance& f, auto P) {
        int h = P("h");
        need(h >= 1 && h <= 10, f.id, "1 <= h <= 10");
        int p = pow2(h);
        Builder b;
        b.put(0, p - 1).put(2).put(1);
        for (int j = 1; j <= p - 1; ++j) b.put(0, j).put(2).put(1).put(2 + j);
        f.t = Text(b.v);
        f.layout = "a=0 b=1 c=2 #_j=2+j";
        f.closed_form_length = std::size_t(p + 1 + (p - 1) * p / 2 + 3 * (p - 1));
        f.edit = EditOp::del(p);
        f.expected = {ex("z77", O, EQ, h + p + 1, "h+p+1"), ex("z77", E, EQ, h + 2 * p - 1, "h+2p-1")};
      });

  add("lz77sr-sqrtn-sub", {{"p", 3}}, "a^(p-1) a . a^p b . a^(p+j) b #_j (j = 1..p-1), p-th a -> c",
      [](FamilyInstance& f, auto P) {
        int p = P("p");
        need(p >= 2, f.id, "p >= 2");
        Builder b;
        b.put(0, 2 * p).put(1);
        for (int j = 1; j <= p - 1; ++j) b.put(0, p + j).put(1).put(2 + j);
        f.t = Text(b.v);
        f.layout = "a=0 b=1 c=2 #_j=2+j";
        f.closed_form_length = std::size_t(2 * p + 1 + (p - 1) * (p + 2) + (p - 1) * p / 2);
        f.edit = EditOp::sub(p, 2);
        f.expected = {ex("z77sr", O, EQ, p + 1, "p+1"), ex("z77sr", E, EQ, 2 * p + 2, "2p+2")};
      });
  add("lz77sr-sqrtn-ins", {{"p", 3}}, "a^(p-1) . a^p b . a^(p+j) b #_j (j = 1..p-1), c inserted at p",
      [](FamilyInstance& f, auto P) {
        int p = P("p");
        need(p >= 2, f.id, "p >= 2");
        Builder b;
        b.put(0, 2 * p - 1).put(1);
        for (int j = 1; j <= p - 1; ++j) b.put(0, p + j).put(1).put(2 + j);
        f.t = Text(b.v);
        f.layout = "a=0 b=1 c=2 #_j=2+j";
        f.closed_form_length = std::size_t(2 * p + (p - 1) * (p + 2) + (p - 1) * p / 2);
        f.edit = EditOp::ins(p, 2);
        f.expected = {ex("z77sr", O, EQ, p + 1, "p+1"), ex("z77sr", E, EQ, 2 * p + 2, "2p+2")};
      });
  add("lz77sr-sqrtn-del", {{"p", 3}}, "a^p b c . a^j b c #_j (j = 1..p), delete T[p+2]", [](FamilyInstance& f, auto P) {
    int p = P("p");
    need(p >= 2, f.id, "p >= 2");
    Builder b;
    b.put(0, p).put(1).put(2);
    for (int j = 1; j <= p; ++j) b.put(0, j).put(1).put(2).put(2 + j);
    f.t = Text(b.v);
    f.layout = "a=0 b=1 c=2 #_j=2+j";
    f.closed_form_length = std::size_t(p + 2 + p * (p + 1) / 2 + 3 * p);
    f.edit = EditOp::del(p + 2);
    f.expected = {ex("z77sr", O, EQ, p + 3, "p+3"), ex("z77sr", E, EQ, 2 * p + 2, "2p+2")};
  });

  for (auto kind : {EditKind::Sub, EditKind::Ins}) {
    std::string id = std::string("lz77sr-binary-") + to_string(kind);
    add(id, {{"p", 3}}, "0^(p-1) [0] 0^(2p) 1 . 0^(2p+j) 1 0^j 1 (j = 1..p)", [kind](FamilyInstance& f, auto P) {
      int p = P("p");
      need(p >= 2, f.id, "p >= 2");
      bool sub = kind == EditKind::Sub;
      Builder b;
      b.put(0, p - 1 + (sub ? 1 : 0) + 2 * p).put(1);
      for (int j = 1; j <= p; ++j) b.put(0, 2 * p + j).put(1).put(0, j).put(1);
      f.t = Text(b.v);
      f.layout = "0=0 1=1";
      f.closed_form_length = std::size_t(3 * p + (sub ? 1 : 0) + 2 * p * p + 2 * p + p * (p + 1));
      f.edit = sub ? EditOp::sub(p, 1) : EditOp::ins(p, 1);
      f.expected = {ex("z77sr", O, EQ, p + 2, "p+2"), ex("z77sr", E, EQ, 2 * p + 4, "2p+4")};
    });
  }

  for (auto kind : {EditKind::Sub, EditKind::Ins, EditKind::Del}) {
    std::string id = std::string("lzss-") + to_string(kind);
    add(id, {{"p", 3}}, "Q_1 a_1 1 Q_2 . Q_1[m-k+2..m] a_1 1 Q_2[1..k] (k = 1..m)", [kind](FamilyInstance& f, auto P) {
      int p = P("p");
      need(p >= 1 && p <= 40, f.id, "1 <= p <= 40");
      const int m = p * (p + 1) / 2;
      auto a = [](int i) { return Symbol(1 + i); };
      auto bb = [p](int i) { return Symbol(1 + p + i); };
      std::vector<Symbol> q1, q2;
      for (int len = p; len >= 1; --len)
        for (int i = 1; i <= len; ++i) q1.push_back(a(i));
      for (int len = 1; len <= p; ++len)
        for (int i = 1; i <= len; ++i) q2.push_back(bb(i));
      Builder b;
      b.put(q1).put(a(1)).put(1).put(q2);
      for (int k = 1; k <= m; ++k) {
        b.put(std::vector<Symbol>(q1.end() - (k - 1), q1.end()));
        b.put(a(1)).put(1);
        b.put(std::vector<Symbol>(q2.begin(), q2.begin() + k));
      }
      f.t = Text(b.v);
      f.layout = "0=0 1=1 a_i=1+i b_i=1+p+i";
      f.closed_form_length = std::size_t(p * (p + 1) + 2 + m * m + 2 * m);
      const std::size_t one = std::size_t(m) + 2;
      Rational base = 4 * p + m, after = 0;
      std::string fa;
      if (kind == EditKind::Sub) f.edit = EditOp::sub(one, 0), after = 4 * p + 3 * m, fa = "4p+3p(p+1)/2";
      if (kind == EditKind::Del) f.edit = EditOp::del(one), after = 4 * p + 3 * m, fa = "4p+3p(p+1)/2";
      if (kind == EditKind::Ins) f.edit = EditOp::ins(one, 0), after = 4 * p + 2 * m, fa = "4p+p(p+1)";
      for (auto meas : {"zss", "zsssr"}) {
        f.expected.push_back(ex(meas, O, EQ, base, "4p+p(p+1)/2"));
        f.expected.push_back(ex(meas, E, EQ, after, fa));
      }
    });
  }

  for (auto kind : {EditKind::Sub, EditKind::Ins, EditKind::Del}) {
    std::string id = std::string("lzend-") + to_string(kind);
    add(id, {{"p", 3}}, "Q s_1 s_(p+1) . Q[q-j+1..q] s_1 s_(p+1) s_(p+j+1) (j = 1..q)", [kind](FamilyInstance& f, auto P) {
      int p = P("p");
      need(p >= 1 && p <= 60, f.id, "1 <= p <= 60");
      const int q = p * (p + 1) / 2;
      auto s = [](int i) { return Symbol(i - 1); };
      std::vector<Symbol> Q;
      for (int len = 1; len <= p; ++len)
        for (int i = 1; i <= len; ++i) Q.push_back(s(i));
      Builder b;
      b.put(Q).put(s(1)).put(s(p + 1));
      for (int j = 1; j <= q; ++j) {
        b.put(std::vector<Symbol>(Q.end() - j, Q.end()));
        b.put(s(1)).put(s(p + 1)).put(s(p + j + 1));
      }
      f.t = Text(b.v);
      const Symbol hash = s(p + q + 2);
      f.layout = "s_i=i-1 #=p+q+1";
      f.closed_form_length = std::size_t(q + 2 + q * (q + 1) / 2 + 3 * q);
      f.expected = {ex("zend", O, EQ, p + 1 + q, "p+1+q")};
      if (kind == EditKind::Sub) {
        f.edit = EditOp::sub(q + 1, hash);
        f.expected.push_back(ex("zend", E, EQ, p + 2 + 2 * q, "p+2+2q"));
      } else {
        f.edit = kind == EditKind::Del ? EditOp::del(q + 1) : EditOp::ins(q + 1, hash);
        f.expected.push_back(ex("zend", D, GE, q, "zEnd - Theta(sqrt zEnd), taken as q", "derived"));
      }
    });
  }

  for (auto kind : {EditKind::Sub, EditKind::Ins, EditKind::Del}) {
    std::string id = std::string("lz78-") + to_string(kind);
    add(id, {{"k", 4}}, "s_(k+1)..s_(2k) . (s_1)(s_1 s_2)..(s_1..s_k) . (s_1..s_(y_j) s_(k+j)) (j = 1..k)",
        [kind](FamilyInstance& f, auto P) {
          int k = P("k");
          need(k >= 2 && k <= 400, f.id, "2 <= k <= 400");
          auto s = [](int i) { return Symbol(i - 1); };
          Builder b;
          for (int i = k + 1; i <= 2 * k; ++i) b.put(s(i));
          for (int len = 1; len <= k; ++len)
            for (int i = 1; i <= len; ++i) b.put(s(i));
          const std::size_t target = b.pos() + 1;
          std::int64_t ysum = 0;
          for (int j = 1; j <= k; ++j) {
            int y = lz78_y(j, k);
            need(y >= 1, f.id, "y_j >= 1");
            ysum += y;
            for (int i = 1; i <= y; ++i) b.put(s(i));
            b.put(s(k + j));
          }
          f.t = Text(b.v);
          const Symbol hash = s(2 * k + 1);
          f.layout = "s_i=i-1 #=2k";
          f.closed_form_length = std::size_t(k + k * (k + 1) / 2 + ysum + k);
          Rational sum = lz78_formula_sum(k);
          f.expected = {ex("z78", O, EQ, 3 * k, "3k")};
          if (kind == EditKind::Sub) {
            f.edit = EditOp::sub(target, hash);
            f.expected.push_back(ex("z78", E, EQ, Rational(5 * k - 1) + sum, "5k-1+sum (y_j-j-1)/l_j"));
          } else if (kind == EditKind::Ins) {
            f.edit = EditOp::ins(target + 1, hash);
            f.expected.push_back(ex("z78", E, EQ, Rational(5 * k - 1) + sum, "5k-1+sum (y_j-j-1)/l_j", "derived"));
          } else {
            f.edit = EditOp::del(target);
            f.expected.push_back(ex("z78", E, EQ, Rational(5 * k - 2) + sum, "5k-2+sum (y_j-j-1)/l_j", "derived"));
          }
        });
  }

  add("gcis-sub", {{"p", 3}}, "(2^p 3)^4, third 3 -> 1", [](FamilyInstance& f, auto P) {
    int p = P("p");
    need(p >= 2, f.id, "p >= 2");
    Builder b;
    for (int r = 0; r < 4; ++r) b.put(2, p).put(3);
    f.t = Text(b.v);
    f.layout = "digits stand for themselves";
    f.closed_form_length = std::size_t(4 * p + 4);
    f.edit = EditOp::sub(3 * (p + 1), 1);
    f.expected = {ex("gis", O, EQ, p + 5, "p+5"), ex("gis", E, EQ, 4 * p + 7, "4p+7")};
  });
  add("gcis-ins", {{"p", 3}}, "((12)^p 122)^4, third block becomes (12)^p 1122", [](FamilyInstance& f, auto P) {
    int p = P("p");
    need(p >= 2, f.id, "p >= 2");
    Builder b;
    for (int r = 0; r < 4; ++r) {
      for (int i = 0; i < p; ++i) b.put(1).put(2);
      b.put(1).put(2).put(2);
    }
    f.t = Text(b.v);
    f.layout = "digits stand for themselves";
    f.closed_form_length = std::size_t(8 * p + 12);
    f.edit = EditOp::ins(2 * (2 * p + 3) + 2 * p + 1, 1);
    f.expected = {ex("gis", O, EQ, p + 10, "p+10"), ex("gis", E, EQ, 4 * p + 16, "4p+16")};
  });
  add("gcis-del", {{"p", 3}}, "((122)^p 132)^4, delete the third 3", [](FamilyInstance& f, auto P) {
    int p = P("p");
    need(p >= 2, f.id, "p >= 2");
    Builder b;
    for (int r = 0; r < 4; ++r) {
      for (int i = 0; i < p; ++i) b.put(1).put(2).put(2);
      b.put(1).put(3).put(2);
    }
    f.t = Text(b.v);
    f.layout = "digits stand for themselves";
    f.closed_form_length = std::size_t(12 * p + 12);
    f.edit = EditOp::del(2 * (3 * p + 3) + 3 * p + 2);
    f.expected = {ex("gis", O, EQ, p + 11, "p+11"), ex("gis", E, EQ, 4 * p + 15, "4p+15")};
  });

  add("bisection-sub", {{"k", 4}}, "a^(2^(k-1)), last a -> b", [](FamilyInstance& f, auto P) {
    int k = P("k");
    need(k >= 2 && k <= 24, f.id, "2 <= k <= 24");
    f.t = Text(std::vector<Symbol>(std::size_t(pow2(k - 1)), 0));
    f.layout = "a=0 b=1";
    f.closed_form_length = std::size_t(pow2(k - 1));
    f.edit = EditOp::sub(f.t.size(), 1);
    f.expected = {ex("gbsc", O, EQ, 2 * k - 1, "2k-1"), ex("gbsc", E, EQ, 4 * k - 4, "4k-4")};
  });
  for (auto kind : {EditKind::Del, EditKind::Ins}) {
    std::string id = std::string("bisection-") + to_string(kind);
    add(id, {{"p", 3}, {"s", 2}}, "Q'[1]^(2^p) ... Q'[t]^(2^p), Q a wrapped de Bruijn sequence, t = s^2",
        [kind](FamilyInstance& f, auto P) {
          int p = P("p"), s = P("s");
          need(p >= 1 && p <= 16, f.id, "1 <= p <= 16");
          need(s >= 2 && s <= 16 && (s & (s - 1)) == 0, f.id, "s a power of two in 2..16");
          auto q = de_bruijn_wrapped(s);
          Builder b;
          for (std::size_t i = 1; i < q.size(); ++i) b.put(q[i], pow2(p));
          f.t = Text(b.v);
          const int t = s * s;
          f.layout = "sigma_i=i-1";
          f.closed_form_length = std::size_t(t) * std::size_t(pow2(p));
          f.expected = {ex("gbsc-nodes", O, EQ, p * s + t - 1, "p|S|+t-1")};
          if (kind == EditKind::Del) {
            f.edit = EditOp::del(1);
            f.expected.push_back(ex("gbsc-nodes", E, EQ, t * p + t, "tp+t"));
          } else {
            f.edit = EditOp::ins(1, q[0]);
            f.expected.push_back(ex("gbsc-nodes", E, EQ, (t + 1) * p + t, "(t+1)p+t"));
          }
        });
  }

  add("cdawg-del", {{"m", 3}}, "a^m b a^m b, delete the middle b", [](FamilyInstance& f, auto P) {
    int m = P("m");
    need(m >= 1, f.id, "m >= 1");
    Builder b;
    b.put(0, m).put(1).put(0, m).put(1);
    f.t = Text(b.v);
    f.layout = "a=0 b=1";
    f.closed_form_length = std::size_t(2 * m + 2);
    f.edit = EditOp::del(m + 1);
    f.expected = {ex("e", O, EQ, 2 * m + 1, "2m+1"), ex("e", E, EQ, 4 * m, "4m")};
  });
  add("cdawg-sub", {{"m", 3}}, "a^m b a^m b, middle b -> a", [](FamilyInstance& f, auto P) {
    int m = P("m");
    need(m >= 1, f.id, "m >= 1");
    Builder b;
    b.put(0, m).put(1).put(0, m).put(1);
    f.t = Text(b.v);
    f.layout = "a=0 b=1";
    f.closed_form_length = std::size_t(2 * m + 2);
    f.edit = EditOp::sub(m + 1, 0);
    f.expected = {ex("e", O, EQ, 2 * m + 1, "2m+1"), ex("e", D, GE, 2 * m, "n-2")};
  });
  add("cdawg-ins", {{"n", 5}}, "a^n -> a^n b", [](FamilyInstance& f, auto P) {
    int n = P("n");
    need(n >= 2, f.id, "n >= 2");
    f.t = Text(std::vector<Symbol>(n, 0));
    f.layout = "a=0 b=1";
    f.closed_form_length = std::size_t(n);
    f.edit = EditOp::ins(n + 1, 1);
    f.expected = {ex("e", O, EQ, n, "n"), ex("e", E, EQ, 2 * n - 2, "2n-2"), ex("e", D, GE, n - 2, "n-2")};
  });

  add("rev-fibonacci", {{"k", 8}, {"c", 0}}, "reversed Fibonacci word, symbol c prepended", [](FamilyInstance& f, auto P) {
    int k = P("k"), ch = P("c");
    need(k >= 3 && k <= 40, f.id, "3 <= k <= 40");
    need(ch >= 0, f.id, "c >= 0");
    f.t = reversed_fibonacci(k);
    f.layout = "a=0 b=1";
    std::size_t x = 1, y = 1;
    for (int i = 3; i <= k; ++i) std::tie(x, y) = std::pair{y, x + y};
    f.closed_form_length = y;
    f.edit = EditOp::ins(1, ch);
    f.expected = {ex("r", O, EQ, 2, "2")};
  });

  return c;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = build_catalog();
  return e;
}

bool compare(const Rational& actual, Cmp c, const Rational& v) {
  switch (c) {
    case Cmp::Eq: return actual == v;
    case Cmp::Ge: return actual >= v;
    case Cmp::Le: return actual <= v;
  }
  return false;
}

}  // namespace

const char* to_string(Target t) {
  switch (t) {
    case Target::Original: return "T";
    case Target::Edited: return "T'";
    case Target::Diff: return "T'-T";
  }
  return "?";
}

const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::Eq: return "==";
    case Cmp::Ge: return ">=";
    case Cmp::Le: return "<=";
  }
  return "?";
}

const std::vector<FamilyInfo>& catalog() {
  static const std::vector<FamilyInfo> v = [] {
    std::vector<FamilyInfo> out;
    for (auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return v;
}

const FamilyInfo& family_info(std::string_view id) {
  for (auto& e : entries())
    if (e.info.id == id) return e.info;
  std::vector<std::string> names;
  for (auto& e : entries()) names.push_back(e.info.id);
  std::string msg = "unknown family '" + std::string(id) + "'";
  auto s = suggest(id, names);
  if (!s.empty()) {
    msg += "; did you mean";
    for (auto& x : s) msg += " " + x;
    msg += "?";
  }
  throw Error(msg);
}

FamilyInstance generate(std::string_view id, const Params& params) {
  const Entry* entry = nullptr;
  for (auto& e : entries())
    if (e.info.id == id) entry = &e;
  if (!entry) family_info(id);  // throws
  for (auto& [k, v] : params) {
    bool known = std::any_of(entry->info.params.begin(), entry->info.params.end(), [&](auto& p) { return p.first == k; });
    if (!known) throw Error(entry->info.id + ": unknown parameter " + k);
  }
  FamilyInstance f;
  f.id = entry->info.id;
  for (auto& [k, d] : entry->info.params) f.params[k] = params.count(k) ? params.at(k) : d;
  entry->gen(f, [&](const std::string& name) { return param(f.params, entry->info, name); });
  if (!edit_valid(f.t, f.edit)) throw Error(f.id + ": designated edit is out of range");
  return f;
}

bool VerifyReport::passed() const {
  if (!length_ok) return false;
  return std::all_of(results.begin(), results.end(), [](auto& r) { return r.conclusive && r.pass; });
}

bool VerifyReport::conclusive() const {
  return std::all_of(results.begin(), results.end(), [](auto& r) { return r.conclusive; });
}

VerifyReport verify(const FamilyInstance& inst, const Limits& lim) {
  VerifyReport rep;
  rep.id = inst.id;
  rep.params = inst.params;
  rep.length = inst.t.size();
  rep.length_ok = inst.t.size() == inst.closed_form_length;
  const Text te = inst.t_edited();
  std::map<std::pair<std::string, int>, MeasureValue> cache;
  auto get = [&](const std::string& m, int which) {
    auto key = std::pair{m, which};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, evaluate(m, which ? te : inst.t, lim)).first;
    return it->second;
  };
  for (auto& e : inst.expected) {
    ExpectationResult r;
    r.expectation = e;
    if (e.target == Target::Diff) {
      auto a = get(e.measure, 0), b = get(e.measure, 1);
      r.actual = b.value - a.value;
      r.conclusive = a.conclusive && b.conclusive;
    } else {
      auto a = get(e.measure, e.target == Target::Edited ? 1 : 0);
      r.actual = a.value;
      r.conclusive = a.conclusive;
    }
    r.pass = r.conclusive && compare(r.actual, e.cmp, e.value);
    rep.results.push_back(r);
  }
  return rep;
}

int lz78_ell(int j) {
  for (int l = 1;; ++l)
    if (l * (l - 1) / 2 + 1 <= j && j <= l * (l + 1) / 2) return l;
}

int lz78_y(int j, int k) {
  const int l = lz78_ell(j);
  const int r = ((2 + j + l - 1) % l + l) % l;
  for (int y = k; y >= 1; --y)
    if (((y % l) + l) % l == r) return y;
  return 0;
}

Rational lz78_formula_sum(int k) {
  Rational s = 0;
  for (int j = 2; j <= k; ++j) s = s + Rational(lz78_y(j, k) - j - 1, lz78_ell(j));
  return s;
}

std::vector<Symbol> de_bruijn_wrapped(int s) {
  // Lyndon-word concatenation, order 2
  std::vector<Symbol> out, a(3, 0);
  std::function<void(int, int)> db = [&](int t, int p) {
    if (t > 2) {
      if (2 % p == 0)
        for (int i = 1; i <= p; ++i) out.push_back(a[i]);
      return;
    }
    a[t] = a[t - p];
    db(t + 1, p);
    for (int c = a[t - p] + 1; c < s; ++c) {
      a[t] = c;
      db(t + 1, t);
    }
  };
  db(1, 1);
  out.push_back(out.front());
  return out;
}

}  // namespace repsense::families
