#include "motives.hpp"

#include <cctype>
#include <algorithm>

namespace mgc {

namespace {

MotiveGen elliptic(int id, int k) {
  return {id, "S[" + std::to_string(k) + "]", 2, k - 1, {0, k - 1}, true, k, 0};
}

MotiveGen siegel(int id, int j, int k) {
  return {id,
          "S[" + std::to_string(j) + "," + std::to_string(k) + "]",
          4,
          j + 2 * k - 3,
          {0, k - 2, j + k - 1, j + 2 * k - 3},
          false,
          k,
          j};
}

std::vector<MotiveGen> make_gens() {
  std::vector<MotiveGen> g;
  g.push_back({G_ONE, "1", 1, 0, {0}, false, 0, 0});
  g.push_back(elliptic(G_S12, 12));
  g.push_back(elliptic(G_S16, 16));
  g.push_back(elliptic(G_S18, 18));
  g.push_back(elliptic(G_S20, 20));
  g.push_back(elliptic(G_S22, 22));
  g.push_back(siegel(G_S6_8, 6, 8));
  g.push_back(siegel(G_S4_10, 4, 10));
  g.push_back(siegel(G_S8_8, 8, 8));
  g.push_back(siegel(G_S12_6, 12, 6));
  g.push_back({G_SYM2S12, "Sym2S[12]", 3, 22, {0, 11, 22}, false, 12, 0});
  return g;
}

}  // namespace

const std::vector<MotiveGen>& all_gens() {
  static const std::vector<MotiveGen> g = make_gens();
  return g;
}

const MotiveGen& gen(int id) {
  if (id < 1 || id > kNumGens) fail(Err::InvalidArgument, "generator id out of range");
  return all_gens()[id - 1];
}

int gen_id_by_name(const std::string& name) {
  for (auto& g : all_gens())
    if (g.name == name) return g.id;
  if (name == "Sym^2S[12]" || name == "Sym2 S[12]") return G_SYM2S12;
  return 0;
}

int gen_key_weight(const GenKey& g) { return 2 * g.k + gen(g.j).weight; }

std::string gen_key_str(const GenKey& g) {
  std::string t;
  if (g.k == 1) t = "L";
  else if (g.k > 1) t = "L^" + std::to_string(g.k);
  if (g.j == G_ONE) return t.empty() ? "1" : t;
  return t.empty() ? gen(g.j).name : t + "*" + gen(g.j).name;
}

std::string gens_str(const std::vector<GenKey>& gens) {
  std::string s;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gen_key_str(gens[i]);
  }
  return s;
}

const std::vector<int> kSupportedPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23};
const std::vector<int> kTraceQs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25};

bool supported_q(int q) { return std::find(kTraceQs.begin(), kTraceQs.end(), q) != kTraceQs.end(); }

std::vector<Int> power_sums(const std::vector<Int>& c, int n) {
  int d = static_cast<int>(c.size()) - 1;
  std::vector<Int> e(n + 1, 0), p(n + 1, 0);
  for (int i = 0; i <= std::min(d, n); ++i) e[i] = (i % 2 ? -c[i] : c[i]);
  for (int r = 1; r <= n; ++r) {
    Int s = (r % 2 ? 1 : -1) * Int(r) * e[r];
    for (int i = 1; i < r; ++i) s += (i % 2 ? 1 : -1) * e[i] * p[r - i];
    p[r] = s;
  }
  return p;
}

bool functional_equation_ok(const std::vector<Int>& c, int p, int w) {
  int d = static_cast<int>(c.size()) - 1;
  if (d < 1 || c[0] != 1) return false;
  if ((w * d) % 2) return false;
  Int top = ipow(p, w * d / 2);
  int eps;
  if (c[d] == top) eps = 1;
  else if (c[d] == -top) eps = -1;
  else return false;
  for (int i = 0; i <= d; ++i) {
    int e2 = w * (d - 2 * i);
    if (e2 >= 0) {
      if (e2 % 2) return false;
      if (c[d - i] != eps * ipow(p, e2 / 2) * c[i]) return false;
    }
  }
  return true;
}

std::vector<Int> sym2_charpoly(const std::vector<Int>& c) {
  // roots a^2, ab, b^2 with s = a + b = -c1, t = ab = c2
  Int s = -c[1], t = c[2];
  Int a2b2 = s * s - 2 * t;
  Int e1 = a2b2 + t;
  Int e2 = t * t + t * a2b2;
  Int e3 = t * t * t;
  return {1, -e1, e2, -e3};
}

void CharPolyTable::set(int id, int p, std::vector<Int> coeffs) { polys_[id][p] = std::move(coeffs); }

bool CharPolyTable::has(int id, int p) const {
  if (id == G_ONE) return true;
  if (id == G_SYM2S12) return has(G_S12, p);
  auto it = polys_.find(id);
  return it != polys_.end() && it->second.count(p);
}

const std::vector<Int>& CharPolyTable::get(int id, int p) const {
  auto it = polys_.find(id);
  if (it == polys_.end() || !it->second.count(p))
    fail(Err::MissingData, "no characteristic polynomial for " + gen(id).name + " at p=" + std::to_string(p));
  return it->second.at(p);
}

std::vector<int> CharPolyTable::primes(int id) const {
  std::vector<int> r;
  auto it = polys_.find(id);
  if (it != polys_.end())
    for (auto& [p, c] : it->second) r.push_back(p);
  return r;
}

std::vector<int> CharPolyTable::ids() const {
  std::vector<int> r;
  for (auto& [id, m] : polys_) r.push_back(id);
  return r;
}

Int CharPolyTable::trace(int id, int q) const {
  auto [p, r] = prime_power(q);
  if (p == 0 || !supported_q(q))
    fail(Err::UnsupportedPrimePower, "unsupported prime power q=" + std::to_string(q));
  if (id == G_ONE) return 1;
  if (id == G_SYM2S12) {
    auto ps = power_sums(get(G_S12, p), 2 * r);
    return ps[2 * r] + ipow(p, 11 * r);
  }
  return power_sums(get(id, p), r)[r];
}

QMotive to_q(const MotiveExpr& e) {
  QMotive r;
  for (auto& [g, c] : e.terms()) r.add_term(g, Rat(c));
  return r;
}

bool is_integral(const QMotive& e) {
  for (auto& [g, c] : e.terms())
    if (c.get_den() != 1) return false;
  return true;
}

MotiveExpr to_z(const QMotive& e) {
  MotiveExpr r;
  for (auto& [g, c] : e.terms()) {
    if (c.get_den() != 1)
      fail(Err::NonIntegralCoefficient, "coefficient " + c.get_str() + " of " + gen_key_str(g) + " is not integral");
    r.add_term(g, c.get_num());
  }
  return r;
}

Int dim(const MotiveExpr& e) {
  Int d = 0;
  for (auto& [g, c] : e.terms()) d += c * gen(g.j).dim;
  return d;
}

int weight(const MotiveExpr& e) {
  if (e.is_zero()) fail(Err::EmptyExpr, "weight of the zero expression");
  int w = -1;
  for (auto& [g, c] : e.terms()) w = std::max(w, gen_key_weight(g));
  return w;
}

std::vector<int> hodge_tate(const MotiveExpr& e) {
  std::vector<int> r;
  for (auto& [g, c] : e.terms()) {
    Int m = abs(c);
    for (Int i = 0; i < m; ++i)
      for (int h : gen(g.j).hodge_tate) r.push_back(g.k + h);
  }
  std::sort(r.begin(), r.end());
  return r;
}

template <class S>
static BasicMotive<S> mult_impl(const BasicMotive<S>& a, const BasicMotive<S>& b) {
  BasicMotive<S> r;
  for (auto& [ga, ca] : a.terms()) {
    for (auto& [gb, cb] : b.terms()) {
      S c = ca * cb;
      int k = ga.k + gb.k;
      if (ga.j == G_ONE) {
        r.add_term({k, gb.j}, c);
      } else if (gb.j == G_ONE) {
        r.add_term({k, ga.j}, c);
      } else if (ga.j == G_S12 && gb.j == G_S12) {
        r.add_term({k, G_SYM2S12}, c);
        r.add_term({k + 11, G_ONE}, c);
      } else {
        fail(Err::UnsupportedProduct,
             "product " + gen(ga.j).name + " * " + gen(gb.j).name + " is outside the motive model");
      }
    }
  }
  return r;
}

MotiveExpr mult(const MotiveExpr& a, const MotiveExpr& b) { return mult_impl(a, b); }
QMotive mult(const QMotive& a, const QMotive& b) { return mult_impl(a, b); }

template <class S>
static BasicMotive<S> adams_impl(const BasicMotive<S>& e, int n) {
  if (n < 1) fail(Err::InvalidArgument, "Adams operation index must be positive");
  if (n == 1) return e;
  BasicMotive<S> r;
  for (auto& [g, c] : e.terms()) {
    if (g.j == G_ONE) {
      r.add_term({n * g.k, G_ONE}, c);
    } else if (n == 2 && g.j == G_S12) {
      r.add_term({2 * g.k, G_SYM2S12}, c);
      r.add_term({2 * g.k + 11, G_ONE}, -c);
    } else {
      fail(Err::AdamsOutOfScope,
           "psi^" + std::to_string(n) + " of " + gen(g.j).name + " is outside the motive model");
    }
  }
  return r;
}

MotiveExpr adams(const MotiveExpr& e, int n) { return adams_impl(e, n); }
QMotive adams(const QMotive& e, int n) { return adams_impl(e, n); }

Int trace_gen(const GenKey& g, int q, const CharPolyTable& table) {
  return ipow(q, g.k) * table.trace(g.j, q);
}

Int trace(const MotiveExpr& e, int q, const CharPolyTable& table) {
  if (!supported_q(q)) fail(Err::UnsupportedPrimePower, "unsupported prime power q=" + std::to_string(q));
  Int t = 0;
  for (auto& [g, c] : e.terms()) t += c * trace_gen(g, q, table);
  return t;
}

Rat trace(const QMotive& e, int q, const CharPolyTable& table) {
  if (!supported_q(q)) fail(Err::UnsupportedPrimePower, "unsupported prime power q=" + std::to_string(q));
  Rat t = 0;
  for (auto& [g, c] : e.terms()) t += c * Rat(trace_gen(g, q, table));
  return t;
}

MotiveExpr expand_lift(const std::string& name) {
  MotiveExpr r;
  if (name == "S[0,10]") {
    r = MotiveExpr::gen(G_S18) + MotiveExpr::L(9) + MotiveExpr::L(8);
  } else if (name == "S[0,12]") {
    r = MotiveExpr::gen(G_S22) + MotiveExpr::L(11) + MotiveExpr::L(10);
  } else if (name == "S[4,0,8]") {
    MotiveExpr s12 = MotiveExpr::gen(G_S12);
    r = mult(s12 + MotiveExpr::L(6) + MotiveExpr::L(5), s12);
  } else {
    fail(Err::UnknownLift, "unknown lift " + name);
  }
  return r;
}

std::vector<Int> tate_coeffs(const MotiveExpr& e) {
  std::vector<Int> c;
  for (auto& [g, v] : e.terms()) {
    if (g.j != G_ONE) fail(Err::InvalidArgument, "expression is not Tate");
    if (static_cast<int>(c.size()) <= g.k) c.resize(g.k + 1, 0);
    c[g.k] = v;
  }
  return c;
}

MotiveExpr tate_poly(const std::vector<Int>& c) {
  MotiveExpr r;
  for (size_t k = 0; k < c.size(); ++k) r.add_term({static_cast<int>(k), G_ONE}, c[k]);
  return r;
}

static void sort_keys(std::vector<GenKey>& v) {
  std::sort(v.begin(), v.end(), [](const GenKey& a, const GenKey& b) {
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
  });
}

std::vector<GenKey> gens_phi(int i) {
  std::vector<GenKey> r;
  for (auto& g : all_gens()) {
    int rem = i - g.weight;
    if (rem >= 0 && rem % 2 == 0) r.push_back({rem / 2, g.id});
  }
  sort_keys(r);
  return r;
}

std::vector<GenKey> gens_phi_prime_upto(int i) {
  std::vector<GenKey> r{{0, G_ONE}};
  for (auto& g : all_gens())
    for (int k = 1; 2 * k + g.weight <= i; ++k) r.push_back({k, g.id});
  sort_keys(r);
  return r;
}

std::vector<GenKey> gens_psi(int i) {
  std::vector<GenKey> r;
  for (auto& g : all_gens())
    for (int k = 0; k + g.weight <= i; ++k) r.push_back({k, g.id});
  sort_keys(r);
  return r;
}

std::set<int> weight_set(const std::vector<int>& lambda, int g) {
  std::vector<int> base;
  for (int i = 0; i < g; ++i) {
    int li = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
    base.push_back(li + (g - i));
  }
  std::set<int> w;
  for (int mask = 0; mask < (1 << g); ++mask) {
    int s = 0;
    for (int i = 0; i < g; ++i)
      if (mask >> i & 1) s += base[i];
    w.insert(s);
  }
  return w;
}

std::vector<GenKey> gens_psi_lambda(const std::vector<int>& lambda, int g) {
  for (size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i] > lambda[i - 1] || lambda[i] < 0) fail(Err::InvalidArgument, "lambda must be weakly decreasing");
  if (static_cast<int>(lambda.size()) > g) fail(Err::InvalidArgument, "lambda longer than genus");
  int size = 0;
  for (int v : lambda) size += v;
  int bound = g * (g + 1) + size;
  auto w = weight_set(lambda, g);
  std::vector<GenKey> r;
  for (auto& gg : all_gens()) {
    for (int k = 0; 2 * k + gg.weight <= bound; ++k) {
      bool ok = true;
      for (int h : gg.hodge_tate)
        if (!w.count(k + h)) ok = false;
      if (ok) r.push_back({k, gg.id});
    }
  }
  sort_keys(r);
  return r;
}

std::vector<GenKey> outside_span(const MotiveExpr& e, const std::vector<GenKey>& gens) {
  std::vector<GenKey> r;
  for (auto& [g, c] : e.terms())
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) r.push_back(g);
  return r;
}


template <class S>
static std::string motive_str_impl(const BasicMotive<S>& e) {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  std::vector<std::pair<GenKey, S>> ts(e.terms().begin(), e.terms().end());
  std::stable_sort(ts.begin(), ts.end(), [](auto& x, auto& y) { return x.first.j < y.first.j; });
  for (auto& [g, c] : ts) {
    bool neg = c < 0;
    S a = neg ? S(-c) : c;
    if (first) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    first = false;
    std::string mono = gen_key_str(g);
    if (mono == "1") s += to_str(a);
    else if (a == 1) s += mono;
    else s += to_str(a) + "*" + mono;
  }
  return s;
}

std::string motive_str(const MotiveExpr& e) { return motive_str_impl(e); }
std::string motive_str(const QMotive& e) { return motive_str_impl(e); }

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  MotiveExpr parse() {
    MotiveExpr e = expr();
    skip();
    if (i_ != s_.size()) err("trailing input");
    return e;
  }

 private:
  const std::string& s_;
  size_t i_ = 0;

  [[noreturn]] void err(const std::string& m) {
    fail(Err::ParseError, m + " at offset " + std::to_string(i_) + " in '" + s_ + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) err("expected integer");
    return s_.substr(b, i_ - b);
  }
  MotiveExpr expr() {
    bool neg = eat('-');
    if (!neg) eat('+');
    MotiveExpr e = term();
    if (neg) e = -e;
    for (;;) {
      if (eat('+')) e += term();
      else if (eat('-')) e -= term();
      else return e;
    }
  }
  MotiveExpr term() {
    MotiveExpr e = factor();
    while (eat('*')) e = mult(e, factor());
    return e;
  }
  MotiveExpr factor() {
    skip();
    if (i_ >= s_.size()) err("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      MotiveExpr e = expr();
      if (!eat(')')) err("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MotiveExpr::scalar(Int(digits()));
    if (c == 'L') {
      ++i_;
      int k = 1;
      if (eat('^')) k = std::stoi(digits());
      return MotiveExpr::L(k);
    }
    size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '[')) {
      if (s_[i_] == '[') {
        while (i_ < s_.size() && s_[i_] != ']') ++i_;
        if (i_ == s_.size()) err("unterminated generator name");
      }
      ++i_;
    }
    std::string name = s_.substr(b, i_ - b);
    name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
    if (name.empty()) err("unexpected character");
    if (int id = gen_id_by_name(name)) return MotiveExpr::gen(id);
    try {
      return expand_lift(name);
    } catch (const Error&) {
      err("unknown generator " + name);
    }
  }
};

}  // namespace

MotiveExpr parse_motive(const std::string& text) { return ExprParser(text).parse(); }

}  // namespace mgc
