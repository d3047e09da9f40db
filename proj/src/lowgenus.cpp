#include "lowgenus.hpp"

#include <mutex>

#include "csv.hpp"
#include "modforms.hpp"
#include "symfun.hpp"

namespace mgc {

namespace {

// S[k] for a level one cusp form weight, with S[2] = -L-1.
MotiveExpr cusp(int k) {
  switch (k) {
    case 2: return -MotiveExpr::L(1) - MotiveExpr::scalar(1);
    case 12: return MotiveExpr::gen(G_S12);
    case 16: return MotiveExpr::gen(G_S16);
    case 18: return MotiveExpr::gen(G_S18);
    case 20: return MotiveExpr::gen(G_S20);
    case 22: return MotiveExpr::gen(G_S22);
    default: return MotiveExpr();
  }
}

void check_weight(const LocalWeight& lam, int g) {
  if (static_cast<int>(lam.size()) != g) fail(Err::InvalidArgument, "expected a weight of length " + std::to_string(g));
  for (int i = 0; i < g; ++i)
    if (lam[i] < 0 || (i && lam[i] > lam[i - 1])) fail(Err::InvalidArgument, "weight must be decreasing: " + lw_str(lam));
}

// Greedy expansion of a Laurent polynomial in y, symmetric under y -> 1/y,
// in the basis sum_{j = a, a-2, ..., -a} y^{step j}. Returns a -> coefficient.
std::map<int, Int> split_symmetric(std::map<int, Int> f, int step) {
  std::map<int, Int> out;
  while (!f.empty()) {
    auto top = std::prev(f.end());
    int e = top->first;
    Int c = top->second;
    if (c == 0) {
      f.erase(top);
      continue;
    }
    if (e < 0 || e % step) fail(Err::ValidationFailure, "twisted character is not a sum of symmetric powers");
    int a = e / step;
    out[a] += c;
    for (int j = a; j >= -a; j -= 2) {
      auto& v = f[step * j];
      v -= c;
      if (v == 0) f.erase(step * j);
    }
  }
  return out;
}

MotiveExpr halve(const QMotive& q) {
  if (!is_integral(q)) fail(Err::NonIntegralCoefficient, "symmetric quotient is not integral: " + motive_str(q));
  return to_z(q);
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Roots r of p become the roots of x^k = r.
std::vector<Int> poly_root_k(const std::vector<Int>& p, int k) {
  std::vector<Int> r((p.size() - 1) * k + 1, 0);
  for (size_t i = 0; i < p.size(); ++i) r[i * k] = p[i];
  return r;
}

}  // namespace

MotiveExpr ec_a1(int a) {
  if (a < 0) fail(Err::InvalidArgument, "negative weight");
  if (a + 1 > 22) fail(Err::OutOfModel, "V_" + std::to_string(a) + " leaves the weight 22 basis");
  if (a % 2) return MotiveExpr();
  return -MotiveExpr::scalar(1) - cusp(a + 2);
}

MotiveExpr ec_a1_sym2(const LocalWeight& lam) {
  check_weight(lam, 2);
  int n = lw_size(lam);
  if (n % 2) return MotiveExpr();
  QMotive total;
  for (auto& t : branch(lam, {1, 1}))
    total += to_q(mult(ec_a1(t.parts[0][0]), ec_a1(t.parts[1][0])).twist(t.twist)) * Rat(t.mult);
  // swap of the two factors: eigenvalues (w, -w) in the first block
  std::map<int, Int> f;
  for (auto& [x, c] : symp_schur(lam).terms) f[x[0] + x[1]] += (x[1] % 2 ? -c : c);
  for (auto& [a, c] : split_symmetric(f, 2)) total += to_q(adams(ec_a1(a), 2).twist((n - 2 * a) / 2)) * Rat(c);
  return halve(total * Rat(1, 2));
}

MotiveExpr ec_a1_sym3(const LocalWeight& lam) {
  check_weight(lam, 3);
  int n = lw_size(lam);
  if (n % 2) return MotiveExpr();
  QMotive total;
  for (auto& t : branch(lam, {1, 1, 1}))
    total += to_q(mult(mult(ec_a1(t.parts[0][0]), ec_a1(t.parts[1][0])), ec_a1(t.parts[2][0])).twist(t.twist)) * Rat(t.mult);
  const LaurentChar& ch = symp_schur(lam);
  // transposition: eigenvalues (w, -w, x3)
  {
    std::map<int, std::map<int, Int>> f;  // exponent of y3 -> exponent of y1 -> coefficient
    for (auto& [x, c] : ch.terms) f[x[2]][x[0] + x[1]] += (x[1] % 2 ? -c : c);
    // peel off the top y1 exponent, then split the y3 dependence
    for (;;) {
      int top = INT_MIN;
      for (auto& [e3, g] : f)
        for (auto& [e1, c] : g)
          if (c != 0) top = std::max(top, e1);
      if (top == INT_MIN) break;
      if (top < 0 || top % 2) fail(Err::ValidationFailure, "twisted character is not a sum of symmetric powers");
      int a = top / 2;
      std::map<int, Int> lead;
      for (auto& [e3, g] : f) {
        auto it = g.find(top);
        if (it != g.end() && it->second != 0) lead[e3] = it->second;
      }
      for (auto& [b, c] : split_symmetric(lead, 1)) {
        QMotive term = to_q(mult(adams(ec_a1(a), 2), ec_a1(b)).twist((n - 2 * a - b) / 2));
        if ((n - 2 * a - b) % 2) fail(Err::ValidationFailure, "odd Tate twist in twisted character");
        total += term * Rat(3 * c);
        for (int j = a; j >= -a; j -= 2)
          for (int i = b; i >= -b; i -= 2) f[i][2 * j] -= c;
      }
    }
  }
  // three cycle: eigenvalues (w, zeta w, zeta^2 w); reduce in Z[zeta]
  {
    std::map<int, std::array<Int, 3>> z;
    for (auto& [x, c] : ch.terms) z[x[0] + x[1] + x[2]][((x[1] + 2 * x[2]) % 3 + 3) % 3] += c;
    std::map<int, Int> f;
    for (auto& [e, v] : z) {
      if (v[1] != v[2]) fail(Err::ValidationFailure, "three-cycle character is not rational");
      if (v[0] != v[2]) f[e] = v[0] - v[2];
    }
    for (auto& [a, c] : split_symmetric(f, 3)) {
      if ((n - 3 * a) % 2) fail(Err::ValidationFailure, "odd Tate twist in three-cycle character");
      total += to_q(adams(ec_a1(a), 3).twist((n - 3 * a) / 2)) * Rat(2 * c);
    }
  }
  return halve(total * Rat(1, 6));
}

A2Table parse_a2_csv(const std::string& text) {
  auto rows = read_csv(text);
  if (rows.empty() || rows[0] != std::vector<std::string>{"lambda", "ec"}) fail(Err::ParseError, "a2 table header must be lambda,ec");
  A2Table t;
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) fail(Err::ParseError, "a2 table row " + std::to_string(i) + " needs 2 fields");
    Partition p = parse_partition(rows[i][0]);
    LocalWeight lam = local_weight(p, 2);
    if (!t.entries.emplace(lam, parse_motive(rows[i][1])).second) fail(Err::ParseError, "duplicate a2 entry " + lw_str(lam));
  }
  return t;
}

std::string a2_csv(const A2Table& t) {
  std::string s = csv_row({"lambda", "ec"});
  for (auto& [lam, e] : t.entries) s += csv_row({std::to_string(lam[0]) + "," + std::to_string(lam[1]), motive_str(e)});
  return s;
}

void validate_a2(const A2Table& t) {
  for (auto& [lam, e] : t.entries) {
    check_weight(lam, 2);
    if (lw_size(lam) % 2 && !e.is_zero()) fail(Err::MonoidViolation, "odd weight entry is nonzero: " + lw_str(lam));
    auto out = outside_span(e, gens_psi_lambda(lam, 2));
    if (!out.empty()) fail(Err::MonoidViolation, "a2 entry " + lw_str(lam) + " uses " + gens_str(out) + " outside its span");
  }
}

MotiveExpr ec_a2(const LocalWeight& lam, const A2Table& t) {
  check_weight(lam, 2);
  if (lam[0] + lam[1] > 19) fail(Err::OutOfModel, "a2 weight too large: " + lw_str(lam));
  if (lw_size(lam) % 2) return MotiveExpr();
  auto it = t.entries.find(lam);
  if (it == t.entries.end()) fail(Err::MissingData, "a2_ec entry " + lw_str(lam));
  return it->second;
}

MotiveExpr ec_m2_local(const LocalWeight& lam, const A2Table& t) {
  check_weight(lam, 2);
  if (lw_size(lam) % 2) return MotiveExpr();
  return ec_a2(lam, t) - ec_a1_sym2(lam);
}

EquivariantEC ec_m0n(int n) {
  if (n < 3) fail(Err::InvalidArgument, "M_{0,n} needs n >= 3");
  // configurations of n points on P^1, divided by PGL_2
  Caps caps{n, 0};
  SymSeries G = pleth_log(SymSeries::one(caps) + SymSeries::monomial(caps, 0, Partition({1}), QMotive::scalar(1)));
  SymSeries XG(caps);
  for (auto& [m, c] : G.terms()) XG.add(m, mult(c, QMotive::L(1) + QMotive::scalar(1)));
  SymSeries conf = pleth_exp(XG).part(0, n);
  EquivariantEC out;
  for (auto& mu : partitions_of(n)) out[mu] = MotiveExpr();
  for (auto& [mu, c] : p_to_schur_q(conf)) {
    // exact division by L^3 - L
    std::vector<Int> a = tate_coeffs(to_z(c));
    std::vector<Int> qt(a.size() > 3 ? a.size() - 3 : 0, 0);
    for (int k = static_cast<int>(a.size()) - 1; k >= 3; --k) {
      qt[k - 3] = a[k];
      a[k - 2] += a[k];
      a[k] = 0;
    }
    for (auto& v : a)
      if (v != 0) fail(Err::ValidationFailure, "configuration space not divisible by PGL_2");
    out[mu] = tate_poly(qt);
  }
  return out;
}

namespace {

// Laurent polynomial in x with polynomial coefficients in q.
using QPoly = std::map<int, Int>;
using XPoly = std::map<int, QPoly>;

void add_to(XPoly& p, int x, int q, const Int& c) {
  if (c == 0) return;
  auto& v = p[x][q];
  v += c;
  if (v == 0) {
    p[x].erase(q);
    if (p[x].empty()) p.erase(x);
  }
}

XPoly xmul(const XPoly& a, const XPoly& b) {
  XPoly r;
  for (auto& [xa, qa] : a)
    for (auto& [xb, qb] : b)
      for (auto& [ea, ca] : qa)
        for (auto& [eb, cb] : qb) add_to(r, xa + xb, ea + eb, ca * cb);
  return r;
}

// Point count of E over F_{q^d}: 1 + q^d - x^d - q^d x^-d.
XPoly count_poly(int d) {
  XPoly p;
  add_to(p, 0, 0, 1);
  add_to(p, 0, d, 1);
  add_to(p, d, 0, -1);
  add_to(p, -d, d, -1);
  return p;
}

// p / (1 + q - x - q/x), exact.
XPoly divide_by_count(const XPoly& p) {
  if (p.empty()) return p;
  // -x * count = (x - 1)(x - q)
  int lo = p.begin()->first, hi = std::prev(p.end())->first;
  std::vector<QPoly> a(hi - lo + 2);
  for (auto& [x, c] : p)
    for (auto& [e, v] : c) a[x - lo + 1][e] -= v;
  auto synth = [](std::vector<QPoly> a, int qshift) {
    // divide by (x - q^qshift); a[i] is the coefficient of x^i
    size_t n = a.size();
    std::vector<QPoly> b(n - 1);
    QPoly carry;
    for (size_t i = n - 1; i >= 1; --i) {
      QPoly cur = a[i];
      for (auto& [e, v] : carry) cur[e + qshift] += v;
      b[i - 1] = cur;
      carry = cur;
    }
    QPoly rem = a[0];
    for (auto& [e, v] : carry) rem[e + qshift] += v;
    for (auto& [e, v] : rem)
      if (v != 0) fail(Err::ValidationFailure, "configuration count not divisible by the curve count");
    return b;
  };
  auto b = synth(synth(a, 0), 1);
  XPoly r;
  for (size_t i = 0; i < b.size(); ++i)
    for (auto& [e, v] : b[i]) add_to(r, static_cast<int>(i) + lo, e, v);
  return r;
}

// Sum of c L^{(w-a)/2} e_c(A_1, V_a) over the Sp_2 decomposition.
MotiveExpr integrate_a1(const XPoly& p) {
  std::map<int, std::map<int, Int>> byw;  // weight -> y exponent -> coefficient
  for (auto& [x, c] : p)
    for (auto& [e, v] : c) byw[2 * e + x][x] += v;
  MotiveExpr r;
  for (auto& [w, f] : byw)
    for (auto& [a, c] : split_symmetric(f, 1)) {
      if ((w - a) % 2 || w < a) fail(Err::ValidationFailure, "bad weight in genus one fibre");
      r += ec_a1(a).twist((w - a) / 2) * c;
    }
  return r;
}

}  // namespace

EquivariantEC ec_m1n(int n) {
  if (n < 1) fail(Err::InvalidArgument, "M_{1,n} needs n >= 1");
  // M_{1,n} = F(E, n) / E over M_{1,1}; sigma F fixed points counted cycle by cycle
  std::map<Partition, MotiveExpr> by_class;
  for (auto& rho : partitions_of(n)) {
    XPoly tr;
    add_to(tr, 0, 0, 1);
    for (int k = 1; k <= n; ++k) {
      int m = rho.mult(k);
      if (!m) continue;
      XPoly pk;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0)
          for (auto& [x, c] : count_poly(d))
            for (auto& [e, v] : c) add_to(pk, x, e, v * moebius(k / d));
      for (int i = 0; i < m; ++i) {
        XPoly f = pk;
        add_to(f, 0, 0, -Int(i * k));
        tr = xmul(tr, f);
      }
    }
    by_class[rho] = integrate_a1(divide_by_count(tr));
  }
  EquivariantEC out;
  for (auto& mu : partitions_of(n)) {
    QMotive s;
    for (auto& rho : partitions_of(n)) s += to_q(by_class[rho]) * frac(sn_character(mu, rho), zee(rho));
    if (!is_integral(s)) fail(Err::NonIntegralCoefficient, "M_{1,n} projection is not integral");
    out[mu] = to_z(s);
  }
  return out;
}

EquivariantEC ec_m2n(int n, const A2Table& t) {
  if (n < 0 || n > 16) fail(Err::InvalidArgument, "M_{2,n} needs 0 <= n <= 16");
  std::map<LocalWeight, MotiveExpr> local;
  for (int s = 0; s <= n; ++s)
    for (int b = 0; 2 * b <= s; ++b) {
      LocalWeight lam{s - b, b};
      local[lam] = ec_m2_local(lam, t);
    }
  return pointed_from_local(2, n, local);
}

EllipticCensus::EllipticCensus(int q_, int max_degree) : q(q_) {
  Int qq = 1;
  for (int d = 1; d <= max_degree && d <= 3; ++d) {
    qq *= q;
    over[d] = enum_genus1(static_cast<int>(qq.get_si()));
  }
}

Rat sym2_fixed_point_trace(const LocalWeight& lam, const EllipticCensus& e) {
  Rat s = 0;
  for (auto& a : e.over[1])
    for (auto& b : e.over[1]) s += a.mass * b.mass * Rat(char_eval_kt(lam, poly_mul(a.poly, b.poly), e.q));
  for (auto& a : e.over[2]) s += a.mass * Rat(char_eval_kt(lam, poly_root_k(a.poly, 2), e.q));
  return s / 2;
}

Rat sym3_fixed_point_trace(const LocalWeight& lam, const EllipticCensus& e) {
  if (e.over[3].empty()) fail(Err::InvalidArgument, "census over the cubic extension is required");
  Rat s = 0;
  for (auto& a : e.over[1])
    for (auto& b : e.over[1]) {
      auto ab = poly_mul(a.poly, b.poly);
      for (auto& c : e.over[1]) s += a.mass * b.mass * c.mass * Rat(char_eval_kt(lam, poly_mul(ab, c.poly), e.q));
    }
  for (auto& a : e.over[2]) {
    auto a2 = poly_root_k(a.poly, 2);
    for (auto& c : e.over[1]) s += 3 * a.mass * c.mass * Rat(char_eval_kt(lam, poly_mul(a2, c.poly), e.q));
  }
  for (auto& a : e.over[3]) s += 2 * a.mass * Rat(char_eval_kt(lam, poly_root_k(a.poly, 3), e.q));
  return s / 6;
}

Rat a2_fixed_point_trace(const LocalWeight& lam, const Census& genus2, const EllipticCensus& e) {
  Rat s = sym2_fixed_point_trace(lam, e);
  for (auto& c : genus2) s += c.mass * Rat(char_eval_kt(lam, c.poly, e.q));
  return s;
}

const std::vector<int> kA2Qs = {3, 5, 7, 9, 11, 13};

MotiveExpr derive_a2_entry(const LocalWeight& lam, const std::map<int, Rat>& traces, SolveDiagnostics* diag) {
  check_weight(lam, 2);
  auto gens = gens_psi_lambda(lam, 2);
  for (auto& g : gens)
    if (g.j != G_ONE && g.j != G_SYM2S12 && !gen(g.j).elliptic)
      fail(Err::MissingData, "no Frobenius traces for " + gen(g.j).name + " needed by " + lw_str(lam));
  if (gens.size() > kA2Qs.size()) fail(Err::MissingData, "too few point counts for " + lw_str(lam));
  static const CharPolyTable table = elliptic_charpolys();
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  std::vector<std::string> tags;
  for (int q : kA2Qs) {
    auto it = traces.find(q);
    if (it == traces.end()) fail(Err::MissingData, "trace at q=" + std::to_string(q));
    std::vector<Rat> row;
    for (auto& g : gens) row.push_back(Rat(trace_gen(g, q, table)));
    a.push_back(row);
    b.push_back(it->second);
    tags.push_back("q=" + std::to_string(q));
  }
  if (gens.empty()) {
    for (auto& v : b)
      if (v != 0) fail(Err::ResidualNonzero, "nonzero trace with empty span for " + lw_str(lam));
    return MotiveExpr();
  }
  for (auto& row : a) row.resize(gens.size());
  auto x = solve_leading(a, b, tags, diag);
  MotiveExpr r;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!is_integral(x[i])) fail(Err::NonIntegralSolution, "non-integral coefficient for " + lw_str(lam));
    r.add_term(gens[i], x[i].get_num());
  }
  return r;
}

A2Table derive_a2_table(int max_size, std::vector<std::string>* missing) {
  std::map<LocalWeight, std::map<int, Rat>> traces;
  for (int q : kA2Qs) {
    Census g2 = enum_hyperelliptic(2, q);
    EllipticCensus e(q, 2);
    for (int s = 0; s <= max_size; s += 2)
      for (int b = 0; 2 * b <= s; ++b) traces[{s - b, b}][q] = a2_fixed_point_trace({s - b, b}, g2, e);
  }
  A2Table t;
  for (auto& [lam, tr] : traces) {
    try {
      t.entries[lam] = derive_a2_entry(lam, tr);
    } catch (const Error& e) {
      if (e.code() != Err::MissingData) throw;
      if (missing) missing->push_back(lw_str(lam) + ": " + e.what());
    }
  }
  return t;
}

}  // namespace mgc
