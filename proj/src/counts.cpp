#include "counts.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "gf.hpp"

namespace mgc {

std::vector<Int> charpoly_from_counts(const std::vector<long>& counts, int g, int q) {
  if (static_cast<int>(counts.size()) < g) fail(Err::InvalidArgument, "need g point counts");
  std::vector<Int> s(g + 1), e(g + 1);
  for (int r = 1; r <= g; ++r) s[r] = ipow(q, r) + 1 - counts[r - 1];
  e[0] = 1;
  for (int k = 1; k <= g; ++k) {
    Int t = 0;
    for (int i = 1; i <= k; ++i) t += (i % 2 ? 1 : -1) * e[k - i] * s[i];
    if (t % k != 0) fail(Err::NonIntegralReconstruction, "Newton reconstruction is not integral");
    e[k] = t / k;
  }
  std::vector<Int> c(2 * g + 1);
  for (int i = 0; i <= g; ++i) c[i] = i % 2 ? Int(-e[i]) : e[i];
  for (int i = 0; i < g; ++i) c[2 * g - i] = ipow(q, g - i) * c[i];
  return c;
}

long predicted_count(const std::vector<Int>& poly, int q, int r) {
  Int n = ipow(q, r) + 1 - power_sums(poly, r)[r];
  return n.get_si();
}

bool zeta_class_ok(const ZetaClass& z) {
  if (static_cast<int>(z.poly.size()) != 2 * z.g + 1) return false;
  if (!functional_equation_ok(z.poly, z.q, 1)) return false;
  for (int r = 1; r <= 2 * z.g; ++r)
    if (predicted_count(z.poly, z.q, r) < 0) return false;
  return z.mass > 0;
}

namespace {

Census from_map(const std::map<std::vector<Int>, Rat>& m, int g, int q) {
  Census c;
  for (auto& [poly, mass] : m)
    if (mass != 0) c.push_back({q, g, poly, mass});
  for (auto& z : c)
    if (!zeta_class_ok(z)) fail(Err::ValidationFailure, "census class violates the zeta invariants");
  return c;
}

std::vector<Int> ell_poly(long a, int q) { return {1, Int(-a), Int(q)}; }

int n_threads(int threads) {
  if (threads > 0) return threads;
  unsigned h = std::thread::hardware_concurrency();
  return h ? static_cast<int>(std::min(h, 16u)) : 1;
}

}  // namespace

Census enum_genus1(int q) {
  GF F(q);
  int p = F.p();
  std::map<long, Rat> byTrace;
  auto add = [&](long a, const Rat& w) { byTrace[a] += w; };
  if (p >= 5) {
    // y^2 = x^3 + a x + b, group {u}
    Rat w = frac(1, q - 1);
    int four = F.from_int(4), tw7 = F.from_int(27);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        int a3 = F.mul(a, F.mul(a, a));
        if (F.add(F.mul(four, a3), F.mul(tw7, F.mul(b, b))) == 0) continue;
        long n = 1;
        for (int x = 0; x < q; ++x) n += 1 + F.chi(F.add(F.add(F.mul(x, F.mul(x, x)), F.mul(a, x)), b));
        add(q + 1 - n, w);
      }
  } else if (p == 3) {
    // y^2 = x^3 + a2 x^2 + a4 x + a6 with squarefree cubic, group {u, r}
    Rat w = frac(1, Int(q) * (q - 1));
    for (int a2 = 0; a2 < q; ++a2)
      for (int a4 = 0; a4 < q; ++a4)
        for (int a6 = 0; a6 < q; ++a6) {
          long n = 1;
          bool sq = true;
          std::vector<int> val(q);
          for (int x = 0; x < q; ++x) val[x] = F.add(F.add(F.mul(x, F.mul(x, F.add(x, a2))), F.mul(a4, x)), a6);
          // a repeated root is a common root with the derivative 2 a2 x + a4
          for (int x = 0; x < q; ++x)
            if (val[x] == 0 && F.add(F.mul(F.from_int(2), F.mul(a2, x)), a4) == 0) sq = false;
          if (!sq) continue;
          // x^3 + a6 is a cube
          if (a2 == 0 && a4 == 0) continue;
          for (int x = 0; x < q; ++x) n += 1 + F.chi(val[x]);
          add(q + 1 - n, w);
        }
  } else {
    // j != 0: y^2 + x y = x^3 + a2 x^2 + a6, a6 != 0, group of order q
    Rat w1 = frac(1, q);
    for (int a2 = 0; a2 < q; ++a2)
      for (int a6 = 1; a6 < q; ++a6) {
        long n = 2;
        for (int x = 1; x < q; ++x) {
          int c = F.mul(F.add(F.add(F.mul(x, F.mul(x, x)), F.mul(a2, F.mul(x, x))), a6), F.inv(F.mul(x, x)));
          if (F.abs_trace(c) == 0) n += 2;
        }
        add(q + 1 - n, w1);
      }
    // j = 0: y^2 + a3 y = x^3 + a4 x + a6, a3 != 0, group of order q^2 (q - 1)
    Rat w0 = frac(1, Int(q) * q * (q - 1));
    for (int a3 = 1; a3 < q; ++a3)
      for (int a4 = 0; a4 < q; ++a4)
        for (int a6 = 0; a6 < q; ++a6) {
          long n = 1;
          int ia = F.inv(F.mul(a3, a3));
          for (int x = 0; x < q; ++x) {
            int c = F.mul(F.add(F.add(F.mul(x, F.mul(x, x)), F.mul(a4, x)), a6), ia);
            if (F.abs_trace(c) == 0) n += 2;
          }
          add(q + 1 - n, w0);
        }
  }
  std::map<std::vector<Int>, Rat> m;
  for (auto& [a, w] : byTrace) m[ell_poly(a, q)] += w;
  return from_map(m, 1, q);
}

Census merge_census(const Census& a, const Census& b) {
  std::map<std::vector<Int>, Rat> m;
  int g = 0, q = 0;
  for (auto* c : {&a, &b})
    for (auto& z : *c) {
      m[z.poly] += z.mass;
      g = z.g;
      q = z.q;
    }
  return from_map(m, g, q);
}

Rat total_mass(const Census& c) {
  Rat s = 0;
  for (auto& z : c) s += z.mass;
  return s;
}

Int mass_trace(const LocalWeight& lam, int q, const Census& c) {
  Rat s = 0;
  for (auto& z : c) {
    if (z.q != q) fail(Err::InvalidArgument, "census field size mismatch");
    s += z.mass * Rat(char_eval(lam, z.poly, q));
  }
  if (!is_integral(s)) fail(Err::NonIntegral, "weighted character sum is not an integer");
  return s.get_num();
}

std::string census_csv(const Census& c) {
  std::ostringstream o;
  o << "poly,mass_num,mass_den\n";
  for (auto& z : c) {
    for (size_t i = 0; i < z.poly.size(); ++i) o << (i ? " " : "") << z.poly[i].get_str();
    o << "," << z.mass.get_num().get_str() << "," << z.mass.get_den().get_str() << "\n";
  }
  return o.str();
}

Census parse_census_csv(const std::string& text, int g, int q) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (line.rfind("poly,mass_num,mass_den", 0) != 0) fail(Err::ParseError, "bad census header");
  std::map<std::vector<Int>, Rat> m;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string ps, num, den;
    std::getline(ls, ps, ',');
    std::getline(ls, num, ',');
    std::getline(ls, den, ',');
    std::istringstream pss(ps);
    std::vector<Int> poly;
    std::string tok;
    try {
      while (pss >> tok) poly.emplace_back(tok);
      Int d(den);
      if (d <= 0) fail(Err::ParseError, "census mass denominator must be positive");
      m[poly] += frac(Int(num), d);
    } catch (const std::invalid_argument&) {
      fail(Err::ParseError, "bad census row: " + line);
    }
  }
  return from_map(m, g, q);
}

namespace {

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmod(Poly a, const Poly& b, const GF& F) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  int il = F.inv(b.back());
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int shift = static_cast<int>(a.size()) - 1 - db;
    int c = F.mul(a.back(), il);
    for (int i = 0; i <= db; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  return a;
}

int gcd_degree(Poly a, Poly b, const GF& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

// Binary form of degree d with coefficients f[0..d] (f[i] on x^i z^{d-i}).
bool squarefree_form(const Poly& f, int d, const GF& F) {
  Poly a = f;
  trim(a);
  int deg = static_cast<int>(a.size()) - 1;
  if (deg < d - 1) return false;
  Poly da(deg > 0 ? deg : 0);
  for (int i = 1; i <= deg; ++i) da[i - 1] = F.mul(F.from_int(i), a[i]);
  trim(da);
  if (da.empty()) return false;
  return gcd_degree(a, da, F) == 0;
}

struct Ext {
  GF F;
  std::vector<int> emb;
  std::vector<int8_t> chi;
  explicit Ext(const GF& base, int k) : F(static_cast<int>(ipow(base.q(), k).get_si())) {
    emb = embed(base, F);
    chi.resize(F.q());
    for (int a = 0; a < F.q(); ++a) chi[a] = static_cast<int8_t>(F.chi(a));
  }
};

}  // namespace

Census enum_hyperelliptic(int g, int q, int threads) {
  GF F(q);
  if (F.p() == 2) fail(Err::UnsupportedCharacteristic, "hyperelliptic curves in characteristic 2 are not supported");
  if (g < 2 || g > 3) fail(Err::InvalidArgument, "hyperelliptic census needs g in {2,3}");
  if ((g == 2 && q > 13) || (g == 3 && q > 5)) fail(Err::InvalidArgument, "field too large for the hyperelliptic census");
  int d = 2 * g + 2;
  std::vector<Ext> ext;
  for (int k = 1; k <= g; ++k) ext.emplace_back(F, k);
  bool direct = q + 1 <= d;
  bool kill = !direct && d % F.p() != 0;
  // free coefficients and their ranges
  int nonsq = F.gen_pow(1);
  std::vector<int> lead = direct ? std::vector<int>{} : std::vector<int>{1, nonsq};
  int nfree = direct ? d + 1 : (kill ? d - 1 : d);
  long total = 1;
  for (int i = 0; i < nfree; ++i) total *= q;
  if (!direct) total *= 2;
  using Key = std::pair<std::vector<long>, int>;
  std::vector<std::map<Key, long>> acc(n_threads(threads));
  std::atomic<long> next{0};
  const long chunk = 4096;
  auto work = [&](int tid) {
    Poly f(d + 1);
    std::vector<long> cnt(g);
    for (;;) {
      long start = next.fetch_add(chunk);
      if (start >= total) break;
      for (long idx = start; idx < std::min(total, start + chunk); ++idx) {
        long t = idx;
        if (direct) {
          for (int i = 0; i <= d; ++i) {
            f[i] = static_cast<int>(t % q);
            t /= q;
          }
        } else {
          f[d] = lead[t % 2];
          t /= 2;
          for (int k = 0; k < d; ++k) {
            if (kill && k == d - 1) {
              f[k] = 0;
              continue;
            }
            f[k] = static_cast<int>(t % q);
            t /= q;
          }
        }
        if (!squarefree_form(f, d, F)) continue;
        int roots = 0;
        for (int k = 0; k < g; ++k) {
          const Ext& E = ext[k];
          std::vector<int> ef(d + 1);
          for (int i = 0; i <= d; ++i) ef[i] = E.emb[f[i]];
          long n = 1 + E.chi[ef[d]];
          for (int x = 0; x < E.F.q(); ++x) {
            int v = ef[d];
            for (int i = d - 1; i >= 0; --i) v = E.F.add(E.F.mul(v, x), ef[i]);
            n += 1 + E.chi[v];
            if (k == 0 && v == 0) ++roots;
          }
          cnt[k] = n;
        }
        ++acc[tid][{cnt, direct ? 0 : roots}];
      }
    }
  };
  std::vector<std::thread> ts;
  for (int i = 0; i < static_cast<int>(acc.size()); ++i) ts.emplace_back(work, i);
  for (auto& t : ts) t.join();
  Int gl2 = Int(q * q - 1) * (q * q - q);
  std::map<std::vector<Int>, Rat> m;
  for (auto& a : acc)
    for (auto& [key, c] : a) {
      Rat w = direct ? Rat(c) : frac(Int(c) * (q + 1) * (q - 1) / 2 * (kill ? q : 1), q + 1 - key.second);
      m[charpoly_from_counts(key.first, g, q)] += w / Rat(gl2);
    }
  return from_map(m, g, q);
}

namespace {

struct Mono3 {
  int a, b, c;
};

std::vector<Mono3> monomials(int deg) {
  std::vector<Mono3> m;
  for (int a = deg; a >= 0; --a)
    for (int b = deg - a; b >= 0; --b) m.push_back({a, b, deg - a - b});
  return m;
}

int mono_index(const std::vector<Mono3>& ms, int a, int b, int c) {
  for (size_t i = 0; i < ms.size(); ++i)
    if (ms[i].a == a && ms[i].b == b && ms[i].c == c) return static_cast<int>(i);
  return -1;
}

// Projective points of P^2 over an extension, optionally only those not defined over the base.
struct PlaneField {
  GF F;
  std::vector<int> emb;
  std::vector<std::array<int, 3>> pts;
  std::vector<std::array<int, 15>> m4;
  std::vector<std::array<int, 10>> m3;

  PlaneField(const GF& base, int k, bool only_new) : F(static_cast<int>(ipow(base.q(), k).get_si())) {
    emb = embed(base, F);
    std::vector<char> sub(F.q(), 0);
    for (int v : emb) sub[v] = 1;
    auto push = [&](int x, int y, int z) {
      if (only_new && sub[x] && sub[y] && sub[z]) return;
      pts.push_back({x, y, z});
    };
    for (int y = 0; y < F.q(); ++y)
      for (int z = 0; z < F.q(); ++z) push(1, y, z);
    for (int z = 0; z < F.q(); ++z) push(0, 1, z);
    push(0, 0, 1);
    auto ms4 = monomials(4), ms3 = monomials(3);
    for (auto& p : pts) {
      std::array<int, 15> a4{};
      std::array<int, 10> a3{};
      for (size_t i = 0; i < ms4.size(); ++i)
        a4[i] = F.mul(F.mul(F.pow(p[0], ms4[i].a), F.pow(p[1], ms4[i].b)), F.pow(p[2], ms4[i].c));
      for (size_t i = 0; i < ms3.size(); ++i)
        a3[i] = F.mul(F.mul(F.pow(p[0], ms3[i].a), F.pow(p[1], ms3[i].b)), F.pow(p[2], ms3[i].c));
      m4.push_back(a4);
      m3.push_back(a3);
    }
  }
};

uint64_t form_key(const std::array<int, 15>& c, const GF& F) {
  int lead = 0;
  for (int v : c)
    if (v) {
      lead = v;
      break;
    }
  if (!lead) return 0;
  int il = F.inv(lead);
  uint64_t k = 0;
  for (int v : c) k = k * F.q() + F.mul(v, il);
  return k;
}

const std::unordered_set<uint64_t>& conic_products(const GF& F) {
  static std::map<int, std::unordered_set<uint64_t>> cache;
  static std::mutex mu;
  std::lock_guard lk(mu);
  auto it = cache.find(F.q());
  if (it != cache.end()) return it->second;
  auto ms4 = monomials(4), ms2 = monomials(2);
  std::vector<std::vector<int>> into(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) into[i][j] = mono_index(ms4, ms2[i].a + ms2[j].a, ms2[i].b + ms2[j].b, ms2[i].c + ms2[j].c);
  std::unordered_set<uint64_t> s;
  int q = F.q();
  long nc = 1;
  for (int i = 0; i < 6; ++i) nc *= q;
  auto decode = [](long t, int base) {
    std::array<int, 6> c{};
    for (int i = 0; i < 6; ++i) {
      c[i] = static_cast<int>(t % base);
      t /= base;
    }
    return c;
  };
  for (long t1 = 1; t1 < nc; ++t1)
    for (long t2 = t1; t2 < nc; ++t2) {
      auto a = decode(t1, q), b = decode(t2, q);
      std::array<int, 15> f{};
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) f[into[i][j]] = F.add(f[into[i][j]], F.mul(a[i], b[j]));
      s.insert(form_key(f, F));
    }
  GF E(q * q);
  auto emb = embed(F, E);
  std::vector<int> back(E.q(), -1);
  for (int v = 0; v < q; ++v) back[emb[v]] = v;
  long ne = nc * nc;
  for (long t = 1; t < ne; ++t) {
    auto a = decode(t, E.q());
    bool rational = true;
    for (int v : a)
      if (back[v] < 0) rational = false;
    if (rational) continue;
    std::array<int, 6> b;
    for (int i = 0; i < 6; ++i) b[i] = E.pow(a[i], q);
    std::array<int, 15> fe{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) fe[into[i][j]] = E.add(fe[into[i][j]], E.mul(a[i], b[j]));
    std::array<int, 15> f;
    for (int i = 0; i < 15; ++i) {
      if (back[fe[i]] < 0) fail(Err::ValidationFailure, "conjugate conic product is not rational");
      f[i] = back[fe[i]];
    }
    s.insert(form_key(f, F));
  }
  return cache.emplace(q, std::move(s)).first->second;
}

struct QuarticScan {
  const GF& F;
  std::vector<PlaneField> fields;  // F_q points, new F_{q^2} points, new F_{q^3} points
  std::vector<Mono3> ms4, ms3;
  // partial derivative tables: for monomial i and variable v, (factor, index of degree-3 monomial)
  std::vector<std::array<std::pair<int, int>, 3>> dpart;
  const std::unordered_set<uint64_t>& conics;

  explicit QuarticScan(const GF& base) : F(base), conics(conic_products(base)) {
    fields.emplace_back(base, 1, false);
    fields.emplace_back(base, 2, true);
    fields.emplace_back(base, 3, true);
    ms4 = monomials(4);
    ms3 = monomials(3);
    for (auto& m : ms4) {
      std::array<std::pair<int, int>, 3> d;
      d[0] = {m.a, m.a ? mono_index(ms3, m.a - 1, m.b, m.c) : -1};
      d[1] = {m.b, m.b ? mono_index(ms3, m.a, m.b - 1, m.c) : -1};
      d[2] = {m.c, m.c ? mono_index(ms3, m.a, m.b, m.c - 1) : -1};
      dpart.push_back(d);
    }
  }

  bool singular_at(const PlaneField& P, size_t pi, const std::array<int, 15>& c) const {
    const GF& E = P.F;
    for (int v = 0; v < 3; ++v) {
      int s = 0;
      for (int i = 0; i < 15; ++i) {
        auto [fac, idx] = dpart[i][v];
        if (fac % F.p() == 0 || c[i] == 0) continue;
        s = E.add(s, E.mul(E.mul(E.from_int(fac), P.emb[c[i]]), P.m3[pi][idx]));
      }
      if (s != 0) return false;
    }
    return true;
  }

  // Returns false if singular; fills counts otherwise. vals[k] are the form values at fields[k].
  bool classify(const std::array<int, 15>& c, const std::array<const uint16_t*, 3>& vals, std::array<long, 3>& n) const {
    long z[3] = {0, 0, 0};
    for (int k = 0; k < 3; ++k) {
      const PlaneField& P = fields[k];
      for (size_t i = 0; i < P.pts.size(); ++i)
        if (vals[k][i] == 0) {
          if (singular_at(P, i, c)) return false;
          ++z[k];
        }
    }
    if (conics.count(form_key(c, F))) return false;
    n = {z[0], z[0] + z[1], z[0] + z[2]};
    return true;
  }
};

}  // namespace

Census enum_quartics(int q, int threads) {
  (void)threads;
  if (q != 2 && q != 3) fail(Err::UnsupportedPrimePower, "quartic census supports q in {2,3}");
  GF F(q);
  QuarticScan S(F);
  int iz4 = mono_index(S.ms4, 0, 0, 4), ixz3 = mono_index(S.ms4, 1, 0, 3), iyz3 = mono_index(S.ms4, 0, 1, 3);
  std::vector<int> freepos;
  for (int i = 0; i < 15; ++i)
    if (i != iz4 && i != ixz3 && i != iyz3) freepos.push_back(i);
  // contributions of coefficient value c at monomial i
  std::array<std::vector<std::vector<std::vector<uint16_t>>>, 3> contrib;
  for (int k = 0; k < 3; ++k) {
    const PlaneField& P = S.fields[k];
    contrib[k].assign(15, std::vector<std::vector<uint16_t>>(q));
    for (int i = 0; i < 15; ++i)
      for (int c = 0; c < q; ++c) {
        auto& v = contrib[k][i][c];
        v.resize(P.pts.size());
        for (size_t j = 0; j < P.pts.size(); ++j) v[j] = static_cast<uint16_t>(P.F.mul(P.emb[c], P.m4[j][i]));
      }
  }
  std::map<std::array<long, 3>, long> slice, pointless;
  // flag slice: f(0:0:1) = 0, tangent line y = 0 there, yz^3 coefficient 1
  {
    size_t depth = freepos.size();
    std::array<std::vector<std::vector<uint16_t>>, 3> vals;
    for (int k = 0; k < 3; ++k) {
      vals[k].assign(depth + 1, std::vector<uint16_t>(S.fields[k].pts.size()));
      vals[k][0] = contrib[k][iyz3][1];
    }
    std::array<int, 15> c{};
    c[iyz3] = 1;
    std::function<void(size_t)> rec = [&](size_t d) {
      if (d == depth) {
        std::array<long, 3> n;
        if (S.classify(c, {vals[0][d].data(), vals[1][d].data(), vals[2][d].data()}, n)) ++slice[n];
        return;
      }
      int pos = freepos[d];
      for (int v = 0; v < q; ++v) {
        c[pos] = v;
        for (int k = 0; k < 3; ++k) {
          const GF& E = S.fields[k].F;
          auto& src = vals[k][d];
          auto& dst = vals[k][d + 1];
          auto& add = contrib[k][pos][v];
          for (size_t j = 0; j < src.size(); ++j) dst[j] = static_cast<uint16_t>(E.add(src[j], add[j]));
        }
        rec(d + 1);
      }
      c[pos] = 0;
    };
    rec(0);
  }
  // forms without rational points: solve E c = t with t nowhere zero
  {
    const PlaneField& P1 = S.fields[0];
    int rows = static_cast<int>(P1.pts.size());
    std::vector<std::vector<int>> A(rows, std::vector<int>(15 + rows, 0));
    for (int r = 0; r < rows; ++r) {
      for (int i = 0; i < 15; ++i) A[r][i] = P1.m4[r][i];
      A[r][15 + r] = 1;
    }
    std::vector<int> pivcol;
    int rank = 0;
    for (int col = 0; col < 15 && rank < rows; ++col) {
      int pr = -1;
      for (int r = rank; r < rows; ++r)
        if (A[r][col]) pr = r;
      if (pr < 0) continue;
      std::swap(A[pr], A[rank]);
      int iv = F.inv(A[rank][col]);
      for (auto& x : A[rank]) x = F.mul(x, iv);
      for (int r = 0; r < rows; ++r)
        if (r != rank && A[r][col]) {
          int f = A[r][col];
          for (size_t k = 0; k < A[r].size(); ++k) A[r][k] = F.sub(A[r][k], F.mul(f, A[rank][k]));
        }
      pivcol.push_back(col);
      ++rank;
    }
    std::vector<int> freec;
    for (int col = 0; col < 15; ++col)
      if (std::find(pivcol.begin(), pivcol.end(), col) == pivcol.end()) freec.push_back(col);
    long ntarget = 1;
    for (int r = 0; r < rows; ++r) ntarget *= (q - 1);
    long nker = 1;
    for (size_t i = 0; i < freec.size(); ++i) nker *= q;
    std::array<std::vector<uint16_t>, 3> vals;
    for (int k = 0; k < 3; ++k) vals[k].resize(S.fields[k].pts.size());
    for (long ti = 0; ti < ntarget; ++ti) {
      std::vector<int> t(rows);
      long x = ti;
      for (int r = 0; r < rows; ++r) {
        t[r] = 1 + static_cast<int>(x % (q - 1));
        x /= (q - 1);
      }
      // transformed right-hand side
      std::vector<int> rhs(rows, 0);
      for (int r = 0; r < rows; ++r)
        for (int k = 0; k < rows; ++k) rhs[r] = F.add(rhs[r], F.mul(A[r][15 + k], t[k]));
      bool ok = true;
      for (int r = rank; r < rows; ++r)
        if (rhs[r]) ok = false;
      if (!ok) continue;
      for (long ki = 0; ki < nker; ++ki) {
        std::array<int, 15> c{};
        long y = ki;
        for (int fc : freec) {
          c[fc] = static_cast<int>(y % q);
          y /= q;
        }
        for (int r = 0; r < rank; ++r) {
          int v = rhs[r];
          for (int fc : freec) v = F.sub(v, F.mul(A[r][fc], c[fc]));
          c[pivcol[r]] = v;
        }
        for (int k = 0; k < 3; ++k) {
          const PlaneField& P = S.fields[k];
          for (size_t j = 0; j < P.pts.size(); ++j) {
            int v = 0;
            for (int i = 0; i < 15; ++i)
              if (c[i]) v = P.F.add(v, P.F.mul(P.emb[c[i]], P.m4[j][i]));
            vals[k][j] = static_cast<uint16_t>(v);
          }
        }
        std::array<long, 3> n;
        if (S.classify(c, {vals[0].data(), vals[1].data(), vals[2].data()}, n)) {
          if (n[0] != 0) fail(Err::ValidationFailure, "pointless form has a rational point");
          ++pointless[n];
        }
      }
    }
  }
  Int gl3 = Int(q * q * q - 1) * (q * q * q - q) * (q * q * q - q * q);
  Int flags = Int(q * q + q + 1) * (q + 1);
  std::map<std::vector<Int>, Rat> m;
  for (auto& [n, c] : slice)
    m[charpoly_from_counts({n[0], n[1], n[2]}, 3, q)] += frac(flags * (q - 1) * c, n[0] * gl3);
  for (auto& [n, c] : pointless) m[charpoly_from_counts({n[0], n[1], n[2]}, 3, q)] += frac(Int(c), gl3);
  return from_map(m, 3, q);
}

Census enum_genus3(int q, int threads) {
  return merge_census(enum_hyperelliptic(3, q, threads), enum_quartics(q, threads));
}

}  // namespace mgc
