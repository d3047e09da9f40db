#include "leray.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

namespace mgc {

namespace {

std::recursive_mutex g_mu;

bool lex_weight_less(const std::vector<int>& a, const std::vector<int>& b) {
  int sa = 0, sb = 0;
  for (int v : a) sa += v;
  for (int v : b) sb += v;
  if (sa != sb) return sa < sb;
  return a < b;
}

std::vector<int> dominant_of(std::vector<int> a) {
  for (int& v : a) v = std::abs(v);
  std::sort(a.begin(), a.end(), std::greater<int>());
  return a;
}

}  // namespace

LocalWeight local_weight(const Partition& p, int g) {
  if (p.length() > g) fail(Err::InvalidArgument, "local weight longer than genus");
  LocalWeight l(g, 0);
  for (int i = 0; i < p.length(); ++i) l[i] = p.parts[i];
  return l;
}

std::string lw_str(const LocalWeight& l) {
  std::string s;
  for (size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s;
}

int lw_size(const LocalWeight& l) {
  int s = 0;
  for (int v : l) s += v;
  return s;
}

static Partition lw_partition(const LocalWeight& l) {
  std::vector<int> p;
  for (int v : l)
    if (v > 0) p.push_back(v);
  return Partition(p);
}

void LaurentChar::add(const std::vector<int>& a, const Int& c) {
  if (c == 0) return;
  auto [it, ins] = terms.emplace(a, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LaurentChar LaurentChar::operator*(const LaurentChar& o) const {
  LaurentChar r{g, degree + o.degree, {}};
  for (auto& [a, c] : terms)
    for (auto& [b, d] : o.terms) {
      std::vector<int> s(g);
      for (int i = 0; i < g; ++i) s[i] = a[i] + b[i];
      r.add(s, c * d);
    }
  return r;
}

LaurentChar& LaurentChar::operator+=(const LaurentChar& o) {
  if (terms.empty()) degree = o.degree;
  else if (!o.terms.empty() && o.degree != degree) fail(Err::InvalidArgument, "inhomogeneous character sum");
  for (auto& [a, c] : o.terms) add(a, c);
  return *this;
}

LaurentChar& LaurentChar::operator-=(const LaurentChar& o) {
  if (terms.empty()) degree = o.degree;
  else if (!o.terms.empty() && o.degree != degree) fail(Err::InvalidArgument, "inhomogeneous character sum");
  for (auto& [a, c] : o.terms) add(a, -c);
  return *this;
}

LaurentChar LaurentChar::scaled_q(int e, const Int& c) const {
  LaurentChar r{g, degree + 2 * e, {}};
  for (auto& [a, v] : terms) r.add(a, v * c);
  return r;
}

bool LaurentChar::weyl_symmetric() const {
  auto get = [&](const std::vector<int>& a) {
    auto it = terms.find(a);
    return it == terms.end() ? Int(0) : it->second;
  };
  for (auto& [a, c] : terms) {
    int s = 0;
    for (int v : a) s += v;
    if ((degree - s) % 2) return false;
    for (int i = 0; i < g; ++i) {
      auto b = a;
      b[i] = -b[i];
      if (get(b) != c) return false;
      if (i + 1 < g) {
        b = a;
        std::swap(b[i], b[i + 1]);
        if (get(b) != c) return false;
      }
    }
  }
  return true;
}

Int LaurentChar::at_one() const {
  Int s = 0;
  for (auto& [a, c] : terms) s += c;
  return s;
}

std::map<Partition, Int> skew_schur(const Partition& lam, const Partition& gamma) {
  std::map<Partition, Int> out;
  int rows = lam.length();
  for (int i = 0; i < std::max(rows, gamma.length()); ++i)
    if (gamma[i] > lam[i]) return out;
  // cells in reading order: rows top to bottom, right to left
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = lam[r] - 1; c >= gamma[r]; --c) cells.push_back({r, c});
  std::vector<std::vector<int>> val(rows);
  for (int r = 0; r < rows; ++r) val[r].assign(lam[r], 0);
  std::vector<int> cnt(rows + 2, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == cells.size()) {
      std::vector<int> p;
      for (int v = 1; v <= rows && cnt[v] > 0; ++v) p.push_back(cnt[v]);
      out[Partition(p)] += 1;
      return;
    }
    auto [r, c] = cells[i];
    int hi = r + 1;
    if (c + 1 < lam[r]) hi = std::min(hi, val[r][c + 1]);
    int lo = 1;
    if (r > 0 && c < lam[r - 1] && c >= gamma[r - 1]) lo = val[r - 1][c] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (v > 1 && cnt[v] + 1 > cnt[v - 1]) continue;
      val[r][c] = v;
      ++cnt[v];
      rec(i + 1);
      --cnt[v];
    }
  };
  rec(0);
  return out;
}

Int kostka(const Partition& mu, std::vector<int> content) {
  std::erase(content, 0);
  std::sort(content.begin(), content.end(), std::greater<int>());
  int tot = 0;
  for (int v : content) tot += v;
  if (tot != mu.size()) return 0;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
  std::lock_guard lk(g_mu);
  std::function<Int(const std::vector<int>&, int)> rec = [&](const std::vector<int>& m, int len) -> Int {
    if (len == 0) return m.empty() ? 1 : 0;
    if (static_cast<int>(m.size()) > len) return 0;
    std::vector<int> key(content.begin(), content.begin() + len);
    auto mk = std::make_pair(m, key);
    auto it = memo.find(mk);
    if (it != memo.end()) return it->second;
    int k = content[len - 1];
    Int total = 0;
    // remove a horizontal strip of size k
    std::vector<int> kap(m.size());
    std::function<void(size_t, int)> strip = [&](size_t i, int left) {
      if (i == m.size()) {
        if (left != 0) return;
        std::vector<int> nk;
        for (int v : kap)
          if (v > 0) nk.push_back(v);
        total += rec(nk, len - 1);
        return;
      }
      int lo = i + 1 < m.size() ? m[i + 1] : 0;
      for (int v = m[i]; v >= lo; --v) {
        int take = m[i] - v;
        if (take > left) break;
        kap[i] = v;
        strip(i + 1, left - take);
      }
    };
    strip(0, k);
    memo.emplace(mk, total);
    return total;
  };
  return rec(mu.parts, static_cast<int>(content.size()));
}

LaurentChar h_alphabet(int k, int g) {
  LaurentChar r{g, k, {}};
  if (k < 0) return r;
  static std::map<std::pair<int, int>, LaurentChar> cache;
  std::lock_guard lk(g_mu);
  auto it = cache.find({k, g});
  if (it != cache.end()) return it->second;
  // table over degree for the first i variable pairs
  std::vector<LaurentChar> cur(k + 1);
  for (int m = 0; m <= k; ++m) cur[m] = LaurentChar{g, m, {}};
  cur[0].add(std::vector<int>(g, 0), 1);
  for (int i = 0; i < g; ++i) {
    std::vector<LaurentChar> nxt(k + 1);
    for (int m = 0; m <= k; ++m) {
      nxt[m] = LaurentChar{g, m, {}};
      for (int j = 0; j <= m; ++j)
        for (auto& [a, c] : cur[m - j].terms)
          for (int b = 0; b <= j; ++b) {
            auto e = a;
            e[i] += (j - b) - b;
            nxt[m].add(e, c);
          }
    }
    cur = std::move(nxt);
  }
  cache.emplace(std::make_pair(k, g), cur[k]);
  return cur[k];
}

static LaurentChar lc_det(std::vector<std::vector<LaurentChar>> m, int g) {
  int n = static_cast<int>(m.size());
  if (n == 0) {
    LaurentChar one{g, 0, {}};
    one.add(std::vector<int>(g, 0), 1);
    return one;
  }
  LaurentChar r{g, 0, {}};
  for (int j = 0; j < n; ++j) {
    if (m[0][j].terms.empty()) continue;
    std::vector<std::vector<LaurentChar>> minor;
    for (int i = 1; i < n; ++i) {
      std::vector<LaurentChar> row;
      for (int c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    LaurentChar t = m[0][j] * lc_det(minor, g);
    if (j % 2) r -= t;
    else r += t;
  }
  return r;
}

LaurentChar symp_schur(const LocalWeight& lam) {
  int g = static_cast<int>(lam.size());
  Partition p = lw_partition(lam);
  int l = p.length();
  std::vector<std::vector<LaurentChar>> m(l, std::vector<LaurentChar>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      int a = p[i - 1] - i + j;
      m[i - 1][j - 1] = h_alphabet(a, g);
      m[i - 1][j - 1].degree = a;
      if (j >= 2) m[i - 1][j - 1] += h_alphabet(p[i - 1] - i - j + 2, g).scaled_q(j - 1, 1);
    }
  LaurentChar r = lc_det(m, g);
  r.degree = p.size();
  if (!r.weyl_symmetric()) fail(Err::NonTriangular, "symplectic character is not Weyl symmetric");
  return r;
}

LaurentChar schur_alphabet(const Partition& mu, int g) {
  int l = mu.length();
  std::vector<std::vector<LaurentChar>> m(l, std::vector<LaurentChar>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      int a = mu[i] - i + j;
      m[i][j] = h_alphabet(a, g);
      m[i][j].degree = a;
    }
  LaurentChar r = lc_det(m, g);
  r.degree = mu.size();
  return r;
}

Int weyl_dim(const LocalWeight& lam) {
  int g = static_cast<int>(lam.size());
  std::vector<int> l(g), rho(g);
  for (int i = 0; i < g; ++i) {
    rho[i] = g - i;
    l[i] = lam[i] + rho[i];
  }
  Rat r = 1;
  for (int i = 0; i < g; ++i) {
    r *= frac(l[i], rho[i]);
    for (int j = i + 1; j < g; ++j) r *= frac(Int(l[i] - l[j]) * (l[i] + l[j]), Int(rho[i] - rho[j]) * (rho[i] + rho[j]));
  }
  return r.get_num();
}

std::vector<std::vector<int>> dominant_weights(int degree, int g) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(g);
  std::function<void(int, int, int)> rec = [&](int i, int maxv, int sum) {
    if (i == g) {
      if ((degree - sum) % 2 == 0) out.push_back(a);
      return;
    }
    for (int v = 0; v <= maxv && sum + v <= degree; ++v) {
      a[i] = v;
      rec(i + 1, v, sum + v);
    }
  };
  rec(0, degree, 0);
  return out;
}

const DomChar& dom_schur(const Partition& mu, int g) {
  static std::map<std::pair<Partition, int>, DomChar> cache;
  std::lock_guard lk(g_mu);
  auto key = std::make_pair(mu, g);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  DomChar d;
  int n = mu.size();
  if (mu.length() <= 2 * g) {
    for (auto& a : dominant_weights(n, g)) {
      int s = 0;
      for (int v : a) s += v;
      int c = (n - s) / 2;
      Int tot = 0;
      std::vector<int> t(g);
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == g - 1) {
          t[i] = left;
          std::vector<int> content;
          for (int k = 0; k < g; ++k) {
            content.push_back(a[k] + t[k]);
            content.push_back(t[k]);
          }
          tot += kostka(mu, content);
          return;
        }
        for (int v = 0; v <= left; ++v) {
          t[i] = v;
          rec(i + 1, left - v);
        }
      };
      if (g == 0) tot = (n == 0);
      else rec(0, c);
      if (tot != 0) d[a] = tot;
    }
  }
  return cache.emplace(key, std::move(d)).first->second;
}

LaurentChar expand_dom(const DomChar& d, int degree, int g) {
  LaurentChar r{g, degree, {}};
  for (auto& [a, c] : d) {
    std::vector<int> p = a;
    std::sort(p.begin(), p.end());
    std::set<std::vector<int>> seen;
    do {
      for (int mask = 0; mask < (1 << g); ++mask) {
        auto b = p;
        for (int i = 0; i < g; ++i)
          if (mask >> i & 1) b[i] = -b[i];
        if (seen.insert(b).second) r.add(b, c);
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return r;
}

static bool symp_gamma(const Partition& gm) {
  Partition c = gm.conjugate();
  for (int i = 0; i < gm.length() && gm[i] >= i + 1; ++i)
    if (c[i] - (i + 1) != gm[i] - (i + 1) + 1) return false;
  return true;
}

std::map<Partition, MotiveExpr> symp_in_schur(const LocalWeight& lam) {
  Partition p = lw_partition(lam);
  std::map<Partition, MotiveExpr> out;
  for (int m = 0; m <= p.size(); m += 2)
    for (auto& gm : partitions_of(m)) {
      if (!symp_gamma(gm)) continue;
      int h = m / 2;
      for (auto& [mu, c] : skew_schur(p, gm)) out[mu] += MotiveExpr::L(h, h % 2 ? Int(-c) : c);
    }
  std::erase_if(out, [](auto& kv) { return kv.second.is_zero(); });
  return out;
}

const DomChar& dom_symp(const LocalWeight& lam) {
  static std::map<LocalWeight, DomChar> cache;
  std::lock_guard lk(g_mu);
  auto it = cache.find(lam);
  if (it != cache.end()) return it->second;
  int g = static_cast<int>(lam.size());
  DomChar d;
  for (auto& [mu, c] : symp_in_schur(lam)) {
    Int coef = c.terms().begin()->second;
    for (auto& [a, m] : dom_schur(mu, g)) d[a] += coef * m;
  }
  std::erase_if(d, [](auto& kv) { return kv.second == 0; });
  return cache.emplace(lam, std::move(d)).first->second;
}

const std::map<LocalWeight, MotiveExpr>& schur_in_symp(const Partition& mu, int g) {
  static std::map<std::pair<Partition, int>, std::map<LocalWeight, MotiveExpr>> cache;
  std::lock_guard lk(g_mu);
  auto key = std::make_pair(mu, g);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  DomChar d = dom_schur(mu, g);
  std::map<LocalWeight, MotiveExpr> out;
  int n = mu.size();
  while (!d.empty()) {
    auto top = std::max_element(d.begin(), d.end(), [](auto& x, auto& y) { return lex_weight_less(x.first, y.first); });
    LocalWeight lam = top->first;
    Int m = top->second;
    const DomChar& sp = dom_symp(lam);
    auto lead = sp.find(lam);
    if (lead == sp.end() || lead->second != 1) fail(Err::NonTriangular, "symplectic character without unit leading term");
    for (auto& [a, c] : sp) {
      d[a] -= m * c;
      if (d[a] == 0) d.erase(a);
    }
    out[lam] = MotiveExpr::L((n - lw_size(lam)) / 2, m);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

// All local weights of genus g with |lam| <= n.
static std::vector<LocalWeight> local_weights_upto(int n, int g) {
  std::vector<LocalWeight> out;
  for (int m = 0; m <= n; ++m)
    for (auto& p : partitions_of(m))
      if (p.length() <= g) out.push_back(local_weight(p, g));
  return out;
}

const std::map<Partition, std::map<LocalWeight, MotiveExpr>>& a_matrix(int g, int n) {
  static std::map<std::pair<int, int>, std::map<Partition, std::map<LocalWeight, MotiveExpr>>> cache;
  std::lock_guard lk(g_mu);
  auto key = std::make_pair(g, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Caps caps{n, 0};
  SymSeries G = pleth_log(SymSeries::one(caps) + SymSeries::monomial(caps, 0, Partition({1}), QMotive::scalar(1)));
  SymSeries XG(caps);
  for (auto& [m, c] : G.terms()) XG.add(m, mult(c, QMotive::L(1) + QMotive::scalar(1)));
  SymSeries E = pleth_exp(XG);
  // p_k o G, then products p_rho o G
  std::map<Partition, SymSeries> prho;
  std::function<const SymSeries&(const Partition&)> pg = [&](const Partition& rho) -> const SymSeries& {
    auto f = prho.find(rho);
    if (f != prho.end()) return f->second;
    SymSeries v(caps);
    if (rho.empty()) v = SymSeries::one(caps);
    else if (rho.length() == 1) v = adams_sub(G, rho[0], caps);
    else {
      std::vector<int> head(rho.parts.begin(), rho.parts.end() - 1);
      v = multiply(pg(Partition(head)), pg(Partition({rho.parts.back()})));
    }
    return prho.emplace(rho, std::move(v)).first->second;
  };
  // T_lam = sum_nu (-1)^{|nu|} a'_{nu,lam} s_{nu'}
  std::map<LocalWeight, SymSeries> T;
  for (int m = 0; m <= n; ++m)
    for (auto& nu : partitions_of(m)) {
      if (nu.length() > 2 * g) continue;
      SymSeries s = schur_to_p(nu.conjugate(), caps);
      for (auto& [lam, c] : schur_in_symp(nu, g)) {
        auto [ti, ins] = T.try_emplace(lam, caps);
        QMotive qc = to_q(m % 2 ? -c : c);
        for (auto& [mono, a] : s.terms()) ti->second.add(mono, mult(a, qc));
      }
    }
  std::map<Partition, std::map<LocalWeight, MotiveExpr>> out;
  for (auto& mu : partitions_of(n)) out[mu];
  for (auto& [lam, t] : T) {
    SymSeries tg(caps);
    for (auto& [mono, c] : t.terms()) {
      const SymSeries& pr = pg(Partition(mono.parts));
      for (auto& [m2, c2] : pr.terms()) tg.add(m2, mult(c, c2));
    }
    SymSeries r = multiply(E, tg).part(0, n);
    for (auto& [mu, c] : p_to_schur(r)) out[mu][lam] = c;
  }
  return cache.emplace(key, std::move(out)).first->second;
}

const std::map<Partition, MotiveExpr>& b_row(const LocalWeight& lam) {
  static std::map<LocalWeight, std::map<Partition, MotiveExpr>> cache;
  std::lock_guard lk(g_mu);
  auto it = cache.find(lam);
  if (it != cache.end()) return it->second;
  int g = static_cast<int>(lam.size());
  int n = lw_size(lam);
  Partition row = lw_partition(lam).conjugate();
  const auto& arow = a_matrix(g, n).at(row);
  std::map<Partition, MotiveExpr> out;
  out[row] = MotiveExpr::scalar(1);
  MotiveExpr diag;
  for (auto& [k2, c] : arow) {
    if (lw_size(k2) == n) {
      if (k2 != lam) fail(Err::NonTriangular, "a-matrix is not block triangular");
      diag = c;
      continue;
    }
    for (auto& [mu, b] : b_row(k2)) out[mu] -= mult(c, b);
  }
  int sgn = n % 2 ? -1 : 1;
  if (diag != MotiveExpr::scalar(sgn)) fail(Err::NonTriangular, "a-matrix diagonal is not +-1");
  for (auto& [mu, b] : out) b *= Int(sgn);
  std::erase_if(out, [](auto& kv) { return kv.second.is_zero(); });
  return cache.emplace(lam, std::move(out)).first->second;
}

EquivariantEC pointed_from_local(int g, int n, const std::map<LocalWeight, MotiveExpr>& local) {
  EquivariantEC out;
  for (auto& [mu, row] : a_matrix(g, n)) {
    MotiveExpr s;
    for (auto& [lam, c] : row) {
      auto f = local.find(lam);
      if (f == local.end()) fail(Err::MissingData, "missing e_c(M_" + std::to_string(g) + ", V_" + lw_str(lam) + ")");
      s += mult(c, f->second);
    }
    out[mu] = s;
  }
  return out;
}

MotiveExpr local_from_pointed(const LocalWeight& lam, const std::map<int, EquivariantEC>& pointed) {
  MotiveExpr s;
  for (auto& [mu, b] : b_row(lam)) {
    auto f = pointed.find(mu.size());
    if (f == pointed.end()) fail(Err::MissingData, "missing pointed classes for n = " + std::to_string(mu.size()));
    auto v = f->second.find(mu);
    if (v == f->second.end()) fail(Err::MissingData, "missing pointed class for " + mu.str());
    s += mult(b, v->second);
  }
  return s;
}

std::vector<BranchTerm> branch(const LocalWeight& lam, const std::vector<int>& split) {
  int g = static_cast<int>(lam.size());
  int tot = 0;
  for (int v : split) {
    if (v < 1) fail(Err::InvalidArgument, "split parts must be positive");
    tot += v;
  }
  if (tot != g) fail(Err::InvalidArgument, "split does not sum to the genus");
  int n = lw_size(lam);
  const DomChar& sp = dom_symp(lam);
  auto mult_at = [&](const std::vector<int>& a) {
    auto f = sp.find(dominant_of(a));
    return f == sp.end() ? Int(0) : f->second;
  };
  using Key = std::vector<std::vector<int>>;
  auto key_less = [](const Key& a, const Key& b) {
    int sa = 0, sb = 0;
    for (auto& v : a)
      for (int x : v) sa += x;
    for (auto& v : b)
      for (int x : v) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
  };
  // product-dominant weights
  std::map<Key, Int> d;
  std::vector<std::vector<std::vector<int>>> per;
  for (int gi : split) {
    std::vector<std::vector<int>> ws;
    for (int m = n; m >= 0; m -= 1)
      for (auto& w : dominant_weights(m, gi)) {
        int s = 0;
        for (int x : w) s += x;
        if (s == m) ws.push_back(w);
      }
    per.push_back(ws);
  }
  Key cur(split.size());
  std::function<void(size_t, int)> rec = [&](size_t i, int sum) {
    if (i == split.size()) {
      if ((n - sum) % 2) return;
      std::vector<int> all;
      for (auto& v : cur) all.insert(all.end(), v.begin(), v.end());
      Int m = mult_at(all);
      if (m != 0) d[cur] = m;
      return;
    }
    for (auto& w : per[i]) {
      int s = 0;
      for (int x : w) s += x;
      if (sum + s > n) continue;
      cur[i] = w;
      rec(i + 1, sum + s);
    }
  };
  rec(0, 0);
  std::vector<BranchTerm> out;
  while (!d.empty()) {
    auto top = std::max_element(d.begin(), d.end(), [&](auto& x, auto& y) { return key_less(x.first, y.first); });
    Key k = top->first;
    Int m = top->second;
    if (m < 0) fail(Err::NegativeMultiplicity, "negative branching multiplicity");
    int s = 0;
    for (auto& v : k)
      for (int x : v) s += x;
    out.push_back({k, (n - s) / 2, m});
    // subtract the product character
    std::map<Key, Int> prod{{Key(), Int(1)}};
    for (auto& w : k) {
      std::map<Key, Int> nx;
      for (auto& [pk, pc] : prod)
        for (auto& [a, c] : dom_symp(w)) {
          Key kk = pk;
          kk.push_back(a);
          nx[kk] += pc * c;
        }
      prod = std::move(nx);
    }
    for (auto& [kk, c] : prod) {
      d[kk] -= m * c;
      if (d[kk] == 0) d.erase(kk);
    }
  }
  return out;
}

Int char_eval(const LocalWeight& lam, const std::vector<Int>& frob, int q) {
  int n = lw_size(lam);
  std::vector<Int> p = power_sums(frob, std::max(n, 1));
  Rat total = 0;
  for (auto& [mu, b] : symp_in_schur(lam)) {
    auto& [gk, c] = *b.terms().begin();
    Rat s = 0;
    auto& ps = partitions_of(mu.size());
    auto& tab = sn_char_table(mu.size());
    int i = partition_index(mu);
    for (size_t j = 0; j < ps.size(); ++j) {
      if (tab[i][j] == 0) continue;
      Int pr = 1;
      for (int k : ps[j].parts) pr *= p[k];
      s += frac(tab[i][j] * pr, zee(ps[j]));
    }
    total += s * Rat(c * ipow(q, gk.k));
  }
  if (!is_integral(total)) fail(Err::NonIntegral, "character value is not an integer");
  return total.get_num();
}

Int char_eval_kt(const LocalWeight& lam, const std::vector<Int>& frob, int q) {
  Partition p = lw_partition(lam);
  int n = p.size(), d = static_cast<int>(frob.size()) - 1;
  std::vector<Int> e(n + 2, 0), h(n + 2, 0);
  for (int i = 0; i <= std::min(d, n + 1); ++i) e[i] = i % 2 ? Int(-frob[i]) : frob[i];
  h[0] = 1;
  for (int k = 1; k <= n + 1; ++k)
    for (int i = 1; i <= k; ++i) h[k] += (i % 2 ? 1 : -1) * e[i] * h[k - i];
  auto H = [&](int k) { return k < 0 ? Int(0) : h[k]; };
  int l = p.length();
  std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      Int v = H(p[i - 1] - i + j);
      if (j >= 2) v += ipow(q, j - 1) * H(p[i - 1] - i - j + 2);
      m[i - 1][j - 1] = v;
    }
  Rat det = 1;
  for (int c = 0; c < l; ++c) {
    int piv = -1;
    for (int r = c; r < l; ++r)
      if (m[r][c] != 0) piv = r;
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < l; ++r) {
      Rat f = m[r][c] / m[c][c];
      for (int k = c; k < l; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det.get_num();
}

}  // namespace mgc
