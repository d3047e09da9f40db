#include "symfun.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace mgc {

Caps Caps::meet(const Caps& a, const Caps& b) {
  return {std::min(a.degree, b.degree), std::min(a.genus, b.genus), std::min(a.weight, b.weight)};
}

SymSeries SymSeries::one(Caps caps) { return monomial(caps, 0, Partition(), QMotive::scalar(1)); }

SymSeries SymSeries::monomial(Caps caps, int h, const Partition& rho, const QMotive& c) {
  SymSeries s(caps);
  s.add(h, rho, c);
  return s;
}

void SymSeries::add(const Mono& m, const QMotive& c) {
  if (c.is_zero() || !caps_.admits(m.h, m.degree())) return;
  auto [it, ins] = t_.emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

SymSeries& SymSeries::operator+=(const SymSeries& o) {
  for (auto& [m, c] : o.t_) add(m, c);
  return *this;
}

SymSeries& SymSeries::operator-=(const SymSeries& o) {
  for (auto& [m, c] : o.t_) add(m, -c);
  return *this;
}

SymSeries& SymSeries::operator*=(const Rat& s) {
  if (s == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, c] : t_) c *= s;
  return *this;
}

QMotive SymSeries::coeff(int h, const Partition& rho) const {
  auto it = t_.find(Mono{h, rho.parts});
  return it == t_.end() ? QMotive() : it->second;
}

SymSeries SymSeries::part(int h, int degree) const {
  SymSeries r(caps_);
  for (auto& [m, c] : t_)
    if (m.h == h && m.degree() == degree) r.t_.emplace(m, c);
  return r;
}

SymSeries SymSeries::with_caps(Caps caps) const {
  SymSeries r(caps);
  for (auto& [m, c] : t_) r.add(m, c);
  return r;
}

void SymSeries::check() const {
  for (auto& [m, c] : t_)
    if (!caps_.admits(m.h, m.degree())) fail(Err::CapViolation, "term outside truncation caps");
}

static std::mutex g_char_mu;

int partition_index(const Partition& p) {
  auto& ps = partitions_of(p.size());
  auto it = std::lower_bound(ps.begin(), ps.end(), p, [](const Partition& a, const Partition& b) { return a > b; });
  if (it == ps.end() || *it != p) fail(Err::InvalidArgument, "partition not found");
  return static_cast<int>(it - ps.begin());
}

const std::vector<std::vector<Int>>& sn_char_table(int n) {
  static std::map<int, std::vector<std::vector<Int>>> cache;
  std::lock_guard lk(g_char_mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto& ps = partitions_of(n);
  std::vector<std::vector<Int>> tab(ps.size(), std::vector<Int>(ps.size()));
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = 0; j < ps.size(); ++j) tab[i][j] = sn_character(ps[i], ps[j]);
  return cache.emplace(n, std::move(tab)).first->second;
}

SymSeries schur_to_p(const Partition& mu, Caps caps, int h) {
  SymSeries s(caps);
  int n = mu.size();
  auto& ps = partitions_of(n);
  auto& tab = sn_char_table(n);
  int i = partition_index(mu);
  for (size_t j = 0; j < ps.size(); ++j) {
    if (tab[i][j] == 0) continue;
    s.add(h, ps[j], QMotive::scalar(frac(tab[i][j], zee(ps[j]))));
  }
  return s;
}

std::map<Partition, QMotive> p_to_schur_q(const SymSeries& f) {
  std::map<Partition, QMotive> out;
  if (f.is_zero()) return out;
  int h = f.terms().begin()->first.h;
  int n = f.terms().begin()->first.degree();
  for (auto& [m, c] : f.terms())
    if (m.h != h || m.degree() != n) fail(Err::InvalidArgument, "p_to_schur needs a homogeneous series");
  auto& ps = partitions_of(n);
  auto& tab = sn_char_table(n);
  for (auto& [m, c] : f.terms()) {
    int j = partition_index(Partition(m.parts));
    for (size_t i = 0; i < ps.size(); ++i)
      if (tab[i][j] != 0) out[ps[i]] += c * Rat(tab[i][j]);
  }
  std::erase_if(out, [](auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::map<Partition, MotiveExpr> p_to_schur(const SymSeries& f) {
  std::map<Partition, MotiveExpr> out;
  for (auto& [lam, c] : p_to_schur_q(f)) out[lam] = to_z(c);
  return out;
}

static std::vector<int> merge_parts(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), r.begin(), std::greater<int>());
  return r;
}

SymSeries multiply(const SymSeries& f, const SymSeries& g) {
  Caps caps = Caps::meet(f.caps(), g.caps());
  SymSeries r(caps);
  std::vector<std::pair<const Mono*, const QMotive*>> gt;
  for (auto& [m, c] : g.terms()) gt.push_back({&m, &c});
  for (auto& [m1, c1] : f.terms()) {
    int d1 = m1.degree();
    for (auto& [m2p, c2p] : gt) {
      int h = m1.h + m2p->h, d = d1 + m2p->degree();
      if (!caps.admits(h, d)) continue;
      QMotive c = mult(c1, *c2p);
      r.add(Mono{h, merge_parts(m1.parts, m2p->parts)}, c);
    }
  }
  return r;
}

SymSeries adams_sub(const SymSeries& g, int n, Caps caps) {
  SymSeries r(caps);
  for (auto& [m, c] : g.terms()) {
    int h = n * m.h, d = n * m.degree();
    if (!caps.admits(h, d)) continue;
    Mono mm{h, m.parts};
    for (int& v : mm.parts) v *= n;
    r.add(mm, adams(c, n));
  }
  return r;
}

SymSeries plethysm(const SymSeries& f, const SymSeries& g) {
  Caps caps = g.caps();
  SymSeries r(caps);
  std::map<int, SymSeries> subs;
  for (auto& [m, c] : f.terms()) {
    SymSeries term = SymSeries::monomial(caps, m.h, Partition(), c);
    for (int k : m.parts) {
      auto it = subs.find(k);
      if (it == subs.end()) it = subs.emplace(k, adams_sub(g, k, caps)).first;
      term = multiply(term, it->second);
      if (term.is_zero()) break;
    }
    r += term;
  }
  return r;
}

static bool has_constant(const SymSeries& f) {
  for (auto& [m, c] : f.terms())
    if (m.h == 0 && m.parts.empty()) return true;
  return false;
}

// Largest n for which p_n o f can survive the caps.
static int adams_reach(const SymSeries& f) {
  const Caps& cp = f.caps();
  int best = 0;
  for (auto& [m, c] : f.terms()) {
    int d = m.degree(), w = 2 * m.h + d;
    int lim = 64;
    if (d > 0) lim = std::min(lim, cp.degree / d);
    if (m.h > 0) lim = std::min(lim, cp.genus / m.h);
    if (w > 0 && cp.weight != INT_MAX) lim = std::min(lim, cp.weight / w);
    best = std::max(best, lim);
  }
  return best;
}

static SymSeries ord_exp(const SymSeries& u) {
  SymSeries r = SymSeries::one(u.caps());
  SymSeries pw = SymSeries::one(u.caps());
  for (int m = 1; m <= 256; ++m) {
    pw = multiply(pw, u);
    pw *= frac(1, m);
    if (pw.is_zero()) return r;
    r += pw;
  }
  fail(Err::CapViolation, "exponential does not terminate under the caps");
}

static SymSeries ord_log1p(const SymSeries& u) {
  SymSeries r(u.caps());
  SymSeries pw = SymSeries::one(u.caps());
  for (int m = 1; m <= 256; ++m) {
    pw = multiply(pw, u);
    if (pw.is_zero()) return r;
    SymSeries t = pw;
    t *= frac(m % 2 ? 1 : -1, m);
    r += t;
  }
  fail(Err::CapViolation, "logarithm does not terminate under the caps");
}

SymSeries pleth_exp(const SymSeries& f) {
  if (has_constant(f)) fail(Err::InvalidArgument, "Exp needs a series without constant term");
  SymSeries F(f.caps());
  int reach = adams_reach(f);
  for (int k = 1; k <= reach; ++k) {
    SymSeries t = adams_sub(f, k, f.caps());
    t *= frac(1, k);
    F += t;
  }
  return ord_exp(F);
}

SymSeries pleth_log(const SymSeries& f) {
  QMotive c0 = f.coeff(0, Partition());
  if (c0 != QMotive::scalar(1)) fail(Err::InvalidArgument, "Log needs constant term 1");
  SymSeries u = f;
  u -= SymSeries::one(f.caps());
  SymSeries lg = ord_log1p(u);
  SymSeries r(f.caps());
  int reach = adams_reach(lg);
  for (int k = 1; k <= reach; ++k) {
    int mu = moebius(k);
    if (mu == 0) continue;
    SymSeries t = adams_sub(lg, k, f.caps());
    t *= frac(mu, k);
    r += t;
  }
  return r;
}

static std::vector<int> remove_part(const std::vector<int>& p, int k, int times) {
  std::vector<int> r;
  r.reserve(p.size());
  for (int v : p) {
    if (v == k && times > 0) {
      --times;
      continue;
    }
    r.push_back(v);
  }
  return r;
}

static int count_part(const std::vector<int>& p, int k) { return static_cast<int>(std::count(p.begin(), p.end(), k)); }

SymSeries deriv(const SymSeries& f, int k) {
  SymSeries r(f.caps());
  for (auto& [m, c] : f.terms()) {
    int mk = count_part(m.parts, k);
    if (mk == 0) continue;
    r.add(Mono{m.h, remove_part(m.parts, k, 1)}, c * Rat(mk));
  }
  return r;
}

static SymSeries apply_delta(const SymSeries& f) {
  SymSeries r(f.caps());
  for (auto& [m, c] : f.terms()) {
    std::vector<int> ks = m.parts;
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int n : ks) {
      int mn = count_part(m.parts, n);
      if (mn >= 2) r.add(Mono{m.h + n, remove_part(m.parts, n, 2)}, c * frac(n * mn * (mn - 1), 2));
      if (n % 2 == 0) r.add(Mono{m.h + n / 2, remove_part(m.parts, n, 1)}, c * Rat(mn));
    }
  }
  return r;
}

SymSeries gk_exp_delta(const SymSeries& f) {
  SymSeries r = f;
  SymSeries cur = f;
  for (int m = 1; m <= 256; ++m) {
    cur = apply_delta(cur);
    cur *= frac(1, m);
    if (cur.is_zero()) return r;
    r += cur;
  }
  fail(Err::CapViolation, "Exp(Delta) does not terminate");
}

}  // namespace mgc
