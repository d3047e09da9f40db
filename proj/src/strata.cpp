#include "strata.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "symfun.hpp"

namespace mgc {

namespace {

using Mat = std::vector<std::vector<int>>;

// Graph with per-vertex attributes; m[v][v] counts loops.
struct Shape {
  std::vector<std::vector<int>> attr;  // genus, leg count, then sorted markings if labeled
  Mat m;
  int size() const { return static_cast<int>(attr.size()); }
};

int genus_of(const Shape& s, int v) { return s.attr[v][0]; }
int legs_of(const Shape& s, int v) { return s.attr[v][1]; }
int valence(const Shape& s, int v) {
  int d = legs_of(s, v) + 2 * s.m[v][v];
  for (int w = 0; w < s.size(); ++w)
    if (w != v) d += s.m[v][w];
  return d;
}

std::vector<int> refine_colors(const Shape& s) {
  int n = s.size();
  std::vector<std::vector<int>> sig(n);
  for (int v = 0; v < n; ++v) {
    sig[v] = s.attr[v];
    sig[v].push_back(s.m[v][v]);
    sig[v].push_back(valence(s, v));
  }
  auto rank = [&](const std::vector<std::vector<int>>& keys) {
    std::vector<std::vector<int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> c(n);
    for (int v = 0; v < n; ++v) c[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    return c;
  };
  std::vector<int> col = rank(sig);
  for (;;) {
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (w != v && s.m[v][w]) nb.push_back(col[w] * 64 + s.m[v][w]);
      std::sort(nb.begin(), nb.end());
      keys[v] = {col[v]};
      keys[v].insert(keys[v].end(), nb.begin(), nb.end());
    }
    std::vector<int> next = rank(keys);
    int a = *std::max_element(col.begin(), col.end()), b = *std::max_element(next.begin(), next.end());
    col = next;
    if (a == b) return col;
  }
}

std::vector<int> encode(const Shape& s, const std::vector<int>& order) {
  std::vector<int> e{s.size()};
  for (int v : order) {
    e.push_back(static_cast<int>(s.attr[v].size()));
    e.insert(e.end(), s.attr[v].begin(), s.attr[v].end());
  }
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = i; j < order.size(); ++j) e.push_back(s.m[order[i]][order[j]]);
  return e;
}

// Calls f(order) for every vertex ordering that lists colour classes in
// increasing colour, permuting freely inside each class.
void for_each_ordering(const std::vector<int>& col, const std::function<void(const std::vector<int>&)>& f) {
  int n = static_cast<int>(col.size());
  std::vector<std::vector<int>> classes(n ? *std::max_element(col.begin(), col.end()) + 1 : 0);
  for (int v = 0; v < n; ++v) classes[col[v]].push_back(v);
  std::vector<int> order;
  std::function<void(size_t)> rec = [&](size_t c) {
    if (c == classes.size()) {
      f(order);
      return;
    }
    auto cls = classes[c];
    std::sort(cls.begin(), cls.end());
    do {
      order.insert(order.end(), cls.begin(), cls.end());
      rec(c + 1);
      order.resize(order.size() - cls.size());
    } while (std::next_permutation(cls.begin(), cls.end()));
  };
  rec(0);
}

struct Canon {
  std::vector<int> key;
  std::vector<int> order;
  long vertex_aut = 0;
};

Canon canonical(const Shape& s) {
  Canon c;
  for_each_ordering(refine_colors(s), [&](const std::vector<int>& order) {
    auto e = encode(s, order);
    if (c.key.empty() || e < c.key) {
      c.key = e;
      c.order = order;
      c.vertex_aut = 1;
    } else if (e == c.key) {
      ++c.vertex_aut;
    }
  });
  return c;
}

Shape reorder(const Shape& s, const std::vector<int>& order) {
  Shape r;
  for (int v : order) r.attr.push_back(s.attr[v]);
  r.m.assign(s.size(), std::vector<int>(s.size()));
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) r.m[i][j] = s.m[order[i]][order[j]];
  return r;
}

bool stable_vertex(int g, int valence) { return 2 * g - 2 + valence > 0; }

// Edge symmetries: parallel edges permute, loops permute and flip.
Int edge_aut(const Shape& s) {
  Int a = 1;
  for (int u = 0; u < s.size(); ++u) {
    a *= factorial(s.m[u][u]) * ipow(2, s.m[u][u]);
    for (int v = u + 1; v < s.size(); ++v) a *= factorial(s.m[u][v]);
  }
  return a;
}

// Leg-unlabelled shapes of type (g, n), in canonical vertex order.
const std::vector<Shape>& shapes(int g, int n) {
  static std::map<std::pair<int, int>, std::vector<Shape>> cache;
  static std::mutex mu;
  std::lock_guard lk(mu);
  auto it = cache.find({g, n});
  if (it != cache.end()) return it->second;
  if (2 * g - 2 + n <= 0) fail(Err::InvalidArgument, "unstable type (" + std::to_string(g) + "," + std::to_string(n) + ")");
  std::map<std::vector<int>, Shape> seen;
  std::vector<Shape> frontier;
  auto push = [&](const Shape& s) {
    Canon c = canonical(s);
    if (seen.count(c.key)) return;
    Shape r = reorder(s, c.order);
    seen.emplace(c.key, r);
    frontier.push_back(r);
  };
  push(Shape{{{g, n}}, {{0}}});
  std::vector<Shape> out;
  while (!frontier.empty()) {
    std::vector<Shape> cur;
    cur.swap(frontier);
    for (auto& s : cur) {
      out.push_back(s);
      int nv = s.size();
      for (int v = 0; v < nv; ++v) {
        int gv = genus_of(s, v), bv = legs_of(s, v), lv = s.m[v][v];
        if (gv >= 1) {
          Shape t = s;
          t.attr[v][0] -= 1;
          t.m[v][v] += 1;
          push(t);
        }
        // split v into v and a new vertex w joined by an edge
        std::vector<int> nbrs;
        for (int u = 0; u < nv; ++u)
          if (u != v && s.m[v][u]) nbrs.push_back(u);
        std::vector<int> take(nbrs.size(), 0);
        std::function<void(size_t)> rec = [&](size_t i) {
          if (i < nbrs.size()) {
            for (take[i] = 0; take[i] <= s.m[v][nbrs[i]]; ++take[i]) rec(i + 1);
            return;
          }
          for (int g1 = 0; g1 <= gv; ++g1)
            for (int b1 = 0; b1 <= bv; ++b1)
              for (int l_keep = 0; l_keep <= lv; ++l_keep)
                for (int l_move = 0; l_keep + l_move <= lv; ++l_move) {
                  int l_split = lv - l_keep - l_move;
                  Shape t;
                  t.attr = s.attr;
                  t.attr[v] = {gv - g1, bv - b1};
                  t.attr.push_back({g1, b1});
                  t.m.assign(nv + 1, std::vector<int>(nv + 1, 0));
                  for (int a = 0; a < nv; ++a)
                    for (int b = 0; b < nv; ++b) t.m[a][b] = s.m[a][b];
                  t.m[v][v] = l_keep;
                  t.m[nv][nv] = l_move;
                  t.m[v][nv] = t.m[nv][v] = 1 + l_split;
                  for (size_t k = 0; k < nbrs.size(); ++k) {
                    int u = nbrs[k];
                    t.m[v][u] = t.m[u][v] = s.m[v][u] - take[k];
                    t.m[nv][u] = t.m[u][nv] = take[k];
                  }
                  if (stable_vertex(t.attr[v][0], valence(t, v)) && stable_vertex(g1, valence(t, nv))) push(t);
                }
        };
        rec(0);
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Shape& a, const Shape& b) { return a.size() < b.size(); });
  return cache.emplace(std::make_pair(g, n), std::move(out)).first->second;
}

StableGraph to_graph(const Shape& s, const std::vector<std::vector<int>>& legs, const Int& aut) {
  StableGraph G;
  for (int v = 0; v < s.size(); ++v) {
    G.genus.push_back(genus_of(s, v));
    G.legs.push_back(legs[v]);
    for (int w = v; w < s.size(); ++w)
      for (int k = 0; k < s.m[v][w]; ++k) G.edges.push_back({v, w});
  }
  G.aut = aut;
  return G;
}

Shape labelled_shape(const Shape& s, const std::vector<std::vector<int>>& legs) {
  Shape t = s;
  for (int v = 0; v < s.size(); ++v) t.attr[v].insert(t.attr[v].end(), legs[v].begin(), legs[v].end());
  return t;
}

Shape shape_of(const StableGraph& G) {
  int nv = static_cast<int>(G.genus.size());
  Shape s;
  for (int v = 0; v < nv; ++v) s.attr.push_back({G.genus[v], static_cast<int>(G.legs[v].size())});
  s.m.assign(nv, std::vector<int>(nv, 0));
  for (auto [u, v] : G.edges) {
    if (u < 0 || v < 0 || u >= nv || v >= nv) fail(Err::InvalidArgument, "edge references a missing vertex");
    if (u == v) s.m[u][u] += 1;
    else {
      s.m[u][v] += 1;
      s.m[v][u] += 1;
    }
  }
  return s;
}

}  // namespace

int StableGraph::g() const {
  int s = 0;
  for (int x : genus) s += x;
  // first Betti number of a connected graph
  return s + static_cast<int>(edges.size()) - static_cast<int>(genus.size()) + 1;
}

int StableGraph::n() const {
  int s = 0;
  for (auto& l : legs) s += static_cast<int>(l.size());
  return s;
}

int StableGraph::dimension() const {
  int d = 0;
  for (size_t v = 0; v < genus.size(); ++v) {
    int nv = static_cast<int>(legs[v].size());
    for (auto [a, b] : edges) nv += (a == static_cast<int>(v)) + (b == static_cast<int>(v));
    d += 3 * genus[v] - 3 + nv;
  }
  return d;
}

std::string StableGraph::str() const {
  std::string s = "V[";
  for (size_t v = 0; v < genus.size(); ++v) {
    s += (v ? " " : "") + std::string("g") + std::to_string(genus[v]) + "{";
    for (size_t i = 0; i < legs[v].size(); ++i) s += (i ? "," : "") + std::to_string(legs[v][i]);
    s += "}";
  }
  s += "] E[";
  for (size_t i = 0; i < edges.size(); ++i) s += (i ? " " : "") + std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  return s + "] aut=" + aut.get_str();
}

std::vector<StableGraph> stable_graphs(int g, int n) {
  std::vector<StableGraph> out;
  for (const Shape& s : shapes(g, n)) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> legs(s.size());
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::function<void(int, std::vector<int>)> rec = [&](int v, std::vector<int> rest) {
      if (v == s.size()) {
        Shape t = labelled_shape(s, legs);
        Canon c = canonical(t);
        if (!seen.insert(c.key).second) return;
        out.push_back(to_graph(s, legs, Int(c.vertex_aut) * edge_aut(s)));
        return;
      }
      int b = legs_of(s, v);
      std::vector<char> pick(rest.size(), 0);
      std::fill(pick.begin(), pick.begin() + b, 1);
      do {
        std::vector<int> mine, others;
        for (size_t i = 0; i < rest.size(); ++i) (pick[i] ? mine : others).push_back(rest[i]);
        legs[v] = mine;
        rec(v + 1, others);
      } while (std::prev_permutation(pick.begin(), pick.end()));
    };
    rec(0, pool);
  }
  return out;
}

std::vector<StableGraph> stable_graph_orbits(int g, int n) {
  std::vector<StableGraph> out;
  for (const Shape& s : shapes(g, n)) {
    std::vector<std::vector<int>> legs(s.size());
    int next = 1;
    for (int v = 0; v < s.size(); ++v)
      for (int i = 0; i < legs_of(s, v); ++i) legs[v].push_back(next++);
    out.push_back(to_graph(s, legs, Int(canonical(labelled_shape(s, legs)).vertex_aut) * edge_aut(s)));
  }
  return out;
}

Int full_aut(const StableGraph& G) {
  Shape s = shape_of(G);
  Int a = Int(canonical(s).vertex_aut) * edge_aut(s);
  for (int v = 0; v < s.size(); ++v) a *= factorial(legs_of(s, v));
  return a;
}

OpenProvider lowgenus_provider(const A2Table& a2) {
  return [&a2](int g, int n) -> EquivariantEC {
    switch (g) {
      case 0: return ec_m0n(n);
      case 1: return ec_m1n(n);
      case 2: return ec_m2n(n, a2);
      default: fail(Err::MissingData, "open class of M_{" + std::to_string(g) + "," + std::to_string(n) + "}");
    }
  };
}

OpenProvider memo_provider(OpenProvider base, std::map<std::pair<int, int>, EquivariantEC> injected) {
  struct State {
    std::mutex mu;
    std::map<std::pair<int, int>, EquivariantEC> memo;
  };
  auto st = std::make_shared<State>();
  st->memo = std::move(injected);
  return [st, base](int g, int n) -> EquivariantEC {
    {
      std::lock_guard lk(st->mu);
      auto it = st->memo.find({g, n});
      if (it != st->memo.end()) return it->second;
    }
    EquivariantEC v = base(g, n);
    std::lock_guard lk(st->mu);
    return st->memo.emplace(std::make_pair(g, n), std::move(v)).first->second;
  };
}

EquivariantEC ec_add(const EquivariantEC& a, const EquivariantEC& b) {
  EquivariantEC r = a;
  for (auto& [mu, v] : b) r[mu] += v;
  return r;
}

namespace {

EquivariantEC from_series(const SymSeries& f, int n) {
  EquivariantEC out;
  for (auto& mu : partitions_of(n)) out[mu] = MotiveExpr();
  for (auto& [mu, c] : p_to_schur_q(f)) {
    if (!is_integral(c)) fail(Err::NonIntegralCoefficient, "stratum class is not integral at " + mu.str());
    out[mu] = to_z(c);
  }
  return out;
}

SymSeries to_series(const EquivariantEC& e, Caps caps, int h) {
  SymSeries f(caps);
  for (auto& [mu, v] : e) {
    if (v.is_zero()) continue;
    SymSeries s = schur_to_p(mu, caps, h);
    for (auto& [m, c] : s.terms()) f.add(m, mult(c, to_q(v)));
  }
  return f;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<char> done(perm.size(), 0);
  std::vector<int> t;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (done[i]) continue;
    int len = 0;
    for (size_t j = i; !done[j]; j = perm[j]) {
      done[j] = 1;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

// z_tau [p_tau(X)] of the vertex class in X + Y, as a series in the legs Y.
class VertexTable {
 public:
  VertexTable(const OpenProvider& p, int n) : provider_(p), n_(n) {}

  const SymSeries& get(int g, int a, int b, const std::vector<int>& tau) {
    auto key = std::make_tuple(g, a, b, tau);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Caps caps{a + b, 0};
    SymSeries ch = to_series(provider_(g, a + b), caps, 0);
    Partition t(tau);
    SymSeries out(Caps{n_, 0});
    for (auto& [m, c] : ch.terms()) {
      Partition rho(m.parts);
      Rat coef = 1;
      std::vector<int> rest;
      bool ok = true;
      for (int i = 1; i <= a + b && ok; ++i) {
        int mr = rho.mult(i), mt = t.mult(i);
        if (mt > mr) ok = false;
        else {
          coef *= Rat(binom(mr, mt));
          for (int k = 0; k < mr - mt; ++k) rest.push_back(i);
        }
      }
      if (!ok) continue;
      std::sort(rest.rbegin(), rest.rend());
      out.add(Mono{0, rest}, c * (coef * Rat(zee(t))));
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const OpenProvider& provider_;
  int n_;
  std::map<std::tuple<int, int, int, std::vector<int>>, SymSeries> memo_;
};

}  // namespace

EquivariantEC ec_stratum(const StableGraph& G, const OpenProvider& provider) {
  Shape s = shape_of(G);
  int n = G.n(), nv = s.size();
  for (int v = 0; v < nv; ++v)
    if (!stable_vertex(genus_of(s, v), valence(s, v))) fail(Err::InvalidArgument, "unstable vertex in " + G.str());
  if (G.trivial()) return provider(G.genus[0], n);
  // half-edges: edge e has ends 2e (at first vertex) and 2e+1
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < nv; ++u)
    for (int w = u; w < nv; ++w)
      for (int k = 0; k < s.m[u][w]; ++k) edges.push_back({u, w});
  int H = 2 * static_cast<int>(edges.size());
  auto vert = [&](int h) { return h % 2 ? edges[h / 2].second : edges[h / 2].first; };
  std::vector<std::vector<int>> at(nv);
  for (int h = 0; h < H; ++h) at[vert(h)].push_back(h);

  Caps caps{n, 0};
  VertexTable table(provider, n);
  SymSeries total(caps);
  long count = 0;
  std::vector<int> alpha(H, -1);
  auto accumulate = [&](const std::vector<int>& pi) {
    SymSeries term = SymSeries::one(caps);
    std::vector<char> done(nv, 0);
    for (int v = 0; v < nv; ++v) {
      if (done[v]) continue;
      int k = 0;
      for (int w = v; !done[w]; w = pi[w]) {
        done[w] = 1;
        ++k;
      }
      // alpha^k on the half-edges at v
      std::vector<int> local(at[v].size());
      for (size_t i = 0; i < at[v].size(); ++i) {
        int h = at[v][i];
        for (int r = 0; r < k; ++r) h = alpha[h];
        local[i] = static_cast<int>(std::find(at[v].begin(), at[v].end(), h) - at[v].begin());
      }
      const SymSeries& f = table.get(genus_of(s, v), static_cast<int>(at[v].size()), legs_of(s, v), cycle_type(local));
      term = multiply(term, k == 1 ? f : adams_sub(f, k, caps));
    }
    total += term;
    ++count;
  };
  std::vector<int> col = refine_colors(s);
  std::vector<int> base(nv);
  std::iota(base.begin(), base.end(), 0);
  std::sort(base.begin(), base.end(), [&](int x, int y) { return std::make_pair(col[x], x) < std::make_pair(col[y], y); });
  for_each_ordering(col, [&](const std::vector<int>& order) {
    // vertex permutation base[i] -> order[i]
    std::vector<int> pi(nv);
    for (int i = 0; i < nv; ++i) pi[base[i]] = order[i];
    for (int v = 0; v < nv; ++v) {
      if (s.attr[pi[v]] != s.attr[v]) return;
      for (int w = 0; w < nv; ++w)
        if (s.m[pi[v]][pi[w]] != s.m[v][w]) return;
    }
    // map each edge bundle onto its image bundle
    std::map<std::pair<int, int>, std::vector<int>> bundles;
    for (size_t e = 0; e < edges.size(); ++e) bundles[edges[e]].push_back(static_cast<int>(e));
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> list(bundles.begin(), bundles.end());
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == list.size()) {
        accumulate(pi);
        return;
      }
      auto [uv, src] = list[i];
      int u = uv.first, w = uv.second;
      int pu = pi[u], pw = pi[w];
      bool swapped = pu > pw;
      auto tgt = bundles.at({std::min(pu, pw), std::max(pu, pw)});
      std::sort(tgt.begin(), tgt.end());
      do {
        if (u == w) {
          for (int flips = 0; flips < (1 << src.size()); ++flips) {
            for (size_t j = 0; j < src.size(); ++j) {
              bool f = (flips >> j) & 1;
              alpha[2 * src[j]] = 2 * tgt[j] + f;
              alpha[2 * src[j] + 1] = 2 * tgt[j] + !f;
            }
            rec(i + 1);
          }
        } else {
          for (size_t j = 0; j < src.size(); ++j) {
            alpha[2 * src[j]] = 2 * tgt[j] + swapped;
            alpha[2 * src[j] + 1] = 2 * tgt[j] + !swapped;
          }
          rec(i + 1);
        }
      } while (std::next_permutation(tgt.begin(), tgt.end()));
    };
    rec(0);
  });
  total *= Rat(1, count);
  return from_series(total, n);
}

EquivariantEC boundary_direct(int g, int n, const OpenProvider& provider) {
  EquivariantEC out;
  for (auto& mu : partitions_of(n)) out[mu] = MotiveExpr();
  for (auto& G : stable_graph_orbits(g, n)) {
    if (G.trivial()) continue;
    if (G.dimension() >= 3 * g - 3 + n) fail(Err::ValidationFailure, "non-trivial stratum of full dimension: " + G.str());
    out = ec_add(out, ec_stratum(G, provider));
  }
  return out;
}

EquivariantEC boundary_gk(int g, int n, const OpenProvider& provider) {
  int W = 2 * g - 2 + n;
  if (W <= 0) fail(Err::InvalidArgument, "unstable type");
  Caps caps{3 * W, W, W};
  SymSeries chv(caps);
  for (int gv = 0; gv <= g; ++gv)
    for (int nv = 0; 2 * gv - 2 + nv <= W; ++nv) {
      if (2 * gv - 2 + nv <= 0) continue;
      // a genus g vertex only occurs with a genus 0 tail holding at least two legs
      if (gv == g && (nv < 1 || nv > n - 1)) continue;
      chv += to_series(provider(gv, nv), caps, gv - 1);
    }
  SymSeries e = gk_exp_delta(pleth_exp(chv)).with_caps(Caps{n, W, W});
  SymSeries lg = pleth_log(e);
  return from_series(lg.part(g - 1, n), n);
}

}  // namespace mgc
