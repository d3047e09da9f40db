#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symfun.hpp"

using namespace mgc;

namespace doctest {
template <>
struct StringMaker<MotiveExpr> {
  static String convert(const MotiveExpr& e) { return motive_str(e).c_str(); }
};
template <>
struct StringMaker<QMotive> {
  static String convert(const QMotive& e) { return motive_str(e).c_str(); }
};
}  // namespace doctest

namespace {

const Caps kBig{12, 4};

QMotive QL(int k, Rat c = 1) { return QMotive::L(k, c); }
QMotive QS(Rat c) { return QMotive::scalar(c); }

Rat det(std::vector<std::vector<Rat>> a) {
  int n = static_cast<int>(a.size());
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) piv = r;
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      Rat f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// Bialternant formula at a point.
Rat schur_eval(const Partition& lam, const std::vector<Rat>& x) {
  int n = static_cast<int>(x.size());
  if (lam.length() > n) return 0;
  std::vector<std::vector<Rat>> num(n, std::vector<Rat>(n)), den(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat a = 1, b = 1;
      for (int e = 0; e < lam[j] + n - 1 - j; ++e) a *= x[i];
      for (int e = 0; e < n - 1 - j; ++e) b *= x[i];
      num[i][j] = a;
      den[i][j] = b;
    }
  return det(num) / det(den);
}

Rat p_eval(const SymSeries& f, const std::vector<Rat>& x) {
  Rat s = 0;
  for (auto& [m, c] : f.terms()) {
    Rat t = c.coeff({0, G_ONE});
    for (int k : m.parts) {
      Rat pk = 0;
      for (auto& xi : x) {
        Rat v = 1;
        for (int e = 0; e < k; ++e) v *= xi;
        pk += v;
      }
      t *= pk;
    }
    s += t;
  }
  return s;
}

SymSeries P(Caps caps, std::vector<int> rho, QMotive c = QMotive::scalar(1), int h = 0) {
  return SymSeries::monomial(caps, h, Partition(rho), c);
}

SymSeries schur_series(const std::map<Partition, QMotive>& m, Caps caps, int h = 0) {
  SymSeries s(caps);
  for (auto& [lam, c] : m) {
    SymSeries t = schur_to_p(lam, caps, h);
    for (auto& [mono, a] : t.terms()) s.add(mono, mult(a, c));
  }
  return s;
}

}  // namespace

TEST_CASE("schur to power sums matches bialternant") {
  std::vector<Rat> x = {1, 2, 3, 5};
  for (int n = 0; n <= 6; ++n)
    for (auto& lam : partitions_of(n)) {
      SymSeries s = schur_to_p(lam, kBig);
      CHECK(p_eval(s, x) == schur_eval(lam, x));
    }
}

TEST_CASE("p_to_schur inverts schur_to_p") {
  for (int n = 1; n <= 8; ++n)
    for (auto& lam : partitions_of(n)) {
      auto back = p_to_schur(schur_to_p(lam, kBig));
      REQUIRE(back.size() == 1);
      CHECK(back.begin()->first == lam);
      CHECK(back.begin()->second == MotiveExpr::scalar(1));
    }
  SymSeries half = P(kBig, {2});
  half *= frac(1, 2);
  CHECK_THROWS_AS(p_to_schur(half), Error);
}

TEST_CASE("plethysm basics") {
  SymSeries g = P(kBig, {1}, QL(1));
  SymSeries r = plethysm(P(kBig, {2}), g);
  CHECK(r == P(kBig, {2}, QL(2)));
  // h_2[h_2] = s_4 + s_22
  SymSeries h2 = schur_to_p(Partition({2}), kBig);
  auto hh = p_to_schur(plethysm(h2, h2));
  CHECK(hh.size() == 2);
  CHECK(hh[Partition({4})] == MotiveExpr::scalar(1));
  CHECK(hh[Partition({2, 2})] == MotiveExpr::scalar(1));
  // Adams on a cusp form coefficient
  QMotive s12 = QMotive::gen(G_S12);
  SymSeries q = plethysm(P(kBig, {2}), P(kBig, {1}, s12));
  CHECK(q.coeff(0, Partition({2})) == adams(s12, 2));
  // Genus variable
  SymSeries hv = plethysm(P(kBig, {3}), P(kBig, {1}, QS(1), 1));
  CHECK(hv.coeff(3, Partition({3})) == QS(1));
}

TEST_CASE("plethysm is associative") {
  std::mt19937 rng(5);
  Caps caps{9, 4};
  auto rnd = [&](int maxdeg) {
    SymSeries s(caps);
    for (int t = 0; t < 3; ++t) {
      int d = 1 + static_cast<int>(rng() % maxdeg);
      auto& ps = partitions_of(d);
      s.add(0, ps[rng() % ps.size()], QL(static_cast<int>(rng() % 2), Rat(static_cast<int>(rng() % 5) - 2)));
    }
    return s;
  };
  for (int it = 0; it < 20; ++it) {
    SymSeries f = rnd(3), g = rnd(2), k = rnd(2);
    CHECK(plethysm(plethysm(f, g), k) == plethysm(f, plethysm(g, k)));
  }
}

TEST_CASE("Exp and Log are inverse") {
  std::mt19937 rng(11);
  Caps caps{8, 3, 9};
  for (int it = 0; it < 10; ++it) {
    SymSeries f(caps);
    for (int t = 0; t < 4; ++t) {
      int d = 1 + static_cast<int>(rng() % 3);
      auto& ps = partitions_of(d);
      int h = static_cast<int>(rng() % 3) - 1;
      if (2 * h + d < 1) h = 0;
      f.add(h, ps[rng() % ps.size()], QL(static_cast<int>(rng() % 3), Rat(static_cast<int>(rng() % 7) - 3)));
    }
    SymSeries e = pleth_exp(f);
    CHECK(pleth_log(e) == f);
    CHECK(pleth_exp(pleth_log(e)) == e);
  }
  // Exp(p_1) = sum h_n
  SymSeries e = pleth_exp(P(caps, {1}));
  for (int n = 0; n <= 8; ++n) {
    auto sc = p_to_schur(e.part(0, n));
    if (n == 0) continue;
    CHECK(sc.size() == 1);
    CHECK(sc[Partition({n})] == MotiveExpr::scalar(1));
  }
}

TEST_CASE("Exp of a cusp form term uses Adams operations") {
  Caps caps{2, 0};
  SymSeries e = pleth_exp(P(caps, {1}, QMotive::gen(G_S12)));
  auto sc = p_to_schur(e.part(0, 2));
  MotiveExpr s12 = MotiveExpr::gen(G_S12);
  // Sym^2 S[12] and Lambda^2 S[12] = L^11
  CHECK(sc[Partition({2})] == MotiveExpr::gen(G_SYM2S12));
  CHECK(sc[Partition({1, 1})] == MotiveExpr::L(11));
}

TEST_CASE("boundary oracle in genus one and two") {
  // Open classes: M_{0,3}, M_{0,4}, M_{1,1}, M_{1,2}, M_{2}.
  auto run = [](int W, int g, int n) {
    Caps caps{3 * W, W, W};
    SymSeries V(caps);
    V += schur_series({{Partition({3}), QS(1)}}, caps, -1);
    V += schur_series({{Partition({4}), QL(1)}, {Partition({2, 2}), QS(-1)}}, caps, -1);
    V += schur_series({{Partition({1}), QL(1)}}, caps, 0);
    V += schur_series({{Partition({2}), QL(2)}}, caps, 0);
    V += schur_series({{Partition(), QL(3)}}, caps, 1);
    SymSeries b = pleth_log(gk_exp_delta(pleth_exp(V)));
    return p_to_schur(b.part(g - 1, n));
  };
  auto m11 = run(1, 1, 1);
  CHECK(m11[Partition({1})] == MotiveExpr::L(1) + MotiveExpr::scalar(1));
  auto m2 = run(2, 2, 0);
  CHECK(m2[Partition()] == MotiveExpr::L(3) + MotiveExpr::L(2, 2) + MotiveExpr::L(1, 2) + MotiveExpr::scalar(1));
  auto m04 = run(2, 0, 4);
  CHECK(m04[Partition({4})] == MotiveExpr::L(1) + MotiveExpr::scalar(1));
  CHECK(m04.size() == 1);
}

TEST_CASE("caps") {
  Caps caps{4, 1, 5};
  SymSeries s(caps);
  s.add(2, Partition({1}), QS(1));
  s.add(0, Partition({5}), QS(1));
  s.add(1, Partition({2, 2}), QS(1));
  CHECK(s.is_zero());
  s.add(1, Partition({3}), QS(1));
  CHECK(s.size() == 1);
  s.check();
  SymSeries d = deriv(P(caps, {2, 2}), 2);
  CHECK(d.coeff(0, Partition({2})) == QS(2));
}
