#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leray.hpp"

using namespace mgc;

namespace doctest {
template <>
struct StringMaker<MotiveExpr> {
  static String convert(const MotiveExpr& e) { return motive_str(e).c_str(); }
};
}  // namespace doctest

namespace {

MotiveExpr L(int k, long c = 1) { return MotiveExpr::L(k, Int(c)); }

LaurentChar lc(int g, int degree, std::vector<std::pair<std::vector<int>, long>> t) {
  LaurentChar r{g, degree, {}};
  for (auto& [a, c] : t) r.add(a, c);
  return r;
}

// Random Weil polynomial of degree 2g with real roots of the form x^2 - t x + q.
std::vector<Int> random_frob(std::mt19937& rng, int g, int q) {
  std::vector<Int> p = {1};
  for (int i = 0; i < g; ++i) {
    long t = static_cast<long>(rng() % 7) - 3;
    std::vector<Int> f = {1, -t, q}, r(p.size() + 2, 0);
    for (size_t a = 0; a < p.size(); ++a)
      for (size_t b = 0; b < 3; ++b) r[a + b] += p[a] * f[b];
    p = r;
  }
  return p;
}

}  // namespace

TEST_CASE("symplectic Schur characters") {
  CHECK(symp_schur({1}) == lc(1, 1, {{{1}, 1}, {{-1}, 1}}));
  CHECK(symp_schur({2}) == lc(1, 2, {{{2}, 1}, {{0}, 1}, {{-2}, 1}}));
  CHECK(symp_schur({1, 1, 1}).at_one() == 14);
  CHECK(symp_schur({0, 0, 0}).at_one() == 1);
  for (int n = 0; n <= 6; ++n)
    for (auto& p : partitions_of(n))
      for (int g = std::max(1, p.length()); g <= 3; ++g) {
        LocalWeight l = local_weight(p, g);
        LaurentChar s = symp_schur(l);
        CHECK(s.weyl_symmetric());
        CHECK(s.at_one() == weyl_dim(l));
        CHECK(expand_dom(dom_symp(l), n, g) == s);
      }
}

TEST_CASE("Schur functions on the symplectic alphabet") {
  for (int n = 0; n <= 6; ++n)
    for (auto& p : partitions_of(n))
      for (int g = 1; g <= 3; ++g) CHECK(expand_dom(dom_schur(p, g), n, g) == schur_alphabet(p, g));
}

TEST_CASE("GL to Sp branching") {
  auto a = schur_in_symp(Partition({1, 1}), 1);
  CHECK(a.size() == 1);
  CHECK(a[LocalWeight{0}] == L(1));
  auto e = schur_in_symp(Partition(), 2);
  CHECK(e.size() == 1);
  CHECK(e[LocalWeight{0, 0}] == L(0));
  // e_2 on four variables: Lambda^2 V = V_{1,1} + q
  auto b = schur_in_symp(Partition({1, 1}), 2);
  CHECK(b[LocalWeight{1, 1}] == L(0));
  CHECK(b[LocalWeight{0, 0}] == L(1));
  auto sp11 = symp_in_schur({1, 1});
  CHECK(sp11[Partition({1, 1})] == L(0));
  CHECK(sp11[Partition()] == L(1, -1));
}

TEST_CASE("the two expansions are mutually inverse") {
  for (int g = 1; g <= 3; ++g)
    for (int n = 0; n <= 6; ++n)
      for (auto& p : partitions_of(n)) {
        if (p.length() > g) continue;
        LocalWeight lam = local_weight(p, g);
        std::map<LocalWeight, MotiveExpr> back;
        for (auto& [mu, b] : symp_in_schur(lam))
          for (auto& [l2, a] : schur_in_symp(mu, g)) back[l2] += mult(b, a);
        std::erase_if(back, [](auto& kv) { return kv.second.is_zero(); });
        REQUIRE(back.size() == 1);
        CHECK(back.begin()->first == lam);
        CHECK(back.begin()->second == L(0));
      }
}

TEST_CASE("Leray matrices") {
  for (int g = 2; g <= 3; ++g) {
    auto& a1 = a_matrix(g, 1);
    auto& row = a1.at(Partition({1}));
    CHECK(row.at(local_weight(Partition(), g)) == L(1) + L(0));
    CHECK(row.at(local_weight(Partition({1}), g)) == L(0, -1));
    CHECK(row.size() == 2);
    auto& a0 = a_matrix(g, 0);
    CHECK(a0.at(Partition()).at(local_weight(Partition(), g)) == L(0));
  }
  // Round trip on synthetic local data.
  for (int g = 2; g <= 3; ++g) {
    std::map<LocalWeight, MotiveExpr> local;
    std::mt19937 rng(g);
    for (int m = 0; m <= 5; ++m)
      for (auto& p : partitions_of(m))
        if (p.length() <= g) local[local_weight(p, g)] = L(static_cast<int>(rng() % 5), static_cast<long>(rng() % 9) - 4) + MotiveExpr::gen(G_S12, 0, Int(static_cast<long>(rng() % 3)));
    std::map<int, EquivariantEC> pointed;
    for (int m = 0; m <= 5; ++m) pointed[m] = pointed_from_local(g, m, local);
    for (auto& [lam, v] : local) CHECK(local_from_pointed(lam, pointed) == v);
  }
  std::map<LocalWeight, MotiveExpr> partial{{{0, 0}, L(0)}};
  CHECK_THROWS_AS(pointed_from_local(2, 1, partial), Error);
}

TEST_CASE("branching to product strata") {
  auto b = branch({1, 0, 0}, {2, 1});
  REQUIRE(b.size() == 2);
  auto b0 = branch({0, 0, 0}, {2, 1});
  REQUIRE(b0.size() == 1);
  CHECK(b0[0].mult == 1);
  CHECK(b0[0].twist == 0);
  for (auto& t : b) {
    CHECK(t.twist == 0);
    CHECK(t.mult == 1);
  }
  for (int n = 0; n <= 8; ++n)
    for (auto& p : partitions_of(n)) {
      if (p.length() > 3) continue;
      LocalWeight lam = local_weight(p, 3);
      for (auto split : std::vector<std::vector<int>>{{2, 1}, {1, 2}, {1, 1, 1}}) {
        Int tot = 0;
        for (auto& t : branch(lam, split)) {
          CHECK(t.mult > 0);
          Int d = t.mult;
          for (auto& w : t.parts) d *= weyl_dim(w);
          tot += d;
        }
        CHECK(tot == weyl_dim(lam));
      }
    }
}

TEST_CASE("character evaluation") {
  std::vector<Int> f = {1, -5, 7};
  CHECK(char_eval({0}, f, 7) == 1);
  CHECK(char_eval({1}, f, 7) == 5);
  CHECK(char_eval({2}, f, 7) == 25 - 7);
  std::mt19937 rng(3);
  int checked = 0;
  for (int it = 0; it < 100; ++it) {
    int g = 1 + static_cast<int>(rng() % 3);
    int q = std::vector<int>{2, 3, 5, 7}[rng() % 4];
    auto fr = random_frob(rng, g, q);
    auto& ps = partitions_of(static_cast<int>(rng() % 7));
    Partition p = ps[rng() % ps.size()];
    if (p.length() > g) continue;
    LocalWeight lam = local_weight(p, g);
    CHECK(char_eval(lam, fr, q) == char_eval_kt(lam, fr, q));
    ++checked;
  }
  CHECK(checked > 40);
}
