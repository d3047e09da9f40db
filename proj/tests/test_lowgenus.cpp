#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "lowgenus.hpp"
#include "modforms.hpp"

using namespace mgc;

namespace doctest {
template <>
struct StringMaker<MotiveExpr> {
  static String convert(const MotiveExpr& e) { return motive_str(e).c_str(); }
};
}  // namespace doctest

namespace {

MotiveExpr L(int k, long c = 1) { return MotiveExpr::L(k, Int(c)); }
MotiveExpr one(long c = 1) { return MotiveExpr::scalar(Int(c)); }
MotiveExpr S(int id) { return MotiveExpr::gen(id); }

Err code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Err::Ok;
}

const CharPolyTable& table() {
  static const CharPolyTable t = elliptic_charpolys();
  return t;
}

const A2Table& a2() {
  static const A2Table t = [] {
    std::ifstream in(std::string(MGC_SOURCE_DIR) + "/data/a2_ec.csv");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_a2_csv(ss.str());
  }();
  return t;
}

std::vector<LocalWeight> weights2(int max_size) {
  std::vector<LocalWeight> r;
  for (int s = 0; s <= max_size; ++s)
    for (int b = 0; 2 * b <= s; ++b) r.push_back({s - b, b});
  return r;
}

// Total trace of an equivariant class: sum over mu of dim(s_mu) times the trace.
Int total_trace(const EquivariantEC& e, int q) {
  Int s = 0;
  for (auto& [mu, v] : e) {
    int n = mu.size();
    s += sn_character(mu, Partition(std::vector<int>(n, 1))) * trace(v, q, table());
  }
  return s;
}

Rat falling(const Int& n, int k) {
  Rat r = 1;
  for (int i = 0; i < k; ++i) r *= Rat(n - i);
  return r;
}

}  // namespace

TEST_CASE("e_c(A_1, V_a)") {
  CHECK(ec_a1(0) == L(1));
  CHECK(ec_a1(11).is_zero());
  CHECK(ec_a1(10) == -one() - S(G_S12));
  CHECK(ec_a1(12) == -one());
  for (int k : {4, 6, 8, 10, 14}) CHECK(ec_a1(k - 2) == -one());
  CHECK(code_of([] { ec_a1(22); }) == Err::OutOfModel);
  CHECK(ec_a1(21).is_zero());
  // integer Euler characteristic: -1 - dim S_{a+2}
  const int cusp_dim[] = {0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1};
  for (int a = 2; a <= 20; a += 2) CHECK(dim(ec_a1(a)) == -1 - 2 * cusp_dim[(a + 2) / 2]);
}

TEST_CASE("symmetric products of A_1") {
  CHECK(ec_a1_sym2({0, 0}) == L(2));
  CHECK(ec_a1_sym2({1, 0}).is_zero());
  CHECK(ec_a1_sym2({1, 1}).is_zero());
  CHECK(ec_a1_sym3({0, 0, 0}) == L(3));
  for (auto& lam : weights2(15))
    if (lw_size(lam) % 2) CHECK(ec_a1_sym2(lam).is_zero());
  CHECK(ec_a1_sym3({2, 1, 0}).is_zero());
}

TEST_CASE("sym2 fixed point oracle") {
  for (int q : {3, 5}) {
    EllipticCensus e(q, 2);
    // pinned oracle: the (1,1) value is the zero Tate expression
    CHECK(sym2_fixed_point_trace({1, 1}, e) == 0);
    for (auto& lam : weights2(16)) {
      CAPTURE(lw_str(lam));
      CHECK(sym2_fixed_point_trace(lam, e) == Rat(trace(ec_a1_sym2(lam), q, table())));
    }
  }
}

TEST_CASE("sym3 fixed point oracle") {
  for (int q : {3, 5}) {
    EllipticCensus e(q, 3);
    for (int s = 0; s <= (q == 3 ? 10 : 6); ++s)
      for (int c = 0; 3 * c <= s; ++c)
        for (int b = c; b <= s - b - c; ++b) {
          LocalWeight lam{s - b - c, b, c};
          CAPTURE(lw_str(lam));
          CHECK(sym3_fixed_point_trace(lam, e) == Rat(trace(ec_a1_sym3(lam), q, table())));
        }
  }
}

TEST_CASE("A_2 table") {
  const A2Table& t = a2();
  validate_a2(t);
  CHECK(parse_a2_csv(a2_csv(t)).entries == t.entries);
  CHECK(ec_a2({0, 0}, t) == L(3) + L(2));
  CHECK(ec_a2({1, 0}, t).is_zero());
  CHECK(ec_a2({1, 1}, t) == -one());
  CHECK(ec_a2({2, 0}, t) == -L(1));
  // Saito-Kurokawa block: S[18] together with L^8
  MotiveExpr e77 = ec_a2({7, 7}, t);
  CHECK(e77.coeff({0, G_S18}) != 0);
  CHECK(e77.coeff({0, G_S18}) == e77.coeff({8, G_ONE}));
  MotiveExpr e99 = ec_a2({9, 9}, t);
  CHECK(e99.coeff({0, G_S22}) != 0);
  CHECK(e99.coeff({0, G_S22}) == e99.coeff({10, G_ONE}));
  CHECK(code_of([&] { ec_a2({10, 10}, t); }) == Err::OutOfModel);
  A2Table bad;
  bad.entries[{2, 0}] = S(G_S6_8);
  CHECK(code_of([&] { validate_a2(bad); }) == Err::MonoidViolation);
  CHECK(code_of([&] { ec_a2({4, 0}, bad); }) == Err::MissingData);
  CHECK(code_of([] { parse_a2_csv("lambda,value\n"); }) == Err::ParseError);
}

TEST_CASE("A_2 table against point counts") {
  for (int q : {3, 5}) {
    Census g2 = enum_hyperelliptic(2, q);
    EllipticCensus e(q, 2);
    for (auto& [lam, v] : a2().entries) {
      CAPTURE(lw_str(lam));
      CHECK(a2_fixed_point_trace(lam, g2, e) == Rat(trace(v, q, table())));
    }
  }
}

TEST_CASE("genus two census against closed forms") {
  for (int q : {3, 5}) {
    Census g2 = enum_hyperelliptic(2, q);
    for (auto& [lam, v] : a2().entries) {
      CAPTURE(lw_str(lam));
      CHECK(mass_trace(lam, q, g2) == trace(ec_m2_local(lam, a2()), q, table()));
    }
  }
}

TEST_CASE("genus two local systems") {
  CHECK(ec_m2_local({0, 0}, a2()) == L(3));
  CHECK(ec_m2_local({3, 0}, a2()).is_zero());
  for (auto& lam : weights2(13))
    if (lw_size(lam) % 2) CHECK(ec_m2_local(lam, a2()).is_zero());
}

TEST_CASE("genus zero") {
  CHECK(ec_m0n(3) == EquivariantEC{{Partition({3}), one()}, {Partition({2, 1}), {}}, {Partition({1, 1, 1}), {}}});
  auto m4 = ec_m0n(4);
  CHECK(m4[Partition({4})] == L(1));
  CHECK(m4[Partition({2, 2})] == -one());
  CHECK(m4[Partition({3, 1})].is_zero());
  for (int n = 3; n <= 10; ++n)
    for (int q : {2, 3, 7, 11}) {
      Rat count = 1;
      for (int i = 3; i < n; ++i) count *= Rat(q + 1 - i);
      CHECK(Rat(total_trace(ec_m0n(n), q)) == count);
    }
  CHECK(code_of([] { ec_m0n(2); }) == Err::InvalidArgument);
}

TEST_CASE("genus one") {
  CHECK(ec_m1n(1) == EquivariantEC{{Partition({1}), L(1)}});
  auto m2 = ec_m1n(2);
  CHECK(m2[Partition({2})] == L(2));
  CHECK(m2[Partition({1, 1})].is_zero());
  auto m3 = ec_m1n(3);
  CHECK(m3[Partition({3})] == L(3));
  CHECK(m3[Partition({1, 1, 1})] == -one());
  for (int q : {2, 3, 4, 5}) {
    Census c = enum_genus1(q);
    for (int n = 1; n <= 8; ++n) {
      Rat count = 0;
      for (auto& z : c) count += z.mass * falling(Int(q + 1) + z.poly[1] - 1, n - 1);
      CAPTURE(q);
      CAPTURE(n);
      CHECK(Rat(total_trace(ec_m1n(n), q)) == count);
    }
  }
}

TEST_CASE("genus two pointed") {
  auto m1 = ec_m2n(1, a2());
  CHECK(m1[Partition({1})] == L(4) + L(3));
  for (int q : {3, 5}) {
    Census c = enum_hyperelliptic(2, q);
    for (int n = 0; n <= 5; ++n) {
      Rat count = 0;
      for (auto& z : c) count += z.mass * falling(Int(q + 1) + z.poly[1], n);
      CAPTURE(q);
      CAPTURE(n);
      CHECK(Rat(total_trace(ec_m2n(n, a2()), q)) == count);
    }
  }
  for (int n = 0; n <= 9; ++n)
    for (auto& [mu, v] : ec_m2n(n, a2())) CHECK(v.is_tate());
  auto m10 = ec_m2n(10, a2());
  CHECK(m10[Partition(std::vector<int>(10, 1))].coeff({1, G_S12}) != 0);
}
