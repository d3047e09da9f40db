#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "counts.hpp"

using namespace mgc;

namespace {

std::vector<Int> poly(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return v;
}

Err code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Err::Ok;
}

Int ipow_l(long b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void check_classes(const Census& c) {
  for (auto& z : c) {
    CHECK(zeta_class_ok(z));
    CHECK(z.mass > 0);
    std::vector<long> n;
    for (int r = 1; r <= z.g; ++r) n.push_back(predicted_count(z.poly, z.q, r));
    CHECK(charpoly_from_counts(n, z.g, z.q) == z.poly);
  }
}

}  // namespace

TEST_CASE("charpoly from point counts") {
  CHECK(charpoly_from_counts({3}, 1, 2) == poly({1, 0, 2}));
  CHECK(charpoly_from_counts({4}, 1, 3) == poly({1, 0, 3}));
  CHECK(charpoly_from_counts({1}, 1, 2) == poly({1, -2, 2}));
  CHECK(predicted_count(poly({1, 0, 2}), 2, 2) == 9);
  CHECK(code_of([] { charpoly_from_counts({3, 4}, 2, 2); }) == Err::NonIntegralReconstruction);
}

TEST_CASE("genus one census") {
  // Frobenius trace on the weight 12 cusp form: tau(p), and tau(2)^2 - 2 * 2^11 at q = 4
  const long tr[] = {0, 0, -24, 252, 576 - 4096};
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 169}) {
    auto c = enum_genus1(q);
    CAPTURE(q);
    CHECK(total_mass(c) == Rat(q));
    check_classes(c);
    if (q <= 4) CHECK(mass_trace({10}, q, c) == Int(-1 - tr[q]));
  }
}

TEST_CASE("genus two census") {
  for (int q : {3, 5, 7}) {
    auto c = enum_hyperelliptic(2, q);
    CAPTURE(q);
    CHECK(total_mass(c) == Rat(ipow_l(q, 3)));
    check_classes(c);
  }
  CHECK(code_of([] { enum_hyperelliptic(2, 4); }) == Err::UnsupportedCharacteristic);
}

TEST_CASE("genus three census") {
  auto q2 = std::chrono::steady_clock::now();
  auto c2 = enum_quartics(2);
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - q2).count() < 60.0);
  CHECK(total_mass(c2) == Rat(65));
  CHECK(mass_trace({2, 1, 0}, 2, c2) == 60);
  check_classes(c2);
  auto h3 = enum_hyperelliptic(3, 3);
  CHECK(total_mass(h3) == Rat(243));
  auto c3 = enum_genus3(3);
  CHECK(total_mass(c3) == Rat(973));
  CHECK(mass_trace({2, 1, 0}, 3, enum_quartics(3)) == 720);
  check_classes(c3);
}

TEST_CASE("census csv round trip") {
  auto c = enum_hyperelliptic(2, 3);
  auto back = parse_census_csv(census_csv(c), 2, 3);
  CHECK(back == c);
  CHECK(code_of([] { parse_census_csv("poly,mass_num,mass_den\n1 0 2,1,0\n", 1, 2); }) != Err::Ok);
}
