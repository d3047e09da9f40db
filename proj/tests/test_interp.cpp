#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "interp.hpp"
#include "modforms.hpp"

using namespace mgc;

namespace doctest {
template <>
struct StringMaker<MotiveExpr> {
  static String convert(const MotiveExpr& e) { return motive_str(e).c_str(); }
};
}  // namespace doctest

namespace {

Err code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Err::Ok;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
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

Genus3Data base_data() {
  Genus3Data d;
  d.polys = elliptic_charpolys();
  d.a2 = a2();
  return d;
}

// Arbitrary Siegel traces, so that synthetic systems are fully specified.
void add_synthetic_siegel(Genus3Data& d, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-100000, 100000);
  for (int j : {G_S6_8, G_S4_10, G_S8_8, G_S12_6})
    for (int q : kTraceQs) d.gen_traces[{j, q}] = Int(dist(rng));
}

Int dim_schur(const Partition& mu) {
  std::vector<int> ones(mu.size(), 1);
  return sn_character(mu, Partition(ones));
}

}  // namespace

TEST_CASE("ansatz sizes") {
  Ansatz a = ansatz_a3({14, 2, 0});
  CHECK(a.unknowns.size() == 12);
  CHECK(gens_str(a.generators) ==
        "1, L, L^4, L^5, S[18], L*S[18], L^4*S[18], L^5*S[18], S[22], L*S[22], S[12,6], L*S[12,6]");
  for (int n = 0; n <= 13; ++n)
    for (auto& mu : partitions_of(n)) {
      Ansatz m = ansatz_m3bar(n, mu);
      CHECK(m.generators.size() <= 17);
      CHECK(m.unknowns.size() + 2 == m.generators.size());
      CHECK(m.unknowns.size() <= 15);
    }
  CHECK(ansatz_m3bar(13, Partition({13})).generators.size() == 17);
  CHECK(ansatz_m3bar(14, Partition({14})).generators.size() == 18);
  CHECK(code_of([] { ansatz_m3bar(15, Partition({15})); }) == Err::OutOfModel);
  CHECK(code_of([] { ansatz_a3({17, 0, 0}); }) == Err::OutOfModel);
}

TEST_CASE("pairing is a weight-compatible involution") {
  for (int n = 0; n <= 14; ++n) {
    Ansatz a = ansatz_m3bar(n, partitions_of(n).front());
    for (auto& [g, h] : a.pairing) {
      int i = gen_key_weight(g), i2 = gen_key_weight(h);
      CHECK(i < 6 + n);
      CHECK(i + i2 == 2 * (6 + n));
      CHECK(h.k >= 0);
    }
    for (auto& g : a.generators)
      if (!a.pairing.count(g)) CHECK(gen_key_weight(g) == 6 + n);
  }
}

TEST_CASE("H^2 of M-bar_{3,n}") {
  auto h0 = h2_equivariant(3, 0);
  CHECK(h0.size() == 1);
  CHECK(h0[Partition()] == 3);
  auto h1 = h2_equivariant(3, 1);
  CHECK(h1[Partition({1})] == 5);
  // kappa_1, psi_i, delta_irr and all delta_{h,S} form a basis
  for (int n = 0; n <= 8; ++n) {
    Int total = 0;
    for (auto& [mu, m] : h2_equivariant(3, n)) total += m * dim_schur(mu);
    CHECK(total == ipow(2, n + 1) + 1);
  }
  CHECK(code_of([] { h2_equivariant(2, 1); }) == Err::InvalidArgument);
}

TEST_CASE("worked A3 rows from printed inputs") {
  Genus3Data d = base_data();
  d.gen_traces[{G_S12_6, 2}] = -240;
  d.gen_traces[{G_S12_6, 3}] = 68040;
  Ansatz a = ansatz_a3({14, 2, 0});
  auto ec = ec_coefficients(a);
  auto t2 = trace_coefficients(a, 2, d);
  auto t3 = trace_coefficients(a, 3, d);
  std::vector<Rat> ec_expected = {1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 4, 4};
  CHECK(ec == ec_expected);
  CHECK(t2[0] == 1);
  CHECK(t2[1] == 2);
  CHECK(t2[2] == 16);
  CHECK(t2[3] == 32);
  CHECK(t2[4] == -528);
  CHECK(t2[10] == -240);
  CHECK(t3[0] == 1);
  CHECK(t3[1] == 3);
  CHECK(t3[2] == 81);
  CHECK(t3[3] == 243);
  CHECK(t3[4] == -4284);
  CHECK(t3[10] == 68040);
  // candidate L - L^5 + S[12,6]
  std::vector<Rat> x(12, 0);
  x[1] = 1;
  x[3] = -1;
  x[10] = 1;
  auto dot = [&](const std::vector<Rat>& r) {
    Rat s = 0;
    for (size_t i = 0; i < r.size(); ++i) s += r[i] * x[i];
    return s;
  };
  CHECK(dot(ec) == 4);
  CHECK(dot(t2) == -270);
  CHECK(dot(t3) == 67800);
  MotiveExpr cand = parse_motive("L - L^5 + S[12,6]");
  CHECK(motive_trace(cand, 2, d) == -270);
  CHECK(motive_trace(cand, 3, d) == 67800);
  CHECK(dim(cand) == 4);
}

TEST_CASE("A3 solve recovers synthetic classes") {
  Genus3Data d = base_data();
  add_synthetic_siegel(d, 7);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (LocalWeight lam : {LocalWeight{14, 2, 0}, LocalWeight{10, 4, 2}, LocalWeight{10, 0, 0}, LocalWeight{2, 1, 1}}) {
    Ansatz a = ansatz_a3(lam);
    MotiveExpr truth;
    for (auto& g : a.generators) truth.add_term(g, Int(coef(rng)));
    d.ec_a3[lam] = dim(truth);
    for (int q : kTraceQs) d.tr_a3[{lam, q}] = motive_trace(truth, q, d);
    SolveReport rep = pipeline_a3(lam, d);
    CHECK(rep.result == truth);
    CHECK(rep.diag.rank == static_cast<int>(a.unknowns.size()));
    CHECK(rep.diag.residuals.size() == 15);
    for (auto& r : rep.diag.residuals) CHECK(r == 0);
    CHECK_FALSE(rep.reads.empty());
  }
  SUBCASE("inconsistent check row") {
    LocalWeight lam{14, 2, 0};
    d.tr_a3[{lam, 25}] += 1;
    std::string msg = message_of([&] { pipeline_a3(lam, d); });
    CHECK(code_of([&] { pipeline_a3(lam, d); }) == Err::ResidualNonzero);
    CHECK(msg.find("q=25") != std::string::npos);
  }
}

TEST_CASE("zero data gives the zero class") {
  Genus3Data d = base_data();
  add_synthetic_siegel(d, 3);
  LocalWeight lam{14, 2, 0};
  d.ec_a3[lam] = 0;
  for (int q : kTraceQs) d.tr_a3[{lam, q}] = 0;
  CHECK(pipeline_a3(lam, d).result.is_zero());
  CHECK(pipeline_a3({3, 0, 0}, d).result.is_zero());
}

TEST_CASE("solve error paths") {
  Genus3Data d = base_data();
  add_synthetic_siegel(d, 5);
  Ansatz a = ansatz_a3({14, 2, 0});
  std::map<int, Int> tr;
  for (int q : kTraceQs) tr[q] = 0;
  RelationSystem sys = assemble(a, 0, tr, d);
  // x_1 = 1/2 on every row
  RelationSystem half = sys;
  for (auto& r : half.rows) r.rhs = r.coeffs[0] / 2;
  CHECK(code_of([&] { solve(a, half); }) == Err::NonIntegralSolution);
  RelationSystem dup = sys;
  dup.rows[1].coeffs = dup.rows[0].coeffs;
  dup.rows[1].rhs = dup.rows[0].rhs;
  std::string msg = message_of([&] { solve(a, dup); });
  CHECK(code_of([&] { solve(a, dup); }) == Err::SingularSystem);
  CHECK(msg.find("q=2") != std::string::npos);
  RelationSystem few = sys;
  few.rows.resize(5);
  CHECK(code_of([&] { solve(a, few); }) == Err::SingularSystem);
  Genus3Data empty = base_data();
  std::string miss = message_of([&] { pipeline_a3({14, 2, 0}, empty); });
  CHECK(code_of([&] { pipeline_a3({14, 2, 0}, empty); }) == Err::MissingData);
  CHECK(miss.find("lambda=(14,2,0)") != std::string::npos);
}

TEST_CASE("A3 right hand side from M3 and lower strata") {
  Genus3Data d = base_data();
  LocalWeight lam{2, 0, 0};
  MotiveExpr lower = a3_lower_strata(lam, d.a2);
  d.ec_m3[lam] = 5;
  for (int q : kTraceQs) d.tr_m3[{lam, q}] = q;
  Ansatz a = ansatz_a3(lam);
  RelationSystem sys = relations_a3(a, d);
  REQUIRE(sys.rows.size() == 15);
  // no unknown is fixed, so the RHS is the class itself
  CHECK(sys.rows[0].rhs == Rat(5 + dim(lower)));
  CHECK(sys.rows[1].rhs == Rat(2 + motive_trace(lower, 2, d)));
  // the trivial system: A3 with trivial coefficients
  LocalWeight zero{0, 0, 0};
  MotiveExpr l0 = a3_lower_strata(zero, d.a2);
  CHECK(l0 == parse_motive("L^3 + L^4"));
}

TEST_CASE("genus three pipeline at n <= 1") {
  Genus3Data d = base_data();
  LocalWeight triv{0, 0, 0}, std1{1, 0, 0};
  MotiveExpr m3 = parse_motive("L^6 + L^5 + 1");
  d.ec_m3[triv] = dim(m3);
  d.ec_m3[std1] = 0;
  for (int q : kTraceQs) {
    d.tr_m3[{triv, q}] = motive_trace(m3, q, d);
    d.tr_m3[{std1, q}] = 0;
  }
  M3Cache cache;
  M3Stage s0 = pipeline_m3(0, d, &cache);
  CHECK(s0.proper[Partition()] == parse_motive("1 + 3*L + 7*L^2 + 10*L^3 + 7*L^4 + 3*L^5 + L^6"));
  CHECK(s0.open[Partition()] == m3);
  for (auto& r : s0.reports[Partition()].diag.residuals) CHECK(r == 0);
  M3Stage s1 = pipeline_m3(1, d, &cache);
  CHECK(s1.open[Partition({1})] == parse_motive("L^7 + 2*L^6 + L^5 + L + 1"));
  MotiveExpr p1 = s1.proper[Partition({1})];
  CHECK(p1.is_tate());
  auto c = tate_coeffs(p1);
  REQUIRE(c.size() == 8);
  for (int k = 0; k < 8; ++k) CHECK(c[k] == c[7 - k]);
  CHECK(c[1] == 5);
  // cached stages are reused unchanged
  M3Cache again = cache;
  CHECK(pipeline_m3(1, d, &again).proper == s1.proper);
  CHECK(again.at(0).proper == cache.at(0).proper);
  std::string miss = message_of([&] { pipeline_m3(2, d, &cache); });
  CHECK(code_of([&] { pipeline_m3(2, d, &cache); }) == Err::MissingData);
  CHECK(miss.find("lambda=(") != std::string::npos);
}
