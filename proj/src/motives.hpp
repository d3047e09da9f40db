#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "partition.hpp"

namespace mgc {

// Generator ids, normative for file formats.
enum GenId : int {
  G_ONE = 1,
  G_S12 = 2,
  G_S16 = 3,
  G_S18 = 4,
  G_S20 = 5,
  G_S22 = 6,
  G_S6_8 = 7,
  G_S4_10 = 8,
  G_S8_8 = 9,
  G_S12_6 = 10,
  G_SYM2S12 = 11,
};
constexpr int kNumGens = 11;

struct MotiveGen {
  int id;
  std::string name;
  int dim;
  int weight;
  std::vector<int> hodge_tate;
  bool elliptic;  // S[k]
  int k;          // weight of the form for S[k], k of S[j,k]
  int j;          // j of S[j,k]
};

const MotiveGen& gen(int id);
const std::vector<MotiveGen>& all_gens();
// Returns 0 if unknown.
int gen_id_by_name(const std::string& name);

// L^k * phi_j
struct GenKey {
  int k;
  int j;
  auto operator<=>(const GenKey&) const = default;
};

int gen_key_weight(const GenKey& g);
std::string gen_key_str(const GenKey& g);

// Frobenius characteristic polynomials per generator and prime.
// Coefficients high to low, leading 1.
class CharPolyTable {
 public:
  void set(int id, int p, std::vector<Int> coeffs);
  bool has(int id, int p) const;
  const std::vector<Int>& get(int id, int p) const;
  std::vector<int> primes(int id) const;
  std::vector<int> ids() const;
  // Trace of F_{p^r} on phi_id; Sym^2 S[12] is derived from S[12].
  Int trace(int id, int q) const;

 private:
  std::map<int, std::map<int, std::vector<Int>>> polys_;
};

extern const std::vector<int> kSupportedPrimes;
extern const std::vector<int> kTraceQs;
bool supported_q(int q);

// Power sums p_1..p_n of the roots of a monic polynomial.
std::vector<Int> power_sums(const std::vector<Int>& coeffs, int n);
// Roots pair into (a, p^w/a): c_{d-i} = eps p^{w(d-2i)/2} c_i.
bool functional_equation_ok(const std::vector<Int>& coeffs, int p, int w);
// Char poly of Sym^2 from a degree two char poly x^2 + c1 x + c2.
std::vector<Int> sym2_charpoly(const std::vector<Int>& c);

template <class S>
class BasicMotive {
 public:
  using Map = std::map<GenKey, S>;

  BasicMotive() = default;
  static BasicMotive gen(int j, int k = 0, S c = S(1)) {
    BasicMotive m;
    m.add_term({k, j}, c);
    return m;
  }
  static BasicMotive L(int k, S c = S(1)) { return gen(G_ONE, k, c); }
  static BasicMotive scalar(S c) { return gen(G_ONE, 0, c); }

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_tate() const {
    for (auto& [g, c] : t_)
      if (g.j != G_ONE) return false;
    return true;
  }
  S coeff(GenKey g) const {
    auto it = t_.find(g);
    return it == t_.end() ? S(0) : it->second;
  }
  void add_term(GenKey g, const S& c) {
    if (c == 0) return;
    if (g.k < 0) fail(Err::InvalidArgument, "negative Tate twist");
    auto [it, ins] = t_.emplace(g, c);
    if (!ins) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  BasicMotive& operator+=(const BasicMotive& o) {
    for (auto& [g, c] : o.t_) add_term(g, c);
    return *this;
  }
  BasicMotive& operator-=(const BasicMotive& o) {
    for (auto& [g, c] : o.t_) add_term(g, -c);
    return *this;
  }
  BasicMotive& operator*=(const S& s) {
    if (s == 0) {
      t_.clear();
      return *this;
    }
    for (auto& [g, c] : t_) c *= s;
    return *this;
  }
  friend BasicMotive operator+(BasicMotive a, const BasicMotive& b) { return a += b; }
  friend BasicMotive operator-(BasicMotive a, const BasicMotive& b) { return a -= b; }
  friend BasicMotive operator*(BasicMotive a, const S& s) { return a *= s; }
  friend BasicMotive operator*(const S& s, BasicMotive a) { return a *= s; }
  BasicMotive operator-() const {
    BasicMotive r = *this;
    for (auto& [g, c] : r.t_) c = -c;
    return r;
  }
  bool operator==(const BasicMotive& o) const { return t_ == o.t_; }
  bool operator<(const BasicMotive& o) const { return t_ < o.t_; }
  // Multiplication by L^k.
  BasicMotive twist(int k) const {
    BasicMotive r;
    for (auto& [g, c] : t_) r.t_.emplace(GenKey{g.k + k, g.j}, c);
    return r;
  }

 private:
  Map t_;
};

using MotiveExpr = BasicMotive<Int>;
using QMotive = BasicMotive<Rat>;

QMotive to_q(const MotiveExpr& e);
// Throws NonIntegralCoefficient unless all coefficients are integers.
MotiveExpr to_z(const QMotive& e);
bool is_integral(const QMotive& e);

Int dim(const MotiveExpr& e);
int weight(const MotiveExpr& e);
// Multiset as sorted vector, each weight repeated |c| times.
std::vector<int> hodge_tate(const MotiveExpr& e);

MotiveExpr mult(const MotiveExpr& a, const MotiveExpr& b);
QMotive mult(const QMotive& a, const QMotive& b);
MotiveExpr adams(const MotiveExpr& e, int n);
QMotive adams(const QMotive& e, int n);

Int trace(const MotiveExpr& e, int q, const CharPolyTable& table);
Rat trace(const QMotive& e, int q, const CharPolyTable& table);
// Trace of a single generator L^k phi_j at q.
Int trace_gen(const GenKey& g, int q, const CharPolyTable& table);

MotiveExpr expand_lift(const std::string& name);

// Tate polynomial sum c_k L^k as vector indexed by k.
std::vector<Int> tate_coeffs(const MotiveExpr& e);
MotiveExpr tate_poly(const std::vector<Int>& c);

std::vector<GenKey> gens_phi(int i);
std::vector<GenKey> gens_phi_prime_upto(int i);
std::vector<GenKey> gens_psi(int i);
// Weight set W_lambda: subset sums of {lambda_g + 1, ..., lambda_1 + g}.
std::set<int> weight_set(const std::vector<int>& lambda, int g);
std::vector<GenKey> gens_psi_lambda(const std::vector<int>& lambda, int g = 3);
// Generators not allowed by a generator list; empty when e lies in the span.
std::vector<GenKey> outside_span(const MotiveExpr& e, const std::vector<GenKey>& gens);

std::string gens_str(const std::vector<GenKey>& gens);

// Expanded term form, e.g. L - L^5 + S[12,6].
std::string motive_str(const MotiveExpr& e);
std::string motive_str(const QMotive& e);
// Inverse of motive_str; also accepts products, parentheses and lift names.
MotiveExpr parse_motive(const std::string& text);

}  // namespace mgc
