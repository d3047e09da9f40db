#pragma once

#include <climits>
#include <map>
#include <vector>

#include "motives.hpp"
#include "partition.hpp"

namespace mgc {

// h^a p_rho, parts of rho weakly decreasing.
struct Mono {
  int h = 0;
  std::vector<int> parts;

  int degree() const {
    int d = 0;
    for (int v : parts) d += v;
    return d;
  }
  auto operator<=>(const Mono&) const = default;
};

struct Caps {
  int degree;
  int genus;
  // Bound on 2 h + degree; every operation here preserves this grading.
  int weight = INT_MAX;

  bool admits(int h, int degree_) const {
    return degree_ <= degree && h <= genus && (weight == INT_MAX || 2 * h + degree_ <= weight);
  }
  static Caps meet(const Caps& a, const Caps& b);
};

// Truncated series in power sums and a genus variable h with rational
// motive coefficients.
class SymSeries {
 public:
  using Map = std::map<Mono, QMotive>;

  explicit SymSeries(Caps caps) : caps_(caps) {}

  static SymSeries one(Caps caps);
  static SymSeries monomial(Caps caps, int h, const Partition& rho, const QMotive& c);

  const Caps& caps() const { return caps_; }
  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  void add(const Mono& m, const QMotive& c);
  void add(int h, const Partition& rho, const QMotive& c) { add(Mono{h, rho.parts}, c); }
  SymSeries& operator+=(const SymSeries& o);
  SymSeries& operator-=(const SymSeries& o);
  SymSeries& operator*=(const Rat& s);
  friend SymSeries operator+(SymSeries a, const SymSeries& b) { return a += b; }
  friend SymSeries operator-(SymSeries a, const SymSeries& b) { return a -= b; }
  bool operator==(const SymSeries& o) const { return t_ == o.t_; }

  QMotive coeff(int h, const Partition& rho) const;
  // Terms with the given h exponent and p-degree.
  SymSeries part(int h, int degree) const;
  SymSeries with_caps(Caps caps) const;
  // Asserts the cap invariant.
  void check() const;

 private:
  Caps caps_;
  Map t_;
};

SymSeries schur_to_p(const Partition& mu, Caps caps, int h = 0);
// Coefficients of s_lambda in a series concentrated in one h exponent and one degree.
std::map<Partition, QMotive> p_to_schur_q(const SymSeries& f);
std::map<Partition, MotiveExpr> p_to_schur(const SymSeries& f);

SymSeries multiply(const SymSeries& f, const SymSeries& g);
// p_n o g: p_k -> p_{nk}, coefficients by psi^n, h -> h^n.
SymSeries adams_sub(const SymSeries& g, int n, Caps caps);
SymSeries plethysm(const SymSeries& f, const SymSeries& g);
SymSeries pleth_exp(const SymSeries& f);
SymSeries pleth_log(const SymSeries& f);
// d/dp_k
SymSeries deriv(const SymSeries& f, int k);
// Exp(Delta) with Delta = sum_n h^n ((n/2) d^2/dp_n^2 + d/dp_{2n}).
SymSeries gk_exp_delta(const SymSeries& f);

// Character table of S_n, cached: chi[lambda index][rho index].
const std::vector<std::vector<Int>>& sn_char_table(int n);
int partition_index(const Partition& p);

}  // namespace mgc
