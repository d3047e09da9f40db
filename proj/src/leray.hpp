#pragma once

#include <map>
#include <vector>

#include "motives.hpp"
#include "partition.hpp"
#include "symfun.hpp"

namespace mgc {

// Highest weight of Sp_{2g}, exactly g entries, weakly decreasing.
using LocalWeight = std::vector<int>;
using EquivariantEC = std::map<Partition, MotiveExpr>;

LocalWeight local_weight(const Partition& p, int g);
std::string lw_str(const LocalWeight& l);
int lw_size(const LocalWeight& l);

// Homogeneous Laurent polynomial in x_1..x_g and q; the key is the x-exponent
// vector, the q-exponent is (degree - sum) / 2.
struct LaurentChar {
  int g = 0;
  int degree = 0;
  std::map<std::vector<int>, Int> terms;

  void add(const std::vector<int>& a, const Int& c);
  LaurentChar operator*(const LaurentChar& o) const;
  LaurentChar& operator+=(const LaurentChar& o);
  LaurentChar& operator-=(const LaurentChar& o);
  LaurentChar scaled_q(int e, const Int& c) const;
  bool weyl_symmetric() const;
  Int at_one() const;
  bool operator==(const LaurentChar&) const = default;
};

// Littlewood-Richardson expansion of s_{lam/gamma}.
std::map<Partition, Int> skew_schur(const Partition& lam, const Partition& gamma);
Int kostka(const Partition& mu, std::vector<int> content);

// Complete homogeneous h_k on the alphabet {x_i, q/x_i}.
LaurentChar h_alphabet(int k, int g);
// Koike-Terada determinant.
LaurentChar symp_schur(const LocalWeight& lam);
// Schur function s_mu on the alphabet {x_i, q/x_i}.
LaurentChar schur_alphabet(const Partition& mu, int g);
// Weyl dimension formula.
Int weyl_dim(const LocalWeight& lam);

// Multiplicities at dominant weights.
using DomChar = std::map<std::vector<int>, Int>;
std::vector<std::vector<int>> dominant_weights(int degree, int g);
const DomChar& dom_schur(const Partition& mu, int g);
const DomChar& dom_symp(const LocalWeight& lam);
LaurentChar expand_dom(const DomChar& d, int degree, int g);

// b'_{lam,mu} as Tate classes with q = L.
std::map<Partition, MotiveExpr> symp_in_schur(const LocalWeight& lam);
// a'_{mu,lam} as Tate classes with q = L.
const std::map<LocalWeight, MotiveExpr>& schur_in_symp(const Partition& mu, int g);

// a_{mu,lam}(L) for the fibration M_{g,n} -> M_g, g >= 2; rows mu |- n.
const std::map<Partition, std::map<LocalWeight, MotiveExpr>>& a_matrix(int g, int n);
// b_{lam,mu}(L): e_c(M_g, V_lam) = sum_mu b_{lam,mu} e_{c,mu}(M_{g,|mu|}).
const std::map<Partition, MotiveExpr>& b_row(const LocalWeight& lam);

EquivariantEC pointed_from_local(int g, int n, const std::map<LocalWeight, MotiveExpr>& local);
// pointed[m] = e_c(M_{g,m}) by partition, for all m <= |lam|.
MotiveExpr local_from_pointed(const LocalWeight& lam, const std::map<int, EquivariantEC>& pointed);

struct BranchTerm {
  std::vector<LocalWeight> parts;
  int twist = 0;
  Int mult;
  bool operator==(const BranchTerm&) const = default;
};
// Restriction of V_lam to Sp_{2g_1} x ... x Sp_{2g_k}.
std::vector<BranchTerm> branch(const LocalWeight& lam, const std::vector<int>& split);

// Character value at the roots of a Frobenius polynomial (coefficients of
// x^{2g}, ..., x^0), via power sums and the Schur expansion.
Int char_eval(const LocalWeight& lam, const std::vector<Int>& frob, int q);
// Same value via the Koike-Terada determinant in complete symmetric functions.
Int char_eval_kt(const LocalWeight& lam, const std::vector<Int>& frob, int q);

}  // namespace mgc
