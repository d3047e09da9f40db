#pragma once

#include <map>
#include <string>
#include <vector>

#include "counts.hpp"
#include "leray.hpp"
#include "linsolve.hpp"
#include "motives.hpp"

namespace mgc {

// e_c(A_1, V_a), with S[2] read as -L-1.
MotiveExpr ec_a1(int a);
// e_c(A_1^2/S_2, V_lam) and e_c(A_1^3/S_3, V_lam).
MotiveExpr ec_a1_sym2(const LocalWeight& lam);
MotiveExpr ec_a1_sym3(const LocalWeight& lam);

// e_c(A_2, V_{a,b}) by highest weight.
struct A2Table {
  std::map<LocalWeight, MotiveExpr> entries;
};
// Header "lambda,ec"; lambda is "a,b" (quoted).
A2Table parse_a2_csv(const std::string& text);
std::string a2_csv(const A2Table& t);
// Throws MonoidViolation if some entry leaves the span of gens_psi_lambda.
void validate_a2(const A2Table& t);

MotiveExpr ec_a2(const LocalWeight& lam, const A2Table& t);
// e_c(M_2, V_lam).
MotiveExpr ec_m2_local(const LocalWeight& lam, const A2Table& t);
EquivariantEC ec_m0n(int n);
EquivariantEC ec_m1n(int n);
EquivariantEC ec_m2n(int n, const A2Table& t);

// Genus one censuses over F_q, F_{q^2}, F_{q^3}, built on demand.
struct EllipticCensus {
  int q;
  Census over[4];
  explicit EllipticCensus(int q, int max_degree = 2);
};

// Lefschetz traces by weighted sums over unordered pairs and triples of
// elliptic curves; Frobenius-stable configurations only.
Rat sym2_fixed_point_trace(const LocalWeight& lam, const EllipticCensus& e);
Rat sym3_fixed_point_trace(const LocalWeight& lam, const EllipticCensus& e);
// Trace on e_c(A_2, V_lam) from a genus two census plus the product locus.
Rat a2_fixed_point_trace(const LocalWeight& lam, const Census& genus2, const EllipticCensus& e);

// Odd q used to derive the A_2 table from point counts.
extern const std::vector<int> kA2Qs;
// Solves for e_c(A_2, V_lam) in the span of gens_psi_lambda(lam, 2) from
// traces at kA2Qs. MissingData if the span needs a generator without traces.
MotiveExpr derive_a2_entry(const LocalWeight& lam, const std::map<int, Rat>& traces, SolveDiagnostics* diag = nullptr);

// All even weights with a + b <= max_size; entries that cannot be derived
// are reported in missing and left out.
A2Table derive_a2_table(int max_size, std::vector<std::string>* missing = nullptr);

}  // namespace mgc
