#pragma once

#include <string>
#include <vector>

#include "arith.hpp"
#include "leray.hpp"

namespace mgc {

struct ZetaClass {
  int q = 0;
  int g = 0;
  // x^{2g} + c_1 x^{2g-1} + ... + c_{2g}
  std::vector<Int> poly;
  Rat mass;
  bool operator==(const ZetaClass&) const = default;
};

// Sorted by poly, one entry per poly.
using Census = std::vector<ZetaClass>;

std::vector<Int> charpoly_from_counts(const std::vector<long>& counts, int g, int q);
// Point counts #C(F_{q^r}) predicted by a Frobenius polynomial.
long predicted_count(const std::vector<Int>& poly, int q, int r);
bool zeta_class_ok(const ZetaClass& z);

Census enum_genus1(int q);
Census enum_hyperelliptic(int g, int q, int threads = 0);
Census enum_quartics(int q, int threads = 0);
// Hyperelliptic and quartic strata together.
Census enum_genus3(int q, int threads = 0);
Census merge_census(const Census& a, const Census& b);

Rat total_mass(const Census& c);
Int mass_trace(const LocalWeight& lam, int q, const Census& c);

std::string census_csv(const Census& c);
Census parse_census_csv(const std::string& text, int g, int q);

}  // namespace mgc
