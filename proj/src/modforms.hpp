#pragma once

#include <vector>

#include "arith.hpp"
#include "motives.hpp"

namespace mgc {

// q-expansion coefficients a_0..a_{n-1}.
std::vector<Int> qexp_delta(int n);
std::vector<Int> qexp_eisenstein(int k, int n);  // normalized E_k, a_0 = 1
std::vector<Int> qexp_mul(const std::vector<Int>& a, const std::vector<Int>& b);

// Normalized level one eigenform of weight k in {12,16,18,20,22}.
std::vector<Int> qexp_eigenform(int k, int n);

// Char polys x^2 - a_p x + p^{k-1} of S[12..22] at the supported primes.
CharPolyTable elliptic_charpolys();

}  // namespace mgc
