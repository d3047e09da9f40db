#pragma once

#include <cstdint>
#include <vector>

namespace mgc {

// Finite field F_q, q = p^r <= 1024, elements encoded as base-p digit
// vectors of polynomial-basis coordinates.
class GF {
 public:
  explicit GF(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int r() const { return r_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]]; }
  int inv(int a) const { return exp_[q_ - 1 - log_[a]]; }
  int pow(int a, long e) const;
  // Primitive element power g^i.
  int gen_pow(long i) const { return exp_[((i % (q_ - 1)) + (q_ - 1)) % (q_ - 1)]; }
  int log(int a) const { return log_[a]; }
  // Integer n mod p as a field element.
  int from_int(long n) const { return static_cast<int>(((n % p_) + p_) % p_); }
  // Quadratic character for odd q: 1, -1, or 0.
  int chi(int a) const { return a == 0 ? 0 : (log_[a] % 2 ? -1 : 1); }
  // Absolute trace to F_p.
  int abs_trace(int a) const { return trace_[a]; }
  // Frobenius x -> x^p.
  int frob(int a) const { return pow(a, p_); }
  // Coefficients of the defining polynomial, low to high, monic.
  const std::vector<int>& modulus() const { return mod_; }

 private:
  int q_, p_, r_;
  std::vector<int> mod_;
  std::vector<uint16_t> add_;
  std::vector<int> neg_, exp_, log_, trace_;
};

// Image of each element of `small` inside `big`, a field containing it.
std::vector<int> embed(const GF& small, const GF& big);

}  // namespace mgc
