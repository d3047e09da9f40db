#include "gf.hpp"

#include "arith.hpp"
#include "error.hpp"

namespace mgc {

namespace {

std::vector<int> digits(int a, int p, int r) {
  std::vector<int> d(r);
  for (int i = 0; i < r; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

}  // namespace

GF::GF(int q) : q_(q) {
  if (q < 2 || q > 1024) fail(Err::UnsupportedPrimePower, "field size out of range");
  auto [p, r] = prime_power(q);
  if (p == 0) fail(Err::UnsupportedPrimePower, std::to_string(q) + " is not a prime power");
  p_ = p;
  r_ = r;
  // search a primitive polynomial x^r + ...
  for (int cand = 0; cand < q; ++cand) {
    std::vector<int> m = digits(cand, p, r);
    m.push_back(1);
    if (r > 1 && m[0] == 0) continue;
    std::vector<int> e(q - 1), lg(q, -1);
    std::vector<int> cur(r, 0);
    cur[0] = 1;
    bool ok = true;
    for (int i = 0; i < q - 1; ++i) {
      int a = undigits(cur, p);
      if (lg[a] != -1) {
        ok = false;
        break;
      }
      lg[a] = i;
      e[i] = a;
      // multiply by x modulo m
      int top = cur[r - 1];
      for (int k = r - 1; k >= 0; --k) {
        int lower = k > 0 ? cur[k - 1] : 0;
        cur[k] = ((lower - top * m[k]) % p + p) % p;
      }
    }
    if (!ok || lg[0] != -1) continue;
    mod_ = m;
    exp_.resize(2 * (q - 1));
    for (int i = 0; i < 2 * (q - 1); ++i) exp_[i] = e[i % (q - 1)];
    log_ = lg;
    break;
  }
  if (mod_.empty()) fail(Err::UnsupportedPrimePower, "no primitive polynomial found");
  add_.resize(static_cast<size_t>(q) * q);
  neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p, r);
    std::vector<int> dn(r);
    for (int k = 0; k < r; ++k) dn[k] = (p - da[k]) % p;
    neg_[a] = undigits(dn, p);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p, r);
      std::vector<int> s(r);
      for (int k = 0; k < r; ++k) s[k] = (da[k] + db[k]) % p;
      add_[a * q + b] = static_cast<uint16_t>(undigits(s, p));
    }
  }
  trace_.resize(q);
  for (int a = 0; a < q; ++a) {
    int t = 0, x = a;
    for (int k = 0; k < r; ++k) {
      t = add(t, x);
      x = pow(x, p);
    }
    trace_[a] = t;
  }
}

int GF::pow(int a, long e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  long l = (static_cast<long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  if (l < 0) l += q_ - 1;
  return exp_[l];
}

std::vector<int> embed(const GF& small, const GF& big) {
  if (small.p() != big.p() || big.r() % small.r()) fail(Err::InvalidArgument, "field is not a subfield");
  const auto& m = small.modulus();
  int beta = -1;
  for (int b = 0; b < big.q() && beta < 0; ++b) {
    int v = 0;
    for (int k = static_cast<int>(m.size()) - 1; k >= 0; --k) v = big.add(big.mul(v, b), m[k]);
    if (v == 0) beta = b;
  }
  if (beta < 0) fail(Err::InvalidArgument, "no embedding found");
  std::vector<int> img(small.q());
  for (int a = 0; a < small.q(); ++a) {
    int v = 0, pw = 1, x = a;
    for (int k = 0; k < small.r(); ++k) {
      v = big.add(v, big.mul(x % small.p(), pw));
      x /= small.p();
      pw = big.mul(pw, beta);
    }
    img[a] = v;
  }
  return img;
}

}  // namespace mgc
