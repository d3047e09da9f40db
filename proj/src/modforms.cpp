#include "modforms.hpp"

namespace mgc {

std::vector<Int> qexp_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  size_t n = std::min(a.size(), b.size());
  std::vector<Int> r(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<Int> qexp_delta(int n) {
  // q prod (1 - q^m)^24
  std::vector<Int> p(n, 0);
  if (n > 0) p[0] = 1;
  for (int m = 1; m < n; ++m)
    for (int e = 0; e < 24; ++e)
      for (int i = n - 1; i >= m; --i) p[i] -= p[i - m];
  std::vector<Int> r(n, 0);
  for (int i = 1; i < n; ++i) r[i] = p[i - 1];
  return r;
}

static Int sigma(int n, int k) {
  Int s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += ipow(d, k - 1);
  return s;
}

std::vector<Int> qexp_eisenstein(int k, int n) {
  // E_k = 1 - (2k / B_k) sum sigma_{k-1}(m) q^m
  Rat c;
  switch (k) {
    case 4: c = 240; break;
    case 6: c = -504; break;
    case 8: c = 480; break;
    case 10: c = -264; break;
    default: fail(Err::InvalidArgument, "Eisenstein weight not tabulated");
  }
  std::vector<Int> r(n, 0);
  if (n > 0) r[0] = 1;
  for (int m = 1; m < n; ++m) r[m] = c.get_num() * sigma(m, k);
  return r;
}

std::vector<Int> qexp_eigenform(int k, int n) {
  auto d = qexp_delta(n);
  switch (k) {
    case 12: return d;
    case 16: return qexp_mul(d, qexp_eisenstein(4, n));
    case 18: return qexp_mul(d, qexp_eisenstein(6, n));
    case 20: return qexp_mul(d, qexp_eisenstein(8, n));
    case 22: return qexp_mul(d, qexp_eisenstein(10, n));
    default: fail(Err::InvalidArgument, "no one-dimensional cusp space in weight " + std::to_string(k));
  }
}

CharPolyTable elliptic_charpolys() {
  CharPolyTable t;
  const int n = 24;
  for (int id : {G_S12, G_S16, G_S18, G_S20, G_S22}) {
    int k = gen(id).k;
    auto a = qexp_eigenform(k, n);
    for (int p : kSupportedPrimes) t.set(id, p, {1, -a[p], ipow(p, k - 1)});
  }
  return t;
}

}  // namespace mgc
