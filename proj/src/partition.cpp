#include "partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "error.hpp"

namespace mgc {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  for (int v : parts)
    if (v < 0) fail(Err::InvalidArgument, "negative part in partition");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int Partition::size() const {
  int s = 0;
  for (int v : parts) s += v;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts.empty()) return Partition();
  for (int j = 1; j <= parts[0]; ++j) {
    int cnt = 0;
    for (int v : parts)
      if (v >= j) ++cnt;
    c.push_back(cnt);
  }
  Partition r;
  r.parts = c;
  return r;
}

int Partition::mult(int k) const {
  int c = 0;
  for (int v : parts)
    if (v == k) ++c;
  return c;
}

std::string Partition::str() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s;
}

static void gen_parts(int n, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    Partition p;
    p.parts = cur;
    out.push_back(p);
    return;
  }
  for (int k = std::min(n, maxp); k >= 1; --k) {
    cur.push_back(k);
    gen_parts(n - k, k, cur, out);
    cur.pop_back();
  }
}

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n >= 0) gen_parts(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

Int zee(const Partition& rho) {
  Int z = 1;
  std::map<int, int> m;
  for (int v : rho.parts) m[v]++;
  for (auto [k, c] : m) z *= ipow(k, c) * factorial(c);
  return z;
}

// Murnaghan-Nakayama on beta-sets.
static Int mn(std::vector<int> beta, const std::vector<int>& rho, size_t idx,
              std::map<std::pair<std::vector<int>, size_t>, Int>& memo) {
  if (idx == rho.size()) return 1;
  auto key = std::make_pair(beta, idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int r = rho[idx];
  Int total = 0;
  std::sort(beta.begin(), beta.end());
  for (size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    int nb = b - r;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int crossed = 0;
    for (int c : beta)
      if (c > nb && c < b) ++crossed;
    std::vector<int> next = beta;
    next[i] = nb;
    Int v = mn(next, rho, idx + 1, memo);
    if (crossed % 2) total -= v;
    else total += v;
  }
  memo.emplace(key, total);
  return total;
}

Int sn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) fail(Err::InvalidArgument, "character size mismatch");
  int l = lambda.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda.parts[i] + (l - 1 - i);
  std::map<std::pair<std::vector<int>, size_t>, Int> memo;
  return mn(beta, rho.parts, 0, memo);
}

Partition parse_partition(const std::string& s0) {
  std::string s;
  for (char c : s0)
    if (c != '[' && c != ']' && c != '(' && c != ')') s += (c == ' ' ? ',' : c);
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto caret = tok.find('^');
    try {
      if (caret == std::string::npos) {
        parts.push_back(std::stoi(tok));
      } else {
        int v = std::stoi(tok.substr(0, caret));
        int e = std::stoi(tok.substr(caret + 1));
        for (int i = 0; i < e; ++i) parts.push_back(v);
      }
    } catch (const std::exception&) {
      fail(Err::ParseError, "bad partition: " + s0);
    }
  }
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) fail(Err::ParseError, "partition not weakly decreasing: " + s0);
  return Partition(parts);
}

std::string partition_exp_str(const Partition& p) {
  std::string s = "[";
  size_t i = 0;
  bool first = true;
  while (i < p.parts.size()) {
    size_t j = i;
    while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
    if (!first) s += ",";
    first = false;
    s += std::to_string(p.parts[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s + "]";
}

}  // namespace mgc
