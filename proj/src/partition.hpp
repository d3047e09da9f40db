#pragma once

#include <string>
#include <vector>

#include "arith.hpp"

namespace mgc {

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  int operator[](int i) const { return i < length() ? parts[i] : 0; }
  Partition conjugate() const;
  // Multiplicity of part k.
  int mult(int k) const;
  std::string str() const;

  auto operator<=>(const Partition&) const = default;
};

// All partitions of n in reverse lexicographic order, (n) first.
const std::vector<Partition>& partitions_of(int n);

// z_rho = prod k^{m_k} m_k!
Int zee(const Partition& rho);

// Irreducible S_n character chi^lambda at cycle type rho.
Int sn_character(const Partition& lambda, const Partition& rho);

// Parses "2,2,1", "[2^4,1^6]", "2^4 1^6" or "" into a partition.
Partition parse_partition(const std::string& s);

// Formats with exponents, e.g. [2^4,1^6].
std::string partition_exp_str(const Partition& p);

}  // namespace mgc
