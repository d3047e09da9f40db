#pragma once

#include <functional>
#include <string>
#include <vector>

#include "leray.hpp"
#include "lowgenus.hpp"

namespace mgc {

struct StableGraph {
  std::vector<int> genus;
  // Markings (1-based) on each vertex, sorted.
  std::vector<std::vector<int>> legs;
  // Unordered vertex pairs with u <= v; loops have u == v. Sorted.
  std::vector<std::pair<int, int>> edges;
  // Automorphisms fixing every leg.
  Int aut = 1;

  int g() const;
  int n() const;
  bool trivial() const { return edges.empty(); }
  // Sum over vertices of 3 g(v) - 3 + n(v).
  int dimension() const;
  std::string str() const;
};

// All stable graphs of type (g, n) up to isomorphism, trivial graph first.
std::vector<StableGraph> stable_graphs(int g, int n);
// One representative per S_n-orbit of stable graphs.
std::vector<StableGraph> stable_graph_orbits(int g, int n);

// Automorphisms of G allowed to permute legs among themselves.
Int full_aut(const StableGraph& G);

// Open classes e_c(M_{g,n}) by partition.
using OpenProvider = std::function<EquivariantEC(int g, int n)>;
// Genus <= 2 from closed forms and the A_2 table; genus 3 throws MissingData.
OpenProvider lowgenus_provider(const A2Table& a2);
// Wraps a provider with a memo and an override table for injected classes.
OpenProvider memo_provider(OpenProvider base, std::map<std::pair<int, int>, EquivariantEC> injected = {});

// Class of the union of the S_n-translates of the stratum of G.
EquivariantEC ec_stratum(const StableGraph& G, const OpenProvider& provider);
EquivariantEC boundary_direct(int g, int n, const OpenProvider& provider);
EquivariantEC boundary_gk(int g, int n, const OpenProvider& provider);

EquivariantEC ec_add(const EquivariantEC& a, const EquivariantEC& b);

}  // namespace mgc
