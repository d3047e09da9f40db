#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leray.hpp"
#include "linsolve.hpp"
#include "lowgenus.hpp"
#include "motives.hpp"
#include "strata.hpp"

namespace mgc {

enum class TargetKind { A3, M3bar };

struct Target {
  TargetKind kind = TargetKind::A3;
  LocalWeight lambda;  // A3
  int n = 0;           // M3bar
  Partition mu;        // M3bar
  std::string str() const;
};

struct Ansatz {
  Target target;
  std::vector<GenKey> generators;
  // Poincare mirror of each generator strictly below the middle weight.
  std::map<GenKey, GenKey> pairing;
  std::map<GenKey, Int> fixed;
  std::vector<GenKey> unknowns;
};

Ansatz ansatz_a3(const LocalWeight& lam);
Ansatz ansatz_m3bar(int n, const Partition& mu);

// Schur multiplicities of H^2(M-bar_{3,n}); only g = 3.
std::map<Partition, Int> h2_equivariant(int g, int n);

// Ingested tables. Traces are keyed by (lambda, q).
struct Genus3Data {
  CharPolyTable polys;
  // Traces of generators given directly, keyed by (generator id, q).
  std::map<std::pair<int, int>, Int> gen_traces;
  A2Table a2;
  std::map<LocalWeight, Int> ec_a3, ec_m3;
  std::map<std::pair<LocalWeight, int>, Int> tr_a3, tr_m3;
};

// Trace of F_q on a generator or a class, using gen_traces before polys.
Int gen_trace(const Genus3Data& d, int j, int q);
Int motive_trace(const MotiveExpr& e, int q, const Genus3Data& d);

struct Relation {
  std::vector<Rat> coeffs;  // over Ansatz::unknowns
  Rat rhs;
  std::string tag;  // "EC" or "q=<q>"
};

struct RelationSystem {
  std::vector<Relation> rows;
};

// Coefficients of one relation over all generators, before fixing.
std::vector<Rat> ec_coefficients(const Ansatz& a);
std::vector<Rat> trace_coefficients(const Ansatz& a, int q, const Genus3Data& d);

// Builds the system from the class's Euler characteristic and its traces at
// kTraceQs; the values are for the full class, fixed terms are moved to the
// right hand side here.
RelationSystem assemble(const Ansatz& a, const Int& ec, const std::map<int, Int>& traces, const Genus3Data& d);

struct SolveReport {
  Target target;
  MotiveExpr result;
  SolveDiagnostics diag;
  std::vector<std::string> tags;
  std::vector<std::string> reads;  // table entries consulted
};

MotiveExpr assemble_class(const Ansatz& a, const std::map<GenKey, Int>& coeffs);
SolveReport solve(const Ansatz& a, const RelationSystem& sys);

// e_c of t_2(M_2) x A_1 and A_1^3 / S_3 with coefficients in V_lam.
MotiveExpr a3_lower_strata(const LocalWeight& lam, const A2Table& a2);

RelationSystem relations_a3(const Ansatz& a, const Genus3Data& d, std::vector<std::string>* reads = nullptr);
SolveReport pipeline_a3(const LocalWeight& lam, const Genus3Data& d);

struct M3Stage {
  int n = 0;
  EquivariantEC open, proper, boundary;
  std::map<Partition, SolveReport> reports;
};

// Solved stages by n, reused across calls.
using M3Cache = std::map<int, M3Stage>;

// Tate coefficients a_{mu,lam} at L = q, contracted with ingested M_3 traces.
Int open_m3_trace(int n, const Partition& mu, int q, const Genus3Data& d, std::vector<std::string>* reads);
Int open_m3_ec(int n, const Partition& mu, const Genus3Data& d, std::vector<std::string>* reads);

RelationSystem relations_m3bar(const Ansatz& a, const EquivariantEC& boundary, const Genus3Data& d,
                               std::vector<std::string>* reads = nullptr);

// Runs the induction up to n <= 14 and returns stage n.
M3Stage pipeline_m3(int n, const Genus3Data& d, M3Cache* cache = nullptr);

// Residuals of a proper class against every relation of its target.
std::vector<Rat> check_relations(const Ansatz& a, const MotiveExpr& proper, const RelationSystem& sys);

}  // namespace mgc
