#include "interp.hpp"

#include <algorithm>

namespace mgc {

namespace {

std::string q_tag(int q) { return "q=" + std::to_string(q); }

std::string lam_tag(const LocalWeight& l) { return "lambda=(" + lw_str(l) + ")"; }

void note(std::vector<std::string>* reads, const std::string& s) {
  if (reads) reads->push_back(s);
}

Int pow_int(int q, int k) { return ipow(q, k); }

// Evaluates a Tate class at L = q.
Int tate_at(const MotiveExpr& e, int q) {
  if (!e.is_tate()) fail(Err::InvalidArgument, "expected a polynomial in L");
  Int s = 0;
  for (auto& [g, c] : e.terms()) s += c * pow_int(q, g.k);
  return s;
}

std::vector<LocalWeight> local_weights_upto(int n) {
  std::vector<LocalWeight> out;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c)
        if (a + b + c <= n) out.push_back({a, b, c});
  return out;
}

void check_lambda(const LocalWeight& lam) {
  if (lam.size() != 3 || lam[0] < lam[1] || lam[1] < lam[2] || lam[2] < 0)
    fail(Err::InvalidArgument, "lambda must be three weakly decreasing non-negative integers");
  if (lw_size(lam) > 16) fail(Err::OutOfModel, "|lambda| > 16 is outside the model");
}

}  // namespace

std::string Target::str() const {
  if (kind == TargetKind::A3) return "A3 " + lam_tag(lambda);
  return "M3bar n=" + std::to_string(n) + " mu=" + mu.str();
}

Ansatz ansatz_a3(const LocalWeight& lam) {
  check_lambda(lam);
  Ansatz a;
  a.target.kind = TargetKind::A3;
  a.target.lambda = lam;
  a.generators = gens_psi_lambda(lam, 3);
  a.unknowns = a.generators;
  return a;
}

std::map<Partition, Int> h2_equivariant(int g, int n) {
  if (g != 3) fail(Err::InvalidArgument, "h2_equivariant supports g = 3 only");
  if (n < 0 || n > 14) fail(Err::OutOfModel, "n must be in [0, 14]");
  std::map<Partition, Int> out;
  auto add_subsets = [&](int k) {
    // permutation character on k-subsets: sum of s_{(n-j, j)}, j <= min(k, n-k)
    for (int j = 0; j <= std::min(k, n - k); ++j) {
      std::vector<int> p;
      if (n - j > 0) p.push_back(n - j);
      if (j > 0) p.push_back(j);
      out[Partition(p)] += 1;
    }
  };
  add_subsets(0);  // kappa_1
  add_subsets(0);  // delta_irr
  if (n >= 1) add_subsets(1);  // psi classes
  for (int k = 2; k <= n; ++k) add_subsets(k);  // delta_{0,S}
  for (int k = 0; k <= n; ++k) add_subsets(k);  // delta_{1,S}
  return out;
}

Ansatz ansatz_m3bar(int n, const Partition& mu) {
  if (n < 0 || n > 14) fail(Err::OutOfModel, "n must be in [0, 14]");
  if (mu.size() != n) fail(Err::InvalidArgument, "mu must be a partition of n");
  Ansatz a;
  a.target.kind = TargetKind::M3bar;
  a.target.n = n;
  a.target.mu = mu;
  int top = 6 + n;
  a.generators = gens_phi_prime_upto(top);
  for (auto& g : a.generators) {
    int w = gen(g.j).weight;
    if (2 * g.k + w < top) a.pairing[g] = GenKey{top - g.k - w, g.j};
  }
  auto h2 = h2_equivariant(3, n);
  Partition triv = n == 0 ? Partition() : Partition({n});
  a.fixed[GenKey{0, G_ONE}] = mu == triv ? 1 : 0;
  auto it = h2.find(mu);
  a.fixed[GenKey{1, G_ONE}] = it == h2.end() ? Int(0) : it->second;
  for (auto& g : a.generators)
    if (!a.fixed.count(g)) a.unknowns.push_back(g);
  return a;
}

Int gen_trace(const Genus3Data& d, int j, int q) {
  auto it = d.gen_traces.find({j, q});
  if (it != d.gen_traces.end()) return it->second;
  return d.polys.trace(j, q);
}

Int motive_trace(const MotiveExpr& e, int q, const Genus3Data& d) {
  Int s = 0;
  for (auto& [g, c] : e.terms()) s += c * pow_int(q, g.k) * gen_trace(d, g.j, q);
  return s;
}

namespace {

Rat ec_coeff(const Ansatz& a, const GenKey& g) {
  Int dm = gen(g.j).dim;
  return Rat(a.pairing.count(g) ? 2 * dm : dm);
}

Rat trace_coeff(const Ansatz& a, const GenKey& g, int q, const Genus3Data& d) {
  Int t = gen_trace(d, g.j, q);
  Int s = pow_int(q, g.k);
  auto it = a.pairing.find(g);
  if (it != a.pairing.end()) s += pow_int(q, it->second.k);
  return Rat(s * t);
}

}  // namespace

std::vector<Rat> ec_coefficients(const Ansatz& a) {
  std::vector<Rat> out;
  for (auto& g : a.generators) out.push_back(ec_coeff(a, g));
  return out;
}

std::vector<Rat> trace_coefficients(const Ansatz& a, int q, const Genus3Data& d) {
  std::vector<Rat> out;
  for (auto& g : a.generators) out.push_back(trace_coeff(a, g, q, d));
  return out;
}

RelationSystem assemble(const Ansatz& a, const Int& ec, const std::map<int, Int>& traces, const Genus3Data& d) {
  RelationSystem sys;
  auto make = [&](auto coeff, const Int& value, const std::string& tag) {
    Relation r;
    r.rhs = Rat(value);
    r.tag = tag;
    for (auto& [g, c] : a.fixed) r.rhs -= coeff(g) * Rat(c);
    for (auto& g : a.unknowns) r.coeffs.push_back(coeff(g));
    sys.rows.push_back(std::move(r));
  };
  make([&](const GenKey& g) { return ec_coeff(a, g); }, ec, "EC");
  for (int q : kTraceQs) {
    auto it = traces.find(q);
    if (it == traces.end()) fail(Err::MissingData, "trace of " + a.target.str() + " at " + q_tag(q));
    make([&](const GenKey& g) { return trace_coeff(a, g, q, d); }, it->second, q_tag(q));
  }
  return sys;
}

MotiveExpr assemble_class(const Ansatz& a, const std::map<GenKey, Int>& coeffs) {
  MotiveExpr e;
  auto put = [&](const GenKey& g, const Int& c) {
    e.add_term(g, c);
    auto it = a.pairing.find(g);
    if (it != a.pairing.end()) e.add_term(it->second, c);
  };
  for (auto& [g, c] : a.fixed) put(g, c);
  for (auto& [g, c] : coeffs) put(g, c);
  return e;
}

SolveReport solve(const Ansatz& a, const RelationSystem& sys) {
  SolveReport rep;
  rep.target = a.target;
  int u = static_cast<int>(a.unknowns.size());
  if (static_cast<int>(sys.rows.size()) < u)
    fail(Err::SingularSystem, a.target.str() + ": " + std::to_string(sys.rows.size()) + " relations for " +
                                  std::to_string(u) + " unknowns");
  std::vector<std::vector<Rat>> m;
  std::vector<Rat> b;
  for (auto& r : sys.rows) {
    m.push_back(r.coeffs);
    b.push_back(r.rhs);
    rep.tags.push_back(r.tag);
  }
  std::vector<Rat> x;
  try {
    x = solve_leading(m, b, rep.tags, &rep.diag);
  } catch (const Error& e) {
    throw Error(e.code(), a.target.str() + ": " + e.what());
  }
  std::map<GenKey, Int> coeffs;
  for (int i = 0; i < u; ++i) {
    if (x[i].get_den() != 1)
      fail(Err::NonIntegralSolution, a.target.str() + ": coefficient of " + gen_key_str(a.unknowns[i]) + " is " +
                                         x[i].get_str());
    coeffs[a.unknowns[i]] = x[i].get_num();
  }
  rep.result = assemble_class(a, coeffs);
  return rep;
}

std::vector<Rat> check_relations(const Ansatz& a, const MotiveExpr& proper, const RelationSystem& sys) {
  for (auto& [g, c] : a.fixed)
    if (proper.coeff(g) != c)
      fail(Err::ValidationFailure, a.target.str() + ": fixed coefficient of " + gen_key_str(g) + " differs");
  std::vector<Rat> x;
  for (auto& g : a.unknowns) x.push_back(Rat(proper.coeff(g)));
  std::map<GenKey, Int> coeffs;
  for (size_t i = 0; i < a.unknowns.size(); ++i) coeffs[a.unknowns[i]] = proper.coeff(a.unknowns[i]);
  if (!(assemble_class(a, coeffs) == proper))
    fail(Err::ValidationFailure, a.target.str() + ": class is outside the ansatz or not palindromic");
  std::vector<Rat> res;
  for (auto& r : sys.rows) {
    Rat s = -r.rhs;
    for (size_t i = 0; i < x.size(); ++i) s += r.coeffs[i] * x[i];
    res.push_back(s);
  }
  return res;
}

MotiveExpr a3_lower_strata(const LocalWeight& lam, const A2Table& a2) {
  check_lambda(lam);
  if (lw_size(lam) % 2) return MotiveExpr();
  MotiveExpr total = ec_a1_sym3(lam);
  for (auto& t : branch(lam, {2, 1}))
    total += mult(ec_m2_local(t.parts[0], a2), ec_a1(t.parts[1][0])).twist(t.twist) * t.mult;
  return total;
}

RelationSystem relations_a3(const Ansatz& a, const Genus3Data& d, std::vector<std::string>* reads) {
  const LocalWeight& lam = a.target.lambda;
  bool even = lw_size(lam) % 2 == 0;
  MotiveExpr lower;
  bool have_lower = false;
  auto get_lower = [&]() -> const MotiveExpr& {
    if (!have_lower) {
      lower = a3_lower_strata(lam, d.a2);
      have_lower = true;
      note(reads, "a2_ec: strata of A3 for " + lam_tag(lam));
    }
    return lower;
  };
  Int ec;
  if (auto it = d.ec_a3.find(lam); it != d.ec_a3.end()) {
    ec = it->second;
    note(reads, "ec_a3 " + lam_tag(lam));
  } else {
    auto jt = d.ec_m3.find(lam);
    if (jt == d.ec_m3.end())
      fail(Err::MissingData, "Euler characteristic of A3 (or M3) for " + lam_tag(lam));
    note(reads, "ec_m3 " + lam_tag(lam));
    ec = (even ? jt->second : Int(0)) + dim(get_lower());
  }
  std::map<int, Int> traces;
  for (int q : kTraceQs) {
    if (auto it = d.tr_a3.find({lam, q}); it != d.tr_a3.end()) {
      traces[q] = it->second;
      note(reads, "trace_a3 " + lam_tag(lam) + " " + q_tag(q));
      continue;
    }
    auto jt = d.tr_m3.find({lam, q});
    if (jt == d.tr_m3.end())
      fail(Err::MissingData, "trace of A3 (or M3) for " + lam_tag(lam) + " at " + q_tag(q));
    note(reads, "trace_m3 " + lam_tag(lam) + " " + q_tag(q));
    traces[q] = (even ? jt->second : Int(0)) + motive_trace(get_lower(), q, d);
  }
  return assemble(a, ec, traces, d);
}

SolveReport pipeline_a3(const LocalWeight& lam, const Genus3Data& d) {
  Ansatz a = ansatz_a3(lam);
  if (lw_size(lam) % 2) {
    // -1 acts on V_lam by -1
    SolveReport rep;
    rep.target = a.target;
    rep.reads.push_back("odd weight: class vanishes");
    return rep;
  }
  std::vector<std::string> reads;
  RelationSystem sys = relations_a3(a, d, &reads);
  SolveReport rep = solve(a, sys);
  rep.reads = std::move(reads);
  return rep;
}

Int open_m3_trace(int n, const Partition& mu, int q, const Genus3Data& d, std::vector<std::string>* reads) {
  Int s = 0;
  for (auto& [lam, c] : a_matrix(3, n).at(mu)) {
    if (c.is_zero()) continue;
    auto it = d.tr_m3.find({lam, q});
    if (it == d.tr_m3.end()) fail(Err::MissingData, "trace of M3 for " + lam_tag(lam) + " at " + q_tag(q));
    note(reads, "trace_m3 " + lam_tag(lam) + " " + q_tag(q));
    s += tate_at(c, q) * it->second;
  }
  return s;
}

Int open_m3_ec(int n, const Partition& mu, const Genus3Data& d, std::vector<std::string>* reads) {
  Int s = 0;
  for (auto& [lam, c] : a_matrix(3, n).at(mu)) {
    if (c.is_zero()) continue;
    auto it = d.ec_m3.find(lam);
    if (it == d.ec_m3.end()) fail(Err::MissingData, "Euler characteristic of M3 for " + lam_tag(lam));
    note(reads, "ec_m3 " + lam_tag(lam));
    s += tate_at(c, 1) * it->second;
  }
  return s;
}

RelationSystem relations_m3bar(const Ansatz& a, const EquivariantEC& boundary, const Genus3Data& d,
                               std::vector<std::string>* reads) {
  int n = a.target.n;
  const Partition& mu = a.target.mu;
  MotiveExpr bd;
  if (auto it = boundary.find(mu); it != boundary.end()) bd = it->second;
  Int ec = open_m3_ec(n, mu, d, reads) + dim(bd);
  std::map<int, Int> traces;
  for (int q : kTraceQs) traces[q] = open_m3_trace(n, mu, q, d, reads) + motive_trace(bd, q, d);
  return assemble(a, ec, traces, d);
}

namespace {

OpenProvider genus3_provider(const Genus3Data& d, const M3Cache& cache, int below) {
  std::map<std::pair<int, int>, EquivariantEC> injected;
  for (auto& [m, st] : cache)
    if (m < below) injected[{3, m}] = st.open;
  return memo_provider(lowgenus_provider(d.a2), injected);
}

// Fails early when the ingested tables cannot cover stage n.
void require_open_data(int n, const Genus3Data& d) {
  for (auto& mu : partitions_of(n)) {
    open_m3_ec(n, mu, d, nullptr);
    for (int q : kTraceQs) open_m3_trace(n, mu, q, d, nullptr);
  }
}

M3Stage solve_stage(int n, const Genus3Data& d, const M3Cache& cache) {
  require_open_data(n, d);
  M3Stage st;
  st.n = n;
  st.boundary = boundary_gk(3, n, genus3_provider(d, cache, n));
  for (auto& mu : partitions_of(n)) {
    Ansatz a = ansatz_m3bar(n, mu);
    std::vector<std::string> reads;
    RelationSystem sys = relations_m3bar(a, st.boundary, d, &reads);
    SolveReport rep = solve(a, sys);
    rep.reads = std::move(reads);
    st.proper[mu] = rep.result;
    st.open[mu] = rep.result - st.boundary[mu];
    st.reports[mu] = std::move(rep);
  }
  return st;
}

M3Stage close_stage_14(const Genus3Data& d, const M3Cache& cache) {
  std::map<int, EquivariantEC> pointed;
  for (int m = 0; m <= 13; ++m) pointed[m] = cache.at(m).open;
  std::map<LocalWeight, MotiveExpr> local;
  std::vector<std::string> reads;
  for (auto& lam : local_weights_upto(14)) {
    int s = lw_size(lam);
    if (s <= 13) {
      local[lam] = local_from_pointed(lam, pointed);
    } else {
      SolveReport a3 = pipeline_a3(lam, d);
      for (auto& r : a3.reads) reads.push_back(r);
      local[lam] = a3.result - a3_lower_strata(lam, d.a2);
    }
  }
  M3Stage st;
  st.n = 14;
  st.open = pointed_from_local(3, 14, local);
  st.boundary = boundary_gk(3, 14, genus3_provider(d, cache, 14));
  st.proper = ec_add(st.open, st.boundary);
  for (auto& mu : partitions_of(14)) {
    Ansatz a = ansatz_m3bar(14, mu);
    SolveReport rep;
    rep.target = a.target;
    rep.result = st.proper[mu];
    rep.reads = reads;
    RelationSystem sys = relations_m3bar(a, st.boundary, d, &rep.reads);
    rep.diag.unknowns = static_cast<int>(a.unknowns.size());
    rep.diag.rows = static_cast<int>(sys.rows.size());
    rep.diag.residuals = check_relations(a, rep.result, sys);
    for (size_t i = 0; i < sys.rows.size(); ++i) {
      rep.tags.push_back(sys.rows[i].tag);
      if (rep.diag.residuals[i] != 0)
        fail(Err::ResidualNonzero, a.target.str() + ": relation " + sys.rows[i].tag + " violated");
    }
    st.reports[mu] = std::move(rep);
  }
  return st;
}

}  // namespace

M3Stage pipeline_m3(int n, const Genus3Data& d, M3Cache* cache) {
  if (n < 0 || n > 14) fail(Err::OutOfModel, "n must be in [0, 14]");
  M3Cache local;
  M3Cache& c = cache ? *cache : local;
  for (int m = 0; m <= std::min(n, 13); ++m)
    if (!c.count(m)) c[m] = solve_stage(m, d, c);
  if (n == 14 && !c.count(14)) c[14] = close_stage_14(d, c);
  return c.at(n);
}

}  // namespace mgc
