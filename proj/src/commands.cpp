#include "commands.hpp"

#include <filesystem>
#include <sstream>

#include "modforms.hpp"

namespace mgc {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cache_dir(const CommandContext& ctx) {
  return (fs::path(ctx.out_dir) / "cache" / ctx.bundle.hash()).string();
}

std::string stage_path(const CommandContext& ctx, int m) {
  return (fs::path(cache_dir(ctx)) / ("m3_" + std::to_string(m) + ".json")).string();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json with_header(const CommandContext& ctx, const std::string& command) {
  json j = header_json(ctx.bundle);
  j["command"] = command;
  return j;
}

M3Cache load_stages(const CommandContext& ctx) {
  M3Cache c;
  for (int m = 0; m <= 14; ++m) {
    std::string p = stage_path(ctx, m);
    if (!fs::exists(p)) break;
    c[m] = stage_from_json(json::parse(read_file(p)));
  }
  return c;
}

void save_stages(const CommandContext& ctx, const M3Cache& c) {
  for (auto& [m, st] : c) {
    std::string p = stage_path(ctx, m);
    if (!fs::exists(p)) write_atomic(p, dump(stage_json(st)));
  }
}

M3Cache run_m3(CommandContext& ctx, int n) {
  M3Cache c = load_stages(ctx);
  try {
    pipeline_m3(n, ctx.bundle.data, &c);
  } catch (...) {
    save_stages(ctx, c);
    throw;
  }
  save_stages(ctx, c);
  return c;
}

std::string ec_text(const std::string& name, const EquivariantEC& e, const std::optional<Partition>& only) {
  std::string s;
  for (auto& [mu, m] : e) {
    if (only && mu != *only) continue;
    s += name + partition_exp_str(mu) + " = " + motive_str(m) + "\n";
  }
  return s;
}

std::vector<LocalWeight> weights3_upto(int n) {
  std::vector<LocalWeight> out;
  for (int s = 0; s <= n; ++s)
    for (int a = s; a >= 0; --a)
      for (int b = std::min(a, s - a); b >= 0; --b) {
        int c = s - a - b;
        if (c <= b && c >= 0) out.push_back({a, b, c});
      }
  return out;
}

}  // namespace

CommandResult cmd_compute_a3(CommandContext& ctx, const LocalWeight& lam) {
  SolveReport rep = pipeline_a3(lam, ctx.bundle.data);
  CommandResult r;
  r.doc = with_header(ctx, "compute a3");
  r.doc["lambda"] = lw_str(lam);
  r.doc["expression"] = motive_str(rep.result);
  r.doc["diagnostics"] = diagnostics_json(rep);
  std::string name = std::to_string(lam[0]) + "_" + std::to_string(lam[1]) + "_" + std::to_string(lam[2]) + ".json";
  write_atomic((fs::path(ctx.out_dir) / "a3" / name).string(), dump(r.doc));
  r.text = motive_str(rep.result) + "\n";
  return r;
}

CommandResult cmd_compute_m3(CommandContext& ctx, int n, const std::optional<Partition>& mu) {
  if (mu && mu->size() != n) fail(Err::InvalidArgument, "mu must be a partition of n");
  M3Cache c = run_m3(ctx, n);
  const M3Stage& st = c.at(n);
  CommandResult r;
  r.doc = with_header(ctx, "compute m3");
  r.doc["n"] = n;
  r.doc["open"] = ec_json(st.open);
  r.doc["proper"] = ec_json(st.proper);
  r.doc["boundary"] = ec_json(st.boundary);
  json diags = json::object();
  for (auto& [m, rep] : st.reports) diags[m.str()] = diagnostics_json(rep);
  r.doc["diagnostics"] = diags;
  write_atomic((fs::path(ctx.out_dir) / "m3" / ("n_" + std::to_string(n) + ".json")).string(), dump(r.doc));
  r.text = ec_text("M-bar_{3," + std::to_string(n) + "}", st.proper, mu) +
           ec_text("M_{3," + std::to_string(n) + "}", st.open, mu);
  return r;
}

CommandResult cmd_boundary(CommandContext& ctx, int g, int n, const std::string& engine) {
  if (engine != "gk" && engine != "direct" && engine != "both")
    fail(Err::InvalidArgument, "engine must be gk, direct or both");
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) fail(Err::InvalidArgument, "(g, n) must be stable");
  if (g > 3) fail(Err::OutOfModel, "genus above 3 is outside the model");
  std::map<std::pair<int, int>, EquivariantEC> injected;
  if (g == 3 && n > 0) {
    M3Cache c = run_m3(ctx, std::min(n - 1, 14));
    for (auto& [m, st] : c)
      if (m < n) injected[{3, m}] = st.open;
  }
  OpenProvider prov = memo_provider(lowgenus_provider(ctx.bundle.data.a2), injected);
  std::string key = "boundary_" + std::to_string(g) + "_" + std::to_string(n) + ".json";
  std::string path = (fs::path(cache_dir(ctx)) / key).string();
  EquivariantEC gk, direct;
  bool have_gk = false;
  if (engine != "direct") {
    if (fs::exists(path)) {
      gk = ec_from_json(json::parse(read_file(path)));
    } else {
      gk = boundary_gk(g, n, prov);
      write_atomic(path, dump(ec_json(gk)));
    }
    have_gk = true;
  }
  if (engine != "gk") direct = boundary_direct(g, n, prov);
  if (engine == "both" && !(gk == direct))
    fail(Err::ValidationFailure, "boundary engines disagree at (" + std::to_string(g) + "," + std::to_string(n) + ")");
  const EquivariantEC& e = have_gk ? gk : direct;
  CommandResult r;
  r.doc = with_header(ctx, "boundary");
  r.doc["g"] = g;
  r.doc["n"] = n;
  r.doc["engine"] = engine;
  r.doc["boundary"] = ec_json(e);
  r.text = ec_text("boundary of M-bar_{" + std::to_string(g) + "," + std::to_string(n) + "}", e, std::nullopt);
  return r;
}

CommandResult cmd_verify_counts(CommandContext& ctx, int q, int genus) {
  const Genus3Data& d = ctx.bundle.data;
  Census c;
  Rat expected_mass = -1;
  std::string stratum = "all";
  if (genus == 1) {
    c = enum_genus1(q);
    expected_mass = q;
  } else if (genus == 2) {
    c = enum_hyperelliptic(2, q, ctx.threads);
    expected_mass = Rat(ipow(q, 3));
  } else if (genus == 3) {
    if (q == 2) {
      c = enum_quartics(q, ctx.threads);
      stratum = "non-hyperelliptic";
    } else {
      c = enum_genus3(q, ctx.threads);
      expected_mass = Rat(ipow(q, 6) + ipow(q, 5) + 1);
    }
  } else {
    fail(Err::InvalidArgument, "genus must be 1, 2 or 3");
  }
  write_atomic((fs::path(ctx.out_dir) / ("census_" + std::to_string(genus) + "_" + std::to_string(q) + ".csv")).string(),
               census_csv(c));
  json diffs = json::array(), missing = json::array();
  int checked = 0;
  auto compare = [&](const LocalWeight& lam, const Int& expected, const std::string& source) {
    Int got = mass_trace(lam, q, c);
    ++checked;
    if (got != expected)
      diffs.push_back({{"lambda", lw_str(lam)}, {"census", got.get_str()}, {"expected", expected.get_str()}, {"source", source}});
  };
  Rat mass = total_mass(c);
  if (expected_mass >= 0 && mass != expected_mass)
    diffs.push_back({{"lambda", "mass"}, {"census", mass.get_str()}, {"expected", expected_mass.get_str()}, {"source", "closed form"}});
  if (genus == 1) {
    for (int a = 0; a <= 20; a += 2) compare({a}, trace(ec_a1(a), q, d.polys), "closed form");
  } else if (genus == 2) {
    for (auto& [lam, e] : d.a2.entries) compare(lam, trace(ec_m2_local(lam, d.a2), q, d.polys), "a2_ec.csv");
  } else if (stratum == "all") {
    for (auto& lam : weights3_upto(4)) {
      auto it = d.tr_m3.find({lam, q});
      if (it == d.tr_m3.end())
        missing.push_back(lw_str(lam));
      else
        compare(lam, it->second, "trace_m3.csv");
    }
    for (auto& [key, v] : d.tr_m3)
      if (key.second == q && lw_size(key.first) > 4) compare(key.first, v, "trace_m3.csv");
  }
  CommandResult r;
  r.doc = with_header(ctx, "verify counts");
  r.doc["q"] = q;
  r.doc["genus"] = genus;
  r.doc["stratum"] = stratum;
  r.doc["classes"] = c.size();
  r.doc["mass"] = mass.get_str();
  r.doc["checked"] = checked;
  r.doc["diffs"] = diffs;
  r.doc["missing"] = missing;
  std::ostringstream t;
  t << "genus " << genus << ", q = " << q << " (" << stratum << "): mass " << mass.get_str() << ", " << checked
    << " traces checked, " << diffs.size() << " diffs";
  if (!missing.empty()) t << ", " << missing.size() << " table entries missing";
  t << "\n";
  for (auto& dj : diffs)
    t << "  diff at " << dj["lambda"].get<std::string>() << ": census " << dj["census"].get<std::string>()
      << ", expected " << dj["expected"].get<std::string>() << "\n";
  r.text = t.str();
  if (!diffs.empty()) {
    r.status = Err::ValidationFailure;
    r.message = std::to_string(diffs.size()) + " census diffs";
  } else if (!missing.empty()) {
    r.status = Err::MissingData;
    r.message = "trace_m3.csv has no entry at q=" + std::to_string(q) + " for lambda=(" + missing[0].get<std::string>() + ")";
  }
  return r;
}

CommandResult cmd_verify_data(CommandContext& ctx) {
  const Genus3Data& d = ctx.bundle.data;
  json checks = json::array();
  int failed = 0;
  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back({{"check", name}, {"ok", ok}, {"detail", detail}});
    if (!ok) ++failed;
  };
  // functional equations
  int polys = 0;
  std::string bad;
  for (int id : d.polys.ids())
    for (int p : d.polys.primes(id)) {
      ++polys;
      if (!functional_equation_ok(d.polys.get(id, p), p, gen(id).weight))
        bad += (bad.empty() ? "" : ", ") + gen(id).name + " at p=" + std::to_string(p);
    }
  check("functional equation", bad.empty(), bad.empty() ? std::to_string(polys) + " polynomials" : bad);
  // elliptic polynomials against the q-expansions
  CharPolyTable ref = elliptic_charpolys();
  bool same = true;
  for (int id : ref.ids())
    for (int p : ref.primes(id)) same = same && d.polys.has(id, p) && d.polys.get(id, p) == ref.get(id, p);
  check("elliptic polynomials match q-expansions", same);
  check("tau(2) = -24", qexp_delta(3)[2] == -24, qexp_delta(3)[2].get_str());
  // Saito-Kurokawa lifts
  for (int p : kSupportedPrimes) {
    if (!d.polys.has(G_S18, p)) continue;
    Int lhs = trace(expand_lift("S[0,10]"), p, d.polys);
    Int rhs = d.polys.trace(G_S18, p) + ipow(p, 9) + ipow(p, 8);
    check("Saito-Kurokawa S[0,10] at p=" + std::to_string(p), lhs == rhs, lhs.get_str());
  }
  for (auto [a, form] : std::vector<std::pair<int, int>>{{7, G_S18}, {9, G_S22}}) {
    auto it = d.a2.entries.find({a, a});
    if (it == d.a2.entries.end()) continue;
    const MotiveExpr& e = it->second;
    bool ok = e.coeff({0, form}) != 0 && e.coeff({0, form}) == e.coeff({a + 1, G_ONE});
    check("Saito-Kurokawa pairing in a2_ec at (" + std::to_string(a) + "," + std::to_string(a) + ")", ok, motive_str(e));
  }
  try {
    validate_a2(d.a2);
    check("a2_ec containment", true, std::to_string(d.a2.entries.size()) + " entries");
  } catch (const Error& e) {
    check("a2_ec containment", false, e.what());
  }
  for (auto& [lam, v] : d.ec_a3)
    if (lw_size(lam) % 2 && v != 0) check("odd weight vanishing in ec_a3", false, lw_str(lam));
  for (auto& [key, v] : d.tr_a3)
    if (lw_size(key.first) % 2 && v != 0) check("odd weight vanishing in trace_a3", false, lw_str(key.first));
  for (auto& [key, cen] : ctx.bundle.censuses) {
    bool ok = true;
    for (auto& z : cen) ok = ok && zeta_class_ok(z);
    check("census " + std::to_string(key.first) + " " + std::to_string(key.second), ok);
  }
  CommandResult r;
  r.doc = with_header(ctx, "verify data");
  r.doc["checks"] = checks;
  std::ostringstream t;
  for (auto& c : checks)
    t << (c["ok"].get<bool>() ? "ok    " : "FAIL  ") << c["check"].get<std::string>()
      << (c["detail"].get<std::string>().empty() ? "" : ": " + c["detail"].get<std::string>()) << "\n";
  r.text = t.str();
  if (failed) {
    r.status = Err::ValidationFailure;
    r.message = std::to_string(failed) + " data checks failed";
  }
  return r;
}

CommandResult cmd_report(CommandContext& ctx, int n) {
  M3Cache c = run_m3(ctx, n);
  const M3Stage& st = c.at(n);
  CommandResult r;
  r.doc = with_header(ctx, "report");
  r.doc["n"] = n;
  r.doc["proper"] = ec_json(st.proper);
  r.doc["open"] = ec_json(st.open);
  std::ostringstream t;
  t << "# " << kBanner << "\n# bundle " << ctx.bundle.hash() << "\n";
  t << ec_text("M-bar_{3," + std::to_string(n) + "}", st.proper, std::nullopt);
  t << ec_text("M_{3," + std::to_string(n) + "}", st.open, std::nullopt);
  r.text = t.str();
  return r;
}

CommandResult cmd_derive_a2(int max_size, const std::string& path) {
  std::vector<std::string> missing;
  A2Table t = derive_a2_table(max_size, &missing);
  write_atomic(path, a2_csv(t));
  CommandResult r;
  r.doc = json{{"tool", "mgc"}, {"version", kToolVersion}, {"command", "derive a2"}, {"entries", t.entries.size()},
               {"missing", missing}, {"path", path}, {"sha256", sha256_hex(a2_csv(t))}};
  r.text = "wrote " + std::to_string(t.entries.size()) + " entries to " + path + "\n";
  for (auto& m : missing) r.text += "  no data for " + m + "\n";
  return r;
}

}  // namespace mgc
