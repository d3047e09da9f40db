#include "io.hpp"

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "csv.hpp"
#include "modforms.hpp"

namespace mgc {

namespace fs = std::filesystem;
using nlohmann::json;

const char* const kToolVersion = "1.0.0";
const char* const kBanner =
    "Conditional result: assumes every Galois representation in the cohomology of the moduli spaces involved "
    "is built from the 11 listed generator motives, within the Hodge-Tate constraints of the ansatz.";

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
    fail(Err::IoError, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (unsigned i = 0; i < len; ++i) {
    s += hex[md[i] >> 4];
    s += hex[md[i] & 15];
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::IoError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  fs::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Err::IoError, "cannot write " + tmp.string());
    out << content;
    if (!out.flush()) fail(Err::IoError, "cannot write " + tmp.string());
  }
  fs::rename(tmp, p, ec);
  if (ec) fail(Err::IoError, "cannot rename onto " + path + ": " + ec.message());
}

namespace {

Int parse_int(const std::string& s, const std::string& what) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) fail(Err::ParseError, "bad integer in " + what + ": '" + s + "'");
  return v;
}

int parse_small(const std::string& s, const std::string& what) {
  Int v = parse_int(s, what);
  if (!v.fits_sint_p()) fail(Err::ParseError, "integer out of range in " + what);
  return static_cast<int>(v.get_si());
}

std::vector<std::vector<std::string>> table_rows(const std::string& text, const std::vector<std::string>& header,
                                                 const std::string& what) {
  auto rows = read_csv(text);
  if (rows.empty() || rows[0] != header) {
    std::string h;
    for (auto& s : header) h += (h.empty() ? "" : ",") + s;
    fail(Err::ParseError, what + " header must be " + h);
  }
  rows.erase(rows.begin());
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != header.size())
      fail(Err::ParseError, what + " row " + std::to_string(i + 1) + " needs " + std::to_string(header.size()) + " fields");
  return rows;
}

LocalWeight parse_lambda3(const std::string& s) {
  Partition p = parse_partition(s);
  if (p.length() > 3) fail(Err::ParseError, "lambda has more than three parts: " + s);
  return local_weight(p, 3);
}

std::string lambda_field(const LocalWeight& l) { return lw_str(l); }

std::vector<Int> parse_coeffs(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_int(tok, "coefficients"));
  return out;
}

int trace_q(const std::string& s, const std::string& what) {
  int q = parse_small(s, what);
  if (!supported_q(q)) fail(Err::ParseError, what + ": unsupported q=" + s);
  return q;
}

}  // namespace

CharPolyTable parse_charpoly_csv(const std::string& text) {
  CharPolyTable t;
  for (auto& r : table_rows(text, {"generator", "p", "coefficients"}, "charpoly table")) {
    int id = gen_id_by_name(r[0]);
    if (id == 0 || id == G_ONE || id == G_SYM2S12) fail(Err::ParseError, "charpoly table: bad generator " + r[0]);
    int p = parse_small(r[1], "charpoly table");
    auto c = parse_coeffs(r[2]);
    if (static_cast<int>(c.size()) != gen(id).dim + 1 || c[0] != 1)
      fail(Err::ParseError, "charpoly table: " + r[0] + " at p=" + r[1] + " needs a monic polynomial of degree " +
                                std::to_string(gen(id).dim));
    if (!functional_equation_ok(c, p, gen(id).weight))
      fail(Err::ValidationFailure, "charpoly table: " + r[0] + " at p=" + r[1] + " fails the functional equation");
    if (t.has(id, p)) fail(Err::ParseError, "charpoly table: duplicate " + r[0] + " at p=" + r[1]);
    t.set(id, p, c);
  }
  return t;
}

std::string charpoly_csv(const CharPolyTable& t) {
  std::string s = csv_row({"generator", "p", "coefficients"});
  for (int id : t.ids())
    for (int p : t.primes(id)) {
      std::string c;
      for (auto& v : t.get(id, p)) c += (c.empty() ? "" : ",") + v.get_str();
      s += csv_row({gen(id).name, std::to_string(p), c});
    }
  return s;
}

std::map<std::pair<int, int>, Int> parse_gen_trace_csv(const std::string& text) {
  std::map<std::pair<int, int>, Int> t;
  for (auto& r : table_rows(text, {"generator", "q", "trace"}, "generator trace table")) {
    int id = gen_id_by_name(r[0]);
    if (id == 0) fail(Err::ParseError, "generator trace table: bad generator " + r[0]);
    int q = trace_q(r[1], "generator trace table");
    if (!t.emplace(std::make_pair(id, q), parse_int(r[2], "generator trace table")).second)
      fail(Err::ParseError, "generator trace table: duplicate " + r[0] + " at q=" + r[1]);
  }
  return t;
}

std::map<LocalWeight, Int> parse_ec_csv(const std::string& text) {
  std::map<LocalWeight, Int> t;
  for (auto& r : table_rows(text, {"lambda", "ec"}, "Euler characteristic table")) {
    LocalWeight l = parse_lambda3(r[0]);
    if (!t.emplace(l, parse_int(r[1], "Euler characteristic table")).second)
      fail(Err::ParseError, "Euler characteristic table: duplicate lambda " + r[0]);
  }
  return t;
}

std::map<std::pair<LocalWeight, int>, Int> parse_trace_csv(const std::string& text) {
  std::map<std::pair<LocalWeight, int>, Int> t;
  for (auto& r : table_rows(text, {"lambda", "q", "trace"}, "trace table")) {
    LocalWeight l = parse_lambda3(r[0]);
    int q = trace_q(r[1], "trace table");
    if (!t.emplace(std::make_pair(l, q), parse_int(r[2], "trace table")).second)
      fail(Err::ParseError, "trace table: duplicate lambda " + r[0] + " at q=" + r[1]);
  }
  return t;
}

std::string ec_csv(const std::map<LocalWeight, Int>& t) {
  std::string s = csv_row({"lambda", "ec"});
  for (auto& [l, v] : t) s += csv_row({lambda_field(l), v.get_str()});
  return s;
}

std::string trace_csv(const std::map<std::pair<LocalWeight, int>, Int>& t) {
  std::string s = csv_row({"lambda", "q", "trace"});
  for (auto& [k, v] : t) s += csv_row({lambda_field(k.first), std::to_string(k.second), v.get_str()});
  return s;
}

std::string DataBundle::hash() const {
  std::string all;
  for (auto& f : files) all += f.name + ":" + (f.present ? f.sha256 : "-") + "\n";
  return sha256_hex(all);
}

DataBundle load_bundle(const std::string& dir) {
  DataBundle b;
  b.dir = dir;
  if (!fs::is_directory(dir)) fail(Err::IoError, "data directory not found: " + dir);
  auto load = [&](const std::string& name, auto&& parse) {
    TableFile f;
    f.name = name;
    fs::path p = fs::path(dir) / name;
    if (fs::exists(p)) {
      std::string text = read_file(p.string());
      f.present = true;
      f.sha256 = sha256_hex(text);
      try {
        parse(text);
      } catch (const Error& e) {
        throw Error(e.code(), name + ": " + e.what());
      }
    }
    b.files.push_back(f);
  };
  Genus3Data& d = b.data;
  d.polys = elliptic_charpolys();
  load("charpolys.csv", [&](const std::string& t) {
    CharPolyTable in = parse_charpoly_csv(t);
    for (int id : in.ids())
      for (int p : in.primes(id)) {
        auto& c = in.get(id, p);
        if (d.polys.has(id, p) && d.polys.get(id, p) != c)
          fail(Err::ValidationFailure, gen(id).name + " at p=" + std::to_string(p) +
                                           " differs from the q-expansion recomputation");
        d.polys.set(id, p, c);
      }
  });
  load("gen_traces.csv", [&](const std::string& t) { d.gen_traces = parse_gen_trace_csv(t); });
  load("a2_ec.csv", [&](const std::string& t) {
    d.a2 = parse_a2_csv(t);
    validate_a2(d.a2);
  });
  load("ec_a3.csv", [&](const std::string& t) { d.ec_a3 = parse_ec_csv(t); });
  load("ec_m3.csv", [&](const std::string& t) { d.ec_m3 = parse_ec_csv(t); });
  load("trace_a3.csv", [&](const std::string& t) { d.tr_a3 = parse_trace_csv(t); });
  load("trace_m3.csv", [&](const std::string& t) { d.tr_m3 = parse_trace_csv(t); });
  for (int g = 1; g <= 3; ++g)
    for (int q : {2, 3, 4, 5}) {
      std::string name = "census_" + std::to_string(g) + "_" + std::to_string(q) + ".csv";
      if (fs::exists(fs::path(dir) / name))
        load(name, [&](const std::string& t) { b.censuses[{g, q}] = parse_census_csv(t, g, q); });
    }
  return b;
}

json header_json(const DataBundle& b) {
  json h;
  h["tool"] = "mgc";
  h["version"] = kToolVersion;
  h["banner"] = kBanner;
  json inputs = json::object();
  for (auto& f : b.files) inputs[f.name] = f.present ? json(f.sha256) : json(nullptr);
  h["inputs"] = inputs;
  h["bundle_hash"] = b.hash();
  return h;
}

json error_json(const Error& e) {
  return json{{"error", err_name(e.code())}, {"message", e.what()}, {"exit_code", err_exit_code(e.code())}};
}

json ec_json(const EquivariantEC& e) {
  json j = json::object();
  for (auto& [mu, m] : e) j[mu.str()] = motive_str(m);
  return j;
}

EquivariantEC ec_from_json(const json& j) {
  EquivariantEC e;
  for (auto& [k, v] : j.items()) e[parse_partition(k)] = parse_motive(v.get<std::string>());
  return e;
}

json diagnostics_json(const SolveReport& r) {
  json j;
  j["target"] = r.target.str();
  j["unknowns"] = r.diag.unknowns;
  j["rows"] = r.diag.rows;
  j["rank"] = r.diag.rank;
  j["pivot_rows"] = r.diag.pivot_rows;
  json res = json::array();
  for (size_t i = 0; i < r.diag.residuals.size(); ++i)
    res.push_back({i < r.tags.size() ? r.tags[i] : std::to_string(i), r.diag.residuals[i].get_str()});
  j["residuals"] = res;
  j["reads"] = r.reads;
  return j;
}

namespace {

SolveReport report_from_json(const json& j, const Target& t, const MotiveExpr& result) {
  SolveReport r;
  r.target = t;
  r.result = result;
  r.diag.unknowns = j.at("unknowns");
  r.diag.rows = j.at("rows");
  r.diag.rank = j.at("rank");
  r.diag.pivot_rows = j.at("pivot_rows").get<std::vector<int>>();
  for (auto& v : j.at("residuals")) {
    r.tags.push_back(v.at(0).get<std::string>());
    r.diag.residuals.push_back(Rat(v.at(1).get<std::string>()));
  }
  r.reads = j.at("reads").get<std::vector<std::string>>();
  return r;
}

}  // namespace

json stage_json(const M3Stage& s) {
  json j;
  j["n"] = s.n;
  j["open"] = ec_json(s.open);
  j["proper"] = ec_json(s.proper);
  j["boundary"] = ec_json(s.boundary);
  json reps = json::object();
  for (auto& [mu, r] : s.reports) reps[mu.str()] = diagnostics_json(r);
  j["diagnostics"] = reps;
  return j;
}

M3Stage stage_from_json(const json& j) {
  M3Stage s;
  s.n = j.at("n");
  s.open = ec_from_json(j.at("open"));
  s.proper = ec_from_json(j.at("proper"));
  s.boundary = ec_from_json(j.at("boundary"));
  for (auto& [k, v] : j.at("diagnostics").items()) {
    Partition mu = parse_partition(k);
    Target t;
    t.kind = TargetKind::M3bar;
    t.n = s.n;
    t.mu = mu;
    s.reports[mu] = report_from_json(v, t, s.proper.at(mu));
  }
  return s;
}

}  // namespace mgc
