#include <CLI11.hpp>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "mgc/mgc.h"

namespace {

struct Options {
  std::string data_dir = "data";
  std::string out_dir = "out";
  int threads = 0;
  bool json = false;
};

int finish(mgc_status st, mgc_result* r, const Options& o) {
  if (r) {
    std::fputs(o.json ? mgc_result_json(r) : mgc_result_text(r), stdout);
    mgc_result_free(r);
  }
  if (st != MGC_OK) {
    std::fprintf(stderr, "%s\n", mgc_last_error());
    return mgc_exit_code(st);
  }
  return 0;
}

template <class F>
int with_session(const Options& o, F&& f) {
  mgc_session* s = nullptr;
  mgc_status st = mgc_session_open(o.data_dir.c_str(), o.out_dir.c_str(), o.threads, &s);
  if (st != MGC_OK) return finish(st, nullptr, o);
  mgc_result* r = nullptr;
  st = f(s, &r);
  mgc_session_free(s);
  return finish(st, r, o);
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motivic Euler characteristics of moduli of genus three curves and local systems"};
  app.set_version_flag("--version", mgc_version());
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--data", o.data_dir, "Directory of ingested tables")->capture_default_str();
  app.add_option("--out", o.out_dir, "Directory for results and caches")->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads for point counts (0 = hardware)");
  app.add_flag("--json", o.json, "Print the JSON document instead of text");

  int rc = 0;

  auto* compute = app.add_subcommand("compute", "Solve an interpolation target")->require_subcommand(1);
  std::string lambda;
  auto* a3 = compute->add_subcommand("a3", "e_c(A_3, V_lambda)");
  a3->add_option("--lambda", lambda, "Highest weight A,B,C")->required();
  a3->callback([&] {
    std::vector<int> l;
    try {
      l = parse_ints(lambda);
    } catch (const std::exception&) {
      l.clear();
    }
    if (l.size() != 3) throw CLI::ValidationError("--lambda", "expected three integers A,B,C");
    rc = with_session(o, [&](mgc_session* s, mgc_result** r) { return mgc_compute_a3(s, l[0], l[1], l[2], r); });
  });
  int n = 0;
  std::string mu;
  auto* m3 = compute->add_subcommand("m3", "S_n-equivariant classes of M_{3,n} and its compactification");
  m3->add_option("--n", n, "Number of marked points (0..14)")->required();
  m3->add_option("--mu", mu, "Partition of n, comma separated");
  m3->callback([&] {
    rc = with_session(o, [&](mgc_session* s, mgc_result** r) {
      return mgc_compute_m3(s, n, mu.empty() ? nullptr : mu.c_str(), r);
    });
  });

  int g = 0;
  std::string engine = "gk";
  auto* boundary = app.add_subcommand("boundary", "Boundary class of M-bar_{g,n}");
  boundary->add_option("--g", g, "Genus")->required();
  boundary->add_option("--n", n, "Number of marked points")->required();
  boundary->add_option("--engine", engine, "gk, direct or both")->check(CLI::IsMember({"gk", "direct", "both"}));
  boundary->callback([&] {
    rc = with_session(o, [&](mgc_session* s, mgc_result** r) { return mgc_boundary(s, g, n, engine.c_str(), r); });
  });

  auto* verify = app.add_subcommand("verify", "Check ingested data")->require_subcommand(1);
  int q = 0;
  auto* counts = verify->add_subcommand("counts", "Recount curves over F_q and diff against the tables");
  counts->add_option("--q", q, "Field size")->required();
  counts->add_option("--genus", g, "Genus 1, 2 or 3")->required();
  counts->callback([&] {
    rc = with_session(o, [&](mgc_session* s, mgc_result** r) { return mgc_verify_counts(s, q, g, r); });
  });
  auto* vdata = verify->add_subcommand("data", "Validate every ingested table");
  vdata->callback([&] { rc = with_session(o, [&](mgc_session* s, mgc_result** r) { return mgc_verify_data(s, r); }); });

  auto* report = app.add_subcommand("report", "Render the table of all partitions of n");
  report->add_option("--n", n, "Number of marked points")->required();
  report->callback([&] { rc = with_session(o, [&](mgc_session* s, mgc_result** r) { return mgc_report(s, n, r); }); });

  auto* derive = app.add_subcommand("derive", "Rebuild derived tables")->require_subcommand(1);
  int max_size = 18;
  std::string path = "data/a2_ec.csv";
  auto* a2 = derive->add_subcommand("a2", "Genus-two table from point counts");
  a2->add_option("--max-size", max_size, "Largest |lambda|")->capture_default_str();
  a2->add_option("--output", path, "Output CSV")->capture_default_str();
  a2->callback([&] {
    mgc_result* r = nullptr;
    mgc_status st = mgc_derive_a2(max_size, path.c_str(), &r);
    rc = finish(st, r, o);
  });

  std::string expr;
  auto* norm = app.add_subcommand("normalize", "Normalize a class in the expression grammar");
  norm->add_option("expression", expr, "Expression")->required();
  norm->callback([&] {
    mgc_result* r = nullptr;
    mgc_status st = mgc_normalize_motive(expr.c_str(), &r);
    rc = finish(st, r, o);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
