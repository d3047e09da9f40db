#include "mgc/mgc.h"

#include <exception>
#include <memory>
#include <string>

#include "commands.hpp"

using namespace mgc;
using nlohmann::json;

static_assert(static_cast<int>(Err::CapViolation) == MGC_CAP_VIOLATION);
static_assert(static_cast<int>(Err::MissingData) == MGC_MISSING_DATA);
static_assert(static_cast<int>(Err::ResidualNonzero) == MGC_RESIDUAL_NONZERO);

struct mgc_session {
  CommandContext ctx;
  std::string hash;
};

struct mgc_result {
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error = "{}";

mgc_status set_error(Err code, const std::string& msg) {
  last_error = error_json(Error(code, msg)).dump();
  return static_cast<mgc_status>(code);
}

// Runs f, translating exceptions into status codes and the last-error JSON.
template <class F>
mgc_status guarded(mgc_result** out, F&& f) {
  if (out) *out = nullptr;
  try {
    CommandResult r = f();
    if (out) *out = new mgc_result{r.doc.dump(2) + "\n", r.text};
    if (r.status != Err::Ok) return set_error(r.status, r.message);
    last_error = "{}";
    return MGC_OK;
  } catch (const Error& e) {
    return set_error(e.code(), e.what());
  } catch (const std::bad_alloc&) {
    last_error = json{{"error", "InternalError"}, {"message", "out of memory"}, {"exit_code", 2}}.dump();
    return MGC_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = json{{"error", "InternalError"}, {"message", e.what()}, {"exit_code", 2}}.dump();
    return MGC_INTERNAL_ERROR;
  }
}

}  // namespace

extern "C" {

const char* mgc_version(void) { return kToolVersion; }

const char* mgc_status_name(mgc_status s) {
  if (s == MGC_INTERNAL_ERROR) return "InternalError";
  return err_name(static_cast<Err>(s));
}

int mgc_exit_code(mgc_status s) {
  if (s == MGC_INTERNAL_ERROR) return 2;
  return err_exit_code(static_cast<Err>(s));
}

const char* mgc_last_error(void) { return last_error.c_str(); }

mgc_status mgc_session_open(const char* data_dir, const char* out_dir, int threads, mgc_session** out) {
  if (!out) return set_error(Err::InvalidArgument, "null output pointer");
  *out = nullptr;
  if (!data_dir) return set_error(Err::InvalidArgument, "null data directory");
  mgc_result* unused = nullptr;
  auto s = std::make_unique<mgc_session>();
  mgc_status st = guarded(&unused, [&] {
    s->ctx.bundle = load_bundle(data_dir);
    if (out_dir) s->ctx.out_dir = out_dir;
    s->ctx.threads = threads;
    s->hash = s->ctx.bundle.hash();
    return CommandResult{};
  });
  delete unused;
  if (st == MGC_OK) *out = s.release();
  return st;
}

void mgc_session_free(mgc_session* s) { delete s; }

const char* mgc_session_hash(const mgc_session* s) { return s ? s->hash.c_str() : ""; }

mgc_status mgc_compute_a3(mgc_session* s, int a, int b, int c, mgc_result** out) {
  if (!s) return set_error(Err::InvalidArgument, "null session");
  return guarded(out, [&] { return cmd_compute_a3(s->ctx, {a, b, c}); });
}

mgc_status mgc_compute_m3(mgc_session* s, int n, const char* mu, mgc_result** out) {
  if (!s) return set_error(Err::InvalidArgument, "null session");
  return guarded(out, [&] {
    std::optional<Partition> p;
    if (mu) p = parse_partition(mu);
    return cmd_compute_m3(s->ctx, n, p);
  });
}

mgc_status mgc_boundary(mgc_session* s, int g, int n, const char* engine, mgc_result** out) {
  if (!s) return set_error(Err::InvalidArgument, "null session");
  return guarded(out, [&] { return cmd_boundary(s->ctx, g, n, engine ? engine : "gk"); });
}

mgc_status mgc_verify_counts(mgc_session* s, int q, int genus, mgc_result** out) {
  if (!s) return set_error(Err::InvalidArgument, "null session");
  return guarded(out, [&] { return cmd_verify_counts(s->ctx, q, genus); });
}

mgc_status mgc_verify_data(mgc_session* s, mgc_result** out) {
  if (!s) return set_error(Err::InvalidArgument, "null session");
  return guarded(out, [&] { return cmd_verify_data(s->ctx); });
}

mgc_status mgc_report(mgc_session* s, int n, mgc_result** out) {
  if (!s) return set_error(Err::InvalidArgument, "null session");
  return guarded(out, [&] { return cmd_report(s->ctx, n); });
}

mgc_status mgc_derive_a2(int max_size, const char* path, mgc_result** out) {
  if (!path) return set_error(Err::InvalidArgument, "null path");
  return guarded(out, [&] { return cmd_derive_a2(max_size, path); });
}

mgc_status mgc_normalize_motive(const char* text, mgc_result** out) {
  if (!text) return set_error(Err::InvalidArgument, "null expression");
  return guarded(out, [&] {
    CommandResult r;
    std::string e = motive_str(parse_motive(text));
    r.doc = json{{"expression", e}};
    r.text = e + "\n";
    return r;
  });
}

const char* mgc_result_json(const mgc_result* r) { return r ? r->json.c_str() : ""; }
const char* mgc_result_text(const mgc_result* r) { return r ? r->text.c_str() : ""; }
void mgc_result_free(mgc_result* r) { delete r; }

}  // extern "C"
