#include "lbp/lbp.h"

#include "lbp/errors.hpp"
#include "lbp/generate.hpp"
#include "lbp/oeis.hpp"
#include "lbp/report.hpp"
#include "lbp/scenarios.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct lbp_context {
  lbp::GenerateRequest req;
  std::string fixtures = "tests/fixtures/oeis";
  std::string error;
};

struct lbp_report {
  lbp::ScenarioReport rep;
};

namespace {

constexpr const char* kVersion = "1.0.0";

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs fn, mapping exceptions to status codes and recording the message.
template <class Fn>
lbp_status guarded(lbp_context* ctx, Fn&& fn) {
  if (ctx == nullptr) return LBP_ERR_USAGE;
  try {
    ctx->error.clear();
    return fn();
  } catch (const lbp::UsageError& e) {
    ctx->error = e.what();
    return LBP_ERR_USAGE;
  } catch (const lbp::MathError& e) {
    ctx->error = e.what();
    return LBP_ERR_MATH;
  } catch (const std::exception& e) {
    ctx->error = std::string("internal error: ") + e.what();
    return LBP_ERR_INTERNAL;
  } catch (...) {
    ctx->error = "internal error";
    return LBP_ERR_INTERNAL;
  }
}

lbp_status finish(lbp::ScenarioReport rep, lbp_report** out) {
  const bool ok = rep.passed();
  *out = new lbp_report{std::move(rep)};
  return ok ? LBP_OK : LBP_VERIFY_FAILED;
}

const lbp::Check* check_at(const lbp_report* r, size_t i) {
  if (r == nullptr || i >= r->rep.checks.size()) return nullptr;
  return &r->rep.checks[i];
}

}  // namespace

extern "C" {

const char* lbp_version(void) { return kVersion; }

lbp_context* lbp_context_new(void) { return new (std::nothrow) lbp_context(); }

void lbp_context_free(lbp_context* ctx) { delete ctx; }

const char* lbp_last_error(const lbp_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

lbp_status lbp_set_order(lbp_context* ctx, long order) {
  return guarded(ctx, [&] {
    if (order < 0) throw lbp::UsageError("order must be non-negative");
    ctx->req.order = static_cast<std::size_t>(order);
    return LBP_OK;
  });
}

lbp_status lbp_set_param(lbp_context* ctx, const char* key, const char* value) {
  return guarded(ctx, [&] {
    if (key == nullptr || value == nullptr) throw lbp::UsageError("null parameter key or value");
    const std::string k = key;
    std::string* slot = k == "b"          ? &ctx->req.b
                        : k == "c"        ? &ctx->req.c
                        : k == "format"   ? &ctx->req.format
                        : k == "route"    ? &ctx->req.route
                        : k == "shape"    ? &ctx->req.shape
                        : k == "of"       ? &ctx->req.of
                        : k == "ortho"    ? &ctx->req.ortho
                        : k == "fixtures" ? &ctx->fixtures
                                          : nullptr;
    if (slot == nullptr) throw lbp::UsageError("unknown parameter '" + k + "'");
    *slot = value;
    return LBP_OK;
  });
}

lbp_status lbp_generate(lbp_context* ctx, const char* kind, char** out) {
  return guarded(ctx, [&] {
    if (kind == nullptr || out == nullptr) throw lbp::UsageError("null kind or output pointer");
    lbp::GenerateRequest req = ctx->req;
    req.kind = kind;
    *out = dup(lbp::generate(req));
    return LBP_OK;
  });
}

void lbp_string_free(char* s) { std::free(s); }

lbp_status lbp_verify(lbp_context* ctx, const char* scenario, lbp_report** out) {
  return guarded(ctx, [&] {
    if (scenario == nullptr || out == nullptr) throw lbp::UsageError("null scenario or output pointer");
    return finish(lbp::run_scenario(scenario, ctx->req.order), out);
  });
}

lbp_status lbp_oeis_check(lbp_context* ctx, const char* sequence_id, const char* generator, lbp_report** out) {
  return guarded(ctx, [&] {
    if (sequence_id == nullptr || out == nullptr) throw lbp::UsageError("null sequence id or output pointer");
    return finish(lbp::oeis_check(ctx->fixtures, sequence_id, generator ? generator : ""), out);
  });
}

int lbp_report_passed(const lbp_report* r) { return r && r->rep.passed() ? 1 : 0; }

const char* lbp_report_id(const lbp_report* r) { return r ? r->rep.id.c_str() : ""; }

size_t lbp_report_check_count(const lbp_report* r) { return r ? r->rep.checks.size() : 0; }

const char* lbp_report_check_name(const lbp_report* r, size_t i) {
  const auto* c = check_at(r, i);
  return c ? c->name.c_str() : "";
}

int lbp_report_check_passed(const lbp_report* r, size_t i) {
  const auto* c = check_at(r, i);
  return c && c->passed ? 1 : 0;
}

long lbp_report_check_first_mismatch(const lbp_report* r, size_t i) {
  const auto* c = check_at(r, i);
  return c ? c->first_mismatch : -1;
}

const char* lbp_report_check_detail(const lbp_report* r, size_t i) {
  const auto* c = check_at(r, i);
  return c ? c->detail.c_str() : "";
}

lbp_status lbp_report_render(const lbp_report* r, const char* format, char** out) {
  if (r == nullptr || out == nullptr) return LBP_ERR_USAGE;
  try {
    *out = dup(lbp::render_report(r->rep, format ? format : "csv"));
    return LBP_OK;
  } catch (const lbp::UsageError&) {
    return LBP_ERR_USAGE;
  } catch (...) {
    return LBP_ERR_INTERNAL;
  }
}

void lbp_report_free(lbp_report* r) { delete r; }

}  // extern "C"
