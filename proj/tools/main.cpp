// lbp: generate tables, run verification scenarios, check OEIS fixtures.
#include "lbp/lbp.h"

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>

#ifndef LBP_DEFAULT_FIXTURES
#define LBP_DEFAULT_FIXTURES "tests/fixtures/oeis"
#endif

namespace {

using Context = std::unique_ptr<lbp_context, decltype(&lbp_context_free)>;
using Report = std::unique_ptr<lbp_report, decltype(&lbp_report_free)>;

int fail(const Context& ctx, lbp_status st) {
  std::fprintf(stderr, "error: %s\n", lbp_last_error(ctx.get()));
  return static_cast<int>(st);
}

int set(const Context& ctx, const char* key, const std::string& value) {
  const lbp_status st = lbp_set_param(ctx.get(), key, value.c_str());
  return st == LBP_OK ? 0 : fail(ctx, st);
}

int emit(char* text) {
  std::fputs(text, stdout);
  lbp_string_free(text);
  return 0;
}

// Prints the rendered report; the exit code mirrors the run status.
int emit_report(const Context& ctx, lbp_status st, lbp_report* raw, const std::string& format) {
  if (st != LBP_OK && st != LBP_VERIFY_FAILED) return fail(ctx, st);
  Report rep(raw, &lbp_report_free);
  char* text = nullptr;
  const lbp_status rs = lbp_report_render(rep.get(), format.c_str(), &text);
  if (rs != LBP_OK) {
    std::fprintf(stderr, "error: cannot render report as '%s'\n", format.c_str());
    return static_cast<int>(rs);
  }
  emit(text);
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laurent biorthogonal polynomials: exact tables and identity checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lbp_version()));

  std::string b = "sym", c = "sym", format = "csv", route = "matrix_inverse", shape = "t", of = "moment", ortho = "Q";
  std::string fixtures = LBP_DEFAULT_FIXTURES, generator;
  long order = 12;
  std::string kind, scenario, sequence;

  auto* gen = app.add_subcommand("generate", "Print a table as CSV or JSON");
  gen->add_option("kind", kind, "lbp-coeffs | moments | production | hankel | toeplitz | cfrac-expand | ortho-array")->required();
  gen->add_option("--b", b, "rational, 'sym', or a periodic list such as 1,2")->capture_default_str();
  gen->add_option("--c", c, "rational, 'sym', or a periodic list")->capture_default_str();
  gen->add_option("--order", order, "truncation order N")->capture_default_str();
  gen->add_option("--format", format, "csv | json")->capture_default_str();
  gen->add_option("--route", route, "moment route for moments and hankel")->capture_default_str();
  gen->add_option("--shape", shape, "cfrac-expand shape: s | j | t")->capture_default_str();
  gen->add_option("--of", of, "production matrix of the moment or coeff array")->capture_default_str();
  gen->add_option("--ortho", ortho, "ortho-array kind: Q | Q_tilde | Q_hat")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Run an identity suite; exit 1 if any check fails");
  ver->add_option("scenario", scenario,
                  "all | moments | example1 | example2 | example3 | example4 | factorizations | hankel | toeplitz | cfrac")
      ->required();
  ver->add_option("--order", order, "truncation order N (>= 8)")->capture_default_str();
  ver->add_option("--format", format, "csv | json")->capture_default_str();

  auto* oeis = app.add_subcommand("oeis-check", "Compare a generator against a vendored OEIS fixture");
  oeis->add_option("id", sequence, "sequence id, e.g. A006318")->required();
  oeis->add_option("--generator", generator, "generator name (defaults to the one registered for the id)");
  oeis->add_option("--fixtures", fixtures, "fixture directory")->capture_default_str();
  oeis->add_option("--format", format, "csv | json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(LBP_ERR_USAGE);
  }

  Context ctx(lbp_context_new(), &lbp_context_free);
  if (!ctx) return static_cast<int>(LBP_ERR_INTERNAL);
  if (const lbp_status st = lbp_set_order(ctx.get(), order); st != LBP_OK) return fail(ctx, st);

  if (*gen) {
    for (const auto& [key, value] : {std::pair{"b", b}, {"c", c}, {"format", format}, {"route", route}, {"shape", shape},
                                     {"of", of}, {"ortho", ortho}})
      if (const int rc = set(ctx, key, value)) return rc;
    char* text = nullptr;
    const lbp_status st = lbp_generate(ctx.get(), kind.c_str(), &text);
    return st == LBP_OK ? emit(text) : fail(ctx, st);
  }
  if (*ver) {
    lbp_report* rep = nullptr;
    const lbp_status st = lbp_verify(ctx.get(), scenario.c_str(), &rep);
    return emit_report(ctx, st, rep, format);
  }
  if (const int rc = set(ctx, "fixtures", fixtures)) return rc;
  lbp_report* rep = nullptr;
  const lbp_status st = lbp_oeis_check(ctx.get(), sequence.c_str(), generator.empty() ? nullptr : generator.c_str(), &rep);
  return emit_report(ctx, st, rep, format);
}
