// Exercises the shared library through its C header only.
#include "lbp/lbp.h"

#include <gtest/gtest.h>

#include <memory>
#include <string>

namespace {

struct Ctx {
  lbp_context* p = lbp_context_new();
  ~Ctx() { lbp_context_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  lbp_string_free(s);
  return out;
}

TEST(CApi, GenerateMoments) {
  Ctx ctx;
  ASSERT_NE(ctx.p, nullptr);
  ASSERT_EQ(lbp_set_param(ctx.p, "b", "1"), LBP_OK);
  ASSERT_EQ(lbp_set_param(ctx.p, "c", "1"), LBP_OK);
  ASSERT_EQ(lbp_set_order(ctx.p, 9), LBP_OK);
  char* out = nullptr;
  ASSERT_EQ(lbp_generate(ctx.p, "moments", &out), LBP_OK);
  EXPECT_EQ(take(out), "1,1,2,6,22,90,394,1806,8558,41586\n");
  EXPECT_STREQ(lbp_last_error(ctx.p), "");
}

TEST(CApi, ErrorCodes) {
  Ctx ctx;
  char* out = nullptr;
  EXPECT_EQ(lbp_set_param(ctx.p, "colour", "red"), LBP_ERR_USAGE);
  EXPECT_NE(std::string(lbp_last_error(ctx.p)).find("colour"), std::string::npos);
  EXPECT_EQ(lbp_set_order(ctx.p, -1), LBP_ERR_USAGE);
  lbp_set_param(ctx.p, "b", "0");
  EXPECT_EQ(lbp_generate(ctx.p, "moments", &out), LBP_ERR_MATH);
  EXPECT_NE(std::string(lbp_last_error(ctx.p)).find("nonzero"), std::string::npos);
  lbp_set_param(ctx.p, "b", "1/0");
  EXPECT_EQ(lbp_generate(ctx.p, "moments", &out), LBP_ERR_USAGE);
  EXPECT_EQ(lbp_generate(ctx.p, nullptr, &out), LBP_ERR_USAGE);
  EXPECT_EQ(lbp_generate(nullptr, "moments", &out), LBP_ERR_USAGE);
  lbp_report* rep = nullptr;
  EXPECT_EQ(lbp_verify(ctx.p, "example9", &rep), LBP_ERR_USAGE);
  EXPECT_EQ(rep, nullptr);
}

TEST(CApi, VerifyReport) {
  Ctx ctx;
  lbp_report* rep = nullptr;
  ASSERT_EQ(lbp_verify(ctx.p, "example3", &rep), LBP_OK);
  std::unique_ptr<lbp_report, decltype(&lbp_report_free)> guard(rep, &lbp_report_free);
  EXPECT_EQ(lbp_report_passed(rep), 1);
  EXPECT_STREQ(lbp_report_id(rep), "example3");
  ASSERT_GT(lbp_report_check_count(rep), 3u);
  for (size_t i = 0; i < lbp_report_check_count(rep); ++i) {
    EXPECT_EQ(lbp_report_check_passed(rep, i), 1) << lbp_report_check_name(rep, i);
    EXPECT_EQ(lbp_report_check_first_mismatch(rep, i), -1);
  }
  EXPECT_STREQ(lbp_report_check_name(rep, 999), "");
  char* text = nullptr;
  ASSERT_EQ(lbp_report_render(rep, "json", &text), LBP_OK);
  EXPECT_NE(take(text).find("\"scenario\": \"example3\""), std::string::npos);
  EXPECT_EQ(lbp_report_render(rep, "yaml", &text), LBP_ERR_USAGE);
}

TEST(CApi, OeisCheck) {
  Ctx ctx;
  ASSERT_EQ(lbp_set_param(ctx.p, "fixtures", LBP_FIXTURES_DIR), LBP_OK);
  lbp_report* rep = nullptr;
  ASSERT_EQ(lbp_oeis_check(ctx.p, "A006318", nullptr, &rep), LBP_OK);
  lbp_report_free(rep);
  rep = nullptr;
  // Catalan numbers against the Schroeder fixture: a verification failure.
  ASSERT_EQ(lbp_oeis_check(ctx.p, "A006318", "catalan", &rep), LBP_VERIFY_FAILED);
  EXPECT_EQ(lbp_report_passed(rep), 0);
  EXPECT_EQ(lbp_report_check_first_mismatch(rep, 0), 1);
  lbp_report_free(rep);
  EXPECT_EQ(lbp_oeis_check(ctx.p, "A000000", nullptr, &rep), LBP_ERR_USAGE);
}

TEST(CApi, Version) { EXPECT_STREQ(lbp_version(), "1.0.0"); }

}  // namespace
