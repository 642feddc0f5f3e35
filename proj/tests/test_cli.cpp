#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sbmotive/cli.hpp"

using namespace sbmotive;
using namespace sbmotive::cli;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "sbmotive_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& body) {
  std::ofstream(p) << body;
}

}  // namespace

TEST(CliDecompose, ExitStatuses) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_decompose(5, 2, 3, "", Format::text, out, err), 0);
  EXPECT_NE(out.str().find("verdict: verified"), std::string::npos);
  EXPECT_EQ(cmd_decompose(5, 2, 1, "", Format::text, out, err), 1);
  EXPECT_EQ(cmd_decompose(6, 3, 1, "", Format::text, out, err), 2);
  EXPECT_EQ(cmd_decompose(5, 0, 1, "", Format::text, out, err), 2);
  EXPECT_EQ(cmd_decompose(1, 1, 1, "", Format::json, out, err), 2);
}

TEST(CliDecompose, WritesJsonFile) {
  const auto path = scratch("cert.json");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_decompose(7, 3, 5, path.string(), Format::json, out, err), 0);
  EXPECT_TRUE(out.str().empty());
  std::ifstream f(path);
  const auto j = Json::parse(f);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["verdict"], "verified");
}

TEST(CliDecompose, UnwritableOutputIsInvalid) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_decompose(5, 2, 3, "/nonexistent-dir/x.json", Format::json, out, err), 2);
}

TEST(CliVerify, Cong2Has31Passes) {
  VerifyOptions o;
  o.suite = "cong2";
  o.max_m = 30;
  o.format = Format::json;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_verify(o, out, err), 0);
  const auto j = Json::parse(out.str());
  EXPECT_EQ(j["summary"]["total"], 31);
  EXPECT_EQ(j["summary"]["passed"], 31);
  EXPECT_EQ(j["checks"][30]["expected"], "1073741824");
  EXPECT_FALSE(j.contains("wall_time_ms"));
}

TEST(CliVerify, EverySuitePasses) {
  for (const auto& s : verify_suites()) {
    VerifyOptions o;
    o.suite = s;
    o.budget = EnumerationBudget{6};
    std::ostringstream out, err;
    EXPECT_EQ(cmd_verify(o, out, err), 0) << s << '\n' << err.str();
  }
}

TEST(CliVerify, CongPrimes) {
  VerifyOptions o;
  o.suite = "cong";
  o.primes = std::vector<int>{5, 7, 11, 13};
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(o, out, err), 0);
  EXPECT_EQ(out.str().find("FAIL"), std::string::npos);
}

TEST(CliVerify, PoincareDivisibility) {
  VerifyOptions o;
  o.suite = "poincare";
  o.max_n = 20;
  o.format = Format::json;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_verify(o, out, err), 0);
  const auto j = Json::parse(out.str());
  int checked = 0;
  for (const auto& c : j["checks"])
    if (c["name"] == "poincare.divides_iff_coprime") ++checked;
  EXPECT_EQ(checked, 19 * 20 / 2);
}

TEST(CliVerify, BadBoundsReturnTwo) {
  std::ostringstream out, err;
  VerifyOptions a;
  a.suite = "rs";
  a.max_d = 0;
  EXPECT_EQ(cmd_verify(a, out, err), 2);
  VerifyOptions b;
  b.suite = "cong";
  b.primes = std::vector<int>{9};
  EXPECT_EQ(cmd_verify(b, out, err), 2);
  VerifyOptions c;
  c.suite = "nope";
  EXPECT_EQ(cmd_verify(c, out, err), 2);
  VerifyOptions d;
  d.suite = "pieri";
  d.max_n = 1;
  EXPECT_EQ(cmd_verify(d, out, err), 2);
  VerifyOptions e;
  e.suite = "cong2";
  e.max_m = -3;
  EXPECT_EQ(cmd_verify(e, out, err), 2);
}

TEST(CliVerify, ReportsAreByteIdentical) {
  VerifyOptions o;
  o.suite = "all";
  o.format = Format::json;
  std::ostringstream a, b, err;
  cmd_verify(o, a, err);
  cmd_verify(o, b, err);
  EXPECT_EQ(a.str(), b.str());
}

TEST(CliVerify, TimingIsOptIn) {
  VerifyOptions o;
  o.suite = "cong2";
  o.max_m = 3;
  o.timing = true;
  o.format = Format::json;
  std::ostringstream out, err;
  cmd_verify(o, out, err);
  EXPECT_TRUE(Json::parse(out.str()).contains("wall_time_ms"));
}

TEST(CliCompose, DiagonalWithItself) {
  const auto path = scratch("diag.json");
  write_file(path, correspondence_to_json(diagonal_projective(6)).dump());
  std::ostringstream out, err;
  ASSERT_EQ(cmd_compose(path.string(), path.string(), Format::json, out, err), 0);
  EXPECT_EQ(correspondence_from_json(Json::parse(out.str())), diagonal_projective(6));
}

TEST(CliCompose, StoredCertificateGivesDiagonal) {
  const auto path = scratch("cert_7_2_4.json");
  write_file(path, certificate_to_json(build_decomposition(7, 2, 4)).dump());
  std::ostringstream out, err;
  ASSERT_EQ(cmd_compose(path.string() + "#beta", path.string() + "#alpha", Format::text, out, err), 0);
  EXPECT_NE(out.str().find("diagonal: yes"), std::string::npos);
}

TEST(CliCompose, MismatchAndBadInputReturnTwo) {
  const auto a = scratch("d4.json"), b = scratch("d5.json"), bad = scratch("bad.json");
  write_file(a, correspondence_to_json(diagonal_projective(4)).dump());
  write_file(b, correspondence_to_json(diagonal_projective(5)).dump());
  write_file(bad, "{not json");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_compose(a.string(), b.string(), Format::text, out, err), 2);
  EXPECT_EQ(cmd_compose(bad.string(), a.string(), Format::text, out, err), 2);
  EXPECT_EQ(cmd_compose(scratch("missing.json").string(), a.string(), Format::text, out, err), 2);
  EXPECT_EQ(cmd_compose(a.string() + "#alpha", a.string(), Format::text, out, err), 2);
}

TEST(CliPoincare, Output) {
  std::ostringstream out, err;
  ASSERT_EQ(cmd_poincare(5, 2, Format::text, out, err), 0);
  EXPECT_NE(out.str().find("[1, 1, 2, 2, 2, 1, 1]"), std::string::npos);
  EXPECT_NE(out.str().find("quotient by P^4: [1, 0, 1]"), std::string::npos);
  std::ostringstream o2;
  ASSERT_EQ(cmd_poincare(4, 2, Format::json, o2, err), 0);
  EXPECT_FALSE(Json::parse(o2.str())["grassmannians"][0]["divisible"].get<bool>());
  EXPECT_EQ(cmd_poincare(1, std::nullopt, Format::text, out, err), 2);
}
