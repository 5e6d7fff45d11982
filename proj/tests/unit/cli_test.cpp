#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace gp::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(GP_TEST_DATA_DIR) + "/" + name; }

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Normalize) {
  auto r = call({"normalize", "-g", data("path.json"), "a[1] b[1] a[1]"});
  EXPECT_EQ(r.code, kDecided);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "b[1]");
}

TEST(Cli, ConjugacyExitCodes) {
  auto yes = call({"conj", "-g", data("path.json"), "a[1] c[1]", "c[1] a[1]"});
  EXPECT_EQ(yes.code, kDecided);
  EXPECT_EQ(yes.out, "conjugate; conjugator: a[1]\n");
  auto no = call({"conj", "-g", data("path.json"), "a[1]", "c[1]"});
  EXPECT_EQ(no.code, kNegative);
}

TEST(Cli, EqualityExitCodes) {
  EXPECT_EQ(call({"eq", "-g", data("path.json"), "a[1] b[1]", "b[1] a[1]"}).code, kDecided);
  EXPECT_EQ(call({"eq", "-g", data("path.json"), "a[1] c[1]", "c[1] a[1]"}).code, kNegative);
  EXPECT_EQ(call({"eq", "--brute-force", "--budget", "1", "-g", data("path.json"), "a[1] b[1]", "a[1] c[1]"})
                .code,
            kUnknown);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"normalize", "-g", data("missing.json"), "a[1]"}).code, kUsage);
  EXPECT_EQ(call({"normalize", "-g", data("bad_loop.json"), "a[1]"}).code, kUsage);
  EXPECT_EQ(call({"normalize", "-g", data("path.json"), "q[1]"}).code, kUsage);
  EXPECT_EQ(call({"witness", "-g", data("z.json"), "--mode", "p:6", "x[1]"}).code, kUsage);
  auto r = call({"frobnicate"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, WitnessJson) {
  auto r = call({"witness", "-g", data("zz.json"), "--mode", "p:2", "x[1]", "x[2]"});
  EXPECT_EQ(r.code, kDecided);
  EXPECT_NE(r.out.find("\"x\": 4"), std::string::npos);
  EXPECT_EQ(call({"witness", "-g", data("zz.json"), "x[1]", "y[1] x[1] y[-1]"}).code, kNegative);
}

TEST(Cli, OutputIsDeterministic) {
  std::vector<std::string> args = {"conj", "--json", "-g", data("zz.json"), "x[1] y[1]", "y[1] x[1]"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Cli, SelftestPasses) {
  auto r = call({"selftest", "--seed", "3"});
  EXPECT_EQ(r.code, kDecided);
  EXPECT_NE(r.out.find("selftest passed"), std::string::npos);
}

}  // namespace
}  // namespace gp::cli
