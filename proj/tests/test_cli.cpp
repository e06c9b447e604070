#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lpcusp/cli.hpp"
#include "lpcusp/json_io.hpp"

using namespace lpcusp;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "lpcusp_cli_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

Block block(const std::string& core, int dim, int a, int mult = 1, Duality dual = Duality::None) {
  return {{core, dim, dual, core, {}}, a, mult};
}

}  // namespace

TEST(Cli, GroupSummary) {
  auto f = write_temp("s4.json", R"({"kind": "named", "name": "symmetric", "n": 4})");
  auto r = call({"group", "--group", f, "--compact"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = parse_json(r.out, "out");
  EXPECT_EQ(j["command"].get<std::string>().rfind("group", 0), 0u);
  EXPECT_EQ(j["exact"], true);
  EXPECT_EQ(j["result"]["order"], 24);
}

TEST(Cli, ReportsAreDeterministic) {
  auto f = write_temp("q8.json", R"({"kind": "named", "name": "quaternion"})");
  auto a = call({"reps", "--group", f});
  auto b = call({"reps", "--group", f});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ParameterJsonRoundTrip) {
  EnhancedParameter p{{{GroupKindL::U, 4, 1}, {block("o", 1, 1, 1, Duality::ConjOrth), block("o", 1, 3, 1, Duality::ConjOrth)}}, {}};
  p.rho.signs[{"o", 3}] = -1;
  auto j = enhanced_parameter_to_json(p);
  auto back = enhanced_parameter_from_json(j);
  EXPECT_EQ(enhanced_parameter_to_json(back.p).dump(), j.dump());
  EXPECT_EQ(back.p.rho, p.rho);

  auto f = write_temp("u4.json", j.dump());
  auto r = call({"lparam", "classify", "--in", f});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto out = parse_json(r.out, "out");
  EXPECT_EQ(out["result"]["cuspidal"], true);
  EXPECT_EQ(out["result"]["discrete"], true);
}

TEST(Cli, BatchIsIndependentOfThreadCount) {
  Json list = Json::array();
  for (int n = 1; n <= 6; ++n)
    for (int a = 1; a <= n; ++a)
      if (n % a == 0)
        list.push_back(enhanced_parameter_to_json({{{GroupKindL::GLinner, n, 1}, {block("c", n / a, a)}}, {}}));
  auto f = write_temp("batch.json", list.dump());
  auto one = call({"lparam", "batch", "--in", f, "--jobs", "1"});
  auto four = call({"lparam", "batch", "--in", f, "--jobs", "4"});
  ASSERT_EQ(one.code, kExitOk) << one.err;
  ASSERT_EQ(four.code, kExitOk) << four.err;
  EXPECT_EQ(parse_json(one.out, "one")["result"].dump(), parse_json(four.out, "four")["result"].dump());
}

TEST(Cli, MalformedJsonIsAValidationError) {
  auto f = write_temp("bad.json", R"({"kind": "named", )");
  auto r = call({"group", "--group", f});
  EXPECT_EQ(r.code, kExitValidation);
  auto e = parse_json(r.err, "err");
  EXPECT_TRUE(e.contains("error"));
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UnknownSubcommand) { EXPECT_EQ(call({"frobnicate"}).code, kExitValidation); }

TEST(Cli, MissingFile) { EXPECT_EQ(call({"group", "--group", "/nonexistent/x.json"}).code, kExitValidation); }

TEST(Cli, SpinIsNotSupported) {
  auto r = call({"springer", "cuspidal", "--type", "Spin", "--n", "7"});
  EXPECT_EQ(r.code, kExitNotSupported);
}

TEST(Cli, SchemaIsJson) {
  auto r = call({"--schema"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(parse_json(r.out, "schema").is_object());
}

TEST(Cli, CensusRankConvention) {
  // C_4 is Sp(8)
  auto r = call({"springer", "census", "--type", "C", "--rank", "4", "--compact"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = parse_json(r.out, "out");
  EXPECT_EQ(j["result"]["n"], 8);
  EXPECT_EQ(j["result"]["lhs"], j["result"]["rhs"]);
}

TEST(Cli, ExampleCase) {
  auto r = call({"examples", "--case", "A"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
}
