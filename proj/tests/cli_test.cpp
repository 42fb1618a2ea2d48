#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <gft/constants.hpp>
#include <gft/errors.hpp>

#include "gft_cli.hpp"

using gft::Complex;
using Json = nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun gft_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gft::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json gft_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const CliRun r = gft_run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

double result_value(const Json& doc, const std::string& name) {
  for (const Json& r : doc["results"]) {
    if (r["name"] == name) {
      const Json& v = r["value"];
      return v.is_object() ? v["re"].get<double>() : v.get<double>();
    }
  }
  ADD_FAILURE() << "no result " << name;
  return 0.0;
}

}  // namespace

TEST(Cli, ParseComplex) {
  using gft::cli::parse_complex;
  EXPECT_EQ(parse_complex("1"), Complex(1, 0));
  EXPECT_EQ(parse_complex("-1"), Complex(-1, 0));
  EXPECT_EQ(parse_complex("i"), Complex(0, 1));
  EXPECT_EQ(parse_complex("-i"), Complex(0, -1));
  EXPECT_EQ(parse_complex("2.5i"), Complex(0, 2.5));
  EXPECT_EQ(parse_complex("0.5+0.25i"), Complex(0.5, 0.25));
  EXPECT_EQ(parse_complex("1e-3-2i"), Complex(1e-3, -2));
  EXPECT_EQ(parse_complex("1-i"), Complex(1, -1));
  EXPECT_THROW(parse_complex(""), gft::DomainError);
  EXPECT_THROW(parse_complex("abc"), gft::DomainError);
  EXPECT_THROW(parse_complex("1+2"), gft::DomainError);
}

TEST(Cli, Formatting) {
  EXPECT_EQ(gft::cli::format_number(1.0 / 3), "0.333333333333");
  EXPECT_EQ(gft::cli::format_number(2.0), "2");
  EXPECT_EQ(gft::cli::round12(1.0 / 3), 0.333333333333);
}

TEST(Cli, CoeffsExamples) {
  const Json se = gft_json({"coeffs", "--class", "se", "--eps", "1", "--m", "1"});
  EXPECT_NEAR(result_value(se, "a3"), 0.75, 1e-11);
  EXPECT_NEAR(result_value(se, "a4"), 17.0 / 36, 1e-11);
  EXPECT_NEAR(result_value(se, "a5"), 19.0 / 72, 1e-11);
  EXPECT_NEAR(result_value(se, "A2"), -1.0, 1e-11);
  EXPECT_NEAR(result_value(se, "A4"), -31.0 / 18, 1e-11);
  EXPECT_NEAR(result_value(se, "A5"), 361.0 / 144, 1e-11);

  const Json f2 = gft_json({"coeffs", "--class", "sr", "--m", "2"});
  EXPECT_NEAR(result_value(f2, "a3"), 1 / (2 * gft::kPhiR), 1e-11);
  EXPECT_NEAR(result_value(f2, "a5"), 5 / (8 * gft::kPhiR * gft::kPhiR), 1e-11);

  EXPECT_EQ(gft_run({"coeffs", "--class", "se", "--m", "0"}).code, 2);
  EXPECT_EQ(gft_run({"coeffs", "--class", "nope"}).code, 2);
  EXPECT_EQ(gft_run({"coeffs", "--class", "se", "--eps", "0.5"}).code, 2);
  EXPECT_EQ(gft_run({"coeffs", "--class", "se", "--N", "4"}).code, 2);
  EXPECT_EQ(gft_run({"coeffs", "--class", "s_alpha", "--param", "alpha=0.3"}).code, 0);
}

TEST(Cli, BoundExamples) {
  EXPECT_NEAR(result_value(gft_json({"bound", "hankel2-inverse", "--class", "se"}), "|A2 A4 - A3^2|"),
              29.0 / 98, 1e-12);
  EXPECT_NEAR(result_value(gft_json({"bound", "fs-inverse", "--class", "se", "--mu", "0"}),
                           "|A3 - mu A2^2|"),
              1.25, 1e-12);
  EXPECT_NEAR(result_value(gft_json({"bound", "fs-inverse", "--B", "1,0.5", "--mu", "1.5"}),
                           "|A3 - mu A2^2|"),
              0.5, 1e-12);
  EXPECT_EQ(gft_json({"bound", "class-inverse", "--class", "sr"})["results"].size(), 4u);
  EXPECT_EQ(gft_json({"bound", "conjectures"})["results"].size(), 8u);
  EXPECT_EQ(gft_run({"bound", "class-inverse", "--class", "sl"}).code, 2);
  EXPECT_EQ(gft_run({"bound", "bogus"}).code, 2);
  EXPECT_EQ(gft_run({"bound", "fs-inverse", "--B", "1,x"}).code, 2);
}

TEST(Cli, RadiusExamples) {
  EXPECT_NEAR(result_value(gft_json({"radius", "--thm", "E", "--branch", "a"}), "radius"), 0.864665,
              1e-6);
  const Json dd = gft_json({"radius", "--thm", "D", "--branch", "d", "--beta", "1.5"});
  const double k = gft::kPhiR;
  EXPECT_NEAR(result_value(dd, "radius"), k * (-1.5 + std::sqrt(1.5 * 1.5 + 2)) / 2, 1e-11);
  EXPECT_NEAR(result_value(dd, "bisection"), result_value(dd, "radius"), 1e-11);
  EXPECT_EQ(gft_run({"radius", "--thm", "D", "--branch", "d", "--beta", "0.5"}).code, 2);
  EXPECT_EQ(gft_run({"radius", "--thm", "D", "--branch", "d", "--beta", "1.5", "--verify"}).code, 0);
  EXPECT_EQ(gft_run({"radius", "--thm", "E", "--branch", "d", "--verify"}).code, 1);
  EXPECT_EQ(gft_run({"radius", "--thm", "X", "--branch", "a"}).code, 2);
}

TEST(Cli, VerifyTargets) {
  const CliRun a4 = gft_run({"verify", "--target", "bound:absA4:sr", "--seed", "7", "--starts", "16",
                          "--iterations", "400", "--threads", "1"});
  EXPECT_EQ(a4.code, 0) << a4.err;
  EXPECT_NE(a4.out.find("[SHARP-CONFIRMED] bound:absA4:sr"), std::string::npos) << a4.out;

  // conjecture violations are reported but do not fail the run
  const CliRun conj = gft_run({"verify", "--target", "bound:abs_an_direct(4):sr", "--starts", "16",
                            "--iterations", "400", "--threads", "1"});
  EXPECT_EQ(conj.code, 0);
  EXPECT_NE(conj.out.find("[VIOLATION]"), std::string::npos);

  EXPECT_EQ(gft_run({"verify", "--target", "radius:D:a:0.5"}).code, 0);
  EXPECT_EQ(gft_run({"verify", "--target", "radius:E:d"}).code, 1);
  EXPECT_EQ(gft_run({"verify", "--target", "bound:absA4:sl"}).code, 2);
  EXPECT_EQ(gft_run({"verify", "--target", "nope"}).code, 2);
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("GFT_SEED", "42", 1);
  const Json doc = gft_json({"verify", "--target", "bound:absA2:se", "--starts", "2", "--iterations", "50"});
  EXPECT_EQ(doc["seed"], 42);
  const Json explicit_seed =
      gft_json({"--seed", "3", "verify", "--target", "bound:absA2:se", "--starts", "2", "--iterations", "50"});
  EXPECT_EQ(explicit_seed["seed"], 3);
  ::unsetenv("GFT_SEED");
}

TEST(Cli, JsonSchemaAndRoundTrip) {
  const Json doc = gft_json({"coeffs", "--class", "sr", "--m", "3", "--N", "8"});
  for (const char* key : {"command", "config", "results", "verdicts", "seed", "version"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["config"]["--class"], "sr");
  EXPECT_EQ(doc["config"]["--m"], "3");
  // every number re-serializes to the same double
  std::function<void(const Json&)> walk = [&](const Json& v) {
    if (v.is_number_float()) {
      const double x = v.get<double>();
      EXPECT_EQ(Json::parse(Json(x).dump()).get<double>(), x);
      EXPECT_EQ(gft::cli::round12(x), x);
    }
    if (v.is_structured()) {
      for (const Json& c : v) walk(c);
    }
  };
  walk(doc);
}

TEST(Cli, TextMatchesJson) {
  const std::vector<std::string> args{"bound", "sr-direct", "--mu", "0"};
  const Json doc = gft_json(args);
  const CliRun text = gft_run(args);
  ASSERT_EQ(text.code, 0);
  for (const Json& r : doc["results"]) {
    const std::string needle =
        r["name"].get<std::string>() + " = " + gft::cli::format_number(r["value"].get<double>());
    EXPECT_NE(text.out.find(needle), std::string::npos) << needle;
  }
}

TEST(Cli, RegionAndPlot) {
  const CliRun in = gft_run({"region", "contains", "--class", "se", "--w", "1+0.5i"});
  EXPECT_EQ(in.code, 0);
  EXPECT_EQ(in.out.rfind("contains = true", 0), 0u) << in.out;
  const Json out = gft_json({"region", "contains", "--region", "exp", "--w", "2.73"});
  EXPECT_EQ(out["results"][0]["value"], false);

  const CliRun csv = gft_run({"plot-data", "--region", "exp", "--samples", "4"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("t,Re,Im\n0,2.71828182846,0\n", 0), 0u) << csv.out;
  EXPECT_EQ(gft_run({"plot-data", "--region", "half_plane", "--beta", "2"}).code, 2);
}

TEST(Cli, ClassFile) {
  const std::string path = ::testing::TempDir() + "gft_class.json";
  {
    std::ofstream f(path);
    f << R"({"name":"mine","B":[1,0.5,0.16666666666666666,0.041666666666666664]})";
  }
  const Json doc = gft_json({"bound", "hankel2-inverse", "--class-file", path});
  EXPECT_NEAR(doc["results"][0]["value"].get<double>(), 29.0 / 98, 1e-11);
  EXPECT_EQ(gft_run({"bound", "hankel2-inverse", "--class-file", path + ".missing"}).code, 2);
  std::remove(path.c_str());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(gft_run({}).code, 2);
  EXPECT_EQ(gft_run({"frobnicate"}).code, 2);
  EXPECT_EQ(gft_run({"coeffs", "--m", "x"}).code, 2);
  const CliRun help = gft_run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("coeffs"), std::string::npos);
}
