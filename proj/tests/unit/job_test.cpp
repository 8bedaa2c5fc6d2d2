#include <set>

#include <gtest/gtest.h>
#include <json.hpp>

#include "igusa/error.hpp"
#include "igusa/job.hpp"

using namespace igusa;
using nlohmann::json;

namespace {

const char* kPencil = R"(# pencil, k = 2
vars = x, y
prime = 5
mode = zeta0
```polys
x^2 + y^2
x^4 + y^4 + x*y   # f_l
```
)";

std::size_t error_line(const std::string& text) {
  try {
    parse_job(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

}  // namespace

TEST(JobParse, ReadsAllKeys) {
  auto cfg = parse_job(std::string(kPencil) + "depth = 2\nexpsum_levels = 1\nbudget = 1e6\noutput = json\nregion = origin\n");
  EXPECT_EQ(cfg.vars, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(cfg.polys, (std::vector<std::string>{"x^2 + y^2", "x^4 + y^4 + x*y"}));
  EXPECT_EQ(cfg.prime, 5u);
  EXPECT_EQ(cfg.mode, Mode::Zeta0);
  EXPECT_EQ(cfg.depth, 2u);
  EXPECT_EQ(cfg.expsum_levels, 1u);
  EXPECT_EQ(cfg.budget, 1e6);
  EXPECT_TRUE(cfg.json_output);
  EXPECT_EQ(cfg.region, Region::Origin);
}

TEST(JobParse, ErrorsReportTheLine) {
  EXPECT_EQ(error_line("vars = x\nprime = 3\ncolour = red\n"), 3u);
  EXPECT_EQ(error_line("vars = x\nvars = y\n"), 2u);
  EXPECT_EQ(error_line("vars = x\nprime = 3\n```polys\nx\n"), 3u);
  EXPECT_EQ(error_line("vars = x\nprime = three\n"), 2u);
  EXPECT_EQ(error_line("vars = x\nmode = integrate\n"), 2u);
  EXPECT_EQ(error_line("just words\n"), 1u);
  EXPECT_THROW(parse_job("vars = x\nprime = 3\n"), ParseError);
  EXPECT_THROW(parse_job("vars = 1x\n"), ParseError);
}

TEST(JobParse, Modes) {
  for (auto m : {Mode::Zeta, Mode::Zeta0, Mode::Poles, Mode::Poincare, Mode::ExpSum, Mode::Congruence, Mode::Check,
                 Mode::All}) {
    EXPECT_EQ(parse_mode(to_string(m)), m);
  }
  EXPECT_THROW(parse_mode("bogus"), DomainError);
}

TEST(JobRun, PencilZetaLine) {
  auto res = run_job(parse_job(kPencil));
  EXPECT_EQ(res.exit_code, exit_code::ok);
  auto j = json::parse(res.json);
  EXPECT_EQ(j["zeta"]["function"]["s_form"], "8*5^{-1-2s}/(1 - 5^{-2s})");
  EXPECT_EQ(j["zeta"]["scope"], "at_origin");
  EXPECT_NE(res.text.find("8*5^{-1-2s}/(1 - 5^{-2s})"), std::string::npos);
  std::vector<std::string> keys;
  auto ordered = nlohmann::ordered_json::parse(res.json);
  for (auto& [k, v] : ordered.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"config", "certificates", "fan", "zeta", "poles", "oracle", "checks",
                                             "exit_code"}));
}

TEST(JobRun, ReportIsDeterministic) {
  auto cfg = parse_job(kPencil);
  EXPECT_EQ(run_job(cfg).json, run_job(cfg).json);
}

TEST(JobRun, PolesOfConeSection) {
  auto cfg = parse_job(
      "vars = x,y,z\nprime = 5\nmode = poles\nregion = origin\n```polys\nx+y-z\nx^8+y^8+z^8+x^2*y^2*z^2\n```\n");
  auto res = run_job(cfg);
  ASSERT_EQ(res.exit_code, exit_code::ok) << res.text;
  auto j = json::parse(res.json);
  std::set<std::string> cands;
  for (auto& c : j["poles"]["candidates"]) cands.insert(c["re"]);
  EXPECT_EQ(cands, (std::set<std::string>{"-1", "-3/8", "-1/3"}));
  EXPECT_EQ(j["poles"]["beta_f"], "-1/3");
  EXPECT_EQ(j["poles"]["beta_f_multiplicity"], 1);
}

TEST(JobRun, ExitCodes) {
  auto bad_poly = parse_job("vars = x,y\nprime = 5\nmode = zeta\n```polys\nx+y\nx^2 + + y^2\n```\n");
  auto r1 = run_job(bad_poly);
  EXPECT_EQ(r1.exit_code, exit_code::usage);
  EXPECT_EQ(json::parse(r1.json)["error"]["position"], 6);

  auto degenerate = parse_job("vars = x,y\nprime = 3\nmode = zeta\n```polys\nx+2*y\nx^2+x*y+y^2\n```\n");
  auto r2 = run_job(degenerate);
  EXPECT_EQ(r2.exit_code, exit_code::hypothesis);
  auto w = json::parse(r2.json)["error"]["witness"];
  EXPECT_TRUE(w["reverified"].get<bool>());

  auto big = parse_job("vars = x,y,z\nprime = 5\nmode = congruence\ndepth = 6\nbudget = 1e5\n```polys\nx+y-z\nx^8+y^8+z^8+x^2*y^2*z^2\n```\n");
  EXPECT_EQ(run_job(big).exit_code, exit_code::budget);

  auto even = parse_job("vars = x,y\nprime = 4\nmode = zeta\n```polys\nx+y\nx^2+y^2\n```\n");
  EXPECT_EQ(run_job(even).exit_code, exit_code::usage);
}

TEST(JobRun, PoincareChecksGate) {
  auto cfg = parse_job("vars = x,y\nprime = 3\nmode = poincare\ndepth = 3\n```polys\nx+y\nx^2+y^2\n```\n");
  auto res = run_job(cfg);
  EXPECT_EQ(res.exit_code, exit_code::ok) << res.text;
  auto j = json::parse(res.json);
  std::size_t coeffs = 0;
  for (auto& c : j["checks"]) {
    if (c["name"].get<std::string>().rfind("poincare_m", 0) == 0) {
      ++coeffs;
      EXPECT_TRUE(c["passed"].get<bool>());
    }
  }
  EXPECT_EQ(coeffs, 4u);
}

TEST(JobRun, CheckModeReportsBothScopes) {
  auto cfg = parse_job("vars = x,y\nprime = 5\nmode = check\n```polys\nx^2+y^2\nx^4+y^4+x*y\n```\n");
  auto j = json::parse(run_job(cfg).json);
  EXPECT_TRUE(j["certificates"]["nondegenerate"].contains("global"));
  EXPECT_TRUE(j["certificates"]["nondegenerate"].contains("at_origin"));
  EXPECT_FALSE(j["certificates"]["good_reduction"].get<bool>());
}
