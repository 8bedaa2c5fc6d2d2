// igusa <command> --input job.cfg [--json out.json] [--prime P] [--depth M]

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "igusa/error.hpp"
#include "igusa/job.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Local zeta functions of non-degenerate complete intersections"};
  app.require_subcommand(1, 1);

  std::string input, json_path, region;
  std::uint64_t prime = 0;
  std::size_t depth = 0, levels = 0;
  double budget = 0;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"zeta", "Z(s) over Z_p^n"},
      {"zeta0", "Z_0(s) over (pZ_p)^n"},
      {"poles", "candidate and actual pole lines"},
      {"poincare", "Poincare series, checked against congruence counts"},
      {"expsum", "exponential sums and their decay"},
      {"congruence", "brute-force N_m table"},
      {"check", "convenience, non-degeneracy and good-reduction certificates"},
      {"all", "every stage"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input,-i", input, "job file")->required()->check(CLI::ExistingFile);
    sub->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
    sub->add_option("--prime,-p", prime, "override the prime");
    sub->add_option("--depth", depth, "override the congruence depth");
    sub->add_option("--levels", levels, "override the number of exponential-sum levels");
    sub->add_option("--budget", budget, "override the enumeration budget");
    sub->add_option("--region", region, "full or origin")->check(CLI::IsMember({"full", "origin"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : igusa::exit_code::usage;
  }

  std::ifstream in(input);
  std::stringstream buf;
  buf << in.rdbuf();

  igusa::JobConfig cfg;
  try {
    cfg = igusa::parse_job(buf.str());
  } catch (const igusa::ParseError& e) {
    std::cerr << input << ": " << e.what() << "\n";
    return igusa::exit_code::usage;
  }
  cfg.mode = igusa::parse_mode(app.get_subcommands().front()->get_name());
  if (prime) cfg.prime = prime;
  if (depth) cfg.depth = depth;
  if (levels) cfg.expsum_levels = levels;
  if (budget > 0) cfg.budget = budget;
  if (!region.empty()) cfg.region = region == "full" ? igusa::Region::Full : igusa::Region::Origin;

  auto res = igusa::run_job(cfg);
  if (json_path == "-" || (json_path.empty() && cfg.json_output)) {
    std::cout << res.json << "\n";
  } else {
    std::cout << res.text;
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) {
        std::cerr << "cannot write " << json_path << "\n";
        return igusa::exit_code::usage;
      }
      out << res.json << "\n";
    }
  }
  if (res.exit_code != igusa::exit_code::ok && res.exit_code != igusa::exit_code::oracle_mismatch) {
    std::cerr << "igusa: exit " << res.exit_code << "\n";
  }
  return res.exit_code;
}
