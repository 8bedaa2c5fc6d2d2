#include "igusa/job.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

#include <json.hpp>

#include "igusa/error.hpp"
#include "igusa/zeta.hpp"

namespace igusa {

namespace {

using json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) {
  auto h = s.find('#');
  return trim(h == std::string::npos ? s : s.substr(0, h));
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

template <class T>
T parse_unsigned(const std::string& v, const std::string& key, std::size_t line) {
  T out{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ParseError(key + ": expected a nonnegative integer, got '" + v + "'", line, "line");
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// ------------------------------------------------------------ JSON helpers

json vec_json(std::span<const std::int64_t> v) { return json(std::vector<std::int64_t>(v.begin(), v.end())); }

json ratfun_json(const RatFun& r) {
  json num = json::array();
  const auto& c = r.numerator().coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) num.push_back({{"power", k}, {"coeff", to_string(c[k])}});
  }
  json den = json::array();
  for (const auto& [f, m] : r.denominator()) den.push_back({{"a", f.a}, {"b", f.b}, {"multiplicity", m}});
  return {{"t_form", r.to_t_string()}, {"s_form", r.to_s_string()}, {"numerator", num}, {"denominator", den}};
}

json witness_json(const PolySystem& sys, const PrimeContext& ctx, const std::optional<DegeneracyWitness>& w) {
  if (!w) return nullptr;
  return {{"direction", vec_json(w->direction)},
          {"point", vec_json(w->point)},
          {"rank", w->rank},
          {"reverified", verify_witness(sys, *w, ctx)}};
}

json cert_json(const PolySystem& sys, const PrimeContext& ctx, const NondegCertificate& c) {
  return {{"ok", c.ok},
          {"scope", to_string(c.scope)},
          {"directions_checked", c.directions_checked},
          {"witness", witness_json(sys, ctx, c.witness)}};
}

std::string complex_str(std::complex<double> z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

// ------------------------------------------------------------ job runner

struct Check {
  std::string name;
  bool passed = false;
  bool gating = true;
  std::string detail;
};

class Runner {
 public:
  Runner(const JobConfig& cfg, const PolySystem& sys, const PrimeContext& ctx, json& rep,
         std::vector<std::string>& text)
      : cfg_(cfg), sys_(sys), ctx_(ctx), rep_(rep), text_(text) {}

  void run() {
    switch (cfg_.mode) {
      case Mode::Check:
        certificates({Scope::Global, Scope::AtOrigin});
        require(region_scope());
        break;
      case Mode::Zeta:
        zeta(Scope::Global);
        break;
      case Mode::Zeta0:
        zeta(Scope::AtOrigin);
        break;
      case Mode::Poles:
        zeta(region_scope());
        break;
      case Mode::Poincare:
        poincare();
        break;
      case Mode::Congruence:
        congruence(nullptr);
        break;
      case Mode::ExpSum:
        expsum();
        break;
      case Mode::All:
        certificates({Scope::Global, Scope::AtOrigin});
        zeta(region_scope());
        if (good_reduction_) {
          poincare();
        } else {
          congruence(nullptr);
          text_.push_back("poincare: skipped (f_1..f_{l-1} lacks good reduction mod p)");
        }
        expsum();
        break;
    }
  }

  const std::vector<Check>& checks() const { return checks_; }

 private:
  Scope region_scope() const { return cfg_.region == Region::Full ? Scope::Global : Scope::AtOrigin; }

  void add_check(Check c) {
    text_.push_back(std::string("check ") + c.name + ": " + (c.passed ? "pass" : "FAIL") +
                    (c.gating ? "" : " (diagnostic)") + (c.detail.empty() ? "" : " - " + c.detail));
    checks_.push_back(std::move(c));
  }

  void certificates(const std::vector<Scope>& scopes) {
    json& out = rep_["certificates"];
    if (!out.is_object()) out = json::object();
    if (!out.contains("convenient")) {
      auto conv = is_convenient(sys_);
      json missing = json::array();
      for (auto [i, k] : conv.missing) missing.push_back({i, k});
      out["convenient"] = {{"ok", conv.convenient}, {"missing", missing}};
      convenient_ = conv.convenient;
      text_.push_back(std::string("convenient: ") + (conv.convenient ? "yes" : "no"));
    }
    for (auto scope : scopes) {
      const std::string key = to_string(scope);
      if (out.contains("nondegenerate") && out["nondegenerate"].contains(key)) continue;
      auto c = check_nondegenerate(sys_, ctx_, scope, cfg_.budget);
      out["nondegenerate"][key] = cert_json(sys_, ctx_, c);
      nondeg_[key] = c;
      text_.push_back("non-degenerate (" + key + "): " + (c.ok ? "yes" : "no"));
      if (sys_.size() >= 2) {
        auto pre = sys_.prefix();
        auto cp = check_nondegenerate(pre, ctx_, scope, cfg_.budget);
        out["nondegenerate_prefix"][key] = cert_json(pre, ctx_, cp);
        nondeg_prefix_[key] = cp;
        text_.push_back("non-degenerate f_1..f_{l-1} (" + key + "): " + (cp.ok ? "yes" : "no"));
      }
    }
    if (sys_.size() >= 2 && !out.contains("good_reduction")) {
      good_reduction_ = check_good_reduction(sys_.prefix(), ctx_, cfg_.budget);
      out["good_reduction"] = good_reduction_;
      text_.push_back(std::string("good reduction of f_1..f_{l-1}: ") + (good_reduction_ ? "yes" : "no"));
    }
  }

  // Raises HypothesisError with a structured witness in the report.
  void require(Scope scope) {
    const std::string key = to_string(scope);
    auto fail = [&](const std::string& what, const NondegCertificate& c, const PolySystem& s) {
      rep_["error_witness"] = witness_json(s, ctx_, c.witness);
      const auto& w = *c.witness;
      std::ostringstream os;
      os << "direction (";
      for (std::size_t i = 0; i < w.direction.size(); ++i) os << (i ? "," : "") << w.direction[i];
      os << "), point (";
      for (std::size_t i = 0; i < w.point.size(); ++i) os << (i ? "," : "") << w.point[i];
      os << ") mod " << ctx_.p() << ", Jacobian rank " << w.rank;
      throw HypothesisError(what, os.str());
    };
    if (cfg_.mode != Mode::Check && !convenient_) {
      throw HypothesisError("system is not convenient", "see certificates.convenient.missing");
    }
    if (!nondeg_.at(key).ok) fail("non-degeneracy (" + key + ") fails", nondeg_.at(key), sys_);
    if (cfg_.mode != Mode::Check && nondeg_prefix_.count(key) && !nondeg_prefix_.at(key).ok) {
      fail("non-degeneracy of f_1..f_{l-1} (" + key + ") fails", nondeg_prefix_.at(key), sys_.prefix());
    }
  }

  void fan_section(const Fan& fan) {
    json cones = json::array();
    for (const auto& c : fan.cones) {
      json gens = json::array();
      for (const auto& g : c.generators) gens.push_back(vec_json(g));
      cones.push_back({{"rays", c.rays}, {"generators", gens}, {"dim", c.dim}, {"simple", c.simple}});
    }
    json skel = json::array();
    for (const auto& r : fan.skeleton) skel.push_back(vec_json(r));
    rep_["fan"] = {{"skeleton", skel}, {"cone_count", fan.cones.size()}, {"cones", cones}};
    text_.push_back("fan: " + std::to_string(fan.skeleton.size()) + " rays, " + std::to_string(fan.cones.size()) +
                    " simplicial cones");
  }

  const ZetaReport& zeta(Scope scope) {
    certificates({scope});
    require(scope);
    EngineOptions opts;
    opts.require_certificates = false;  // already certified above, with witnesses in the report
    opts.budget = cfg_.budget;
    ZetaReport rep = scope == Scope::Global ? zeta_full(sys_, ctx_, opts) : zeta_origin(sys_, ctx_, opts);
    fan_section(rep.fan);

    json contribs = json::array();
    for (const auto& cc : rep.contributions) {
      json gens = json::array();
      for (const auto& g : cc.cone.generators) gens.push_back(vec_json(g));
      contribs.push_back({{"rays", cc.cone.rays},
                          {"generators", gens},
                          {"barycenter", vec_json(cc.barycenter)},
                          {"c_open", cc.counts.open},
                          {"c_closed", cc.counts.closed},
                          {"L", cc.L.to_t_string()},
                          {"S", cc.S.to_t_string()},
                          {"product", cc.product.to_t_string()}});
    }
    const std::string label = good_reduction_ ? "Z" : "Z_delta";
    rep_["zeta"] = {{"scope", to_string(scope)},
                    {"label", label},
                    {"function", ratfun_json(rep.zeta)},
                    {"L0", scope == Scope::Global ? ratfun_json(rep.L0) : json(nullptr)},
                    {"contributions", contribs}};
    text_.push_back(label + (scope == Scope::Global ? "" : "_0") + "(s) = " + rep.zeta.to_s_string());
    text_.push_back("  in t = p^-s: " + rep.zeta.to_t_string());

    json cands = json::array();
    for (const auto& c : rep.candidates.lines) {
      cands.push_back({{"ray", c.ray.empty() ? json(nullptr) : vec_json(c.ray)},
                       {"re", to_string(c.re)},
                       {"period", c.period}});
    }
    json actual = json::array();
    bool contained = true;
    std::size_t beta_mult = 0;
    for (const auto& pl : rep.poles) {
      actual.push_back({{"re", to_string(pl.line.re)},
                        {"period", pl.line.period},
                        {"multiplicity", pl.line.multiplicity},
                        {"candidate", pl.candidate}});
      contained &= pl.candidate;
      if (rep.beta_f && pl.line.re == *rep.beta_f) beta_mult = pl.line.multiplicity;
    }
    rep_["poles"] = {{"candidates", cands},
                     {"gamma_f", rep.candidates.gamma_f ? json(to_string(*rep.candidates.gamma_f)) : json(nullptr)},
                     {"multiplicity_bound", rep.candidates.multiplicity_bound},
                     {"actual", actual},
                     {"beta_f", rep.beta_f ? json(to_string(*rep.beta_f)) : json(nullptr)},
                     {"beta_f_multiplicity", beta_mult}};

    std::string cand_txt, act_txt;
    std::set<mpq_class> seen;
    for (const auto& c : rep.candidates.lines) {
      if (seen.insert(c.re).second) cand_txt += (cand_txt.empty() ? "" : ", ") + to_string(c.re);
    }
    for (const auto& pl : rep.poles) {
      act_txt += (act_txt.empty() ? "" : ", ") + to_string(pl.line.re) + " (mult " +
                 std::to_string(pl.line.multiplicity) + ", period " + std::to_string(pl.line.period) + ")";
    }
    text_.push_back("candidate pole lines: {" + cand_txt + "}");
    text_.push_back("actual pole lines: {" + act_txt + "}");
    if (rep.candidates.gamma_f) text_.push_back("gamma_f = " + to_string(*rep.candidates.gamma_f));
    if (rep.beta_f) text_.push_back("beta_f = " + to_string(*rep.beta_f));
    add_check({"pole_containment", contained, true, "actual pole lines lie among the candidates"});
    zeta_ = std::move(rep);
    return *zeta_;
  }

  void poincare() {
    certificates({Scope::Global});
    if (!good_reduction_) {
      throw HypothesisError("the Poincare series identity needs good reduction",
                            "f_1..f_{l-1} is singular somewhere over F_" + std::to_string(ctx_.p()));
    }
    RatFun z = (zeta_ && zeta_->scope == Scope::Global) ? zeta_->zeta : RatFun(ctx_.q());
    if (!zeta_ || zeta_->scope != Scope::Global) {
      require(Scope::Global);
      EngineOptions opts;
      opts.require_certificates = false;
      opts.budget = cfg_.budget;
      z = zeta_full(sys_, ctx_, opts).zeta;
    }
    RatFun P = poincare_from_zeta(z);
    rep_["zeta"]["poincare"] = ratfun_json(P);
    text_.push_back("P(t) = " + P.to_t_string());
    congruence(&P);
  }

  void congruence(const RatFun* P) {
    auto table = congruence_table(sys_, ctx_, cfg_.depth, cfg_.budget);
    std::vector<mpq_class> expected;
    if (P) expected = P->taylor(cfg_.depth);
    json rows = json::array();
    for (std::size_t m = 0; m <= cfg_.depth; ++m) {
      json row = {{"m", m}, {"N_m", std::to_string(table.counts[m])}, {"computed", to_string(table.normalized[m])}};
      if (P) {
        const bool match = expected[m] == table.normalized[m];
        row["expected"] = to_string(expected[m]);
        row["match"] = match;
        add_check({"poincare_m" + std::to_string(m), match, true,
                   "p^{-m(n-l+1)} N_m = " + to_string(table.normalized[m]) + ", series coefficient " +
                       to_string(expected[m])});
      }
      rows.push_back(row);
      text_.push_back("N_" + std::to_string(m) + " = " + std::to_string(table.counts[m]));
    }
    rep_["oracle"]["congruence"] = {{"raw", table.raw}, {"rows", rows}};
  }

  void expsum() {
    if (cfg_.expsum_levels == 0) return;
    const std::uint64_t p = ctx_.p();
    json rows = json::array();
    std::vector<std::size_t> levels;
    std::vector<std::complex<double>> values;
    bool conj_ok = true;
    double worst_conj = 0;
    for (std::size_t m = 1; m <= cfg_.expsum_levels; ++m) {
      const std::uint64_t pm = checked_pow(p, m);
      for (std::uint64_t u : {std::uint64_t{1}, pm - 1}) {
        auto v = exp_sum(sys_, ctx_, m, u, cfg_.budget);
        rows.push_back({{"m", m}, {"u", u}, {"value", {v.real(), v.imag()}}, {"abs", std::abs(v)}});
        if (u == 1) {
          levels.push_back(m);
          values.push_back(v);
        } else {
          const double d = std::abs(v - std::conj(values.back()));
          worst_conj = std::max(worst_conj, d);
          conj_ok &= d < 1e-9;
        }
      }
      text_.push_back("E(p^-" + std::to_string(m) + ") = " + complex_str(values.back()));
    }
    json& out = rep_["oracle"]["expsum"];
    out["rows"] = rows;
    add_check({"expsum_conjugation", conj_ok, true, "max |E(-u) - conj E(u)| = " + std::to_string(worst_conj)});

    if (levels.size() >= 2 && sys_.size() >= 2) {
      auto cands = candidate_poles(sys_);
      bool nonzero = std::all_of(values.begin(), values.end(), [](auto z) { return std::abs(z) > 0; });
      if (nonzero && cands.gamma_f) {
        const double slope = fit_decay_exponent(levels, values, p);
        const double bound = cands.gamma_f->get_d() + 0.15;
        out["decay"] = {{"fitted", slope}, {"gamma_f", to_string(*cands.gamma_f)}, {"bound", bound},
                        {"within_bound", slope <= bound}};
        add_check({"expsum_decay", slope <= bound, false,
                   "fitted exponent " + std::to_string(slope) + " vs gamma_f + 0.15 = " + std::to_string(bound)});
      }
    }

    if (sys_.size() >= 2 && check_good_reduction(sys_.prefix(), ctx_, cfg_.budget)) {
      json pr = json::array();
      double worst = 0;
      for (std::size_t m = 1; m <= cfg_.expsum_levels; ++m) {
        const double r = stationary_phase_residual(sys_, ctx_, m, 1, cfg_.budget);
        worst = std::max(worst, r);
        pr.push_back({{"m", m}, {"u", 1}, {"residual", r}});
      }
      out["stationary_phase"] = pr;
      // Characters of conductor >= 2 are not modelled, so this is advisory.
      add_check({"stationary_phase", worst < 1e-9, false, "max residual " + std::to_string(worst)});
    }
  }

  const JobConfig& cfg_;
  const PolySystem& sys_;
  const PrimeContext& ctx_;
  json& rep_;
  std::vector<std::string>& text_;
  std::vector<Check> checks_;
  bool convenient_ = true;
  bool good_reduction_ = false;
  std::map<std::string, NondegCertificate> nondeg_, nondeg_prefix_;
  std::optional<ZetaReport> zeta_;
};

json config_json(const JobConfig& cfg) {
  return {{"vars", cfg.vars},
          {"polys", cfg.polys},
          {"prime", std::to_string(cfg.prime)},
          {"mode", to_string(cfg.mode)},
          {"depth", cfg.depth},
          {"expsum_levels", cfg.expsum_levels},
          {"budget", cfg.budget},
          {"region", to_string(cfg.region)}};
}

}  // namespace

Mode parse_mode(const std::string& s) {
  static const std::map<std::string, Mode> modes = {
      {"zeta", Mode::Zeta},         {"zeta0", Mode::Zeta0},           {"poles", Mode::Poles},
      {"poincare", Mode::Poincare}, {"expsum", Mode::ExpSum},         {"congruence", Mode::Congruence},
      {"check", Mode::Check},       {"all", Mode::All}};
  auto it = modes.find(lower(s));
  if (it == modes.end()) throw DomainError("unknown mode '" + s + "'");
  return it->second;
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Zeta: return "zeta";
    case Mode::Zeta0: return "zeta0";
    case Mode::Poles: return "poles";
    case Mode::Poincare: return "poincare";
    case Mode::ExpSum: return "expsum";
    case Mode::Congruence: return "congruence";
    case Mode::Check: return "check";
    case Mode::All: return "all";
  }
  return "all";
}

JobConfig parse_job(const std::string& text) {
  JobConfig cfg;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0, block_start = 0;
  bool in_block = false, have_block = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (in_block) {
      if (t == "```") {
        in_block = false;
        continue;
      }
      t = strip_comment(t);
      if (!t.empty()) cfg.polys.push_back(t);
      continue;
    }
    t = strip_comment(t);
    if (t.empty()) continue;
    if (t.rfind("```", 0) == 0) {
      const std::string tag = trim(t.substr(3));
      if (tag != "polys") throw ParseError("unknown fenced block '" + tag + "'", lineno, "line");
      if (have_block) throw ParseError("second polys block", lineno, "line");
      in_block = have_block = true;
      block_start = lineno;
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno, "line");
    const std::string key = lower(trim(t.substr(0, eq)));
    const std::string value = trim(t.substr(eq + 1));
    if (!seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", lineno, "line");
    if (key == "vars") {
      std::string v = value;
      std::replace(v.begin(), v.end(), ',', ' ');
      std::istringstream vs(v);
      std::string name;
      while (vs >> name) {
        if (!is_identifier(name)) throw ParseError("bad variable name '" + name + "'", lineno, "line");
        cfg.vars.push_back(name);
      }
      if (cfg.vars.empty()) throw ParseError("vars: no variables given", lineno, "line");
    } else if (key == "prime") {
      cfg.prime = parse_unsigned<std::uint64_t>(value, key, lineno);
    } else if (key == "mode") {
      try {
        cfg.mode = parse_mode(value);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), lineno, "line");
      }
    } else if (key == "depth") {
      cfg.depth = parse_unsigned<std::size_t>(value, key, lineno);
    } else if (key == "expsum_levels") {
      cfg.expsum_levels = parse_unsigned<std::size_t>(value, key, lineno);
    } else if (key == "budget") {
      char* end = nullptr;
      cfg.budget = std::strtod(value.c_str(), &end);
      if (value.empty() || *end != '\0' || !(cfg.budget > 0)) {
        throw ParseError("budget: expected a positive number, got '" + value + "'", lineno, "line");
      }
    } else if (key == "output") {
      const std::string v = lower(value);
      if (v != "text" && v != "json") throw ParseError("output must be text or json", lineno, "line");
      cfg.json_output = v == "json";
    } else if (key == "region") {
      const std::string v = lower(value);
      if (v != "full" && v != "origin") throw ParseError("region must be full or origin", lineno, "line");
      cfg.region = v == "full" ? Region::Full : Region::Origin;
    } else {
      throw ParseError("unknown key '" + key + "'", lineno, "line");
    }
  }
  if (in_block) throw ParseError("polys block is not closed", block_start, "line");
  if (cfg.vars.empty()) throw ParseError("missing 'vars'", lineno, "line");
  if (cfg.prime == 0) throw ParseError("missing 'prime'", lineno, "line");
  if (cfg.polys.empty()) throw ParseError("missing polys block", lineno, "line");
  return cfg;
}

JobResult run_job(const JobConfig& cfg) {
  json rep;
  rep["config"] = config_json(cfg);
  for (const char* k : {"certificates", "fan", "zeta", "poles", "oracle"}) rep[k] = nullptr;
  rep["checks"] = json::array();
  std::vector<std::string> text;
  text.push_back("igusa " + to_string(cfg.mode) + ": p = " + std::to_string(cfg.prime) +
                 ", n = " + std::to_string(cfg.vars.size()) + ", l = " + std::to_string(cfg.polys.size()));

  JobResult res;
  auto set_error = [&](const std::string& type, const std::string& msg, int code, json extra = json::object()) {
    json e = {{"type", type}, {"message", msg}};
    for (auto& [k, v] : extra.items()) e[k] = v;
    rep["error"] = e;
    res.exit_code = code;
    text.push_back("error (" + type + "): " + msg);
  };

  std::vector<Check> checks;
  try {
    std::vector<IntPolynomial> polys;
    for (std::size_t i = 0; i < cfg.polys.size(); ++i) {
      try {
        polys.push_back(parse_polynomial(cfg.polys[i], cfg.vars));
      } catch (const ParseError& e) {
        set_error("parse", "polynomial " + std::to_string(i + 1) + ": " + e.what(), exit_code::usage,
                  {{"polynomial", i}, {"position", e.position()}});
        throw;
      }
    }
    PolySystem sys(cfg.vars.size(), std::move(polys));
    PrimeContext ctx(cfg.prime);
    const std::size_t l = sys.size(), n = sys.dim();
    const std::size_t min_l = cfg.mode == Mode::Check ? 1 : 2;
    if (l < min_l || l > n) {
      throw DomainError("mode " + to_string(cfg.mode) + " needs " + std::to_string(min_l) + " <= l <= n (got l = " +
                        std::to_string(l) + ", n = " + std::to_string(n) + ")");
    }
    if (n > kMaxDimension) throw DomainError("dimension exceeds the cap of " + std::to_string(kMaxDimension));
    Runner runner(cfg, sys, ctx, rep, text);
    try {
      runner.run();
    } catch (...) {
      checks = runner.checks();
      throw;
    }
    checks = runner.checks();
  } catch (const ParseError& e) {
    if (!rep.contains("error")) set_error("parse", e.what(), exit_code::usage, {{"position", e.position()}});
  } catch (const HypothesisError& e) {
    json extra = {{"detail", e.detail()}};
    if (rep.contains("error_witness")) {
      extra["witness"] = rep["error_witness"];
      rep.erase("error_witness");
    }
    set_error("hypothesis", e.what(), exit_code::hypothesis, extra);
  } catch (const BudgetExceeded& e) {
    set_error("budget", e.what(), exit_code::budget, {{"requested", e.requested()}, {"cap", e.cap()}});
  } catch (const DomainError& e) {
    set_error("domain", e.what(), exit_code::usage);
  }

  bool gating_ok = true;
  for (const auto& c : checks) {
    rep["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"gating", c.gating}, {"detail", c.detail}});
    if (c.gating && !c.passed) gating_ok = false;
  }
  if (res.exit_code == exit_code::ok && !gating_ok) {
    res.exit_code = exit_code::oracle_mismatch;
    text.push_back("result: oracle mismatch");
  }
  rep["exit_code"] = res.exit_code;

  res.json = rep.dump(2);
  for (const auto& t : text) res.text += t + "\n";
  return res;
}

}  // namespace igusa
