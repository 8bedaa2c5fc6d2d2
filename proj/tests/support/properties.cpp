#include "properties.hpp"

#include <random>
#include <sstream>

#include "igusa/fan.hpp"
#include "igusa/linalg.hpp"
#include "igusa/oracle.hpp"
#include "igusa/ratfun.hpp"

namespace igusa::props {

namespace {

std::string show(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

void fail(Outcome& o, const std::string& what) {
  if (o.passed) o.first_failure = what;
  o.passed = false;
}

// numerator and expanded denominator, nothing else
struct Plain {
  QPoly num, den;
};

Plain plain(const RatFun& r) { return {r.numerator(), r.expanded_denominator()}; }

bool same(const RatFun& r, const Plain& p) {
  auto a = plain(r);
  return a.num * p.den == p.num * a.den;
}

}  // namespace

Outcome parallelepiped_count(std::size_t cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(1, 4), entry(0, 9);
  Outcome out;
  while (out.cases < cases) {
    const std::size_t n = dim(rng);
    std::vector<IntVec> gens(n, IntVec(n));
    for (auto& g : gens) {
      for (auto& x : g) x = entry(rng);
      g = linalg::make_primitive(g);
    }
    const mpz_class det = abs(linalg::determinant(gens));
    if (det == 0) continue;
    ++out.cases;
    auto c = make_cone(gens);
    auto pts = parallelepiped_points(c);
    if (pts.size() != det.get_ui()) {
      fail(out, "count " + std::to_string(pts.size()) + " != |det| " + det.get_str());
      continue;
    }
    for (const auto& pt : pts) {
      auto mu = linalg::solve_coefficients(gens, pt);
      bool ok = mu.has_value();
      for (std::size_t i = 0; ok && i < n; ++i) ok = (*mu)[i] >= 0 && (*mu)[i] < 1;
      if (!ok) fail(out, "point " + show(pt) + " outside the parallelepiped");
    }
  }
  return out;
}

Outcome fan_partition(std::size_t rays, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(0, 9);
  auto sys = parse_system({"x+y-z", "x^8+y^8+z^8+x^2*y^2*z^2"}, {"x", "y", "z"});
  auto fan = triangulate(dual_subdivision(sys));
  Outcome out;
  while (out.cases < rays) {
    IntVec a(3);
    for (auto& x : a) x = entry(rng);
    if (a == IntVec{0, 0, 0}) continue;
    ++out.cases;
    std::size_t hits = 0;
    std::optional<std::size_t> where;
    for (std::size_t i = 0; i < fan.cones.size(); ++i) {
      if (fan.cones[i].dim > 0 && in_relative_interior(fan.cones[i], a)) {
        ++hits;
        where = i;
      }
    }
    if (hits != 1) {
      fail(out, show(a) + " lies in " + std::to_string(hits) + " cones");
      continue;
    }
    // the cone must sit inside one cell: same signature as its barycenter
    if (direction_signature(sys, a) != direction_signature(sys, barycenter(fan.cones[*where]))) {
      fail(out, show(a) + " changes cell inside its cone");
    }
  }
  return out;
}

Outcome ratfun_reference(std::size_t pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-3, 3), deg(0, 4), nfac(0, 3), expo(-4, 2), tpow(1, 4);
  const std::uint64_t q = 3;
  auto random_ratfun = [&]() {
    std::vector<mpq_class> c(deg(rng) + 1);
    for (auto& x : c) x = mpq_class(small(rng), 1 + std::abs(small(rng)));
    std::map<GeomFactor, std::size_t> den;
    for (int i = nfac(rng); i > 0; --i) ++den[GeomFactor{expo(rng), tpow(rng)}];
    return RatFun(q, QPoly(c), den);
  };
  Outcome out;
  for (; out.cases < pairs; ++out.cases) {
    auto a = random_ratfun(), b = random_ratfun();
    auto pa = plain(a), pb = plain(b);
    Plain sum{pa.num * pb.den + pb.num * pa.den, pa.den * pb.den};
    Plain prod{pa.num * pb.num, pa.den * pb.den};
    if (!same(a + b, sum)) fail(out, "sum mismatch at pair " + std::to_string(out.cases));
    if (!same(a * b, prod)) fail(out, "product mismatch at pair " + std::to_string(out.cases));
    if (!(a - a).is_zero()) fail(out, "a - a nonzero at pair " + std::to_string(out.cases));
    // the series of the sum is the sum of the series
    auto ta = a.taylor(6), tb = b.taylor(6), ts = (a + b).taylor(6);
    for (std::size_t k = 0; k <= 6; ++k) {
      if (ts[k] != ta[k] + tb[k]) fail(out, "taylor mismatch at pair " + std::to_string(out.cases));
    }
  }
  return out;
}

Outcome expsum_conjugation(double tol) {
  Outcome out;
  struct Case {
    std::vector<std::string> polys, vars;
    std::uint64_t p;
    std::size_t max_m;
  };
  const std::vector<Case> cases = {
      {{"x+y", "x^2+y^2"}, {"x", "y"}, 5, 3},
      {{"x+y", "x^2+y^2"}, {"x", "y"}, 3, 4},
      {{"x+y-z", "x^8+y^8+z^8+x^2*y^2*z^2"}, {"x", "y", "z"}, 3, 2},
  };
  for (const auto& c : cases) {
    auto sys = parse_system(c.polys, c.vars);
    PrimeContext ctx(c.p);
    for (std::size_t m = 1; m <= c.max_m; ++m) {
      const std::uint64_t pm = checked_pow(c.p, m);
      for (std::uint64_t u = 1; u < pm; ++u) {
        if (u % c.p == 0) continue;
        ++out.cases;
        auto d = std::abs(exp_sum(sys, ctx, m, pm - u) - std::conj(exp_sum(sys, ctx, m, u)));
        if (!(d < tol)) fail(out, "p=" + std::to_string(c.p) + " m=" + std::to_string(m) + " u=" + std::to_string(u));
      }
    }
  }
  return out;
}

}  // namespace igusa::props
