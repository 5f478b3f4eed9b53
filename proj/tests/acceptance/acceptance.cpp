// Runs the acceptance checks and prints one PASS/FAIL line per criterion.
// Exit status is 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "cyclat/census.hpp"
#include "cyclat/cli.hpp"
#include "cyclat/cyclic.hpp"
#include "cyclat/perm.hpp"
#include "cyclat/polyring.hpp"
#include "cyclat/svp.hpp"
#include "json.hpp"

using namespace cyclat;

namespace {

struct Sanity {
  long long checked = 0;
  long long failed = 0;
  void check(const Lattice& l) {
    ++checked;
    if (!minkowski_sanity(l)) ++failed;
  }
  void check(const Lattice& l, const SvpResult& s) {
    ++checked;
    if (!minkowski_sanity(l, s)) ++failed;
  }
  void check(const CensusDetail& d) {
    checked += static_cast<long long>(d.lattices.size());
    for (const auto& [key, e] : d.lattices) failed += !e.minkowski_ok;
  }
};

Sanity sanity;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fixed6(const Rational& q) { return to_fixed(q, 6, false); }

std::vector<Permutation> ncycles(std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i + 1;
  std::vector<Permutation> out;
  do {
    Permutation p(img);
    if (p.is_ncycle()) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Outcome c1_sandwich() {
  std::ostringstream d;
  bool ok = true;
  for (long long R : {20, 30, 40, 50}) {
    const Dim2Report rep = dim2_closed_forms(Int(R));
    const bool in = rep.brute_in_bounds();
    ok = ok && in;
    d << "R=" << R << " brute=" << *rep.brute_count << " in [" << fixed6(rep.lower_bound.lo) << ", "
      << to_fixed(rep.upper_bound.hi, 6, true) << "]" << (in ? "" : " OUTSIDE") << "; ";
    for (const Lattice& l : dim2_lattices(Int(R))) sanity.check(l);
  }
  return {ok, d.str()};
}

Outcome c2_constants() {
  const BoundConstants c = dim2_bound_constants();
  const PrintedConstants p = dim2_printed_constants();
  const Rational ulp(1, 1000000);
  auto trunc6 = [&](const Rational& x) { return Rational(floor(x * 1000000), 1000000); };
  std::ostringstream d;
  bool ok = true;

  // leading coefficients: exact values truncated to six places
  const bool c1 = trunc6(c.c1.lo) == p.c1 && trunc6(c.c1.hi) == p.c1;
  const bool c3 = trunc6(c.c3.lo) == p.c3 && trunc6(c.c3.hi) == p.c3;
  ok = ok && c1 && c3;
  d << "c1=" << fixed6(c.c1.lo) << (c1 ? " ok" : " MISMATCH") << ", c3=" << fixed6(c.c3.lo)
    << (c3 ? " ok" : " MISMATCH") << "; ";

  // linear coefficients: sums of six-place parts
  const Interval sqrt2 = sqrt_enclosure(Rational(2));
  const Interval sqrt3 = sqrt_enclosure(Rational(3));
  const Interval s = sqrt_enclosure(Interval::point(Rational(2)) + sqrt3);
  auto num = [](long long v) { return Interval::point(Rational(v)); };
  const Interval c2_head = (num(5) + sqrt3 + num(4) * s) / (num(2) * s);
  const Interval inv_sqrt2 = num(1) / sqrt2;
  const Interval c4_head = s / num(2);
  // each part truncated or rounded to six places
  auto places = [&](const Interval& x) {
    return std::vector<Rational>{trunc6(x.lo), trunc6(x.lo + ulp / 2)};
  };
  bool c2 = false, c4 = false;
  for (const Rational& h : places(c2_head))
    for (const Rational& v : places(inv_sqrt2)) c2 = c2 || h - v == p.c2;
  for (const Rational& h : places(c4_head))
    for (const Rational& v : places(inv_sqrt2)) c4 = c4 || h + v == p.c4;
  ok = ok && c2 && c4;
  d << "c2 exact=" << to_fixed(c.c2.lo, 10, false) << " printed=" << fixed6(p.c2)
    << (c2 ? " (matches six-place parts)" : " MISMATCH") << ", c4 exact=" << to_fixed(c.c4.lo, 10, false)
    << " printed=" << fixed6(p.c4) << (c4 ? " (matches six-place parts)" : " MISMATCH") << "; ";

  // evaluations at R = 100 agree with the six-place constants to within their rounding
  const Dim2Report r = dim2_closed_forms(Int(100), false);
  const Rational R(100);
  const Rational tol = ulp * R * R + ulp * R;
  const Rational dl = abs(r.lower_printed - r.lower_bound.lo);
  const Rational du = abs(r.upper_printed - r.upper_bound.hi);
  const bool ev = dl <= tol && du <= tol;
  ok = ok && ev;
  d << "R=100 lower=" << fixed6(r.lower_bound.lo) << " (printed " << fixed6(r.lower_printed)
    << "), upper=" << to_fixed(r.upper_bound.hi, 6, true) << " (printed " << fixed6(r.upper_printed)
    << "), tol=" << fixed6(tol) << (ev ? "" : " EXCEEDED") << "; ";

  const bool narrow = r.lower_bound.width() < ulp * abs(r.lower_bound.lo) &&
                      r.upper_bound.width() < ulp * abs(r.upper_bound.lo);
  ok = ok && narrow;
  d << "enclosure widths " << (narrow ? "< 1e-6 relative" : "TOO WIDE");
  return {ok, d.str()};
}

Outcome c3_prob() {
  bool ok = true;
  int cases = 0;
  std::ostringstream d;
  for (std::size_t n = 2; n <= 5; ++n)
    for (long long R = 1; R <= 5; ++R) {
      if (2 * R <= static_cast<long long>(n) - 1) continue;
      const ProbReport p = prob_full_rank(n, Int(R));
      ++cases;
      if (!p.ok || p.fraction < p.bound) {
        ok = false;
        d << "FAIL N=" << n << " R=" << R << "; ";
      }
    }
  d << cases << " (N,R) pairs";
  return {ok, d.str()};
}

bool circulant_identity(const IntVec& a) {
  const std::size_t n = a.dim();
  const IntMat m = circulant_matrix(a);
  const bool det = m.determinant() == resultant(IntPoly::cycle(n), vec_to_poly(a));
  const std::size_t deg = gcd_with_cycle(a).degree().value();
  const bool rank = m.rank() == n - deg && cyclic_order(a) == n - deg;
  return det && rank;
}

Outcome c4_circulant() {
  long long checked = 0, failed = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    for (const IntVec& a : CubePoints(n, 3)) {
      if (a.is_zero()) continue;
      ++checked;
      failed += !circulant_identity(a);
      if (cyclic_order(a) == n && n <= 3) sanity.check(circulant_lattice(a));
    }
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 1000; ++t) {
    const IntVec a = oracle::random_vec(rng, 2 + rng() % 7, -100, 100);
    if (a.is_zero()) continue;
    ++checked;
    failed += !circulant_identity(a);
  }
  return {failed == 0, std::to_string(checked) + " vectors, " + std::to_string(failed) + " failures"};
}

Outcome c5_corollary() {
  bool ok = true;
  std::ostringstream d;
  for (std::size_t n = 2; n <= 5; ++n) {
    const IntVec a = corollary_vector(std::vector<Int>(n - 1, Int(10 * n + 1)));
    const bool fam = verify_corollary_family(a);
    const Lattice lat = circulant_lattice(a);
    const SvpResult svp = successive_minima(lat);
    const std::vector<IntVec> rots = sivp_via_rotations(a);
    bool norms = rots.size() == svp.lambda_sq.size();
    for (std::size_t i = 0; norms && i < rots.size(); ++i) norms = rots[i].norm_sq() == svp.lambda_sq[i];
    sanity.check(lat, svp);
    ok = ok && fam && norms;
    d << "N=" << n << " a=" << a << (fam && norms ? " ok" : " FAIL") << "; ";
  }
  return {ok, d.str()};
}

Outcome c6_svp_oracle() {
  std::mt19937_64 rng(77);
  int tested = 0, failed = 0;
  while (tested < 200) {
    const std::size_t r = 2 + rng() % 2, n = r + rng() % 2;
    const IntMat b = oracle::random_mat(rng, n, r, -5, 5);
    if (b.rank() != r) continue;
    Int bound = 0;
    for (const IntVec& c : b.columns()) bound = std::max(bound, c.norm_sq());
    failed += enumerate_short(b, bound) != oracle::box_scan(b, bound);
    sanity.check(hnf_canonicalize(b));
    ++tested;
  }
  return {failed == 0, std::to_string(tested) + " lattices, " + std::to_string(failed) + " mismatches"};
}

Outcome c7_growth() {
  std::vector<Int> Rs{Int(3), Int(4), Int(5), Int(6)};
  const std::vector<GrowthRow> rows = growth_table(3, Rs);
  Rational lo = rows.front().ratio, hi = rows.front().ratio;
  std::ostringstream d;
  for (const GrowthRow& g : rows) {
    lo = std::min(lo, g.ratio);
    hi = std::max(hi, g.ratio);
    d << "f3(" << g.R << ")=" << g.count << " ratio " << to_string(g.ratio) << "; ";
  }
  sanity.check(census_detail(3, Int(6), Permutation::standard_cycle(3)));
  const bool ok = lo > 0 && hi < 10 * lo;
  d << "alpha_3 lower estimate " << to_string(lo) << " ~ " << to_fixed(lo, 6, false) << ", max/min "
    << to_fixed(lo > 0 ? Rational(hi / lo) : Rational(0), 6, false);
  return {ok, d.str()};
}

Outcome c8_tau() {
  bool ok = true;
  std::ostringstream d;
  for (std::size_t n : {3u, 4u}) {
    const CensusRecord cyc = census_circulant(n, Int(3));
    const std::vector<Permutation> cycles = ncycles(n);
    for (const Permutation& tau : cycles) {
      bool eq = false;
      try {
        eq = tau_census(n, tau, Int(3)) == cyc;
      } catch (const std::logic_error& e) {
        d << "tau " << tau.to_cycle_string() << ": " << e.what() << "; ";
      }
      if (!eq) {
        ok = false;
        d << "MISMATCH tau=" << tau.to_cycle_string() << "; ";
      }
      sanity.check(census_detail(n, Int(3), tau));
    }
    d << "S" << n << ": " << cycles.size() << " cycles, f=" << cyc.count_lattices << "; ";
  }
  return {ok, d.str()};
}

Outcome c9_signed() {
  int checked = 0, failed = 0;
  for (long long a = -20; a <= 20; ++a)
    for (long long b = -20; b <= 20; ++b) {
      if (a == 0 && b == 0) continue;
      ++checked;
      failed += !dim2_signed_wr_check(Int(a), Int(b));
      if (std::abs(a) <= 5 && std::abs(b) <= 5) sanity.check(signed_circulant_lattice(IntVec{a, b}));
    }
  return {failed == 0, std::to_string(checked) + " pairs, " + std::to_string(failed) + " not WR"};
}

Outcome c10_routes() {
  std::ostringstream d;
  bool ok = true;
  for (long long R = 1; R <= 30; ++R) {
    const Int a = dim2_classification_count(Int(R)), b = dim2_hnf_count(Int(R));
    if (a != b) {
      ok = false;
      d << "R=" << R << " classification " << a << " vs hnf " << b << "; ";
    }
  }
  d << "R=1..30, f(30)=" << dim2_hnf_count(Int(30));
  return {ok, d.str()};
}

Outcome c11_report() {
  std::ostringstream out, err;
  const int code = cli::run({"dim2", "-R", "10,20,50"}, out, err);
  if (code != 0) return {false, "dim2 exited " + std::to_string(code) + ": " + err.str()};
  std::istringstream in(out.str());
  std::ostringstream d;
  bool ok = true;
  int rows = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    const nlohmann::json j = nlohmann::json::parse(line);
    ++rows;
    const long long R = j["R"], disc = j["discrepancy"];
    const bool fields = j.contains("f2_formula") && j.contains("g2_formula") && j["brute_count"].is_number();
    const bool in_bounds = j["in_bounds"] == true;
    const bool small = std::abs(disc) <= 3 * R;
    ok = ok && fields && in_bounds && small;
    d << "R=" << R << " f2=" << j["f2_formula"] << " g2=" << j["g2_formula"] << " brute=" << j["brute_count"]
      << " discrepancy=" << disc << (small ? "" : " >3R") << (in_bounds ? "" : " OUT-OF-BOUNDS") << "; ";
  }
  ok = ok && rows == 3;
  return {ok, d.str()};
}

Outcome c12_sanity() {
  return {sanity.checked > 0 && sanity.failed == 0,
          std::to_string(sanity.checked) + " lattices, " + std::to_string(sanity.failed) + " failures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"C1 dim2 count between quadratic bounds", c1_sandwich},
      {"C2 bound constants", c2_constants},
      {"C3 full-rank probability bound", c3_prob},
      {"C4 circulant determinant and rank", c4_circulant},
      {"C5 corollary family", c5_corollary},
      {"C6 enumeration vs box scan", c6_svp_oracle},
      {"C7 N=3 growth stability", c7_growth},
      {"C8 tau-invariant census bijection", c8_tau},
      {"C9 signed dim2 lattices well rounded", c9_signed},
      {"C10 dim2 routes agree", c10_routes},
      {"C11 dim2 discrepancy report", c11_report},
      {"C12 Minkowski sanity", c12_sanity},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " [" << std::fixed;
    std::cout.precision(1);
    std::cout << secs << "s] " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
