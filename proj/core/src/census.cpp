#include "cyclat/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "cyclat/cyclic.hpp"
#include "cyclat/polyring.hpp"
#include "cyclat/svp.hpp"

namespace cyclat {

GuardExceeded::GuardExceeded(const std::string& what, Int points, Int guard,
                             std::optional<Int> suggested_R)
    : std::length_error(what),
      points_(std::move(points)),
      guard_(std::move(guard)),
      suggested_(std::move(suggested_R)) {}

Int enumeration_guard() {
  const char* env = std::getenv("CYCLAT_GUARD");
  if (!env || !*env) return pow(Int(10), 8);
  const std::string s(env);
  if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("CYCLAT_GUARD must be a nonnegative integer, got '" + s + "'");
  return Int(s);
}

namespace {

long long checked_radius(const Int& R) {
  if (R < 0) throw std::invalid_argument("R must be nonnegative");
  if (R > Int(1) << 30) throw std::invalid_argument("R too large");
  return static_cast<long long>(R);
}

void check_cube_guard(std::size_t N, const Int& R, const char* what) {
  const Int points = pow(2 * R + 1, static_cast<unsigned>(N));
  const Int guard = enumeration_guard();
  if (points <= guard) return;
  Int best = -1;
  for (Int r = 0; pow(2 * r + 1, static_cast<unsigned>(N)) <= guard; ++r) best = r;
  std::optional<Int> suggested;
  std::string msg = std::string(what) + ": (2R+1)^N = " + to_string(points) +
                    " cube points exceeds the guard " + to_string(guard);
  if (best >= 1) {
    suggested = best;
    msg += "; try R <= " + to_string(best);
  }
  throw GuardExceeded(msg, points, guard, suggested);
}

/// Runs fn(first, last, worker) on contiguous chunks of [0, total).
template <class Fn>
void run_chunks(const Int& total, unsigned workers, Fn fn) {
  if (workers == 0) workers = 1;
  if (workers == 1) {
    fn(Int(0), total, 0u);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const Int first = total * w / workers;
    const Int last = total * (w + 1) / workers;
    threads.emplace_back([&, first, last, w] {
      try {
        fn(first, last, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct VisitedLattice {
  std::vector<Int> lambda_sq;
  std::optional<CensusEntry> classification;  // set when lambda_1 = lambda_N
};

struct PartialCensus {
  Int count_vectors = 0;
  std::map<IntMat, CensusEntry> lattices;
};

class OrbitCensus {
 public:
  OrbitCensus(std::size_t n, const Permutation& shift)
      : n_(n), shift_(shift), standard_(shift == Permutation::standard_cycle(n)) {}

  std::size_t order(const IntVec& a) const {
    return standard_ ? cyclic_order(a) : orbit_matrix(a, shift_).rank();
  }
  Lattice lattice(const IntVec& a) const {
    return standard_ ? circulant_lattice(a) : orbit_lattice(a, shift_);
  }

  void visit(const IntVec& a, const Int& bound_sq, PartialCensus& out,
             std::map<IntMat, VisitedLattice>& cache) const {
    const Int norm = a.norm_sq();
    if (norm == 0 || norm > bound_sq) return;
    if (order(a) != n_) return;
    const Lattice lat = lattice(a);
    auto it = cache.find(lat.hnf_key());
    if (it == cache.end()) it = cache.emplace(lat.hnf_key(), classify(lat)).first;
    const VisitedLattice& v = it->second;
    if (!v.classification || v.lambda_sq.front() != norm) return;
    ++out.count_vectors;
    auto [entry, inserted] = out.lattices.try_emplace(lat.hnf_key(), *v.classification);
    if (a == a.sign_canonical()) ++entry->second.multiplicity;
  }

 private:
  VisitedLattice classify(const Lattice& lat) const {
    VisitedLattice v;
    const SvpResult svp = successive_minima(lat);
    v.lambda_sq = svp.lambda_sq;
    if (svp.lambda_sq.front() != svp.lambda_sq.back()) return v;
    CensusEntry e;
    e.multiplicity = 0;
    e.lambda_sq = svp.lambda_sq;
    e.wr = is_well_rounded(svp);
    e.wr_prime = is_wr_prime(lat, svp);
    e.rprime = std::all_of(svp.minimal_reps.begin(), svp.minimal_reps.end(),
                           [&](const IntVec& c) {
                             return standard_ ? gcd_with_cycle(c) == IntPoly{1}
                                              : order(c) == n_;
                           });
    e.minkowski_ok = minkowski_sanity(lat, svp);
    v.classification = std::move(e);
    return v;
  }

  std::size_t n_;
  Permutation shift_;
  bool standard_;
};

CensusRecord summarize(std::size_t N, const Int& R, const Int& count_vectors,
                       const std::map<IntMat, CensusEntry>& lattices) {
  CensusRecord r;
  r.N = N;
  r.R = R;
  r.count_vectors = count_vectors;
  r.count_lattices = lattices.size();
  r.count_WR = r.count_WRprime = r.count_Rprime = r.max_multiplicity = 0;
  for (const auto& [key, e] : lattices) {
    if (e.wr) ++r.count_WR;
    if (e.wr_prime) ++r.count_WRprime;
    if (e.rprime) ++r.count_Rprime;
    r.max_multiplicity = std::max(r.max_multiplicity, e.multiplicity);
  }
  return r;
}

}  // namespace

bool CensusDetail::all_minkowski_ok() const {
  return std::all_of(lattices.begin(), lattices.end(),
                     [](const auto& kv) { return kv.second.minkowski_ok; });
}

CensusDetail census_detail(std::size_t N, const Int& R, const Permutation& shift,
                           unsigned workers) {
  if (N < 2) throw std::invalid_argument("N must be >= 2");
  if (shift.size() != N || !shift.is_ncycle())
    throw std::invalid_argument("shift must be an N-cycle in S_N");
  const long long radius = checked_radius(R);
  check_cube_guard(N, R, "census");
  if (workers == 0) workers = 1;

  const CubePoints cube(N, radius);
  const Int bound_sq = R * R;
  const OrbitCensus census(N, shift);
  std::vector<PartialCensus> parts(workers);
  run_chunks(cube.size(), workers, [&](const Int& first, const Int& last, unsigned w) {
    std::map<IntMat, VisitedLattice> cache;
    cube.for_each(first, last,
                  [&](const IntVec& a) { census.visit(a, bound_sq, parts[w], cache); });
  });

  CensusDetail out;
  Int count_vectors = 0;
  for (PartialCensus& p : parts) {
    count_vectors += p.count_vectors;
    for (auto& [key, e] : p.lattices) {
      auto [it, inserted] = out.lattices.try_emplace(key, e);
      if (!inserted) it->second.multiplicity += e.multiplicity;
    }
  }
  out.record = summarize(N, R, count_vectors, out.lattices);
  return out;
}

CensusRecord census_circulant(std::size_t N, const Int& R, unsigned workers) {
  return census_detail(N, R, Permutation::standard_cycle(N), workers).record;
}

CensusRecord tau_census(std::size_t N, const Permutation& tau, const Int& R, unsigned workers) {
  if (tau.size() != N) throw std::invalid_argument("tau must lie in S_N");
  const Permutation g = conjugator_for_ncycle(tau);
  const IntMat Eg = perm_matrix(g);
  const CensusDetail cyclic = census_detail(N, R, Permutation::standard_cycle(N), workers);
  const CensusDetail direct = census_detail(N, R, tau, workers);

  std::map<IntMat, CensusEntry> mapped;
  for (const auto& [key, e] : cyclic.lattices) {
    const Lattice image = hnf_canonicalize(Eg * key);
    if (!is_invariant(image, tau))
      throw std::logic_error("E_g image of a cyclic lattice is not tau-invariant");
    if (!mapped.emplace(image.hnf_key(), e).second)
      throw std::logic_error("E_g is not injective on hnf keys");
  }
  if (mapped != direct.lattices)
    throw std::logic_error("tau census differs from the conjugated cyclic census");
  const CensusRecord expected = summarize(N, R, cyclic.record.count_vectors, mapped);
  if (!(expected == direct.record) || !(cyclic.record == direct.record))
    throw std::logic_error("tau census record differs from the cyclic census record");
  return direct.record;
}

ProbReport prob_full_rank(std::size_t N, const Int& R) {
  if (N < 2) throw std::invalid_argument("N must be >= 2");
  if (R < 1) throw std::invalid_argument("R must be >= 1");
  const long long radius = checked_radius(R);
  check_cube_guard(N, R, "prob");

  const std::vector<std::size_t> divs = divisors(N);
  const std::size_t k = divs.size();
  std::vector<Int> by_mask(std::size_t{1} << k, 0);
  const CubePoints cube(N, radius);
  Int full = 0;
  cube.for_each([&](const IntVec& a) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (in_cyclotomic_subspace(a, divs[i])) mask |= std::size_t{1} << i;
    const bool full_order = !a.is_zero() && cyclic_order(a) == N;
    if (full_order != (mask == 0))
      throw std::logic_error("cyclic order disagrees with cyclotomic subspace membership at " +
                             a.to_string());
    ++by_mask[mask];
    if (full_order) ++full;
  });

  ProbReport rep;
  rep.N = N;
  rep.R = R;
  rep.total = cube.size();
  rep.full_rank = full;
  rep.fraction = Rational(full, rep.total);
  rep.bound = Rational(1) - Rational(Int(N), 2 * R + 1);
  rep.ok = rep.fraction >= rep.bound;

  // |intersection over S| for every nonempty subset S of divisors
  const std::size_t subsets = std::size_t{1} << k;
  std::vector<Int> inter(subsets, 0);
  for (std::size_t s = 1; s < subsets; ++s)
    for (std::size_t m = 0; m < subsets; ++m)
      if ((m & s) == s) inter[s] += by_mask[m];
  Int union_size = 0;
  for (std::size_t s = 1; s < subsets; ++s) {
    const bool odd = __builtin_popcountll(s) % 2 == 1;
    union_size += odd ? inter[s] : Int(-inter[s]);
  }
  if (union_size != rep.total - full)
    throw std::logic_error("inclusion-exclusion over cyclotomic subspaces failed");

  const Int side = 2 * R + 1;
  Int hit_sum = 0, cap_sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Int hits = inter[std::size_t{1} << i];
    const Int cap = pow(side, static_cast<unsigned>(N - euler_phi(divs[i])));
    if (hits > cap) throw std::logic_error("cyclotomic subspace holds too many cube points");
    rep.divisor_hits.push_back({divs[i], hits});
    hit_sum += hits;
    cap_sum += cap;
  }
  const Int chain_floor = (side - Int(N)) * pow(side, static_cast<unsigned>(N - 1));
  if (full < rep.total - hit_sum || rep.total - hit_sum < rep.total - cap_sum ||
      rep.total - cap_sum < chain_floor)
    throw std::logic_error("full-rank counting chain failed");
  return rep;
}

// ------------------------------------------------------------- dimension 2

Int dim2_A(const Int& R) {
  if (R < 0) throw std::invalid_argument("R must be nonnegative");
  const Int R2 = R * R;
  // 2A sqrt(2 + sqrt 3) <= R  <=>  R^2 - 8A^2 >= 0 and 48 A^4 <= (R^2 - 8A^2)^2
  auto fits = [&](const Int& A) {
    const Int rest = R2 - 8 * A * A;
    return rest >= 0 && 48 * pow(A, 4) <= rest * rest;
  };
  Int A = 0;
  while (fits(A + 1)) ++A;
  return A;
}

Int f2_formula(const Int& R) {
  const Int A = dim2_A(R);
  Int sum = 0;
  for (Int a2 = 1; a2 <= A; ++a2) {
    const Int root = isqrt(R * R - a2 * a2);
    const Int floor_2_plus_sqrt3 = 2 * a2 + isqrt(3 * a2 * a2);
    sum += root - floor_2_plus_sqrt3 - 1;
  }
  return 2 * sum;
}

Int g2_formula(const Int& R) {
  if (R < 0) throw std::invalid_argument("R must be nonnegative");
  return isqrt(R * R / 2);
}

BoundConstants dim2_bound_constants() {
  const Interval sqrt3 = sqrt_enclosure(Rational(3));
  const Interval sqrt2 = sqrt_enclosure(Rational(2));
  const Interval s = sqrt_enclosure(Interval::point(Rational(2)) + sqrt3);
  const Interval one = Interval::point(Rational(1));
  auto num = [](long long v) { return Interval::point(Rational(v)); };
  BoundConstants c;
  c.c1 = (num(4) * s - num(3) - sqrt3) / (num(8) + num(4) * sqrt3);
  c.c2 = (num(5) + sqrt3 + num(4) * s) / (num(2) * s) - one / sqrt2;
  c.c3 = one / s - Interval::point(Rational(1, 4));
  c.c4 = s / num(2) + one / sqrt2;
  return c;
}

PrintedConstants dim2_printed_constants() {
  return {Rational(200650, 1000000), Rational(3035275, 1000000), Rational(267638, 1000000),
          Rational(1673031, 1000000)};
}

bool Dim2Report::brute_in_bounds() const {
  if (!brute_count) return false;
  const Rational b(*brute_count);
  return lower_bound.hi <= b && b <= upper_bound.lo && lower_printed <= b && b <= upper_printed;
}

Dim2Report dim2_closed_forms(const Int& R, bool with_brute) {
  if (R < 1) throw std::invalid_argument("R must be >= 1");
  Dim2Report rep;
  rep.R = R;
  rep.A = dim2_A(R);
  rep.f2 = f2_formula(R);
  rep.g2 = g2_formula(R);
  const BoundConstants c = dim2_bound_constants();
  const Interval r = Interval::point(Rational(R));
  rep.lower_bound = c.c1 * r * r - c.c2 * r;
  rep.upper_bound = c.c3 * r * r + c.c4 * r;
  const PrintedConstants p = dim2_printed_constants();
  const Rational q(R);
  rep.lower_printed = p.c1 * q * q - p.c2 * q;
  rep.upper_printed = p.c3 * q * q + p.c4 * q;
  if (with_brute && R <= 60) {
    rep.brute_count = dim2_brute(R);
    rep.discrepancy = *rep.brute_count - (rep.f2 + rep.g2);
  }
  return rep;
}

namespace {

void check_dim2_guard(const Int& R) {
  if (R < 0) throw std::invalid_argument("R must be nonnegative");
  if (R > 60) {
    const Int points = R * R;
    throw GuardExceeded("dim2 brute force is limited to R <= 60", points, Int(3600), Int(60));
  }
}

}  // namespace

std::vector<Lattice> dim2_lattices(const Int& R) {
  check_dim2_guard(R);
  const long long r = static_cast<long long>(R);
  const long long r2 = r * r;
  std::set<Lattice> found;
  for (long long a1 = -r; a1 <= r; ++a1) {
    for (long long a2 = -r; a2 <= r; ++a2) {
      const long long m1 = a1 < 0 ? -a1 : a1, m2 = a2 < 0 ? -a2 : a2;
      if (m1 <= m2) continue;
      const long long n = a1 * a1 + a2 * a2;
      if (n > r2 || n < 4 * m1 * m2) continue;
      found.insert(circulant_lattice(IntVec{a1, a2}));
    }
  }
  for (long long alpha = 1; 2 * alpha * alpha <= r2; ++alpha)
    found.insert(hnf_canonicalize(IntMat::from_columns(
        std::vector<IntVec>{IntVec{alpha, alpha}, IntVec{alpha, -alpha}})));
  return {found.begin(), found.end()};
}

Int dim2_classification_count(const Int& R) { return Int(dim2_lattices(R).size()); }

Int dim2_hnf_count(const Int& R) {
  check_dim2_guard(R);
  const long long r2 = static_cast<long long>(R * R);
  Int count = 0;
  // columns (a, b), (0, c) with 0 <= b < c; det = ac <= lambda_1 lambda_2 <= R^2
  for (long long a = 1; a <= r2; ++a) {
    for (long long c = 1; a * c <= r2; ++c) {
      for (long long b = 0; b < c; ++b) {
        // rot(L) = L iff (b, a) and (c, 0) lie in L
        auto member = [&](long long x, long long y) {
          if (x % a != 0) return false;
          return (y - (x / a) * b) % c == 0;
        };
        if (!member(b, a) || !member(c, 0)) continue;
        const Lattice lat =
            hnf_canonicalize(IntMat::from_columns(std::vector<IntVec>{IntVec{a, b}, IntVec{0, c}}));
        if (!is_cyclic(lat)) throw std::logic_error("cyclicity prefilter disagrees with is_cyclic");
        const SvpResult svp = successive_minima(lat);
        if (is_well_rounded(svp) && svp.lambda_sq.back() <= R * R) ++count;
      }
    }
  }
  return count;
}

Int dim2_brute(const Int& R) {
  const Int classified = dim2_classification_count(R);
  const Int enumerated = dim2_hnf_count(R);
  if (classified != enumerated)
    throw std::logic_error("dimension-2 routes disagree at R = " + to_string(R) + ": " +
                           to_string(classified) + " vs " + to_string(enumerated));
  return classified;
}

std::vector<GrowthRow> growth_table(std::size_t N, const std::vector<Int>& Rs, unsigned workers) {
  std::vector<GrowthRow> rows;
  for (const Int& R : Rs) {
    if (R < 1) throw std::invalid_argument("growth table needs R >= 1");
    const CensusRecord rec = census_circulant(N, R, workers);
    rows.push_back({R, rec.count_lattices,
                    Rational(rec.count_lattices, pow(R, static_cast<unsigned>(N)))});
  }
  return rows;
}

// ---------------------------------------------------------------- output

namespace {

std::string json_int(const Int& x) {
  return fits_int64(x) ? to_string(x) : "\"" + to_string(x) + "\"";
}

}  // namespace

std::string census_csv_header() {
  return "N,R,count_vectors,count_lattices,count_WR,count_WRprime,count_Rprime,max_multiplicity";
}

std::string census_csv_row(const CensusRecord& r) {
  std::ostringstream os;
  os << r.N << ',' << to_string(r.R) << ',' << to_string(r.count_vectors) << ','
     << to_string(r.count_lattices) << ',' << to_string(r.count_WR) << ','
     << to_string(r.count_WRprime) << ',' << to_string(r.count_Rprime) << ','
     << to_string(r.max_multiplicity);
  return os.str();
}

std::string census_json(const CensusRecord& r) {
  std::ostringstream os;
  os << "{\"N\":" << r.N << ",\"R\":" << json_int(r.R)
     << ",\"count_vectors\":" << json_int(r.count_vectors)
     << ",\"count_lattices\":" << json_int(r.count_lattices)
     << ",\"count_WR\":" << json_int(r.count_WR)
     << ",\"count_WRprime\":" << json_int(r.count_WRprime)
     << ",\"count_Rprime\":" << json_int(r.count_Rprime)
     << ",\"max_multiplicity\":" << json_int(r.max_multiplicity) << "}";
  return os.str();
}

std::vector<std::string> census_keys(const CensusDetail& d) {
  std::vector<std::string> keys;
  for (const auto& [key, e] : d.lattices) keys.push_back(key.to_string());
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace cyclat
