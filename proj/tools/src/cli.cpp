#include "cyclat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "cyclat/census.hpp"
#include "cyclat/core.hpp"
#include "cyclat/cyclic.hpp"
#include "cyclat/perm.hpp"
#include "cyclat/polyring.hpp"
#include "cyclat/svp.hpp"

namespace cyclat::cli {

namespace {

using json = nlohmann::ordered_json;

class BadInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Int parse_int(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size() || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                                    [](unsigned char c) { return std::isdigit(c); }))
    throw BadInput("not an integer: '" + s + "'");
  return Int(s[0] == '+' ? s.substr(1) : s);
}

std::vector<Int> parse_int_list(const std::string& literal) {
  std::vector<Int> out;
  for (const std::string& part : split(literal, ',')) out.push_back(parse_int(part));
  return out;
}

std::vector<Int> parse_int_args(const std::vector<std::string>& items) {
  std::vector<Int> out;
  for (const std::string& item : items)
    for (const Int& v : parse_int_list(item)) out.push_back(v);
  return out;
}

IntVec parse_vector(const std::string& literal) {
  std::vector<Int> coords = parse_int_list(literal);
  if (coords.size() < 2) throw BadInput("vectors need at least 2 coordinates");
  return IntVec(std::move(coords));
}

std::vector<IntVec> parse_basis(const std::string& literal) {
  std::vector<IntVec> cols;
  for (const std::string& col : split(literal, ';')) {
    cols.push_back(parse_vector(col));
    if (cols.back().dim() != cols.front().dim())
      throw BadInput("basis columns have different lengths");
  }
  return cols;
}

Int positive_R(const Int& R, const char* what) {
  if (R < 1) throw BadInput(std::string(what) + " needs R >= 1");
  return R;
}

json jint(const Int& x) {
  if (fits_int64(x)) return json(static_cast<std::int64_t>(x));
  return json(to_string(x));
}

json jvec(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v.coords()) a.push_back(jint(x));
  return a;
}

json jints(const std::vector<Int>& xs) {
  json a = json::array();
  for (const Int& x : xs) a.push_back(jint(x));
  return a;
}

json jkey(const IntMat& key) {
  json a = json::array();
  for (const Int& x : key.row_major()) a.push_back(jint(x));
  return a;
}

struct Emitter {
  std::ostream& out;
  void line(const json& j) { out << j.dump() << '\n'; }
};

// ---------------------------------------------------------------- analyze

int cmd_analyze(const std::string& literal, std::optional<std::size_t> N, Emitter& em) {
  const IntVec a = parse_vector(literal);
  if (N && *N != a.dim()) throw BadInput("vector length differs from -N");
  if (a.is_zero()) throw BadInput("zero vector");
  const std::size_t co = cyclic_order(a);
  const Int res = circulant_det_resultant(a);
  const Lattice lat = circulant_lattice(a);
  const SvpResult svp = successive_minima(lat);
  const bool sane = minkowski_sanity(lat, svp);

  json j;
  j["vector"] = jvec(a);
  j["N"] = a.dim();
  j["cyclic_order"] = co;
  j["gcd_with_cycle"] = gcd_with_cycle(a).to_string();
  j["det"] = jint(res);
  j["resultant"] = jint(resultant(IntPoly::cycle(a.dim()), vec_to_poly(a)));
  j["rank"] = lat.rank();
  j["lattice_key"] = jkey(lat.hnf_key());
  j["lambda_sq"] = jints(svp.lambda_sq);
  j["minimal_count"] = svp.minimal_count();
  json reps = json::array();
  for (const IntVec& v : svp.minimal_reps) reps.push_back(jvec(v));
  j["minimal_reps"] = reps;
  j["wr"] = is_well_rounded(svp);
  j["wr_prime"] = is_wr_prime(lat, svp);
  j["in_D_N"] = in_D_N(a);
  j["in_R_N"] = in_R_N(a);
  j["in_Rprime_N"] = in_rprime(a);
  j["angles_certificate"] = angles_certificate(a);
  j["minkowskian"] = lat.rank() <= 8 ? json(is_minkowskian(lat)) : json(nullptr);
  j["minkowski_sanity"] = sane;
  em.line(j);
  return sane ? kOk : kVerificationFailed;
}

// ----------------------------------------------------------------- census

struct CensusArgs {
  std::size_t N = 0;
  std::vector<std::string> R;
  bool jsonl = false;
  bool keys = false;
  std::string tau;
  unsigned workers = 1;
};

int cmd_census(const CensusArgs& args, Emitter& em) {
  if (args.keys && !args.jsonl) throw BadInput("--keys requires --jsonl");
  std::optional<Permutation> tau;
  if (!args.tau.empty()) tau = Permutation::parse_cycles(args.tau, args.N);
  const Permutation shift = tau ? *tau : Permutation::standard_cycle(args.N);
  bool ok = true;
  std::ostringstream buf;
  if (!args.jsonl) buf << census_csv_header() << '\n';
  for (const Int& R : parse_int_args(args.R)) {
    if (R < 0) throw BadInput("R must be nonnegative");
    const CensusDetail detail = census_detail(args.N, R, shift, args.workers);
    if (tau) tau_census(args.N, *tau, R, args.workers);
    ok = ok && detail.all_minkowski_ok();
    if (args.jsonl) {
      json j = json::parse(census_json(detail.record));
      if (args.keys) {
        json keys = json::array();
        for (const auto& [key, e] : detail.lattices) keys.push_back(jkey(key));
        j["lattice_keys"] = keys;
      }
      buf << j.dump() << '\n';
    } else {
      buf << census_csv_row(detail.record) << '\n';
    }
  }
  em.out << buf.str();
  return ok ? kOk : kVerificationFailed;
}

int cmd_growth(std::size_t N, const std::vector<std::string>& Rs, unsigned workers, Emitter& em) {
  const std::vector<Int> radii = parse_int_args(Rs);
  for (const Int& R : radii) positive_R(R, "growth");
  const std::vector<GrowthRow> rows = growth_table(N, radii, workers);
  std::optional<Rational> lo, hi;
  for (const GrowthRow& row : rows) {
    json j;
    j["N"] = N;
    j["R"] = jint(row.R);
    j["count_lattices"] = jint(row.count);
    j["ratio"] = to_string(row.ratio);
    em.line(j);
    if (!lo || row.ratio < *lo) lo = row.ratio;
    if (!hi || row.ratio > *hi) hi = row.ratio;
  }
  if (lo) {
    json j;
    j["N"] = N;
    j["min_ratio"] = to_string(*lo);
    j["max_ratio"] = to_string(*hi);
    em.line(j);
  }
  return kOk;
}

// ------------------------------------------------------------------- dim2

int cmd_dim2(const std::vector<std::string>& Rs, bool brute, Emitter& em) {
  const std::vector<Int> radii = parse_int_args(Rs);
  for (const Int& R : radii) positive_R(R, "dim2");
  bool ok = true;
  for (const Int& R : radii) {
    const Dim2Report rep = dim2_closed_forms(R, brute);
    json j;
    j["R"] = jint(rep.R);
    j["A"] = jint(rep.A);
    j["f2_formula"] = jint(rep.f2);
    j["g2_formula"] = jint(rep.g2);
    j["brute_count"] = rep.brute_count ? jint(*rep.brute_count) : json(nullptr);
    j["discrepancy"] = rep.discrepancy ? jint(*rep.discrepancy) : json(nullptr);
    j["lower_bound"] = to_fixed(rep.lower_bound.lo, 6, false);
    j["upper_bound"] = to_fixed(rep.upper_bound.hi, 6, true);
    j["lower_bound_printed_constants"] = to_fixed(rep.lower_printed, 6, false);
    j["upper_bound_printed_constants"] = to_fixed(rep.upper_printed, 6, true);
    j["rounding"] = "lower bounds rounded down, upper bounds rounded up";
    if (rep.brute_count) {
      const bool in = rep.brute_in_bounds();
      j["in_bounds"] = in;
      j["discrepancy_within_3R"] = abs(*rep.discrepancy) <= 3 * rep.R;
      ok = ok && in;
    } else {
      j["in_bounds"] = nullptr;
      j["discrepancy_within_3R"] = nullptr;
    }
    em.line(j);
  }
  return ok ? kOk : kVerificationFailed;
}

// ------------------------------------------------------------------- prob

int cmd_prob(std::size_t N, const std::vector<std::string>& Rs, Emitter& em) {
  const std::vector<Int> radii = parse_int_args(Rs);
  for (const Int& R : radii) positive_R(R, "prob");
  bool ok = true;
  for (const Int& R : radii) {
    const ProbReport rep = prob_full_rank(N, R);
    json j;
    j["N"] = N;
    j["R"] = jint(rep.R);
    j["total"] = jint(rep.total);
    j["full_rank"] = jint(rep.full_rank);
    j["fraction"] = to_string(rep.fraction);
    j["bound"] = to_string(rep.bound);
    j["ok"] = rep.ok;
    json hits = json::object();
    for (const DivisorHits& h : rep.divisor_hits) hits[std::to_string(h.d)] = jint(h.hits);
    j["divisor_hits"] = hits;
    em.line(j);
    ok = ok && rep.ok;
  }
  return ok ? kOk : kVerificationFailed;
}

// -------------------------------------------------------------- construct

int cmd_construct(const std::vector<std::string>& ks, Emitter& em) {
  const std::vector<Int> k = parse_int_args(ks);
  for (const Int& ki : k)
    if (ki == 0) throw BadInput("k_i must be nonzero");
  const IntVec a = corollary_vector(k);
  const bool verified = verify_corollary_family(a);
  const SvpResult svp = successive_minima(circulant_lattice(a));
  json j;
  j["k"] = jints(k);
  j["vector"] = jvec(a);
  j["N"] = a.dim();
  j["cyclic_order"] = cyclic_order(a);
  j["lambda_sq"] = jints(svp.lambda_sq);
  j["minimal_count"] = svp.minimal_count();
  j["verified"] = verified;
  bool sivp = false;
  if (in_rprime(a)) {
    const std::vector<IntVec> rots = sivp_via_rotations(a);
    sivp = std::all_of(rots.begin(), rots.end(),
                       [&](const IntVec& r) { return r.norm_sq() == svp.lambda_sq.back(); });
  }
  j["sivp_via_rotations"] = sivp;
  em.line(j);
  return verified && sivp ? kOk : kVerificationFailed;
}

// ------------------------------------------------------------- perm-check

int cmd_perm_check(const std::string& tau_text, const std::string& basis_text,
                   const std::string& signs_text, Emitter& em) {
  const std::vector<IntVec> cols = parse_basis(basis_text);
  const std::size_t N = cols.front().dim();
  const Permutation tau = Permutation::parse_cycles(tau_text, N);
  const Lattice lat = hnf_canonicalize(std::span<const IntVec>(cols));
  const bool invariant = is_invariant(lat, tau);
  json j;
  j["tau"] = tau.to_cycle_string();
  j["N"] = N;
  j["lattice_key"] = jkey(lat.hnf_key());
  j["invariant"] = invariant;
  j["ncycle"] = tau.is_ncycle();
  bool consistent = true;
  if (tau.is_ncycle()) {
    const Permutation g = conjugator_for_ncycle(tau);
    const IntMat Eg_inv = perm_matrix(g.inverse());
    const bool preimage_cyclic = is_cyclic(hnf_canonicalize(Eg_inv * lat.hnf_key()));
    j["conjugator"] = g.to_cycle_string();
    j["cyclic_preimage"] = preimage_cyclic;
    consistent = preimage_cyclic == invariant;
  } else {
    j["conjugator"] = nullptr;
    j["cyclic_preimage"] = nullptr;
  }
  if (!signs_text.empty()) {
    std::vector<int> signs;
    for (const Int& s : parse_int_list(signs_text)) {
      if (s != 1 && s != -1) throw BadInput("signs must be +1 or -1");
      signs.push_back(static_cast<int>(s));
    }
    if (signs.size() != N) throw BadInput("sign vector length differs from N");
    j["signed_invariant"] = is_signed_invariant(lat, SignedPermutation(tau, signs));
  }
  em.line(j);
  return consistent ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on cyclic and permutation-invariant lattices", "cyclat"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned workers = 1;
  app.add_option("-w,--workers", workers, "Worker threads for census sweeps")
      ->check(CLI::Range(1u, 256u));

  std::string vector_lit;
  std::optional<std::size_t> analyze_N;
  auto* analyze = app.add_subcommand("analyze", "Report the invariants of Lambda(a)");
  analyze->add_option("-v,--vector", vector_lit, "Comma-separated coordinates")->required();
  analyze->add_option("-N", analyze_N, "Expected dimension");

  CensusArgs cargs;
  auto* census = app.add_subcommand("census", "Count lattices Lambda(a) with lambda_1 = lambda_N <= R");
  census->add_option("-N", cargs.N, "Dimension")->required()->check(CLI::Range(2, 64));
  census->add_option("-R", cargs.R, "Norm bounds, comma-separated")->required();
  auto* csv_flag = census->add_flag("--csv", "CSV output (default)");
  census->add_flag("--jsonl", cargs.jsonl, "JSON-lines output")->excludes(csv_flag);
  census->add_flag("--keys", cargs.keys, "Include hnf keys (JSON-lines only)");
  census->add_option("-t,--tau", cargs.tau, "Count tau-invariant lattices for an N-cycle tau");

  std::size_t growth_N = 0;
  std::vector<std::string> growth_R;
  auto* growth = app.add_subcommand("growth", "Lattice counts over R^N for a list of R");
  growth->add_option("-N", growth_N, "Dimension")->required()->check(CLI::Range(2, 64));
  growth->add_option("-R", growth_R, "Norm bounds, comma-separated")->required();

  std::vector<std::string> dim2_R;
  bool no_brute = false;
  auto* dim2 = app.add_subcommand("dim2", "Dimension-2 closed forms, bounds and brute count");
  dim2->add_option("-R", dim2_R, "Norm bounds, comma-separated")->required();
  dim2->add_flag("--no-brute", no_brute, "Skip the brute-force count");

  std::size_t prob_N = 0;
  std::vector<std::string> prob_R;
  auto* prob = app.add_subcommand("prob", "Fraction of the cube with full cyclic order");
  prob->add_option("-N", prob_N, "Dimension")->required()->check(CLI::Range(2, 64));
  prob->add_option("-R", prob_R, "Cube radii, comma-separated")->required();

  std::vector<std::string> ks;
  auto* construct = app.add_subcommand("construct", "Build and verify (m, m/k_1, ..., m/k_{N-1})");
  construct->add_option("-k", ks, "Nonzero integers k_i, comma-separated")->required();

  std::string tau_text, basis_text, signs_text;
  auto* perm = app.add_subcommand("perm-check", "Test tau-invariance of a lattice");
  perm->add_option("-t,--tau", tau_text, "Permutation in cycle notation")->required();
  perm->add_option("-b,--basis", basis_text, "Basis columns, ';'-separated")->required();
  perm->add_option("-s,--signs", signs_text, "Diagonal signs for signed invariance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  Emitter em{out};
  try {
    if (*analyze) return cmd_analyze(vector_lit, analyze_N, em);
    if (*census) {
      cargs.workers = workers;
      return cmd_census(cargs, em);
    }
    if (*growth) return cmd_growth(growth_N, growth_R, workers, em);
    if (*dim2) return cmd_dim2(dim2_R, !no_brute, em);
    if (*prob) return cmd_prob(prob_N, prob_R, em);
    if (*construct) return cmd_construct(ks, em);
    if (*perm) return cmd_perm_check(tau_text, basis_text, signs_text, em);
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::logic_error& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kBadInput;
}

}  // namespace cyclat::cli
