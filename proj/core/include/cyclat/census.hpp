#pragma once

// Counting experiments over cubes and balls of integer vectors: censuses of
// circulant lattices, the full-rank probability experiment, and the exact
// dimension-2 counts with their closed forms and quadratic bounds.

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclat/core.hpp"
#include "cyclat/enclosure.hpp"
#include "cyclat/integer.hpp"
#include "cyclat/perm.hpp"

namespace cyclat {

/// Thrown when a scan would exceed the enumeration guard.
class GuardExceeded : public std::length_error {
 public:
  GuardExceeded(const std::string& what, Int points, Int guard, std::optional<Int> suggested_R);
  const Int& points() const { return points_; }
  const Int& guard() const { return guard_; }
  /// Largest R that fits the guard, if any.
  const std::optional<Int>& suggested_R() const { return suggested_; }

 private:
  Int points_, guard_;
  std::optional<Int> suggested_;
};

/// Maximum number of cube points a scan may visit: $CYCLAT_GUARD or 10^8.
Int enumeration_guard();

struct CensusRecord {
  std::size_t N = 0;
  Int R;
  /// Vectors a with ||a|| <= R, co(a) = N and ||a|| = lambda_1 = lambda_N,
  /// counting a and -a separately.
  Int count_vectors;
  Int count_lattices;
  Int count_WR;
  Int count_WRprime;
  Int count_Rprime;
  /// Largest number of ± pairs generating one lattice.
  Int max_multiplicity;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusEntry {
  Int multiplicity;  // ± pairs
  bool wr = false;
  bool wr_prime = false;
  bool rprime = false;
  bool minkowski_ok = false;
  std::vector<Int> lambda_sq;

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

struct CensusDetail {
  CensusRecord record;
  /// Keyed by hnf key.
  std::map<IntMat, CensusEntry> lattices;
  bool all_minkowski_ok() const;
};

/// Census of lattice spanned by the orbit of a under `shift`, which must be
/// an N-cycle; the standard cycle gives circulant lattices.
CensusDetail census_detail(std::size_t N, const Int& R, const Permutation& shift,
                           unsigned workers = 1);
CensusRecord census_circulant(std::size_t N, const Int& R, unsigned workers = 1);
/// Census of tau-invariant lattices, checked field by field and key by key
/// against the circulant census mapped through E_g.
CensusRecord tau_census(std::size_t N, const Permutation& tau, const Int& R,
                        unsigned workers = 1);

struct DivisorHits {
  std::size_t d;
  Int hits;
};

struct ProbReport {
  std::size_t N = 0;
  Int R;
  Int total;
  Int full_rank;
  Rational fraction;
  Rational bound;
  bool ok = false;
  std::vector<DivisorHits> divisor_hits;
};

/// Fraction of the cube [-R, R]^N with full cyclic order.
ProbReport prob_full_rank(std::size_t N, const Int& R);

/// Largest A >= 0 with A <= R / (2 sqrt(2 + sqrt 3)).
Int dim2_A(const Int& R);
Int f2_formula(const Int& R);
/// floor(R / sqrt 2).
Int g2_formula(const Int& R);

struct BoundConstants {
  Interval c1, c2, c3, c4;
};
/// Constants of the quadratic bounds, lower = c1 R^2 - c2 R and
/// upper = c3 R^2 + c4 R, from their closed forms.
BoundConstants dim2_bound_constants();
/// The same constants truncated to six decimals.
struct PrintedConstants {
  Rational c1, c2, c3, c4;
};
PrintedConstants dim2_printed_constants();

struct Dim2Report {
  Int R;
  Int A;
  Int f2;
  Int g2;
  std::optional<Int> brute_count;
  Interval lower_bound;
  Interval upper_bound;
  Rational lower_printed;
  Rational upper_printed;
  std::optional<Int> discrepancy;

  /// brute_count within both pairs of bounds, on the safe side of each
  /// enclosure. False when no brute count was computed.
  bool brute_in_bounds() const;
};

/// Closed forms and bounds; the brute count is filled in when R <= 60 and
/// `with_brute` is set.
Dim2Report dim2_closed_forms(const Int& R, bool with_brute = true);

/// Counts from each route separately.
Int dim2_classification_count(const Int& R);
Int dim2_hnf_count(const Int& R);
/// Number of well-rounded cyclic sublattices of Z^2 with lambda_2 <= R.
/// Both routes are run and a disagreement throws std::logic_error.
/// Throws GuardExceeded for R > 60.
Int dim2_brute(const Int& R);
/// The lattices themselves, from the classification route.
std::vector<Lattice> dim2_lattices(const Int& R);

struct GrowthRow {
  Int R;
  Int count;
  Rational ratio;  // count / R^N
};
std::vector<GrowthRow> growth_table(std::size_t N, const std::vector<Int>& Rs,
                                    unsigned workers = 1);

std::string census_csv_header();
std::string census_csv_row(const CensusRecord& r);
/// One JSON object, no trailing newline.
std::string census_json(const CensusRecord& r);
/// hnf keys of a census as "[a,b,...]" row-major lists, sorted.
std::vector<std::string> census_keys(const CensusDetail& d);

}  // namespace cyclat
