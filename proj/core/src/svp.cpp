#include "cyclat/svp.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cyclat/cyclic.hpp"
#include "cyclat/enclosure.hpp"

namespace cyclat {

GramSchmidt gram_schmidt(const IntMat& gram) {
  const std::size_t r = gram.rows();
  GramSchmidt gs;
  gs.mu.assign(r, std::vector<Rational>(r));
  gs.d.assign(r, Rational(0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s(gram(i, j));
      for (std::size_t k = 0; k < j; ++k) s -= gs.mu[j][k] * gs.mu[i][k] * gs.d[k];
      gs.mu[i][j] = s / gs.d[j];
    }
    Rational s(gram(i, i));
    for (std::size_t k = 0; k < i; ++k) s -= gs.mu[i][k] * gs.mu[i][k] * gs.d[k];
    if (s <= 0) throw std::invalid_argument("dependent basis");
    gs.d[i] = s;
  }
  return gs;
}

namespace {

Int round_half_up(const Rational& q) { return floor(q + Rational(1, 2)); }

Int max_column_norm(const IntMat& basis) {
  Int m = 0;
  for (std::size_t j = 0; j < basis.cols(); ++j) m = std::max(m, basis.column(j).norm_sq());
  return m;
}

// Fincke-Pohst depth-first search over the coefficient box, all bounds exact.
class ShortVectorSearch {
 public:
  ShortVectorSearch(const IntMat& basis, Int bound)
      : basis_(basis), gs_(gram_schmidt(basis.gram())), bound_(std::move(bound)),
        x_(basis.cols()) {}

  std::vector<IntVec> run() {
    if (bound_ > 0 && basis_.cols() > 0) descend(basis_.cols() - 1, Rational(0));
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return std::move(found_);
  }

 private:
  void descend(std::size_t level, const Rational& partial) {
    const std::size_t r = basis_.cols();
    Rational center = 0;
    for (std::size_t i = level + 1; i < r; ++i) center -= gs_.mu[i][level] * Rational(x_[i]);
    const Rational budget = Rational(bound_) - partial;
    const auto cost = [&](const Int& x) {
      Rational t = Rational(x) - center;
      return gs_.d[level] * t * t;
    };
    // The feasible x form an interval around the center; it contains
    // floor(center) or floor(center)+1 whenever it contains any integer.
    const Int base = floor(center);
    for (int dir = 0; dir < 2; ++dir) {
      Int x = dir == 0 ? base : base + 1;
      for (;;) {
        Rational c = cost(x);
        if (c > budget) break;
        x_[level] = x;
        if (level == 0) {
          emit();
        } else {
          descend(level - 1, partial + c);
        }
        if (dir == 0) --x; else ++x;
      }
    }
    x_[level] = 0;
  }

  void emit() {
    bool nonzero = false;
    for (const Int& c : x_) nonzero = nonzero || c != 0;
    if (!nonzero) return;
    IntVec v = IntVec::zero(basis_.rows());
    for (std::size_t j = 0; j < x_.size(); ++j) v.add_scaled(basis_.column(j), x_[j]);
    found_.push_back(v.sign_canonical());
  }

  const IntMat& basis_;
  GramSchmidt gs_;
  Int bound_;
  std::vector<Int> x_;
  std::vector<IntVec> found_;
};

// Incremental independence test via fraction-free row echelon form.
class SpanTracker {
 public:
  bool try_add(const IntVec& v) {
    std::vector<Int> w(v.coords().begin(), v.coords().end());
    for (const auto& [pivot, row] : rows_) {
      if (w[pivot] == 0) continue;
      Int a = row[pivot], b = w[pivot];
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = a * w[i] - b * row[i];
      Int g = 0;
      for (const Int& c : w) g = gcd(g, c);
      if (g > 1)
        for (Int& c : w) c /= g;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 0) {
        rows_.emplace_back(i, std::move(w));
        return true;
      }
    }
    return false;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::pair<std::size_t, std::vector<Int>>> rows_;
};

bool norm_then_lex(const IntVec& a, const IntVec& b) {
  Int na = a.norm_sq(), nb = b.norm_sq();
  if (na != nb) return na < nb;
  return a < b;
}

}  // namespace

IntMat lll_reduce(const IntMat& basis) {
  std::vector<IntVec> b = basis.columns();
  const std::size_t n = b.size();
  if (n <= 1) return basis;
  const Rational delta(3, 4);
  auto recompute = [&]() { return gram_schmidt(IntMat::from_columns(b).gram()); };
  GramSchmidt gs = recompute();
  auto size_reduce = [&](std::size_t k, std::size_t l) {
    Int q = round_half_up(gs.mu[k][l]);
    if (q == 0) return;
    b[k].add_scaled(b[l], -q);
    for (std::size_t j = 0; j < l; ++j) gs.mu[k][j] -= Rational(q) * gs.mu[l][j];
    gs.mu[k][l] -= Rational(q);
  };
  std::size_t k = 1;
  while (k < n) {
    size_reduce(k, k - 1);
    const Rational m = gs.mu[k][k - 1];
    if (gs.d[k] < (delta - m * m) * gs.d[k - 1]) {
      std::swap(b[k], b[k - 1]);
      gs = recompute();
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
      ++k;
    }
  }
  return IntMat::from_columns(b);
}

std::vector<IntVec> enumerate_short(const IntMat& basis, const Int& bound_sq) {
  if (bound_sq < 0) throw std::invalid_argument("negative enumeration bound");
  if (basis.cols() == 0) return {};
  if (basis.gram().determinant() == 0) throw std::invalid_argument("dependent basis");
  return ShortVectorSearch(basis, bound_sq).run();
}

std::vector<IntVec> enumerate_short(const Lattice& lattice, const Int& bound_sq) {
  return enumerate_short(lll_reduce(lattice.basis()), bound_sq);
}

SvpResult successive_minima(const Lattice& lattice) {
  const IntMat reduced = lll_reduce(lattice.basis());
  const std::size_t r = lattice.rank();
  SvpResult out;
  out.enum_radius_sq = std::min(max_column_norm(lattice.basis()), max_column_norm(reduced));
  std::vector<IntVec> vecs = ShortVectorSearch(reduced, out.enum_radius_sq).run();
  std::sort(vecs.begin(), vecs.end(), norm_then_lex);

  SpanTracker span;
  for (const IntVec& v : vecs) {
    if (span.size() == r) break;
    if (span.try_add(v)) {
      out.lambda_sq.push_back(v.norm_sq());
      out.minima_vectors.push_back(v);
    }
  }
  if (out.lambda_sq.size() != r)
    throw std::logic_error("enumeration radius did not reach the last minimum");
  for (const IntVec& v : vecs) {
    if (v.norm_sq() != out.lambda_sq.front()) break;
    out.minimal_reps.push_back(v);
  }
  std::sort(out.minimal_reps.begin(), out.minimal_reps.end());
  return out;
}

bool is_well_rounded(const SvpResult& svp) {
  return !svp.lambda_sq.empty() && svp.lambda_sq.front() == svp.lambda_sq.back();
}

bool is_well_rounded(const Lattice& lattice) { return is_well_rounded(successive_minima(lattice)); }

bool is_wr_prime(const Lattice& lattice, const SvpResult& svp) {
  if (!is_well_rounded(svp)) return false;
  return hnf_canonicalize(std::span<const IntVec>(svp.minimal_reps)) == lattice;
}

bool is_wr_prime(const Lattice& lattice) { return is_wr_prime(lattice, successive_minima(lattice)); }

namespace {

// Gcd of all k x k minors of a k x r integer matrix (rows = chosen vectors).
Int maximal_minor_gcd(const std::vector<std::vector<Int>>& rows, std::size_t r) {
  const std::size_t k = rows.size();
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  Int g = 0;
  for (;;) {
    IntMat m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = rows[i][cols[j]];
    g = gcd(g, m.determinant());
    if (g == 1) return g;
    std::size_t i = k;
    while (i-- > 0) {
      if (cols[i] != i + r - k) break;
    }
    if (i == static_cast<std::size_t>(-1)) return g;
    ++cols[i];
    for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
}

class MinkowskiSearch {
 public:
  MinkowskiSearch(const Lattice& lattice, std::vector<Int> lambda_sq,
                  const std::vector<IntVec>& vecs)
      : lattice_(lattice), lambda_sq_(std::move(lambda_sq)) {
    for (const IntVec& v : vecs) candidates_.push_back({v.norm_sq(), lattice.key_coordinates(v)});
  }

  bool run() { return extend(0, 0); }

 private:
  struct Candidate {
    Int norm_sq;
    std::vector<Int> coords;
  };

  bool extend(std::size_t pos, std::size_t start) {
    const std::size_t r = lattice_.rank();
    if (pos == r) return true;
    for (std::size_t c = start; c < candidates_.size(); ++c) {
      if (candidates_[c].norm_sq != lambda_sq_[pos]) continue;
      chosen_.push_back(candidates_[c].coords);
      if (maximal_minor_gcd(chosen_, r) == 1) {
        // Equal consecutive minima are an unordered choice: continue after c.
        std::size_t next =
            pos + 1 < r && lambda_sq_[pos + 1] == lambda_sq_[pos] ? c + 1 : 0;
        if (extend(pos + 1, next)) return true;
      }
      chosen_.pop_back();
    }
    return false;
  }

  const Lattice& lattice_;
  std::vector<Int> lambda_sq_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<Int>> chosen_;
};

}  // namespace

bool is_minkowskian(const Lattice& lattice) {
  if (lattice.rank() > 8) throw std::length_error("search too large");
  const SvpResult svp = successive_minima(lattice);
  std::vector<IntVec> vecs = enumerate_short(lattice, svp.lambda_sq.back());
  std::sort(vecs.begin(), vecs.end(), norm_then_lex);
  return MinkowskiSearch(lattice, svp.lambda_sq, vecs).run();
}

bool minkowski_sanity(const Lattice& lattice, const SvpResult& svp) {
  const std::size_t r = lattice.rank();
  const Int det_sq = lattice.det_sq();
  Int prod = 1;
  for (const Int& l : svp.lambda_sq) prod *= l;
  if (det_sq > prod) return false;
  // prod lambda_i^2 * V_r^2 <= 4^r det^2, using the lower end of V_r.
  const Interval v = unit_ball_volume(r);
  return Rational(prod) * v.lo * v.lo <= Rational(pow(Int(4), static_cast<unsigned>(r)) * det_sq);
}

bool minkowski_sanity(const Lattice& lattice) {
  return minkowski_sanity(lattice, successive_minima(lattice));
}

std::vector<IntVec> sivp_via_rotations(const IntVec& a) {
  if (!in_rprime(a)) throw std::invalid_argument("not in R'_N");
  std::vector<IntVec> rots;
  for (std::size_t k = 0; k < a.dim(); ++k) rots.push_back(rot_shift(a, k));
  const Lattice lat = circulant_lattice(a);
  const SvpResult svp = successive_minima(lat);
  const Int n = a.norm_sq();
  SpanTracker span;
  for (std::size_t k = 0; k < rots.size(); ++k) {
    if (!span.try_add(rots[k]) || svp.lambda_sq[k] != n)
      throw std::logic_error("rotations do not solve SIVP for " + a.to_string());
  }
  return rots;
}

}  // namespace cyclat
