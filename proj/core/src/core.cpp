#include "cyclat/core.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cyclat {

// ---------------------------------------------------------------- IntVec

IntVec::IntVec(std::vector<Int> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw std::invalid_argument("IntVec dimension must be >= 2");
}

IntVec::IntVec(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) coords_.emplace_back(c);
  if (coords_.size() < 2) throw std::invalid_argument("IntVec dimension must be >= 2");
}

IntVec IntVec::zero(std::size_t n) { return IntVec(std::vector<Int>(n)); }

IntVec IntVec::unit(std::size_t n, std::size_t i) {
  std::vector<Int> c(n);
  c.at(i) = 1;
  return IntVec(std::move(c));
}

bool IntVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Int& x) { return x == 0; });
}

Int IntVec::norm_sq() const {
  Int s = 0;
  for (const Int& x : coords_) s += x * x;
  return s;
}

Int IntVec::sup_norm() const {
  Int m = 0;
  for (const Int& x : coords_) m = std::max(m, cyclat::abs(x));
  return m;
}

Int IntVec::dot(const IntVec& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * other.coords_[i];
  return s;
}

IntVec IntVec::operator-() const {
  IntVec r = *this;
  for (Int& x : r.coords_) x = -x;
  return r;
}

IntVec& IntVec::operator+=(const IntVec& other) {
  if (dim() != other.dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

IntVec& IntVec::operator-=(const IntVec& other) {
  if (dim() != other.dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

IntVec& IntVec::operator*=(const Int& c) {
  for (Int& x : coords_) x *= c;
  return *this;
}

void IntVec::add_scaled(const IntVec& other, const Int& c) {
  if (dim() != other.dim()) throw std::invalid_argument("dimension mismatch");
  if (c == 0) return;
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += c * other.coords_[i];
}

IntVec IntVec::sign_canonical() const {
  for (const Int& x : coords_) {
    if (x > 0) return *this;
    if (x < 0) return -*this;
  }
  return *this;
}

std::string IntVec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].str();
  }
  return s + ")";
}

bool operator<(const IntVec& a, const IntVec& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }
IntVec operator*(const Int& c, IntVec v) { return v *= c; }

std::ostream& operator<<(std::ostream& os, const IntVec& v) { return os << v.to_string(); }

// ---------------------------------------------------------------- IntMat

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMat::IntMat(std::size_t rows, std::size_t cols, std::vector<Int> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("IntMat: entry count mismatch");
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(std::span<const IntVec> columns) {
  if (columns.empty()) return {};
  IntMat m(columns.front().dim(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].dim() != m.rows_) throw std::invalid_argument("IntMat: ragged columns");
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMat IntMat::from_rows(std::span<const IntVec> rows) {
  return from_columns(rows).transpose();
}

IntVec IntMat::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return IntVec(std::move(c));
}

IntVec IntMat::row(std::size_t i) const {
  return IntVec(std::vector<Int>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

std::vector<IntVec> IntMat::columns() const {
  std::vector<IntVec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMat: shape mismatch");
  IntMat p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

IntVec IntMat::operator*(const IntVec& v) const {
  if (cols_ != v.dim()) throw std::invalid_argument("IntMat: shape mismatch");
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return IntVec(std::move(out));
}

IntMat IntMat::gram() const {
  IntMat g(cols_, cols_);
  for (std::size_t a = 0; a < cols_; ++a)
    for (std::size_t b = a; b < cols_; ++b) {
      Int s = 0;
      for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, a) * (*this)(i, b);
      g(a, b) = s;
      g(b, a) = s;
    }
  return g;
}

Int IntMat::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMat a = *this;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t IntMat::rank() const {
  IntMat a = *this;
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && a(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      for (std::size_t j = c + 1; j < cols_; ++j) {
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

bool IntMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMat::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (i) s += ",";
    s += data_[i].str();
  }
  return s + "]";
}

bool operator<(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                      b.data_.end());
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) { return os << m.to_string(); }

// ---------------------------------------------------------------- Lattice

namespace {

// Row-style echelon form of the generator rows: pivots strictly increasing,
// positive, with entries above each pivot reduced into [0, pivot).
std::vector<std::vector<Int>> echelon_rows(std::vector<std::vector<Int>> rows, std::size_t n,
                                           std::vector<std::size_t>& pivots) {
  std::size_t top = 0;
  pivots.clear();
  for (std::size_t c = 0; c < n && top < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][c] != 0 &&
            (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
          best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q = floor_div(rows[i][c], rows[top][c]);
        for (std::size_t j = c; j < n; ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (top == rows.size() || rows[top][c] == 0) continue;
    if (rows[top][c] < 0)
      for (std::size_t j = c; j < n; ++j) rows[top][j] = -rows[top][j];
    const Int& pivot = rows[top][c];
    for (std::size_t i = 0; i < top; ++i) {
      Int q = floor_div(rows[i][c], pivot);
      if (q != 0)
        for (std::size_t j = c; j < n; ++j) rows[i][j] -= q * rows[top][j];
    }
    pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  return rows;
}

}  // namespace

Lattice hnf_canonicalize(const IntMat& generators) {
  const std::size_t n = generators.rows();
  std::vector<std::vector<Int>> rows;
  rows.reserve(generators.cols());
  for (std::size_t j = 0; j < generators.cols(); ++j) {
    std::vector<Int> r(n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = generators(i, j);
      nonzero = nonzero || r[i] != 0;
    }
    if (nonzero) rows.push_back(std::move(r));
  }
  if (rows.empty()) throw std::invalid_argument("empty lattice");

  Lattice lat;
  auto ech = echelon_rows(std::move(rows), n, lat.pivots_);
  lat.key_ = IntMat(n, ech.size());
  for (std::size_t j = 0; j < ech.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) lat.key_(i, j) = ech[j][i];
  lat.basis_ = generators.cols() == ech.size() ? generators : lat.key_;
  return lat;
}

Lattice hnf_canonicalize(std::span<const IntVec> generators) {
  if (generators.empty()) throw std::invalid_argument("empty lattice");
  return hnf_canonicalize(IntMat::from_columns(generators));
}

Int Lattice::det_sq() const { return key_.gram().determinant(); }

Int Lattice::det() const {
  if (!full_rank()) throw std::invalid_argument("det of a lattice that is not full rank");
  Int d = 1;
  for (std::size_t j = 0; j < rank(); ++j) d *= key_(j, j);
  return d;
}

std::vector<Int> Lattice::key_coordinates(const IntVec& v) const {
  if (v.dim() != ambient_dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<Int> rest(v.coords().begin(), v.coords().end());
  std::vector<Int> coeff(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    const std::size_t p = pivots_[j];
    for (std::size_t i = (j == 0 ? 0 : pivots_[j - 1] + 1); i < p; ++i)
      if (rest[i] != 0) throw std::invalid_argument("not a lattice vector");
    if (rest[p] % key_(p, j) != 0) throw std::invalid_argument("not a lattice vector");
    coeff[j] = rest[p] / key_(p, j);
    for (std::size_t i = p; i < ambient_dim(); ++i) rest[i] -= coeff[j] * key_(i, j);
  }
  for (const Int& x : rest)
    if (x != 0) throw std::invalid_argument("not a lattice vector");
  return coeff;
}

bool Lattice::contains(const IntVec& v) const {
  if (v.dim() != ambient_dim()) return false;
  std::vector<Int> rest(v.coords().begin(), v.coords().end());
  std::size_t next = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    const std::size_t p = pivots_[j];
    for (; next < p; ++next)
      if (rest[next] != 0) return false;
    if (rest[p] % key_(p, j) != 0) return false;
    Int c = rest[p] / key_(p, j);
    if (c != 0)
      for (std::size_t i = p; i < ambient_dim(); ++i) rest[i] -= c * key_(i, j);
    next = p + 1;
  }
  for (; next < ambient_dim(); ++next)
    if (rest[next] != 0) return false;
  return true;
}

Lattice Lattice::transformed(const std::function<IntVec(const IntVec&)>& f) const {
  std::vector<IntVec> cols;
  cols.reserve(rank());
  for (std::size_t j = 0; j < rank(); ++j) cols.push_back(f(key_.column(j)));
  return hnf_canonicalize(std::span<const IntVec>(cols));
}

Int sublattice_index(const Lattice& lattice, const Lattice& sub) {
  if (!lattice.full_rank() || !sub.full_rank() || lattice.ambient_dim() != sub.ambient_dim())
    throw std::invalid_argument("sublattice_index needs full-rank lattices of equal dimension");
  for (std::size_t j = 0; j < sub.rank(); ++j)
    if (!lattice.contains(sub.basis().column(j))) throw std::invalid_argument("not a sublattice");
  Int num = sub.det(), den = lattice.det();
  if (num % den != 0) throw std::logic_error("sublattice index is not an integer");
  return num / den;
}

IntVec rot_shift(const IntVec& v, std::size_t k) {
  const std::size_t n = v.dim();
  k %= n;
  if (k == 0) return v;
  std::vector<Int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[(i + k) % n] = v[i];
  return IntVec(std::move(out));
}

// ---------------------------------------------------------------- CubePoints

CubePoints::CubePoints(std::size_t n, long long radius) : n_(n), radius_(radius) {
  if (n < 2) throw std::invalid_argument("cube dimension must be >= 2");
  if (radius < 0) throw std::invalid_argument("cube radius must be >= 0");
}

Int CubePoints::size() const { return pow(Int(2 * radius_ + 1), static_cast<unsigned>(n_)); }

IntVec CubePoints::at(const Int& index) const {
  if (index < 0 || index >= size()) throw std::out_of_range("cube index out of range");
  const Int side = 2 * radius_ + 1;
  std::vector<Int> c(n_);
  Int rest = index;
  for (std::size_t i = n_; i-- > 0;) {
    c[i] = rest % side - radius_;
    rest /= side;
  }
  return IntVec(std::move(c));
}

CubePoints::iterator& CubePoints::iterator::operator++() {
  for (std::size_t i = current_.dim(); i-- > 0;) {
    if (current_[i] < radius_) {
      ++current_[i];
      return *this;
    }
    current_[i] = -radius_;
  }
  done_ = true;
  return *this;
}

CubePoints::iterator CubePoints::begin() const {
  iterator it;
  it.current_ = IntVec(std::vector<Int>(n_, Int(-radius_)));
  it.radius_ = radius_;
  it.done_ = false;
  return it;
}

void CubePoints::for_each(const Int& first, const Int& last,
                          const std::function<void(const IntVec&)>& visit) const {
  Int end = std::min(last, size());
  if (first >= end) return;
  iterator it;
  it.current_ = at(first);
  it.radius_ = radius_;
  it.done_ = false;
  for (Int i = first; i < end; ++i, ++it) visit(*it);
}

void CubePoints::for_each(const std::function<void(const IntVec&)>& visit) const {
  for (const IntVec& p : *this) visit(p);
}

}  // namespace cyclat
