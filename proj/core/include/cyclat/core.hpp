#pragma once

// Exact integer linear algebra over Z^N: vectors, matrices, canonical
// lattice bases, the rotational shift and cube-point enumeration.
//
// Every quantity is an exact integer. Norms are always squared norms.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "cyclat/integer.hpp"

namespace cyclat {

/// A point of Z^N, N >= 2.
class IntVec {
 public:
  IntVec() = default;
  explicit IntVec(std::vector<Int> coords);
  IntVec(std::initializer_list<long long> coords);
  /// The zero vector of dimension n.
  static IntVec zero(std::size_t n);
  /// The i-th standard basis vector (0-based) of dimension n.
  static IntVec unit(std::size_t n, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  const Int& operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Int> coords() const { return coords_; }

  bool is_zero() const;
  Int norm_sq() const;
  Int sup_norm() const;
  Int dot(const IntVec& other) const;

  IntVec operator-() const;
  IntVec& operator+=(const IntVec& other);
  IntVec& operator-=(const IntVec& other);
  IntVec& operator*=(const Int& c);
  /// this += c * other
  void add_scaled(const IntVec& other, const Int& c);

  /// ±-canonical form: first nonzero coordinate positive.
  IntVec sign_canonical() const;

  std::string to_string() const;  // "(a,b,c)"

  friend bool operator==(const IntVec& a, const IntVec& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const IntVec& a, const IntVec& b) { return !(a == b); }
  /// Lexicographic; dimensions must agree.
  friend bool operator<(const IntVec& a, const IntVec& b);

 private:
  std::vector<Int> coords_;
};

IntVec operator+(IntVec a, const IntVec& b);
IntVec operator-(IntVec a, const IntVec& b);
IntVec operator*(const Int& c, IntVec v);
std::ostream& operator<<(std::ostream& os, const IntVec& v);

/// Dense row-major integer matrix.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);
  IntMat(std::size_t rows, std::size_t cols, std::vector<Int> row_major);
  static IntMat identity(std::size_t n);
  static IntMat from_columns(std::span<const IntVec> columns);
  static IntMat from_rows(std::span<const IntVec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Int> row_major() const { return data_; }

  IntVec column(std::size_t j) const;
  IntVec row(std::size_t i) const;
  std::vector<IntVec> columns() const;

  IntMat transpose() const;
  IntMat operator*(const IntMat& other) const;
  IntVec operator*(const IntVec& v) const;
  /// M^t M.
  IntMat gram() const;

  /// Fraction-free (Bareiss) elimination; square matrices only.
  Int determinant() const;
  /// Fraction-free elimination rank.
  std::size_t rank() const;

  bool is_zero() const;
  /// Row-major decimal list, "[a,b,c,...]".
  std::string to_string() const;

  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMat& a, const IntMat& b) { return !(a == b); }
  /// Total order (shape, then row-major lexicographic) so keys can live in ordered sets.
  friend bool operator<(const IntMat& a, const IntMat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMat& m);

/// A sublattice of Z^N identified by its canonical Hermite normal form.
///
/// The key is an N x r matrix whose columns form a basis. Column j has its
/// first nonzero entry (the pivot) at row p_j with p_0 < p_1 < ..., the
/// pivot is positive, and every entry to the left of a pivot in its row is
/// reduced into [0, pivot). For full rank this is the lower-triangular HNF
/// with positive diagonal. Two lattices are equal iff their keys are.
class Lattice {
 public:
  std::size_t ambient_dim() const { return key_.rows(); }
  std::size_t rank() const { return key_.cols(); }
  bool full_rank() const { return rank() == ambient_dim(); }

  /// Independent columns spanning the lattice (the presented basis when it
  /// was independent, the key otherwise).
  const IntMat& basis() const { return basis_; }
  const IntMat& hnf_key() const { return key_; }
  /// Row index of each key column's pivot.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Determinant of the Gram matrix, det(L)^2.
  Int det_sq() const;
  /// det(L) for full-rank lattices (product of the key diagonal).
  Int det() const;

  /// Exact membership test by triangular solve against the key.
  bool contains(const IntVec& v) const;
  /// Integer coordinates of v in the key basis; throws if v is not a member.
  std::vector<Int> key_coordinates(const IntVec& v) const;

  /// Lattice spanned by the images of the key columns under f.
  Lattice transformed(const std::function<IntVec(const IntVec&)>& f) const;

  std::string key_string() const { return key_.to_string(); }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.key_ == b.key_; }
  friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }
  friend bool operator<(const Lattice& a, const Lattice& b) { return a.key_ < b.key_; }

 private:
  friend Lattice hnf_canonicalize(const IntMat& generators);
  IntMat basis_;
  IntMat key_;
  std::vector<std::size_t> pivots_;
};

/// rot^k(v), rot(x_1..x_N) = (x_N, x_1, ..., x_{N-1}).
IntVec rot_shift(const IntVec& v, std::size_t k = 1);

/// Canonical lattice spanned by the columns of `generators` (which may be
/// dependent). Throws std::invalid_argument("empty lattice") when every
/// column is zero.
Lattice hnf_canonicalize(const IntMat& generators);
Lattice hnf_canonicalize(std::span<const IntVec> generators);

/// [L : sub] = det(sub)/det(L) for full-rank sub ⊆ L.
/// Throws std::invalid_argument("not a sublattice") when sub ⊄ L.
Int sublattice_index(const Lattice& lattice, const Lattice& sub);

/// The integer points of the cube [-R, R]^N in lexicographic order
/// (first coordinate most significant).
class CubePoints {
 public:
  CubePoints(std::size_t n, long long radius);

  std::size_t dim() const { return n_; }
  long long radius() const { return radius_; }
  /// (2R+1)^N.
  Int size() const;
  /// Point at a lexicographic index in [0, size()).
  IntVec at(const Int& index) const;

  /// Visit points with indices in [first, last).
  void for_each(const Int& first, const Int& last,
                const std::function<void(const IntVec&)>& visit) const;
  void for_each(const std::function<void(const IntVec&)>& visit) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = IntVec;
    using difference_type = std::ptrdiff_t;
    using pointer = const IntVec*;
    using reference = const IntVec&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }
    friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

   private:
    friend class CubePoints;
    IntVec current_;
    long long radius_ = 0;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return {}; }

 private:
  std::size_t n_;
  long long radius_;
};

}  // namespace cyclat
