#include "cyclat/perm.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cyclat/svp.hpp"

namespace cyclat {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  const std::size_t n = image_.size();
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t v : image_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a bijection of {1..N}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::standard_cycle(std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = (i + 1) % n + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t n) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t>* open = nullptr;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      if (open) throw std::invalid_argument("nested '(' in cycle notation");
      cycles.emplace_back();
      open = &cycles.back();
      ++i;
    } else if (c == ')') {
      if (!open) throw std::invalid_argument("unbalanced ')' in cycle notation");
      open = nullptr;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) throw std::invalid_argument("number outside a cycle");
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 1000000) throw std::invalid_argument("cycle element too large");
        ++i;
      }
      if (v == 0) throw std::invalid_argument("cycle elements are 1-indexed");
      open->push_back(v);
      largest = std::max(largest, v);
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in cycle notation");
    }
  }
  if (open) throw std::invalid_argument("unterminated cycle");
  if (n == 0) n = largest;
  if (n == 0) throw std::invalid_argument("cannot infer N from an empty cycle list");
  if (largest > n) throw std::invalid_argument("cycle element exceeds N");
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i + 1;
  std::vector<bool> used(n + 1, false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (used[cyc[k]]) throw std::invalid_argument("cycles are not disjoint");
      used[cyc[k]] = true;
      img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(size());
  for (std::size_t i = 0; i < size(); ++i) inv[image_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::power(std::size_t k) const {
  Permutation r = identity(size());
  for (std::size_t i = 0; i < k; ++i) r = *this * r;
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (image_[i] != i + 1) return false;
  return true;
}

bool Permutation::is_ncycle() const {
  std::size_t len = 0, x = 1;
  do {
    x = (*this)(x);
    ++len;
  } while (x != 1);
  return len == size();
}

std::string Permutation::to_cycle_string() const {
  std::vector<bool> seen(size() + 1, false);
  std::string s;
  for (std::size_t start = 1; start <= size(); ++start) {
    if (seen[start] || (*this)(start) == start) continue;
    s += "(";
    std::size_t x = start;
    bool first = true;
    do {
      if (!first) s += " ";
      s += std::to_string(x);
      seen[x] = true;
      first = false;
      x = (*this)(x);
    } while (x != start);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::size_t> img(tau.size());
  for (std::size_t i = 1; i <= tau.size(); ++i) img[i - 1] = sigma(tau(i));
  return Permutation(std::move(img));
}

IntMat perm_matrix(const Permutation& tau) {
  IntMat m(tau.size(), tau.size());
  for (std::size_t j = 1; j <= tau.size(); ++j) m(tau(j) - 1, j - 1) = 1;
  return m;
}

IntVec apply(const Permutation& tau, const IntVec& x) {
  if (x.dim() != tau.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Int> out(x.dim());
  for (std::size_t i = 1; i <= x.dim(); ++i) out[tau(i) - 1] = x[i - 1];
  return IntVec(std::move(out));
}

SignedPermutation::SignedPermutation(Permutation p, std::vector<int> s)
    : perm(std::move(p)), signs(std::move(s)) {
  if (signs.size() != perm.size()) throw std::invalid_argument("sign vector size mismatch");
  for (int v : signs)
    if (v != 1 && v != -1) throw std::invalid_argument("signs must be +1 or -1");
}

IntMat SignedPermutation::matrix() const {
  IntMat m = perm_matrix(perm);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= signs[i];
  return m;
}

IntVec SignedPermutation::apply(const IntVec& x) const {
  IntVec y = cyclat::apply(perm, x);
  for (std::size_t i = 0; i < y.dim(); ++i)
    if (signs[i] < 0) y[i] = -y[i];
  return y;
}

bool is_invariant(const Lattice& lattice, const Permutation& tau) {
  if (tau.size() != lattice.ambient_dim()) throw std::invalid_argument("permutation size mismatch");
  return lattice.transformed([&](const IntVec& v) { return apply(tau, v); }) == lattice;
}

bool is_signed_invariant(const Lattice& lattice, const SignedPermutation& s) {
  if (s.perm.size() != lattice.ambient_dim()) throw std::invalid_argument("permutation size mismatch");
  return lattice.transformed([&](const IntVec& v) { return s.apply(v); }) == lattice;
}

Permutation conjugator_for_ncycle(const Permutation& tau) {
  if (!tau.is_ncycle()) throw std::invalid_argument("not an N-cycle: " + tau.to_cycle_string());
  const std::size_t n = tau.size();
  std::vector<std::size_t> img(n);
  std::size_t x = 1;
  for (std::size_t i = 0; i < n; ++i) {
    img[i] = x;
    x = tau(x);
  }
  Permutation g(std::move(img));
  const Permutation sigma = Permutation::standard_cycle(n);
  if (perm_matrix(tau) != perm_matrix(g) * perm_matrix(sigma) * perm_matrix(g.inverse()))
    throw std::logic_error("conjugation identity failed for " + tau.to_cycle_string());
  return g;
}

IntMat orbit_matrix(const IntVec& x, const Permutation& tau) {
  std::vector<IntVec> cols;
  IntVec v = x;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    cols.push_back(v);
    v = apply(tau, v);
  }
  return IntMat::from_columns(cols);
}

Lattice orbit_lattice(const IntVec& x, const Permutation& tau) {
  return hnf_canonicalize(orbit_matrix(x, tau));
}

IntVec signed_rot(const IntVec& x) {
  IntVec y = rot_shift(x);
  y[0] = -y[0];
  return y;
}

Lattice signed_circulant_lattice(const IntVec& a) {
  if (a.is_zero()) throw std::invalid_argument("zero vector");
  std::vector<IntVec> cols;
  IntVec v = a;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    cols.push_back(v);
    v = signed_rot(v);
  }
  return hnf_canonicalize(std::span<const IntVec>(cols));
}

bool dim2_signed_wr_check(const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw std::invalid_argument("(a, b) must be nonzero");
  const IntVec u(std::vector<Int>{a, b});
  const IntVec w(std::vector<Int>{-b, a});
  const std::vector<IntVec> cols{u, w};
  return is_well_rounded(hnf_canonicalize(std::span<const IntVec>(cols)));
}

}  // namespace cyclat
