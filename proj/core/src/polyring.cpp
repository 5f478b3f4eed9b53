#include "cyclat/polyring.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace cyclat {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(std::size_t degree, Int coeff) {
  std::vector<Int> c(degree + 1);
  c[degree] = std::move(coeff);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::cycle(std::size_t n) {
  std::vector<Int> c(n + 1);
  c[0] = -1;
  c[n] += 1;
  return IntPoly(std::move(c));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const Int& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Int IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (Int& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const Int& c) const {
  std::vector<Int> out = coeffs_;
  for (Int& x : out) x *= c;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divided_exact(const Int& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  std::vector<Int> out = coeffs_;
  for (Int& x : out) {
    if (x % c != 0) throw std::logic_error("inexact polynomial division");
    x /= c;
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) s += mag.str();
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

PolyDivision divmod_monic(const IntPoly& a, const IntPoly& monic) {
  if (monic.is_zero() || monic.leading() != 1)
    throw std::invalid_argument("divisor must be monic");
  const std::size_t db = *monic.degree();
  std::vector<Int> rem = a.coeffs();
  if (rem.size() <= db) return {IntPoly{}, a};
  std::vector<Int> quo(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    const Int q = rem[k];
    if (q == 0) continue;
    quo[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * monic.coeffs()[j];
  }
  rem.resize(db);
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

bool divides_monic(const IntPoly& monic, const IntPoly& a) {
  return divmod_monic(a, monic).remainder.is_zero();
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
  if (a.is_zero() || *a.degree() < *b.degree()) return a;
  const std::size_t db = *b.degree();
  const Int& lb = b.leading();
  unsigned e = static_cast<unsigned>(*a.degree() - db + 1);
  IntPoly r = a;
  while (!r.is_zero() && *r.degree() >= db) {
    IntPoly t = b * IntPoly::monomial(*r.degree() - db, r.leading());
    r = r.scaled(lb) - t;
    --e;
  }
  return r.scaled(pow(lb, e));
}

IntPoly reduce_mod_cycle(const IntPoly& p, std::size_t n) {
  std::vector<Int> c(n);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i % n] += p.coeffs()[i];
  return IntPoly(std::move(c));
}

IntPoly vec_to_poly(const IntVec& a) {
  return IntPoly(std::vector<Int>(a.coords().begin(), a.coords().end()));
}

IntVec poly_to_vec(const IntPoly& p, std::size_t n) {
  if (p.degree() && *p.degree() >= n)
    throw std::invalid_argument("polynomial degree exceeds N - 1");
  std::vector<Int> c(n);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i] = p.coeffs()[i];
  return IntVec(std::move(c));
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic(std::size_t d) {
  if (d == 0) throw std::invalid_argument("cyclotomic index must be >= 1");
  static std::mutex mu;
  static std::map<std::size_t, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  IntPoly p = IntPoly::cycle(d);
  for (std::size_t e : divisors(d)) {
    if (e == d) continue;
    auto div = divmod_monic(p, cyclotomic(e));
    if (!div.remainder.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    p = div.quotient;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(d, p);
  return p;
}

IntPoly gcd_with_cycle(const IntVec& a) {
  if (a.is_zero()) throw std::invalid_argument("zero polynomial");
  const IntPoly pa = vec_to_poly(a);
  IntPoly g{1};
  for (std::size_t d : divisors(a.dim())) {
    IntPoly phi = cyclotomic(d);
    if (divides_monic(phi, pa)) g = g * phi;
  }
  return g;
}

IntMat circulant_matrix(const IntVec& a) {
  std::vector<IntVec> cols;
  cols.reserve(a.dim());
  IntVec v = a;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    cols.push_back(v);
    v = rot_shift(v);
  }
  return IntMat::from_columns(cols);
}

std::size_t cyclic_order(const IntVec& a) {
  if (a.is_zero()) throw std::invalid_argument("zero vector has no cyclic order");
  const std::size_t by_rank = circulant_matrix(a).rank();
  const std::size_t by_gcd = a.dim() - *gcd_with_cycle(a).degree();
  if (by_rank != by_gcd)
    throw std::logic_error("cyclic order mismatch between circulant rank and gcd degree for " +
                           a.to_string());
  return by_rank;
}

Int resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  IntPoly a = f, b = g;
  int s = 1;
  if (*a.degree() < *b.degree()) {
    std::swap(a, b);
    if ((*a.degree() % 2 == 1) && (*b.degree() % 2 == 1)) s = -1;
  }
  if (*b.degree() == 0) return s * pow(b.leading(), static_cast<unsigned>(*a.degree()));

  Int gg = 1, h = 1;
  for (;;) {
    const std::size_t da = *a.degree(), db = *b.degree();
    const unsigned delta = static_cast<unsigned>(da - db);
    if (da % 2 == 1 && db % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = b;
    if (r.is_zero()) return 0;
    b = r.divided_exact(gg * pow(h, delta));
    gg = a.leading();
    if (delta == 1) {
      h = gg;
    } else if (delta > 1) {
      Int num = pow(gg, delta), den = pow(h, delta - 1);
      if (num % den != 0) throw std::logic_error("inexact subresultant update");
      h = num / den;
    }
    if (*b.degree() == 0) break;
  }
  const unsigned da = static_cast<unsigned>(*a.degree());
  Int num = pow(b.leading(), da), den = pow(h, da - 1);
  if (num % den != 0) throw std::logic_error("inexact subresultant finish");
  return s * (num / den);
}

Int circulant_det_resultant(const IntVec& a) {
  Int res = resultant(IntPoly::cycle(a.dim()), vec_to_poly(a));
  Int det = circulant_matrix(a).determinant();
  if (res != det)
    throw std::logic_error("resultant " + res.str() + " != circulant determinant " + det.str());
  return res;
}

Lattice cyclotomic_sublattice(std::size_t n, std::size_t d) {
  if (d == 0 || n % d != 0) throw std::invalid_argument("d must divide N");
  const IntPoly phi = cyclotomic(d);
  const std::size_t r = n - *phi.degree();
  std::vector<IntVec> cols;
  for (std::size_t i = 0; i < r; ++i) cols.push_back(poly_to_vec(phi * IntPoly::monomial(i), n));
  return hnf_canonicalize(std::span<const IntVec>(cols));
}

bool in_cyclotomic_subspace(const IntVec& v, std::size_t d) {
  return divides_monic(cyclotomic(d), vec_to_poly(v));
}

}  // namespace cyclat
