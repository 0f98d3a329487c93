#include "trivsrc/cyclotomic.hpp"

#include "trivsrc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

namespace trivsrc {

std::optional<long long> rat_try_long(const Rat& r) {
  if (!rat_is_integer(r)) return std::nullopt;
  Int n = rat_num(r);
  if (n > Int(std::numeric_limits<long long>::max()) ||
      n < Int(std::numeric_limits<long long>::min()))
    return std::nullopt;
  return static_cast<long long>(n);
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (!rat_is_integer(r)) os << "/" << rat_den(r);
  return os.str();
}

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("malformed rational: " + s);
  }
}

long phi_totient(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> divisors_of(long n) {
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

namespace {

// Integer polynomials as coefficient vectors, index = degree.
using IPoly = std::vector<Int>;

IPoly ipoly_div_exact(const IPoly& num, const IPoly& den) {
  // den is monic; remainder must vanish.
  IPoly rem = num;
  IPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
  for (long k = static_cast<long>(rem.size()) - 1;
       k >= static_cast<long>(den.size()) - 1; --k) {
    Int c = rem[k];
    if (c == 0) continue;
    long shift = k - (static_cast<long>(den.size()) - 1);
    quot[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
  }
  for (const Int& c : rem)
    if (c != 0) throw StructureError("inexact cyclotomic polynomial division");
  return quot;
}

const IPoly& cyclotomic_poly(long n) {
  static std::map<long, IPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::function<const IPoly&(long)> get = [&](long m) -> const IPoly& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    IPoly p(m + 1, Int(0));
    p[0] = -1;
    p[m] = 1;
    for (long d : divisors_of(m))
      if (d != m) p = ipoly_div_exact(p, get(d));
    return cache.emplace(m, std::move(p)).first->second;
  };
  return get(n);
}

// Remainder of a rational polynomial modulo the monic Phi_n.
std::vector<Rat> reduce_mod_phi(std::vector<Rat> p, long n) {
  const IPoly& phi = cyclotomic_poly(n);
  const long deg = static_cast<long>(phi.size()) - 1;
  for (long k = static_cast<long>(p.size()) - 1; k >= deg; --k) {
    Rat c = p[k];
    if (c == 0) continue;
    long shift = k - deg;
    for (long i = 0; i <= deg; ++i) p[shift + i] -= c * Rat(phi[i]);
  }
  p.resize(std::max<long>(deg, 1), Rat(0));
  while (static_cast<long>(p.size()) > deg) p.pop_back();
  return p;
}

// x^k mod Phi_n for k = 0..kmax as dense vectors of length phi(n).
std::vector<std::vector<Rat>> monomial_reductions(long n, long kmax) {
  const long deg = phi_totient(n);
  std::vector<std::vector<Rat>> pows;
  std::vector<Rat> cur(deg, Rat(0));
  cur[0] = 1;
  pows.push_back(cur);
  for (long k = 1; k <= kmax; ++k) {
    std::vector<Rat> next(deg + 1, Rat(0));
    for (long i = 0; i < deg; ++i) next[i + 1] = cur[i];
    next = reduce_mod_phi(std::move(next), n);
    cur = next;
    pows.push_back(cur);
  }
  return pows;
}

// Solve A x = b exactly (columns of A are given as vectors). Returns x or
// nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> cols,
                                             std::vector<Rat> b) {
  const size_t rows = b.size();
  const size_t ncols = cols.size();
  std::vector<size_t> pivot_col;
  size_t r = 0;
  std::vector<size_t> col_of_row(rows, SIZE_MAX);
  for (size_t c = 0; c < ncols && r < rows; ++c) {
    size_t piv = SIZE_MAX;
    for (size_t i = r; i < rows; ++i)
      if (cols[c][i] != 0) { piv = i; break; }
    if (piv == SIZE_MAX) continue;
    if (piv != r) {
      for (size_t cc = 0; cc < ncols; ++cc) std::swap(cols[cc][piv], cols[cc][r]);
      std::swap(b[piv], b[r]);
    }
    Rat inv = Rat(1) / cols[c][r];
    for (size_t cc = 0; cc < ncols; ++cc) cols[cc][r] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rat f = cols[c][i];
      if (f == 0) continue;
      for (size_t cc = 0; cc < ncols; ++cc) cols[cc][i] -= f * cols[cc][r];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    col_of_row[r] = c;
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rat> x(ncols, Rat(0));
  for (size_t i = 0; i < r; ++i) x[col_of_row[i]] = b[i];
  // Verify (guards against free variables interacting with pivots).
  for (size_t i = 0; i < rows; ++i) {
    Rat acc(0);
    for (size_t c = 0; c < ncols; ++c) acc += cols[c][i] * x[c];
    if (acc != b[i]) return std::nullopt;
  }
  return x;
}

} // namespace

CycNum::CycNum(long long v) : n_(1) {
  if (v != 0) c_.emplace_back(0, Rat(v));
}

CycNum::CycNum(Rat v) : n_(1) {
  if (v != 0) c_.emplace_back(0, std::move(v));
}

CycNum CycNum::make_canonical(long n, std::vector<Rat> dense) {
  if (n < 1) throw StructureError("conductor must be positive");
  // dense has length n (exponents already folded mod n); reduce mod Phi_n.
  std::vector<Rat> red = n == 1 ? dense : reduce_mod_phi(std::move(dense), n);
  bool zero = true;
  for (const Rat& c : red)
    if (c != 0) { zero = false; break; }
  CycNum out;
  if (zero) return out;
  // Minimize the conductor over divisors of n.
  for (long m : divisors_of(n)) {
    if (m == n) break;
    const long dm = phi_totient(m);
    auto pows = monomial_reductions(n, (n / m) * std::max<long>(dm - 1, 0));
    std::vector<std::vector<Rat>> cols;
    for (long e = 0; e < dm; ++e) cols.push_back(pows[(n / m) * e]);
    if (auto sol = solve_linear(std::move(cols), red)) {
      out.n_ = m;
      for (long e = 0; e < dm; ++e)
        if ((*sol)[e] != 0) out.c_.emplace_back(e, (*sol)[e]);
      return out;
    }
  }
  out.n_ = n;
  for (size_t e = 0; e < red.size(); ++e)
    if (red[e] != 0) out.c_.emplace_back(static_cast<long>(e), red[e]);
  return out;
}

CycNum CycNum::from_coeffs(long n, const std::map<long long, Rat>& coeffs) {
  if (n < 1) throw ParseError("conductor must be positive");
  std::vector<Rat> dense(std::max<long>(n, 1), Rat(0));
  for (const auto& [e, c] : coeffs) {
    long long f = ((e % n) + n) % n;
    dense[static_cast<size_t>(f)] += c;
  }
  return make_canonical(n, std::move(dense));
}

CycNum CycNum::root_of_unity(long n, long long k) {
  if (n < 1) throw ParseError("root of unity needs positive order");
  return from_coeffs(n, {{k, Rat(1)}});
}

std::optional<Rat> CycNum::as_rational() const {
  if (n_ != 1) return std::nullopt;
  if (c_.empty()) return Rat(0);
  return c_[0].second;
}

std::optional<long long> CycNum::try_integer() const {
  auto r = as_rational();
  if (!r || !rat_is_integer(*r)) return std::nullopt;
  return rat_try_long(*r);
}

CycNum CycNum::operator+(const CycNum& o) const {
  long l = std::lcm(n_, o.n_);
  std::vector<Rat> dense(l, Rat(0));
  for (const auto& [e, c] : c_) dense[e * (l / n_)] += c;
  for (const auto& [e, c] : o.c_) dense[e * (l / o.n_)] += c;
  return make_canonical(l, std::move(dense));
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& [e, c] : out.c_) c = -c;
  return out;
}

CycNum CycNum::operator*(const CycNum& o) const {
  if (is_zero() || o.is_zero()) return CycNum();
  long l = std::lcm(n_, o.n_);
  std::vector<Rat> dense(l, Rat(0));
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_)
      dense[(e1 * (l / n_) + e2 * (l / o.n_)) % l] += c1 * c2;
  return make_canonical(l, std::move(dense));
}

CycNum& CycNum::operator+=(const CycNum& o) { return *this = *this + o; }
CycNum& CycNum::operator-=(const CycNum& o) { return *this = *this - o; }
CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum CycNum::conj() const { return galois(n_ - 1 == 0 ? 1 : n_ - 1); }

CycNum CycNum::galois(long a) const {
  long aa = ((a % n_) + n_) % n_;
  if (std::gcd(aa == 0 ? n_ : aa, n_) != 1)
    throw StructureError("galois exponent not coprime to conductor");
  std::map<long long, Rat> m;
  for (const auto& [e, c] : c_) m[(e * aa) % n_] += c;
  return from_coeffs(n_, m);
}

CycNum CycNum::scaled(const Rat& r) const {
  if (r == 0) return CycNum();
  CycNum out = *this;
  for (auto& [e, c] : out.c_) c *= r;
  return out;
}

bool CycNum::operator<(const CycNum& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  size_t i = 0, j = 0;
  while (i < c_.size() || j < o.c_.size()) {
    long ea = i < c_.size() ? c_[i].first : n_;
    long eb = j < o.c_.size() ? o.c_[j].first : n_;
    if (ea != eb) {
      // Missing exponent means coefficient 0 at the smaller exponent.
      if (ea < eb) return c_[i].second < 0;
      return !(o.c_[j].second < 0);
    }
    if (c_[i].second != o.c_[j].second) return c_[i].second < o.c_[j].second;
    ++i;
    ++j;
  }
  return false;
}

std::complex<double> CycNum::approx() const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [e, c] : c_) {
    double co = static_cast<double>(rat_num(c)) / static_cast<double>(rat_den(c));
    double ang = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(n_);
    acc += co * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string CycNum::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    if (e == 0) {
      os << rat_str(mag);
    } else {
      if (mag != 1) os << rat_str(mag) << "*";
      os << "z(" << n_ << ")";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

} // namespace trivsrc
