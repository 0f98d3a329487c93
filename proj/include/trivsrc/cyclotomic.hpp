#pragma once

#include "trivsrc/rational.hpp"

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace trivsrc {

// Element of a cyclotomic field Q(zeta_n), kept in canonical form:
//  - coefficients of 1, zeta_n, ..., zeta_n^(phi(n)-1) after reduction
//    modulo the n-th cyclotomic polynomial,
//  - n minimized over the divisors of the conductor it was built with,
//    so rationals have n == 1 and n == 2 (mod 4) never survives.
// Two values are equal iff their canonical forms are identical, which makes
// equality (and the sorting order used for canonical tables) decidable.
class CycNum {
public:
  CycNum() : n_(1) {}
  CycNum(long long v);
  explicit CycNum(Rat v);

  static CycNum root_of_unity(long n, long long k); // zeta_n^k
  static CycNum from_coeffs(long n, const std::map<long long, Rat>& coeffs);

  long conductor() const { return n_; }
  // exponent -> nonzero coefficient, exponents in [0, phi(n))
  const std::vector<std::pair<long, Rat>>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return n_ == 1; }
  std::optional<Rat> as_rational() const;
  std::optional<long long> try_integer() const;

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);

  CycNum conj() const;          // zeta -> zeta^-1
  CycNum galois(long a) const;  // zeta_n -> zeta_n^a, requires gcd(a, n) == 1
  CycNum scaled(const Rat& r) const;

  bool operator==(const CycNum& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const CycNum& o) const { return !(*this == o); }
  // Total order on canonical forms; only meaningful for deterministic sorting.
  bool operator<(const CycNum& o) const;

  std::complex<double> approx() const; // float shadow for sanity checks only
  std::string str() const;             // canonical "a+b*z(n)^k" spelling

private:
  long n_;
  std::vector<std::pair<long, Rat>> c_; // sorted by exponent, zeros dropped
  static CycNum make_canonical(long n, std::vector<Rat> dense);
};

// Free-function spellings of the core operations.
inline CycNum cyc_root_of_unity(long n, long long k) { return CycNum::root_of_unity(n, k); }
inline CycNum cyc_add(const CycNum& a, const CycNum& b) { return a + b; }
inline CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }
inline CycNum cyc_neg(const CycNum& a) { return -a; }
inline CycNum cyc_conj(const CycNum& a) { return a.conj(); }
inline std::optional<long long> cyc_try_integer(const CycNum& a) { return a.try_integer(); }

long phi_totient(long n);
std::vector<long> divisors_of(long n);

} // namespace trivsrc
