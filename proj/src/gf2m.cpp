#include "trivsrc/gf2m.hpp"

#include "trivsrc/errors.hpp"

#include <vector>

namespace trivsrc {

namespace {

// Conway polynomials over F_2, degree 1..12, as bitmasks.
const unsigned kPoly[13] = {
    0,
    0b11,            // x + 1
    0b111,           // x^2 + x + 1
    0b1011,          // x^3 + x + 1
    0b10011,         // x^4 + x + 1
    0b100101,        // x^5 + x^2 + 1
    0b1011011,       // x^6 + x^4 + x^3 + x + 1
    0b10000011,      // x^7 + x + 1
    0b100011101,     // x^8 + x^4 + x^3 + x^2 + 1
    0b1000010001,    // x^9 + x^4 + 1
    0b10001101111,   // x^10 + x^6 + x^5 + x^3 + x^2 + x + 1
    0b100000000101,  // x^11 + x^2 + 1
    0b1000011101011, // x^12 + x^7 + x^6 + x^5 + x^3 + x + 1
};

} // namespace

GF2m::GF2m(int d) : d_(d) {
  if (d < 1 || d > 12)
    throw ScopeError("finite field degree outside the supported range 1..12");
  poly_ = kPoly[d];
}

unsigned GF2m::mul(unsigned a, unsigned b) const {
  unsigned long long acc = 0, aa = a;
  while (b) {
    if (b & 1) acc ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  for (int bit = 2 * d_ - 2; bit >= d_; --bit)
    if (acc >> bit & 1) acc ^= static_cast<unsigned long long>(poly_) << (bit - d_);
  return static_cast<unsigned>(acc);
}

unsigned GF2m::pow(unsigned a, long long e) const {
  const long long m = field_order() - 1;
  e %= m;
  if (e < 0) e += m;
  unsigned r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

unsigned GF2m::primitive_element() const {
  const long long m = field_order() - 1;
  if (m == 1) return 1;
  std::vector<long long> prime_factors;
  long long rest = m;
  for (long long p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      prime_factors.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) prime_factors.push_back(rest);
  for (unsigned g = 2; g < field_order(); ++g) {
    bool ok = true;
    for (long long p : prime_factors)
      if (pow(g, m / p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw StructureError("field has no primitive element");
}

} // namespace trivsrc
