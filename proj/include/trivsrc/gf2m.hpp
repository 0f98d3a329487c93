#pragma once

namespace trivsrc {

// F_{2^d} for 1 <= d <= 12, elements encoded as polynomial bitmasks over F_2
// reduced by a fixed primitive polynomial per degree (Conway's list), so the
// construction is deterministic across runs and platforms.
class GF2m {
public:
  explicit GF2m(int d);

  int degree() const { return d_; }
  unsigned field_order() const { return 1u << d_; }
  unsigned add(unsigned a, unsigned b) const { return a ^ b; }
  unsigned mul(unsigned a, unsigned b) const;
  unsigned pow(unsigned a, long long e) const;
  // Smallest element (as an integer) generating the unit group.
  unsigned primitive_element() const;

private:
  int d_;
  unsigned poly_; // reduction polynomial including the leading term
};

} // namespace trivsrc
