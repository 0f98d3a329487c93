#pragma once

#include <string>
#include <vector>

namespace trivsrc {

// Permutation of {1..degree}, stored 0-based. Composition acts on the left:
// (a*b)(x) = a(b(x)).
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree);
  static Perm from_images_1based(const std::vector<int>& images);

  int degree() const { return static_cast<int>(im_.size()); }
  int apply(int x) const { return im_[x]; }
  bool is_identity() const;
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  long order() const;

  std::vector<int> images_1based() const;
  std::string cycle_str() const;

  bool operator==(const Perm& o) const { return im_ == o.im_; }
  bool operator!=(const Perm& o) const { return im_ != o.im_; }
  bool operator<(const Perm& o) const { return im_ < o.im_; }

  struct Hash {
    size_t operator()(const Perm& p) const;
  };

private:
  std::vector<int> im_;
};

// Convenience builder from cycles, e.g. perm_from_cycles(4, {{1,2},{3,4}}).
Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

} // namespace trivsrc
