#include "trivsrc/perm.hpp"

#include "trivsrc/errors.hpp"

#include <numeric>
#include <sstream>

namespace trivsrc {

Perm::Perm(int degree) : im_(degree) {
  std::iota(im_.begin(), im_.end(), 0);
}

Perm Perm::from_images_1based(const std::vector<int>& images) {
  Perm p;
  p.im_.resize(images.size());
  std::vector<bool> seen(images.size(), false);
  for (size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
      throw ParseError("invalid permutation image list");
    seen[v - 1] = true;
    p.im_[i] = v - 1;
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (im_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree()) throw StructureError("degree mismatch in product");
  Perm r;
  r.im_.resize(im_.size());
  for (int i = 0; i < degree(); ++i) r.im_[i] = im_[o.im_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.im_.resize(im_.size());
  for (int i = 0; i < degree(); ++i) r.im_[im_[i]] = i;
  return r;
}

long Perm::order() const {
  long ord = 1;
  std::vector<bool> seen(im_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (int j = i; !seen[j]; j = im_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<int> Perm::images_1based() const {
  std::vector<int> v(im_.size());
  for (size_t i = 0; i < im_.size(); ++i) v[i] = im_[i] + 1;
  return v;
}

std::string Perm::cycle_str() const {
  if (is_identity()) return "()";
  std::ostringstream os;
  std::vector<bool> seen(im_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || im_[i] == i) {
      seen[i] = true;
      continue;
    }
    os << "(";
    bool first = true;
    for (int j = i; !seen[j]; j = im_[j]) {
      seen[j] = true;
      if (!first) os << ",";
      os << j + 1;
      first = false;
    }
    os << ")";
  }
  return os.str();
}

size_t Perm::Hash::operator()(const Perm& p) const {
  size_t h = 1469598103934665603ull;
  for (int v : p.im_) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > degree) throw ParseError("cycle point out of range");
      images[from - 1] = to;
    }
  }
  return Perm::from_images_1based(images);
}

} // namespace trivsrc
