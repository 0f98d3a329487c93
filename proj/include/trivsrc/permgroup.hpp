#pragma once

#include "trivsrc/perm.hpp"

#include <memory>
#include <unordered_map>
#include <vector>

namespace trivsrc {

struct ConjClass {
  int rep;      // element index of the first-discovered member
  long size;
  long order;   // order of the elements
  std::vector<int> members; // ascending element indices
};

// Finite permutation group with a full element enumeration (breadth-first
// closure of the generators, deterministic order). Intended for orders up to
// a few thousand; immutable after construction, safe to share across threads.
class PermGroup {
public:
  static std::shared_ptr<const PermGroup> from_generators(
      int degree, std::vector<Perm> gens, size_t order_bound = 5000);

  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elems_.size()); }
  const std::vector<Perm>& generators() const { return gens_; }
  const Perm& element(int i) const { return elems_[i]; }
  int index_of(const Perm& p) const; // -1 when absent
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int conjugate(int g, int by) const; // by * g * by^-1
  int power(int g, long long e) const;
  long element_order(int a) const { return orders_[a]; }
  long exponent() const;
  bool is_abelian() const;

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const ConjClass& cls(int k) const { return classes_[k]; }
  int class_of(int elt) const { return class_of_[elt]; }
  // Class ids sorted by (element order, class size, discovery order).
  std::vector<int> canonical_class_order() const;

private:
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, int, Perm::Hash> index_;
  std::vector<int> inv_;
  std::vector<long> orders_;
  std::vector<int> class_of_;
  std::vector<ConjClass> classes_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

// Subgroup utilities. Subgroups are sorted lists of element indices.
std::vector<int> subgroup_closure(const PermGroup& g, std::vector<int> seed);
bool is_subgroup(const PermGroup& g, const std::vector<int>& elts);
std::vector<int> conjugated_subgroup(const PermGroup& g,
                                     const std::vector<int>& sub, int by);
std::vector<int> normalizer(const PermGroup& g, const std::vector<int>& sub);
std::vector<int> centralizer(const PermGroup& g, int elt);
bool is_conjugate_subgroup(const PermGroup& g, const std::vector<int>& a,
                           const std::vector<int>& b, int* conjugator = nullptr);
std::vector<int> derived_subgroup(const PermGroup& g,
                                  const std::vector<int>& sub);

// N/Q for Q normal in N, modelled by the action on left cosets of Q in N.
// When Q is trivial and N is the whole group the group itself is reused.
struct Quotient {
  GroupPtr group;
  bool self = false;                    // quotient is the ambient group itself
  std::vector<int> coset_rep;           // quotient element index -> ambient element
  std::unordered_map<int, int> project_map; // ambient element -> quotient element
  int project(int ambient_elt) const;
};
Quotient quotient_group(const GroupPtr& g, const std::vector<int>& n_elts,
                        const std::vector<int>& q_elts);

// Subgroup repackaged as a standalone group, remembering where its elements
// sit in the ambient enumeration.
struct Subgroup {
  GroupPtr ambient;
  GroupPtr group;
  std::vector<int> to_ambient; // group element index -> ambient element index
};
Subgroup make_subgroup(const GroupPtr& ambient,
                       const std::vector<int>& elements);

// g = g2 * g2' with g2 a 2-element, g2' of odd order, both powers of g.
std::pair<int, int> p_part_decomposition(const PermGroup& g, int elt);

// Representative Sylow 2-subgroup; supported 2-parts are 1, 2 and 4 with a
// Klein four-group in the last case.
std::vector<int> sylow_2_subgroup(const PermGroup& g);

// One conjugacy class of 2-subgroups, with the local data the character-table
// machinery needs.
struct SubgroupClassInfo {
  std::vector<int> subgroup;    // representative, sorted element indices
  long subgroup_order = 1;
  int generator = 0;            // generating involution when the order is 2
  std::vector<int> normalizer;  // sorted element indices of the normalizer
  Quotient quotient;            // normalizer / subgroup
  // Odd-order lifts of the odd-order classes of the quotient, one per class,
  // listed in the quotient's canonical class order.
  std::vector<int> p_prime_reps;
};
std::vector<SubgroupClassInfo> two_subgroup_classes(const GroupPtr& g);

// Built-in groups.
GroupPtr klein_group();                 // <(1,2)(3,4), (1,3)(2,4)>
GroupPtr alt4_group();                  // <(1,2)(3,4), (1,2,3)>
GroupPtr alt5_group();                  // <(1,2)(3,4), (1,3,5)>
GroupPtr dihedral_group(long v);        // order 4v, v odd >= 3, degree 2v
GroupPtr ex972_group();                 // (C3)^4 : A4, order 972, degree 12
GroupPtr builtin_group(const std::string& name); // v4 a4 a5 d4v:<v> ex972

} // namespace trivsrc
