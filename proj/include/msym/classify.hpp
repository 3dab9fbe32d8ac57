#pragma once

#include <string>
#include <vector>

#include "msym/stabilizer.hpp"

namespace msym {

/// Isomorphism type of a finite Moebius group: one of the five families.
struct GroupType {
  enum class Tag { Trivial, Cyclic, Dihedral, Tetrahedral, Octahedral,
                   Icosahedral };
  Tag tag = Tag::Trivial;
  int p = 1;  // parameter of Cyclic(p) / Dihedral(p)

  int order() const;
  std::string str() const;

  bool operator==(const GroupType& o) const {
    return tag == o.tag && (is_parametric() ? p == o.p : true);
  }
  bool is_parametric() const {
    return tag == Tag::Cyclic || tag == Tag::Dihedral;
  }

  static GroupType trivial() { return {Tag::Trivial, 1}; }
  static GroupType cyclic(int p) { return {Tag::Cyclic, p}; }
  static GroupType dihedral(int p) { return {Tag::Dihedral, p}; }
  static GroupType tetrahedral() { return {Tag::Tetrahedral, 0}; }
  static GroupType octahedral() { return {Tag::Octahedral, 0}; }
  static GroupType icosahedral() { return {Tag::Icosahedral, 0}; }
  static GroupType parse(const std::string& s);
};

/// Determines the family from the element-order census alone.
GroupType group_type(const SymmetryGroup& g);

struct ConjugacyClassLabel {
  int order_p = 1;       // element order of the class
  int angle_q = 0;       // min(q, p-q) of the rotation angle, 0 for identity
  bool square_of_order4 = false;  // set on order-2 classes when applicable
};

struct ConjugacyPartition {
  std::vector<std::vector<int>> classes;  // indices into group elements
  std::vector<ConjugacyClassLabel> labels;
};

/// Brute-force partition by conjugation within the group.  Classes come out
/// ordered: identity first, then by (element order, rotation angle class).
ConjugacyPartition conjugacy_classes(const SymmetryGroup& g);

/// Cayley table helpers shared by classify and reptheory.
std::vector<std::vector<int>> multiplication_table(const SymmetryGroup& g);
std::vector<int> element_orders(const SymmetryGroup& g);

}  // namespace msym
