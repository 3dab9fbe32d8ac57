#include "msym/classify.hpp"

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "msym/orbits.hpp"
#include "test_support.hpp"

using namespace msym;
using msym::test::roots_of_unity;

namespace {

SymmetryGroup stab_of(std::vector<SpherePoint> pts) {
  return compute_stabilizer(PointConfig::canonical(std::move(pts)));
}

}  // namespace

TEST_CASE("group types from the element-order census") {
  std::vector<SpherePoint> generic{SpherePoint(0.0), SpherePoint(1.0),
                                   SpherePoint(Complex(2.3, 0.7)),
                                   SpherePoint(-5.0),
                                   SpherePoint(Complex(0, 0.1))};
  CHECK(group_type(stab_of(generic)) == GroupType::trivial());

  std::vector<SpherePoint> octa{SpherePoint(0.0), SpherePoint::infinity()};
  for (auto& p : roots_of_unity(4)) octa.push_back(p);
  CHECK(group_type(stab_of(octa)) == GroupType::octahedral());

  std::vector<SpherePoint> z5{SpherePoint(0.0)};
  for (auto& p : roots_of_unity(5)) z5.push_back(p);
  CHECK(group_type(stab_of(z5)) == GroupType::cyclic(5));

  CHECK(group_type(stab_of(roots_of_unity(5))) == GroupType::dihedral(5));

  std::vector<SpherePoint> k4{SpherePoint(1.0), SpherePoint(-1.0),
                              SpherePoint(2.0), SpherePoint(-2.0),
                              SpherePoint(0.5), SpherePoint(-0.5)};
  CHECK(group_type(stab_of(k4)) == GroupType::dihedral(2));

  CHECK(group_type(standard_group(GroupType::icosahedral()).group) ==
        GroupType::icosahedral());
  CHECK(group_type(standard_group(GroupType::tetrahedral()).group) ==
        GroupType::tetrahedral());
}

TEST_CASE("group type strings parse back") {
  for (const auto& t :
       {GroupType::trivial(), GroupType::cyclic(7), GroupType::dihedral(2),
        GroupType::tetrahedral(), GroupType::octahedral(),
        GroupType::icosahedral()})
    CHECK(GroupType::parse(t.str()) == t);
  CHECK_THROWS_AS(GroupType::parse("Frieze(3)"), InvalidRecipe);
}

TEST_CASE("conjugacy classes of D5") {
  auto g = stab_of(roots_of_unity(5));
  auto part = conjugacy_classes(g);
  std::vector<size_t> sizes;
  for (const auto& c : part.classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 2, 2, 5});
  CHECK(part.labels[0].order_p == 1);

  size_t total = std::accumulate(sizes.begin(), sizes.end(), size_t{0});
  CHECK(total == g.order());
  for (auto s : sizes) CHECK(g.order() % s == 0);
}

TEST_CASE("conjugacy classes of the polyhedral groups") {
  auto tetra = standard_group(GroupType::tetrahedral()).group;
  auto pt = conjugacy_classes(tetra);
  std::vector<size_t> sizes;
  for (const auto& c : pt.classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 3, 4, 4});

  auto octa = standard_group(GroupType::octahedral()).group;
  auto po = conjugacy_classes(octa);
  CHECK(po.classes.size() == 5);
  // the two involution classes split by squareness
  int square_classes = 0, plain_classes = 0;
  for (size_t c = 0; c < po.classes.size(); ++c) {
    if (po.labels[c].order_p != 2) continue;
    (po.labels[c].square_of_order4 ? square_classes : plain_classes)++;
  }
  CHECK(square_classes == 1);
  CHECK(plain_classes == 1);

  auto icosa = standard_group(GroupType::icosahedral()).group;
  CHECK(conjugacy_classes(icosa).classes.size() == 5);
}

TEST_CASE("conjugacy class counts match the families") {
  std::vector<SpherePoint> z4{SpherePoint(0.0)};
  for (auto& p : roots_of_unity(4)) z4.push_back(p);
  auto gz4 = stab_of(z4);
  auto pz = conjugacy_classes(gz4);
  CHECK(pz.classes.size() == 4);
  for (const auto& c : pz.classes) CHECK(c.size() == 1);

  // D_p odd -> (p+3)/2 classes, D_p even -> (p+6)/2 classes
  auto d5 = conjugacy_classes(stab_of(roots_of_unity(5)));
  CHECK(d5.classes.size() == 4);
  auto d4 = conjugacy_classes(standard_group(GroupType::dihedral(4)).group);
  CHECK(d4.classes.size() == 5);
  auto d6 = conjugacy_classes(standard_group(GroupType::dihedral(6)).group);
  CHECK(d6.classes.size() == 6);
  auto d3 = conjugacy_classes(standard_group(GroupType::dihedral(3)).group);
  CHECK(d3.classes.size() == 3);

  // members of a class share order and rotation angle class
  for (size_t c = 0; c < d6.classes.size(); ++c) {
    auto orders = element_orders(standard_group(GroupType::dihedral(6)).group);
    for (int e : d6.classes[c]) CHECK(orders[e] == d6.labels[c].order_p);
  }
}
