#include "msym/classify.hpp"

#include <algorithm>
#include <map>

namespace msym {

int GroupType::order() const {
  switch (tag) {
    case Tag::Trivial: return 1;
    case Tag::Cyclic: return p;
    case Tag::Dihedral: return 2 * p;
    case Tag::Tetrahedral: return 12;
    case Tag::Octahedral: return 24;
    case Tag::Icosahedral: return 60;
  }
  return 0;
}

std::string GroupType::str() const {
  switch (tag) {
    case Tag::Trivial: return "Trivial";
    case Tag::Cyclic: return "Cyclic(" + std::to_string(p) + ")";
    case Tag::Dihedral: return "Dihedral(" + std::to_string(p) + ")";
    case Tag::Tetrahedral: return "Tetrahedral";
    case Tag::Octahedral: return "Octahedral";
    case Tag::Icosahedral: return "Icosahedral";
  }
  return "?";
}

GroupType GroupType::parse(const std::string& s) {
  auto param = [&](size_t prefix) {
    size_t close = s.find(')', prefix);
    if (s.size() <= prefix || s[prefix - 1] != '(' || close == std::string::npos)
      throw InvalidRecipe("cannot parse group type: " + s);
    int p = std::stoi(s.substr(prefix, close - prefix));
    if (p < 2) throw InvalidRecipe("group parameter must be at least 2");
    return p;
  };
  if (s == "Trivial") return trivial();
  if (s == "Tetrahedral" || s == "T") return tetrahedral();
  if (s == "Octahedral" || s == "O") return octahedral();
  if (s == "Icosahedral" || s == "I") return icosahedral();
  if (s.rfind("Cyclic(", 0) == 0) return cyclic(param(7));
  if (s.rfind("Dihedral(", 0) == 0) return dihedral(param(9));
  if (s.rfind("Z", 0) == 0 && s.size() > 1) return cyclic(std::stoi(s.substr(1)));
  if (s.rfind("D", 0) == 0 && s.size() > 1) return dihedral(std::stoi(s.substr(1)));
  throw InvalidRecipe("unknown group type: " + s);
}

std::vector<int> element_orders(const SymmetryGroup& g) {
  std::vector<int> orders;
  orders.reserve(g.order());
  int cap = std::max(kMaxElementOrder, static_cast<int>(g.order()));
  for (const auto& f : g.elements)
    orders.push_back(element_order(f, g.tol, cap));
  return orders;
}

GroupType group_type(const SymmetryGroup& g) {
  const int m = static_cast<int>(g.order());
  if (m == 1) return GroupType::trivial();

  auto orders = element_orders(g);
  std::map<int, int> census;
  for (int o : orders) census[o]++;

  if (census.count(m)) return GroupType::cyclic(m);

  if (m == 60 && census == std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}})
    return GroupType::icosahedral();
  if (m == 24 && census == std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}})
    return GroupType::octahedral();
  if (m == 12 && census == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}})
    return GroupType::tetrahedral();

  if (m % 2 == 0) {
    int p = m / 2;
    int expected_involutions = (p % 2 == 0) ? p + 1 : p;
    bool has_p = census.count(p) > 0;
    if (has_p && census[2] == expected_involutions)
      return GroupType::dihedral(p);
  }
  throw UnrecognizedGroup("element-order census matches no finite family");
}

std::vector<std::vector<int>> multiplication_table(const SymmetryGroup& g) {
  const size_t m = g.order();
  std::vector<std::vector<int>> table(m, std::vector<int>(m, -1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      auto k = g.find(compose(g.elements[i], g.elements[j]));
      if (!k) throw ToleranceBreakdown("group not closed under composition");
      table[i][j] = static_cast<int>(*k);
    }
  }
  return table;
}

ConjugacyPartition conjugacy_classes(const SymmetryGroup& g) {
  const size_t m = g.order();
  auto table = multiplication_table(g);

  std::vector<int> inv(m, -1);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (table[i][j] == 0) inv[i] = static_cast<int>(j);

  std::vector<int> class_of(m, -1);
  std::vector<std::vector<int>> classes;
  for (size_t i = 0; i < m; ++i) {
    if (class_of[i] >= 0) continue;
    std::vector<int> cls;
    for (size_t h = 0; h < m; ++h) {
      int c = table[table[h][i]][static_cast<size_t>(inv[h])];
      if (class_of[c] < 0) {
        class_of[c] = static_cast<int>(classes.size());
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }

  auto orders = element_orders(g);
  std::vector<char> is_square(m, 0);
  for (size_t i = 0; i < m; ++i)
    if (orders[i] == 4) is_square[table[i][i]] = 1;

  std::vector<ConjugacyClassLabel> labels;
  for (const auto& cls : classes) {
    ConjugacyClassLabel lab;
    int rep = cls.front();
    lab.order_p = orders[rep];
    if (lab.order_p > 1) {
      const MobiusMap& f = g.elements[rep];
      auto fps = fixed_points(f, g.tol);
      auto rd = rotation_data(f, fps[0], g.tol,
                              std::max(kMaxElementOrder, (int)m));
      lab.angle_q = std::min(rd.q, rd.order_p - rd.q);
      lab.square_of_order4 = is_square[rep] != 0;
    }
    labels.push_back(lab);
  }

  // Identity class first, then by (order, angle, smallest member).
  std::vector<size_t> idx(classes.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    auto key = [&](size_t i) {
      return std::tuple<int, int, int>(labels[i].order_p, labels[i].angle_q,
                                       classes[i].front());
    };
    return key(a) < key(b);
  });

  ConjugacyPartition part;
  for (size_t i : idx) {
    part.classes.push_back(classes[i]);
    part.labels.push_back(labels[i]);
  }
  return part;
}

}  // namespace msym
