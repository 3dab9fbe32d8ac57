#include "msym/reptheory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace msym {

namespace {

constexpr double kPi = std::numbers::pi;

Complex unit(double angle) { return std::polar(1.0, angle); }

bool is_identity(const MobiusMap& f, double tol) {
  return mobius_equal(f, MobiusMap::identity(), tol);
}

int rotation_angle_index(const MobiusMap& f, int p, double tol) {
  // Index k in [1, p-1] with multiplier exp(2 pi i k / p) at one fixed
  // point; min(k, p-k) is anchor-independent.
  auto fps = fixed_points(f, tol);
  auto rd = rotation_data(f, fps[0], tol, std::max(kMaxElementOrder, p));
  int k = rd.q * (p / rd.order_p);
  return std::min(k, p - k);
}

int fixed_in_alpha(const MobiusMap& f, const PointConfig& alpha, double tol) {
  int count = 0;
  for (const auto& fp : fixed_points(f, tol))
    if (alpha.contains(fp, 10.0 * tol)) ++count;
  return count;
}

bool fixes_pair(const MobiusMap& f,
                const std::pair<SpherePoint, SpherePoint>& pair, double tol) {
  auto fps = fixed_points(f, tol);
  if (fps.size() != 2) return false;
  double t = 10.0 * tol;
  return (fps[0].approx_equal(pair.first, t) &&
          fps[1].approx_equal(pair.second, t)) ||
         (fps[0].approx_equal(pair.second, t) &&
          fps[1].approx_equal(pair.first, t));
}

}  // namespace

std::string label_string(const std::string& token, int m) {
  if (token == "B") return std::to_string(m + 1) + "B";
  if (token == "C") return std::to_string(m) + "C";
  char orbit_char = (token.find_first_of("FVEB") != std::string::npos ||
                     token == "F" || token == "FV")
                        ? 'B'
                        : 'C';
  // Polyhedral tokens are made of F/V/E; dihedral and cyclic ones are not.
  bool polyhedral = token.find_first_not_of("FVE") == std::string::npos;
  orbit_char = polyhedral ? 'B' : 'C';
  return token + "+" + std::to_string(m) + orbit_char;
}

Complex element_character(const MobiusMap& f, const PointConfig& alpha,
                          double tol) {
  if (is_identity(f, tol))
    return Complex(static_cast<double>(alpha.size()) - 3.0, 0.0);
  if (!is_invariant(f, alpha, tol))
    throw NotStabilizerElement("map does not fix the configuration");

  auto fps = fixed_points(f, tol);
  if (fps.size() != 2) throw NotFiniteOrder("parabolic stabilizer element");
  bool in0 = alpha.contains(fps[0], 10.0 * tol);
  bool in1 = alpha.contains(fps[1], 10.0 * tol);

  if (in0 && in1) return Complex(-1.0, 0.0);
  if (in0 || in1) {
    auto rd = rotation_data(f, in0 ? fps[0] : fps[1], tol);
    return -1.0 - unit(-2.0 * kPi * rd.q / rd.order_p);
  }
  auto rd = rotation_data(f, fps[0], tol);
  return Complex(-1.0 - 2.0 * std::cos(2.0 * kPi * rd.q / rd.order_p), 0.0);
}

OrbitTypeLabel orbit_type_label(const PointConfig& alpha,
                                const SymmetryGroup& g, double tol) {
  OrbitTypeLabel out;
  out.type = group_type(g);
  if (out.type.tag == GroupType::Tag::Trivial)
    throw TrivialStabilizer("no orbit type for the trivial group");

  auto parts = orbit_decomposition(g, alpha, tol);
  const size_t N = g.order();

  auto count_size = [&](size_t s) {
    return std::count_if(parts.begin(), parts.end(),
                         [&](const PointConfig& c) { return c.size() == s; });
  };
  int m = static_cast<int>(count_size(N));

  switch (out.type.tag) {
    case GroupType::Tag::Icosahedral:
    case GroupType::Tag::Octahedral:
    case GroupType::Tag::Tetrahedral: {
      bool icosa = out.type.tag == GroupType::Tag::Icosahedral;
      bool octa = out.type.tag == GroupType::Tag::Octahedral;
      size_t szF = icosa ? 12 : octa ? 6 : 4;
      size_t szV = icosa ? 20 : octa ? 8 : 4;
      size_t szE = icosa ? 30 : octa ? 12 : 6;
      int nF = 0, nV = 0, nE = 0;
      for (const auto& c : parts) {
        if (c.size() == N) continue;
        if (c.size() == szE)
          ++nE;
        else if (c.size() == szF || c.size() == szV)
          ++nF;  // for T both 4-orbits count here
        else
          throw InconsistentCensus("orbit of unexpected size " +
                                   std::to_string(c.size()));
      }
      std::string token;
      if (out.type.tag == GroupType::Tag::Tetrahedral) {
        if (nF > 2 || nE > 1) throw InconsistentCensus("too many orbits");
        if (nF == 1) token = "F";
        if (nF == 2) token = "FV";
        if (nE == 1) token += token.empty() ? "E" : "E";  // F -> FE etc.
        if (token.empty()) token = "B", --m;  // (1+m)B counts one orbit as base
      } else {
        // Separate F from V by exact size for I and O.
        nF = 0;
        nV = 0;
        for (const auto& c : parts) {
          if (c.size() == szF) ++nF;
          if (c.size() == szV) ++nV;
        }
        if (nF > 1 || nV > 1 || nE > 1)
          throw InconsistentCensus("repeated exceptional orbit");
        if (nF && nV && nE)
          token = "FVE";
        else if (nF && nV)
          token = "FV";
        else if (nV && nE)
          token = "VE";
        else if (nE && nF)
          token = "EF";
        else if (nF)
          token = "F";
        else if (nV)
          token = "V";
        else if (nE)
          token = "E";
        else
          token = "B", --m;
      }
      if (token == "B" && m < 0)
        throw InconsistentCensus("no orbits at all");
      out.readings.push_back({token, m, std::nullopt, std::nullopt});
      break;
    }
    case GroupType::Tag::Dihedral: {
      int p = out.type.p;
      if (p >= 3) {
        int pole = static_cast<int>(count_size(2));
        int circ = static_cast<int>(count_size(static_cast<size_t>(p)));
        if (pole > 1 || circ > 2)
          throw InconsistentCensus("unexpected dihedral orbit census");
        for (const auto& c : parts) {
          size_t s = c.size();
          if (s != 2 && s != static_cast<size_t>(p) && s != N)
            throw InconsistentCensus("orbit of unexpected size");
        }
        std::string token = circ == 0 ? "" : circ == 1 ? "A" : "AB";
        if (pole) token += token.empty() ? "2" : "+2";
        if (token.empty()) token = "C";
        // Pole pair of the family: fixed points of a maximal rotation.
        std::optional<std::pair<SpherePoint, SpherePoint>> poles;
        for (const auto& f : g.elements) {
          if (is_identity(f, tol)) continue;
          if (element_order(f, tol, std::max(kMaxElementOrder, (int)N)) == p) {
            auto fps = fixed_points(f, tol);
            poles = {fps[0], fps[1]};
            break;
          }
        }
        out.readings.push_back({token, m, poles, std::nullopt});
      } else {
        // Dihedral(2): every exceptional orbit has size 2, and the three
        // involutions are interchangeable.  Enumerate the readings.
        std::vector<std::pair<SpherePoint, SpherePoint>> inside, outside;
        for (const auto& f : g.elements) {
          if (is_identity(f, tol)) continue;
          auto fps = fixed_points(f, tol);
          bool in = alpha.contains(fps[0], 10.0 * tol) &&
                    alpha.contains(fps[1], 10.0 * tol);
          (in ? inside : outside).push_back({fps[0], fps[1]});
        }
        switch (inside.size()) {
          case 0:
            out.readings.push_back({"C", m, outside[0], std::nullopt});
            break;
          case 1:
            // The paper's remark: such a configuration is of type 2+mC and
            // of type A+mC at once, with different vectors.
            out.readings.push_back({"2", m, inside[0], std::nullopt});
            out.readings.push_back({"A", m, outside[0], std::nullopt});
            break;
          case 2:
            out.readings.push_back({"AB", m, outside[0], std::nullopt});
            out.readings.push_back({"A+2", m, inside[0], std::nullopt});
            break;
          default:
            out.readings.push_back({"AB+2", m, inside[0], std::nullopt});
            break;
        }
      }
      break;
    }
    case GroupType::Tag::Cyclic: {
      int singles = static_cast<int>(count_size(1));
      if (singles > 2) throw InconsistentCensus("too many fixed points");
      for (const auto& c : parts) {
        size_t s = c.size();
        if (s != 1 && s != static_cast<size_t>(out.type.p) && s != N)
          throw InconsistentCensus("orbit of unexpected size");
      }
      std::string token = singles == 0 ? "C" : singles == 1 ? "1" : "2";
      std::optional<SpherePoint> anchor;
      if (singles == 1) {
        for (const auto& c : parts)
          if (c.size() == 1) anchor = c[0];
      } else {
        // Deterministic pole of the rotation axis.
        for (const auto& f : g.elements)
          if (!is_identity(f, tol)) {
            anchor = fixed_points(f, tol)[0];
            break;
          }
      }
      out.readings.push_back({token, m, std::nullopt, anchor});
      break;
    }
    case GroupType::Tag::Trivial:
      break;
  }
  return out;
}

CharacterTable character_table(const GroupType& type) {
  CharacterTable t;
  auto add_row = [&](std::vector<Complex> row, int dim) {
    t.rows.push_back(std::move(row));
    t.dims.push_back(dim);
  };
  const double s5 = std::sqrt(5.0);

  switch (type.tag) {
    case GroupType::Tag::Icosahedral:
      add_row({1, 1, 1, 1, 1}, 1);
      add_row({4, -1, -1, 1, 0}, 4);
      add_row({5, 0, 0, -1, 1}, 5);
      add_row({3, (1 + s5) / 2, (1 - s5) / 2, 0, -1}, 3);
      add_row({3, (1 - s5) / 2, (1 + s5) / 2, 0, -1}, 3);
      break;
    case GroupType::Tag::Octahedral:
      add_row({1, 1, 1, 1, 1}, 1);
      add_row({1, -1, 1, 1, -1}, 1);
      add_row({3, -1, 0, -1, 1}, 3);
      add_row({3, 1, 0, -1, -1}, 3);
      add_row({2, 0, -1, 2, 0}, 2);
      break;
    case GroupType::Tag::Tetrahedral: {
      Complex w = unit(2.0 * kPi / 3.0);
      add_row({1, 1, 1, 1}, 1);
      add_row({1, 1, w, w * w}, 1);
      add_row({1, 1, w * w, w}, 1);
      add_row({3, -1, 0, 0}, 3);
      break;
    }
    case GroupType::Tag::Dihedral: {
      int p = type.p;
      if (p % 2 == 1) {
        size_t cols = static_cast<size_t>((p + 3) / 2);
        for (int l = 1; l <= (p - 1) / 2; ++l) {
          std::vector<Complex> row(cols);
          for (int k = 1; k <= (p - 1) / 2; ++k)
            row[k - 1] = 2.0 * std::cos(2.0 * kPi * k * l / p);
          row[cols - 2] = 2.0;  // identity column
          row[cols - 1] = 0.0;  // involution column
          add_row(std::move(row), 2);
        }
        add_row(std::vector<Complex>(cols, 1.0), 1);
        {
          std::vector<Complex> row(cols, 1.0);
          row[cols - 1] = -1.0;
          add_row(std::move(row), 1);
        }
      } else {
        size_t cols = static_cast<size_t>((p + 6) / 2);
        int half = p / 2;
        for (int l = 1; l <= (p - 2) / 2; ++l) {
          std::vector<Complex> row(cols, 0.0);
          for (int k = 1; k <= half; ++k)
            row[k - 1] = 2.0 * std::cos(2.0 * kPi * k * l / p);
          row[half] = 2.0;  // identity
          add_row(std::move(row), 2);
        }
        add_row(std::vector<Complex>(cols, 1.0), 1);
        {
          std::vector<Complex> row(cols, 1.0);
          row[cols - 2] = -1.0;
          row[cols - 1] = -1.0;
          add_row(std::move(row), 1);
        }
        {
          std::vector<Complex> row(cols);
          for (int k = 1; k <= half; ++k) row[k - 1] = (k % 2) ? -1.0 : 1.0;
          row[half] = 1.0;
          row[cols - 2] = 1.0;
          row[cols - 1] = -1.0;
          add_row(std::move(row), 1);
        }
        {
          std::vector<Complex> row(cols);
          for (int k = 1; k <= half; ++k) row[k - 1] = (k % 2) ? -1.0 : 1.0;
          row[half] = 1.0;
          row[cols - 2] = -1.0;
          row[cols - 1] = 1.0;
          add_row(std::move(row), 1);
        }
      }
      break;
    }
    case GroupType::Tag::Cyclic: {
      int p = type.p;
      for (int l = 1; l <= p; ++l) {
        std::vector<Complex> row(static_cast<size_t>(p));
        for (int k = 1; k <= p; ++k) row[k - 1] = unit(2.0 * kPi * k * l / p);
        add_row(std::move(row), 1);
      }
      break;
    }
    case GroupType::Tag::Trivial:
      add_row({1}, 1);
      break;
  }
  return t;
}

ClassLabelContext build_class_context(const SymmetryGroup& g,
                                      const PointConfig& alpha,
                                      const GroupType& type,
                                      const OrbitReading& reading,
                                      bool flip_ambiguous, double tol) {
  ClassLabelContext ctx;
  ctx.type = type;
  ctx.reading = reading;
  const size_t N = g.order();
  ctx.column.assign(N, -1);
  auto orders = element_orders(g);

  switch (type.tag) {
    case GroupType::Tag::Icosahedral:
      for (size_t i = 0; i < N; ++i) {
        if (orders[i] == 1)
          ctx.column[i] = 1;
        else if (orders[i] == 5)
          ctx.column[i] = rotation_angle_index(g.elements[i], 5, tol) == 1 ? 2 : 3;
        else if (orders[i] == 3)
          ctx.column[i] = 4;
        else
          ctx.column[i] = 5;
      }
      break;

    case GroupType::Tag::Octahedral: {
      auto table = multiplication_table(g);
      std::vector<char> is_square(N, 0);
      for (size_t i = 0; i < N; ++i)
        if (orders[i] == 4) is_square[table[i][i]] = 1;
      for (size_t i = 0; i < N; ++i) {
        if (orders[i] == 1)
          ctx.column[i] = 1;
        else if (orders[i] == 4)
          ctx.column[i] = 2;
        else if (orders[i] == 3)
          ctx.column[i] = 3;
        else
          ctx.column[i] = is_square[i] ? 4 : 5;
      }
      break;
    }

    case GroupType::Tag::Tetrahedral: {
      bool f_pinned = reading.token == "F" || reading.token == "FE";
      std::optional<PointConfig> f_orbit;
      if (f_pinned) {
        // The distinguished 4-point orbit is the one inside alpha.
        for (auto& part : orbit_decomposition(g, alpha, tol))
          if (part.size() == 4) {
            if (f_orbit)
              throw InconsistentContext("two 4-point orbits in an F-type");
            f_orbit = std::move(part);
          }
        if (!f_orbit)
          throw InconsistentContext("F-type configuration without an F orbit");
      }
      // Conjugacy split of the order-3 elements.
      auto part = conjugacy_classes(g);
      std::vector<int> cls3(N, -1);
      int next = 0;
      for (size_t c = 0; c < part.classes.size(); ++c) {
        if (part.labels[c].order_p != 3) continue;
        for (int e : part.classes[c]) cls3[e] = next;
        ++next;
      }
      if (next != 2) throw InconsistentContext("tetrahedral class census");

      int class_of_k3 = -1;
      if (f_pinned) {
        for (size_t i = 0; i < N && class_of_k3 < 0; ++i) {
          if (orders[i] != 3) continue;
          auto fps = fixed_points(g.elements[i], tol);
          const SpherePoint* in_f = nullptr;
          for (const auto& fp : fps)
            if (f_orbit->contains(fp, 10.0 * tol)) in_f = &fp;
          if (!in_f)
            throw InconsistentContext("order-3 axis misses the F orbit");
          auto rd = rotation_data(g.elements[i], *in_f, tol);
          if (rd.q == 1) class_of_k3 = cls3[i];
        }
      } else {
        for (size_t i = 0; i < N && class_of_k3 < 0; ++i)
          if (orders[i] == 3) class_of_k3 = cls3[i];
      }
      if (flip_ambiguous && !f_pinned) class_of_k3 = 1 - class_of_k3;

      for (size_t i = 0; i < N; ++i) {
        if (orders[i] == 1)
          ctx.column[i] = 1;
        else if (orders[i] == 2)
          ctx.column[i] = 2;
        else
          ctx.column[i] = (cls3[i] == class_of_k3) ? 3 : 4;
      }
      break;
    }

    case GroupType::Tag::Dihedral: {
      int p = type.p;
      if (!reading.pole_pair)
        throw InconsistentContext("dihedral reading without a pole pair");
      auto poles = *reading.pole_pair;
      int id_col = (p % 2 == 1) ? (p + 1) / 2 : (p + 2) / 2;
      int refl1 = (p % 2 == 1) ? (p + 3) / 2 : (p + 4) / 2;
      int refl2 = refl1 + 1;  // even p only

      bool a_pinned = (p % 2 == 0) &&
                      (reading.token == "A" || reading.token == "A+2");

      // Group reflections into their two conjugacy classes (even p).
      std::vector<int> refl_class(N, -1);
      if (p % 2 == 0) {
        auto part = conjugacy_classes(g);
        int next = 0;
        for (size_t c = 0; c < part.classes.size(); ++c) {
          if (part.labels[c].order_p != 2) continue;
          bool rotation_class =
              fixes_pair(g.elements[part.classes[c].front()], poles, tol);
          if (rotation_class) continue;
          for (int e : part.classes[c]) refl_class[e] = next;
          ++next;
        }
        if (next != 2)
          throw InconsistentContext("dihedral reflection class census");
      }

      int class_of_refl1 = -1;
      if (p % 2 == 0) {
        if (a_pinned) {
          for (size_t i = 0; i < N && class_of_refl1 < 0; ++i)
            if (refl_class[i] >= 0 &&
                fixed_in_alpha(g.elements[i], alpha, tol) == 2)
              class_of_refl1 = refl_class[i];
          if (class_of_refl1 < 0)
            throw InconsistentContext(
                "A-type reading has no reflection fixing two points");
        } else {
          for (size_t i = 0; i < N && class_of_refl1 < 0; ++i)
            if (refl_class[i] >= 0) class_of_refl1 = refl_class[i];
          if (flip_ambiguous) class_of_refl1 = 1 - class_of_refl1;
        }
      }

      for (size_t i = 0; i < N; ++i) {
        if (orders[i] == 1) {
          ctx.column[i] = id_col;
        } else if (fixes_pair(g.elements[i], poles, tol)) {
          ctx.column[i] = rotation_angle_index(g.elements[i], p, tol);
        } else if (orders[i] == 2) {
          if (p % 2 == 1)
            ctx.column[i] = refl1;
          else
            ctx.column[i] =
                (refl_class[i] == class_of_refl1) ? refl1 : refl2;
        } else {
          throw InconsistentContext("non-involution off the rotation axis");
        }
      }
      break;
    }

    case GroupType::Tag::Cyclic: {
      int p = type.p;
      if (!reading.anchor)
        throw InconsistentContext("cyclic reading without an anchor");
      SpherePoint anchor = *reading.anchor;
      if (flip_ambiguous) {
        if (reading.token == "1")
          throw InconsistentContext("the 1+mC anchor is pinned");
        // The other pole is an equally valid convention.
        for (const auto& f : g.elements)
          if (!is_identity(f, tol)) {
            auto fps = fixed_points(f, tol);
            anchor = fps[0].approx_equal(anchor, 10.0 * tol) ? fps[1] : fps[0];
            break;
          }
      }
      for (size_t i = 0; i < N; ++i) {
        if (orders[i] == 1) {
          ctx.column[i] = p;
          continue;
        }
        Complex mu = multiplier_at(g.elements[i], anchor);
        int k = -1;
        for (int cand = 1; cand < p; ++cand)
          if (std::abs(mu - unit(2.0 * kPi * cand / p)) < 1e-6) k = cand;
        if (k < 0)
          throw InconsistentContext("multiplier is not a p-th root of unity");
        ctx.column[i] = k;
      }
      break;
    }

    case GroupType::Tag::Trivial:
      ctx.column.assign(N, 1);
      break;
  }
  return ctx;
}

int class_index(size_t element, const SymmetryGroup& g,
                const ClassLabelContext& ctx) {
  if (element >= g.order() || element >= ctx.column.size())
    throw InconsistentContext("element index out of range");
  return ctx.column[element];
}

MultiplicityVector decompose_character(const SymmetryGroup& g,
                                       const std::vector<Complex>& chi,
                                       const ClassLabelContext& ctx) {
  CharacterTable table = character_table(ctx.type);
  const size_t N = g.order();
  MultiplicityVector out;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    Complex acc = 0.0;
    for (size_t i = 0; i < N; ++i)
      acc += chi[i] * std::conj(table.rows[r][ctx.column[i] - 1]);
    acc /= static_cast<double>(N);
    double rounded = std::round(acc.real());
    if (std::abs(acc.imag()) > 1e-6 || std::abs(acc.real() - rounded) > 1e-6)
      throw NonIntegralMultiplicity("multiplicity " + std::to_string(r + 1) +
                                    " is not an integer: " +
                                    std::to_string(acc.real()));
    out.entries.push_back(static_cast<int>(rounded));
  }
  return out;
}

namespace {

MultiplicityResult decompose_all_readings(const SymmetryGroup& g,
                                          const PointConfig& cfg,
                                          const std::vector<Complex>& chi,
                                          double tol) {
  MultiplicityResult res;
  res.type = group_type(g);
  res.group_order = g.order();
  auto otl = orbit_type_label(cfg, g, tol);
  bool first = true;
  for (const auto& reading : otl.readings) {
    auto ctx = build_class_context(g, cfg, otl.type, reading, false, tol);
    LabeledVector lv{reading.token, reading.m,
                     decompose_character(g, chi, ctx)};
    if (first) {
      res.primary = std::move(lv);
      first = false;
    } else {
      res.alternates.push_back(std::move(lv));
    }
  }
  return res;
}

}  // namespace

MultiplicityResult multiplicity_vector(const LambdaVector& lambda,
                                       double tol) {
  if (lambda.n() < 5)
    throw Error("multiplicity vectors need n >= 5");
  PointConfig cfg = lambda_config(lambda);
  SymmetryGroup g = compute_stabilizer(cfg, tol);
  if (g.order() == 1)
    throw TrivialStabilizer("configuration has only the identity symmetry");

  std::vector<Complex> chi;
  chi.reserve(g.order());
  for (const auto& f : g.elements) chi.push_back(element_character(f, cfg, tol));
  return decompose_all_readings(g, cfg, chi, tol);
}

MultiplicityResult multiplicity_from_jacobian(const LambdaVector& lambda,
                                              double tol, double h) {
  if (lambda.n() < 5)
    throw Error("multiplicity vectors need n >= 5");
  for (size_t i = 0; i < lambda.dim(); ++i) {
    Complex z = lambda[i];
    double gap = std::min(std::abs(z), std::abs(z - 1.0));
    for (size_t j = 0; j < lambda.dim(); ++j)
      if (j != i) gap = std::min(gap, std::abs(z - lambda[j]));
    if (gap <= 1e-4)
      throw StepTooLarge("coordinates too close for finite differences");
  }

  PointConfig cfg = lambda_config(lambda);
  SymmetryGroup g = compute_stabilizer(cfg, tol);
  if (g.order() == 1)
    throw TrivialStabilizer("configuration has only the identity symmetry");

  std::vector<Complex> chi;
  chi.reserve(g.order());
  for (const auto& sigma : g.perms)
    chi.push_back(jacobian(lambda, sigma, h).trace());
  return decompose_all_readings(g, cfg, chi, tol);
}

MultiplicityVector closed_form_multvec(const GroupType& type,
                                       const std::string& token, int m) {
  if (m < 0) throw InvalidLabel("m must be nonnegative");
  std::vector<int> v;
  auto fill = [&](std::initializer_list<int> init) {
    v.assign(init.begin(), init.end());
  };

  switch (type.tag) {
    case GroupType::Tag::Icosahedral:
      if (token == "F") fill({m, 1 + 4 * m, 1 + 5 * m, 3 * m, 3 * m});
      else if (token == "V") fill({m, 1 + 4 * m, 2 + 5 * m, 3 * m, 1 + 3 * m});
      else if (token == "E") fill({m, 2 + 4 * m, 2 + 5 * m, 1 + 3 * m, 2 + 3 * m});
      else if (token == "FV") fill({m, 2 + 4 * m, 3 + 5 * m, 1 + 3 * m, 1 + 3 * m});
      else if (token == "VE") fill({m, 3 + 4 * m, 4 + 5 * m, 2 + 3 * m, 3 + 3 * m});
      else if (token == "EF") fill({m, 3 + 4 * m, 3 + 5 * m, 2 + 3 * m, 2 + 3 * m});
      else if (token == "FVE") fill({m, 4 + 4 * m, 5 + 5 * m, 3 + 3 * m, 3 + 3 * m});
      else if (token == "B") fill({1 + m, 4 + 4 * m, 5 + 5 * m, 2 + 3 * m, 3 + 3 * m});
      else throw InvalidLabel("unknown icosahedral type " + token);
      break;
    case GroupType::Tag::Octahedral:
      if (token == "F") fill({m, m, 1 + 3 * m, 3 * m, 2 * m});
      else if (token == "V") fill({m, m, 1 + 3 * m, 3 * m, 1 + 2 * m});
      else if (token == "E") fill({m, 1 + m, 1 + 3 * m, 1 + 3 * m, 1 + 2 * m});
      else if (token == "FV") fill({m, m, 2 + 3 * m, 1 + 3 * m, 1 + 2 * m});
      else if (token == "VE") fill({m, 1 + m, 2 + 3 * m, 2 + 3 * m, 2 + 2 * m});
      else if (token == "EF") fill({m, 1 + m, 2 + 3 * m, 2 + 3 * m, 1 + 2 * m});
      else if (token == "FVE") fill({m, 1 + m, 3 + 3 * m, 3 + 3 * m, 2 + 2 * m});
      else if (token == "B") fill({1 + m, 1 + m, 3 + 3 * m, 2 + 3 * m, 2 + 2 * m});
      else throw InvalidLabel("unknown octahedral type " + token);
      break;
    case GroupType::Tag::Tetrahedral:
      if (token == "F") fill({m, 1 + m, m, 3 * m});
      else if (token == "E") fill({m, m, m, 1 + 3 * m});
      else if (token == "FV") fill({m, 1 + m, 1 + m, 1 + 3 * m});
      else if (token == "FE") fill({m, 1 + m, m, 2 + 3 * m});
      else if (token == "FVE") fill({m, 1 + m, 1 + m, 3 + 3 * m});
      // The trivial multiplicity of (1+m)B is 1+m: decomposing the
      // character row (9+12m, 1, 0, 0) forces it, and only that value
      // satisfies sum p_i dim_i = n - 3.
      else if (token == "B") fill({1 + m, 1 + m, 1 + m, 2 + 3 * m});
      else throw InvalidLabel("unknown tetrahedral type " + token);
      break;
    case GroupType::Tag::Dihedral: {
      int p = type.p;
      auto build = [&](int first2, int rest2, int triv, int sgn, int r1,
                       int r2) {
        v.clear();
        int two_dim = (p % 2 == 1) ? (p - 1) / 2 : (p - 2) / 2;
        for (int l = 1; l <= two_dim; ++l)
          v.push_back(l == 1 ? first2 : rest2);
        v.push_back(triv);
        v.push_back(sgn);
        if (p % 2 == 0) {
          v.push_back(r1);
          v.push_back(r2);
        }
      };
      // Entries: (first 2-dim, later 2-dim, trivial, second linear,
      // and for even p the two remaining linears).
      if (token == "C") {
        if (p == 2) fill({m, m - 1, m - 1, m - 1});
        else build(2 * m - 1, 2 * m, m, m - 1, m, m);
      } else if (token == "A") {
        if (p == 2) fill({m, m, m - 1, m});
        else if (p % 2 == 1) build(2 * m, 2 * m + 1, m, m, 0, 0);
        else build(2 * m, 2 * m + 1, m, m, m, m + 1);
      } else if (token == "AB") {
        if (p == 2) fill({m, m + 1, m, m});
        else if (p % 2 == 1) build(2 * m + 1, 2 * m + 2, m, m + 1, 0, 0);
        else build(2 * m + 1, 2 * m + 2, m, m + 1, m + 1, m + 1);
      } else if (token == "2") {
        if (p == 2) fill({m, m - 1, m, m});
        else build(2 * m, 2 * m, m, m - 1, m, m);
      } else if (token == "A+2") {
        if (p == 2) fill({m, m, m, m + 1});
        else build(2 * m + 1, 2 * m + 1, m, m, m, m + 1);
      } else if (token == "AB+2") {
        if (p == 2) fill({m, m + 1, m + 1, m + 1});
        else build(2 * m + 2, 2 * m + 2, m, m + 1, m + 1, m + 1);
      } else {
        throw InvalidLabel("unknown dihedral type " + token);
      }
      break;
    }
    case GroupType::Tag::Cyclic: {
      int p = type.p;
      if (token == "C") {
        if (p == 2) fill({m - 2, m - 1});
        else if (p == 3) fill({m - 1, m - 1, m - 1});
        else {
          v.assign(static_cast<size_t>(p), m);
          v[0] = m - 1;
          v[static_cast<size_t>(p) - 2] = m - 1;
          v[static_cast<size_t>(p) - 1] = m - 1;
        }
      } else if (token == "1") {
        if (p == 2) fill({m - 1, m - 1});
        else {
          v.assign(static_cast<size_t>(p), m);
          v[static_cast<size_t>(p) - 2] = m - 1;
          v[static_cast<size_t>(p) - 1] = m - 1;
        }
      } else if (token == "2") {
        v.assign(static_cast<size_t>(p), m);
        v[static_cast<size_t>(p) - 1] = m - 1;
      } else {
        throw InvalidLabel("unknown cyclic type " + token);
      }
      break;
    }
    case GroupType::Tag::Trivial:
      throw InvalidLabel("trivial group has no orbit types");
  }

  for (int e : v)
    if (e < 0)
      throw InvalidLabel("type " + token + " is empty at m = " +
                         std::to_string(m));
  return MultiplicityVector{std::move(v)};
}

}  // namespace msym
