#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msym/moduli.hpp"
#include "msym/orbits.hpp"

namespace msym {

/// One way of reading a configuration as exceptional orbits plus m generic
/// orbits.  Dihedral(2) configurations can admit more than one consistent
/// reading (the three involutions are interchangeable); the pole pair and
/// anchor record the choice the reading is based on.
struct OrbitReading {
  std::string token;  // "F", "FV", "B", "C", "A+2", "1", ... (family grammar)
  int m = 0;
  std::optional<std::pair<SpherePoint, SpherePoint>> pole_pair;  // dihedral
  std::optional<SpherePoint> anchor;  // cyclic: fixed point classes pin to
};

struct OrbitTypeLabel {
  GroupType type;
  std::vector<OrbitReading> readings;  // first entry is the primary reading
  const OrbitReading& primary() const { return readings.front(); }
};

/// Census of orbit sizes mapped to the orbit-type grammar of the family.
OrbitTypeLabel orbit_type_label(const PointConfig& alpha,
                                const SymmetryGroup& g,
                                double tol = kDefaultTol);

std::string label_string(const std::string& token, int m);

/// Trace of the tangent representation at one group element, from the
/// fixed-point count of the element inside the configuration:
///   identity -> n-3;  two fixed points in alpha -> -1;
///   one  -> -1 - exp(-2 pi i q / p)  (q read at the fixed point in alpha);
///   none -> -1 - 2 cos(2 pi q / p).
Complex element_character(const MobiusMap& f, const PointConfig& alpha,
                          double tol = kDefaultTol);

/// Assignment of every group element to a character-table column, following
/// the per-family labeling conventions.  flip_ambiguous swaps the choices
/// the conventions leave open (the result must not depend on it).
struct ClassLabelContext {
  GroupType type;
  OrbitReading reading;
  std::vector<int> column;  // per element, 1-based table column
};

ClassLabelContext build_class_context(const SymmetryGroup& g,
                                      const PointConfig& alpha,
                                      const GroupType& type,
                                      const OrbitReading& reading,
                                      bool flip_ambiguous = false,
                                      double tol = kDefaultTol);

int class_index(size_t element, const SymmetryGroup& g,
                const ClassLabelContext& ctx);

struct CharacterTable {
  std::vector<std::vector<Complex>> rows;  // rows[irrep][column]
  std::vector<int> dims;
  size_t num_classes() const { return rows.empty() ? 0 : rows[0].size(); }
};

/// The literal character table of the family, in the column order the class
/// conventions target.
CharacterTable character_table(const GroupType& type);

struct MultiplicityVector {
  std::vector<int> entries;
  bool operator==(const MultiplicityVector& o) const {
    return entries == o.entries;
  }
};

struct LabeledVector {
  std::string token;
  int m = 0;
  MultiplicityVector vec;
  std::string label() const { return label_string(token, m); }
};

struct MultiplicityResult {
  GroupType type;
  size_t group_order = 0;
  LabeledVector primary;
  std::vector<LabeledVector> alternates;  // other consistent readings
};

/// Inner product of the fixed-point character against each irreducible,
/// rounded through a 1e-6 integrality gate.
MultiplicityResult multiplicity_vector(const LambdaVector& lambda,
                                       double tol = kDefaultTol);

/// Same decomposition with characters taken from numeric Jacobian traces;
/// the two pipelines are mutual oracles.
MultiplicityResult multiplicity_from_jacobian(const LambdaVector& lambda,
                                              double tol = kDefaultTol,
                                              double h = 1e-5);

/// The closed-form multiplicity vector of an orbit type.
MultiplicityVector closed_form_multvec(const GroupType& type,
                                       const std::string& token, int m);

/// Decomposition of an explicit character vector (one value per element).
MultiplicityVector decompose_character(const SymmetryGroup& g,
                                       const std::vector<Complex>& chi,
                                       const ClassLabelContext& ctx);

}  // namespace msym
