#pragma once

// Admissible multiplicity data of isoparametric families in spheres, the
// derived dimensions and angles, and catalogued first-eigenvalue facts.

#include "isospec/exact.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isospec {

/// Number of distinct principal curvatures g and the multiplicities m1, m2
/// (m_{alpha+2} = m_alpha).
struct MultiplicityPair {
  int g = 4;
  int m1 = 1;
  int m2 = 1;

  friend bool operator==(const MultiplicityPair&, const MultiplicityPair&) = default;
};

/// Throws ValidationError naming the first violated constraint.
void validate(const MultiplicityPair& pair);

struct FamilyGeometry {
  int n = 0;
  double theta1 = 0.0;
  std::vector<double> theta_alpha;
  int dim_M1 = 0;
  int dim_M2 = 0;
  int codim_M1 = 0;
  int codim_M2 = 0;
};

/// Hypersurface dimension n.
int dimension(const MultiplicityPair& pair);

/// Principal-curvature angles theta_alpha = theta1 + (alpha-1) pi/g for a given theta1.
FamilyGeometry family_geometry(const MultiplicityPair& pair, double theta1);

/// Multiplicity of the alpha-th principal curvature, alpha = 1..g.
int multiplicity(const MultiplicityPair& pair, int alpha);

/// n*H = sum_alpha m_alpha cot(theta_alpha) for the hypersurface at angle theta1.
double mean_curvature_sum(const MultiplicityPair& pair, double theta1);

struct MinimalAngle {
  double theta1 = 0.0;
  double sin2_theta1 = 0.0;
  /// Exact sin^2(theta1) when it is a quadratic surd (g = 2, g = 4, g = 6 with m1 = m2).
  std::optional<Surd> sin2_exact;
};

/// Angle of the minimal hypersurface in the family. Even g only.
MinimalAngle minimal_theta1(const MultiplicityPair& pair);

/// Dimension of an irreducible module of the Clifford algebra C_{m-1}.
std::int64_t delta(int m);

/// All g = 4 pairs with m1 + m2 <= bound from the homogeneous list, the OT-FKM
/// series and (7,8). Pairs are stored with m1 <= m2, deduplicated, sorted by
/// (m1 + m2, m1).
std::vector<MultiplicityPair> enumerate_admissible(int bound);

/// (dim M1, dim M2) = (m1 + 2 m2, 2 m1 + m2) for g = 4.
std::pair<int, int> focal_dims(const MultiplicityPair& pair);

/// Multiplicities (m, k delta(m) - m - 1) of the OT-FKM family of a Clifford system on R^{2 k delta(m)}.
MultiplicityPair fkm_pair(int m, int k);

enum class KnownManifold {
  kFocalG2Sphere,
  kVeroneseRP2,
  kVeroneseCP2,
  kVeroneseHP2,
  kVeroneseOP2,
  kQuotientOneK,
  kMinimalHypersurface,
};

/// A first eigenvalue known in closed form. Parametric entries carry a formula
/// instead of a value.
struct KnownEigenvalueFact {
  KnownManifold id;
  std::string name;
  std::string ambient;
  std::optional<int> dimension;
  std::optional<Rational> lambda1;
  std::string lambda1_formula;
  std::optional<int> multiplicity;
  std::string multiplicity_formula;
};

const std::vector<KnownEigenvalueFact>& known_eigenvalue_facts();

std::string to_string(KnownManifold id);

}  // namespace isospec
