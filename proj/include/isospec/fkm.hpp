#pragma once

// The quartic F(x) = |x|^4 - 2 sum_i <P_i x, x>^2 of a symmetric Clifford
// system, its restriction f to the unit sphere, the parallel hypersurfaces and
// the two focal submanifolds M1 = f^{-1}(1), M2 = f^{-1}(-1).

#include "isospec/catalog.hpp"
#include "isospec/clifford.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace isospec {

/// P_i stored as signed permutations: (P x)_r = sign[r] * x[col[r]].
struct SignedPermutation {
  std::vector<int> col;
  std::vector<signed char> sign;
};

class FkmFamily {
 public:
  /// Throws ValidationError when k delta(m) - m - 1 < 1.
  FkmFamily(int m, int k);

  int m() const { return m_; }
  int k() const { return k_; }
  int ambient_dim() const { return 2 * system_.l; }
  const MultiplicityPair& pair() const { return pair_; }
  const CliffordSystem& system() const { return system_; }

  /// y = P_i x
  void apply(int i, std::span<const double> x, std::span<double> y) const;
  /// <P_i x, x> for i = 0..m
  std::vector<double> moments(std::span<const double> x) const;

 private:
  int m_;
  int k_;
  CliffordSystem system_;
  MultiplicityPair pair_;
  std::vector<SignedPermutation> perms_;
};

double eval_F(const FkmFamily& fam, std::span<const double> x);
std::vector<double> grad_F(const FkmFamily& fam, std::span<const double> x);
/// Trace of the Hessian by the five-point stencil along each axis, step h.
double laplacian_F_fd(const FkmFamily& fam, std::span<const double> x, double h);
/// f(x) = F(x) for |x| = 1.
double eval_f(const FkmFamily& fam, std::span<const double> x);
/// grad F - 4 F(x) x, the gradient of f on the unit sphere. Requires ||x| - 1| < 1e-8.
std::vector<double> spherical_gradient(const FkmFamily& fam, std::span<const double> x);

struct NormalFrame {
  std::vector<double> x;
  std::vector<double> xi;
  /// Orthonormal basis of the tangent space of the level hypersurface, one vector per entry.
  std::vector<std::vector<double>> tangent;
};

/// Throws NearFocalError when |grad^S f| < 1e-8.
NormalFrame normal_frame(const FkmFamily& fam, std::span<const double> x, bool with_tangent = false);

/// cos(theta) x + sin(theta) xi(x).
std::vector<double> parallel_map(const FkmFamily& fam, std::span<const double> x, double theta);

/// Angle theta0 in [0, pi/4] with cos(4 theta0) = f(x); the distance from x to M1 along xi.
double level_angle(double f_value);

enum class LevelKind { kRegular, kM1, kM2 };

struct Level {
  LevelKind kind = LevelKind::kRegular;
  double t = 0.0;

  static Level regular(double t) { return {LevelKind::kRegular, t}; }
  static Level focal_m1() { return {LevelKind::kM1, 1.0}; }
  static Level focal_m2() { return {LevelKind::kM2, -1.0}; }
  std::string label() const;
};

/// Points stored row-major, count x dim.
struct PointCloud {
  int dim = 0;
  std::vector<double> coords;
  Level level;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  /// Free-form family description, e.g. "fkm m=1 k=3" or "sphere S^2".
  std::string family;
  int m = 0;
  int k = 0;

  std::size_t size() const { return dim == 0 ? 0 : coords.size() / static_cast<std::size_t>(dim); }
  std::span<const double> point(std::size_t i) const {
    return {coords.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
};

/// Points with |f - t| < 1e-10 on the sphere. Throws NearFocalError when |t| >= 1 - 1e-6.
PointCloud sample_level_set(const FkmFamily& fam, double t, std::size_t count, std::uint64_t seed,
                            unsigned threads = 0);
/// Points on M1 by Gauss-Newton projection onto {<P_i x, x> = 0, |x| = 1}.
PointCloud sample_focal_M1(const FkmFamily& fam, std::size_t count, std::uint64_t seed, unsigned threads = 0);
/// Points on M2: unit x in the +1 eigenspace of sum_i c_i P_i for a uniform unit c.
PointCloud sample_focal_M2(const FkmFamily& fam, std::size_t count, std::uint64_t seed, unsigned threads = 0);

/// Gauss-Newton projection of a point near the sphere onto M1; false when it does not converge.
bool project_to_focal_M1(const FkmFamily& fam, std::vector<double>& x, int max_iterations = 60);

struct CurvatureCluster {
  double value = 0.0;
  double target = 0.0;
  int multiplicity = 0;
};

struct ShapeSpectrum {
  /// Eigenvalues of the finite-difference shape operator, ascending.
  std::vector<double> raw;
  /// Grouped by the nearest cot(theta_alpha); ordered by alpha.
  std::vector<CurvatureCluster> clusters;
  /// theta0 + (alpha - 1) pi/4 for alpha = 1..4.
  std::vector<double> theta_alpha;
  /// Set when some eigenvalue is farther than 1e-4 from every target.
  bool ambiguous = false;
};

/// Shape operator of the level hypersurface through x with respect to xi, by
/// central differences of the unit normal field.
ShapeSpectrum shape_operator_spectrum(const FkmFamily& fam, std::span<const double> x, double step = 1e-5);

/// Volume density of the parallel hypersurface at oriented distance theta from the
/// hypersurface at angle theta1, normalized to 1 at theta = 0. theta must lie in (theta1 - pi/4, theta1).
double tube_volume_weight(const MultiplicityPair& pair, double theta1, double theta);

}  // namespace isospec
