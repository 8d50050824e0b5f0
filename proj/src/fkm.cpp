#include "isospec/fkm.hpp"

#include "isospec/error.hpp"
#include "isospec/parallel.hpp"
#include "isospec/random.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>

namespace isospec {

namespace {

constexpr double kQuarterPi = 0.78539816339744830962;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void check_dim(const FkmFamily& fam, std::span<const double> x) {
  if (static_cast<int>(x.size()) != fam.ambient_dim())
    throw DimensionMismatch("point of dimension " + std::to_string(x.size()) + " for a family in R^" +
                            std::to_string(fam.ambient_dim()));
}

void gaussian_unit(std::mt19937_64& rng, std::vector<double>& x) {
  std::normal_distribution<double> normal;
  for (;;) {
    for (double& v : x) v = normal(rng);
    const double r = norm(x);
    if (r > 1e-6) {
      for (double& v : x) v /= r;
      return;
    }
  }
}

void normalize(std::vector<double>& x) {
  const double r = norm(x);
  for (double& v : x) v /= r;
}

}  // namespace

std::string Level::label() const {
  switch (kind) {
    case LevelKind::kM1:
      return "M1";
    case LevelKind::kM2:
      return "M2";
    default:
      return "t=" + std::to_string(t);
  }
}

FkmFamily::FkmFamily(int m, int k) : m_(m), k_(k) {
  pair_ = fkm_pair(m, k);
  if (pair_.m2 < 1)
    throw ValidationError("OT-FKM family (m=" + std::to_string(m) + ", k=" + std::to_string(k) +
                          ") has m2 = k delta(m) - m - 1 = " + std::to_string(pair_.m2) +
                          " < 1; increase k");
  system_ = build_system(m, k);
  const int n = 2 * system_.l;
  for (const IntMatrix& p : system_.matrices) {
    SignedPermutation sp;
    sp.col.assign(n, -1);
    sp.sign.assign(n, 0);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (p(r, c) != 0) {
          sp.col[r] = c;
          sp.sign[r] = static_cast<signed char>(p(r, c));
        }
    perms_.push_back(std::move(sp));
  }
}

void FkmFamily::apply(int i, std::span<const double> x, std::span<double> y) const {
  const SignedPermutation& p = perms_[i];
  for (std::size_t r = 0; r < x.size(); ++r) y[r] = p.sign[r] * x[p.col[r]];
}

std::vector<double> FkmFamily::moments(std::span<const double> x) const {
  std::vector<double> mu(perms_.size());
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    const SignedPermutation& p = perms_[i];
    double s = 0.0;
    for (std::size_t r = 0; r < x.size(); ++r) s += x[r] * p.sign[r] * x[p.col[r]];
    mu[i] = s;
  }
  return mu;
}

double eval_F(const FkmFamily& fam, std::span<const double> x) {
  check_dim(fam, x);
  const double r2 = dot(x, x);
  double q = 0.0;
  for (double mu : fam.moments(x)) q += mu * mu;
  return r2 * r2 - 2.0 * q;
}

std::vector<double> grad_F(const FkmFamily& fam, std::span<const double> x) {
  check_dim(fam, x);
  const double r2 = dot(x, x);
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = 4.0 * r2 * x[i];
  const std::vector<double> mu = fam.moments(x);
  std::vector<double> px(x.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    fam.apply(static_cast<int>(i), x, px);
    for (std::size_t r = 0; r < x.size(); ++r) g[r] -= 8.0 * mu[i] * px[r];
  }
  return g;
}

double laplacian_F_fd(const FkmFamily& fam, std::span<const double> x, double h) {
  check_dim(fam, x);
  std::vector<double> y(x.begin(), x.end());
  const double f0 = eval_F(fam, x);
  double total = 0.0;
  for (std::size_t d = 0; d < x.size(); ++d) {
    double f[4];
    const double offsets[4] = {-2.0 * h, -h, h, 2.0 * h};
    for (int j = 0; j < 4; ++j) {
      y[d] = x[d] + offsets[j];
      f[j] = eval_F(fam, y);
    }
    y[d] = x[d];
    total += (-f[0] + 16.0 * f[1] - 30.0 * f0 + 16.0 * f[2] - f[3]) / (12.0 * h * h);
  }
  return total;
}

double eval_f(const FkmFamily& fam, std::span<const double> x) { return eval_F(fam, x); }

std::vector<double> spherical_gradient(const FkmFamily& fam, std::span<const double> x) {
  check_dim(fam, x);
  if (std::abs(norm(x) - 1.0) > 1e-8) throw DomainError("spherical gradient requires a unit vector");
  std::vector<double> g = grad_F(fam, x);
  const double f = eval_F(fam, x);
  for (std::size_t i = 0; i < x.size(); ++i) g[i] -= 4.0 * f * x[i];
  return g;
}

NormalFrame normal_frame(const FkmFamily& fam, std::span<const double> x, bool with_tangent) {
  NormalFrame frame;
  frame.x.assign(x.begin(), x.end());
  std::vector<double> g = spherical_gradient(fam, x);
  const double gn = norm(g);
  if (gn < 1e-8) throw NearFocalError("base point lies on a focal submanifold (|grad f| < 1e-8)");
  // Remove the roundoff component along x before normalizing.
  const double along = dot(g, x);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] -= along * x[i];
  normalize(g);
  frame.xi = std::move(g);
  if (with_tangent) {
    const int n = static_cast<int>(x.size());
    Eigen::MatrixXd basis(n, 2);
    for (int i = 0; i < n; ++i) {
      basis(i, 0) = x[i];
      basis(i, 1) = frame.xi[i];
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
    for (int c = 2; c < n; ++c) {
      std::vector<double> t(n);
      for (int i = 0; i < n; ++i) t[i] = q(i, c);
      frame.tangent.push_back(std::move(t));
    }
  }
  return frame;
}

std::vector<double> parallel_map(const FkmFamily& fam, std::span<const double> x, double theta) {
  const NormalFrame frame = normal_frame(fam, x);
  std::vector<double> y(x.size());
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = c * x[i] + s * frame.xi[i];
  return y;
}

double level_angle(double f_value) { return std::acos(std::clamp(f_value, -1.0, 1.0)) / 4.0; }

namespace {

PointCloud empty_cloud(const FkmFamily& fam, std::size_t count, std::uint64_t seed, Level level) {
  PointCloud cloud;
  cloud.dim = fam.ambient_dim();
  cloud.coords.assign(count * static_cast<std::size_t>(cloud.dim), 0.0);
  cloud.level = level;
  cloud.seed = seed;
  cloud.tolerance = 1e-10;
  cloud.family = "fkm m=" + std::to_string(fam.m()) + " k=" + std::to_string(fam.k());
  cloud.m = fam.m();
  cloud.k = fam.k();
  return cloud;
}

constexpr int kMaxAttempts = 64;

// Runs draw(rng, x) until it accepts, for every point; errors when more than
// half of all attempts fail.
template <class Draw>
void fill_cloud(PointCloud& cloud, unsigned threads, const char* what, Draw&& draw) {
  const std::size_t count = cloud.size();
  std::atomic<std::size_t> failures{0};
  std::atomic<bool> exhausted{false};
  parallel_for(count, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> x(cloud.dim);
    for (std::size_t i = begin; i < end; ++i) {
      std::mt19937_64 rng = stream_rng(cloud.seed, i);
      int attempt = 0;
      for (; attempt < kMaxAttempts; ++attempt)
        if (draw(rng, x)) break;
      failures += static_cast<std::size_t>(attempt);
      if (attempt == kMaxAttempts) {
        exhausted = true;
        continue;
      }
      std::copy(x.begin(), x.end(), cloud.coords.begin() + static_cast<std::ptrdiff_t>(i * cloud.dim));
    }
  });
  if (exhausted || failures.load() > count)
    throw ConvergenceError(std::string(what) + ": more than half of the sampling attempts failed");
}

}  // namespace

PointCloud sample_level_set(const FkmFamily& fam, double t, std::size_t count, std::uint64_t seed,
                            unsigned threads) {
  if (!(std::abs(t) < 1.0 - 1e-6)) throw NearFocalError("level t must satisfy |t| < 1 - 1e-6");
  PointCloud cloud = empty_cloud(fam, count, seed, Level::regular(t));
  const double theta_t = level_angle(t);
  fill_cloud(cloud, threads, "level-set sampling", [&](std::mt19937_64& rng, std::vector<double>& x) {
    gaussian_unit(rng, x);
    const double fx = eval_F(fam, x);
    if (std::abs(fx) > 1.0 - 1e-6) return false;
    // f(phi_s(x)) = cos(4 (theta_x - s)), so moving by theta_x - theta_t lands on level t.
    x = parallel_map(fam, x, level_angle(fx) - theta_t);
    normalize(x);
    for (int it = 0; it < 8; ++it) {
      const double r = eval_F(fam, x) - t;
      if (std::abs(r) < 1e-14) break;
      const std::vector<double> g = spherical_gradient(fam, x);
      const double g2 = dot(g, g);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= r * g[i] / g2;
      normalize(x);
    }
    return std::abs(eval_F(fam, x) - t) < 1e-10;
  });
  return cloud;
}

bool project_to_focal_M1(const FkmFamily& fam, std::vector<double>& x, int max_iterations) {
  check_dim(fam, x);
  const int dim = static_cast<int>(x.size());
  const int c = fam.m() + 2;
  std::vector<std::vector<double>> rows(c, std::vector<double>(dim));
  for (int it = 0; it < max_iterations; ++it) {
    const std::vector<double> mu = fam.moments(x);
    Eigen::VectorXd r(c);
    for (int i = 0; i + 1 < c; ++i) r(i) = mu[i];
    r(c - 1) = dot(x, x) - 1.0;
    if (r.cwiseAbs().maxCoeff() < 1e-15) break;
    for (int i = 0; i + 1 < c; ++i) {
      fam.apply(i, x, rows[i]);
      for (double& v : rows[i]) v *= 2.0;
    }
    for (int j = 0; j < dim; ++j) rows[c - 1][j] = 2.0 * x[j];
    Eigen::MatrixXd jjt(c, c);
    for (int a = 0; a < c; ++a)
      for (int b = a; b < c; ++b) jjt(a, b) = jjt(b, a) = dot(rows[a], rows[b]);
    const Eigen::VectorXd y = jjt.ldlt().solve(r);
    if (!y.allFinite()) return false;
    for (int a = 0; a < c; ++a)
      for (int j = 0; j < dim; ++j) x[j] -= y(a) * rows[a][j];
  }
  const double r = norm(x);
  if (!(r > 0.5)) return false;
  normalize(x);
  return std::abs(eval_F(fam, x) - 1.0) < 1e-10;
}

PointCloud sample_focal_M1(const FkmFamily& fam, std::size_t count, std::uint64_t seed, unsigned threads) {
  PointCloud cloud = empty_cloud(fam, count, seed, Level::focal_m1());
  fill_cloud(cloud, threads, "M1 sampling", [&](std::mt19937_64& rng, std::vector<double>& x) {
    gaussian_unit(rng, x);
    return project_to_focal_M1(fam, x);
  });
  return cloud;
}

PointCloud sample_focal_M2(const FkmFamily& fam, std::size_t count, std::uint64_t seed, unsigned threads) {
  PointCloud cloud = empty_cloud(fam, count, seed, Level::focal_m2());
  const int terms = fam.m() + 1;
  fill_cloud(cloud, threads, "M2 sampling", [&](std::mt19937_64& rng, std::vector<double>& x) {
    std::vector<double> c(terms);
    gaussian_unit(rng, c);
    std::normal_distribution<double> normal;
    std::vector<double> g(x.size());
    std::vector<double> pg(x.size());
    for (double& v : g) v = normal(rng);
    // (I + P_c)/2 projects onto the +1 eigenspace of P_c = sum c_i P_i.
    for (std::size_t r = 0; r < x.size(); ++r) x[r] = 0.5 * g[r];
    for (int i = 0; i < terms; ++i) {
      fam.apply(i, g, pg);
      for (std::size_t r = 0; r < x.size(); ++r) x[r] += 0.5 * c[i] * pg[r];
    }
    if (norm(x) < 1e-3) return false;
    normalize(x);
    return std::abs(eval_F(fam, x) + 1.0) < 1e-10;
  });
  return cloud;
}

ShapeSpectrum shape_operator_spectrum(const FkmFamily& fam, std::span<const double> x, double step) {
  const NormalFrame frame = normal_frame(fam, x, true);
  const int n = static_cast<int>(frame.tangent.size());
  const std::size_t dim = x.size();
  std::vector<std::vector<double>> dxi(n);
  std::vector<double> y(dim);
  for (int a = 0; a < n; ++a) {
    std::vector<double> plus, minus;
    for (int sgn : {1, -1}) {
      for (std::size_t i = 0; i < dim; ++i) y[i] = x[i] + sgn * step * frame.tangent[a][i];
      normalize(y);
      (sgn > 0 ? plus : minus) = normal_frame(fam, y).xi;
    }
    dxi[a].resize(dim);
    for (std::size_t i = 0; i < dim; ++i) dxi[a][i] = (plus[i] - minus[i]) / (2.0 * step);
  }
  Eigen::MatrixXd shape(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) shape(a, b) = -dot(dxi[a], frame.tangent[b]);
  const Eigen::MatrixXd sym = 0.5 * (shape + shape.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);

  ShapeSpectrum out;
  for (int i = 0; i < n; ++i) out.raw.push_back(solver.eigenvalues()(i));
  const double theta0 = level_angle(eval_F(fam, x));
  std::vector<double> target(4);
  out.clusters.resize(4);
  for (int alpha = 0; alpha < 4; ++alpha) {
    out.theta_alpha.push_back(theta0 + alpha * kQuarterPi);
    target[alpha] = 1.0 / std::tan(out.theta_alpha.back());
    out.clusters[alpha].target = target[alpha];
  }
  for (double v : out.raw) {
    int best = 0;
    for (int alpha = 1; alpha < 4; ++alpha)
      if (std::abs(v - target[alpha]) < std::abs(v - target[best])) best = alpha;
    if (std::abs(v - target[best]) > 1e-4 * std::max(1.0, std::abs(target[best]))) out.ambiguous = true;
    CurvatureCluster& c = out.clusters[best];
    c.value += v;
    c.multiplicity += 1;
  }
  for (CurvatureCluster& c : out.clusters)
    if (c.multiplicity > 0) c.value /= c.multiplicity;
  return out;
}

double tube_volume_weight(const MultiplicityPair& pair, double theta1, double theta) {
  validate(pair);
  if (pair.g != 4) throw UnsupportedCase("tube volume weight is implemented for g = 4");
  if (!(theta > theta1 - kQuarterPi && theta < theta1))
    throw DomainError("theta must lie in the open interval (theta1 - pi/4, theta1)");
  const double u = theta1 - theta;
  const double num = std::pow(std::sin(2 * u), pair.m1) * std::pow(std::cos(2 * u), pair.m2);
  const double den = std::pow(std::sin(2 * theta1), pair.m1) * std::pow(std::cos(2 * theta1), pair.m2);
  return num / den;
}

}  // namespace isospec
