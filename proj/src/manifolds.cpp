#include "isospec/manifolds.hpp"

#include "isospec/error.hpp"
#include "isospec/lanczos.hpp"
#include "isospec/parallel.hpp"
#include "isospec/random.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace isospec {

ManifoldSpec ManifoldSpec::sphere(int dim) {
  ManifoldSpec s;
  s.kind = Kind::kSphere;
  s.dim = dim;
  return s;
}

ManifoldSpec ManifoldSpec::product(int p, double r1, int q, double r2) {
  ManifoldSpec s;
  s.kind = Kind::kProductSpheres;
  s.p = p;
  s.q = q;
  s.r1 = r1;
  s.r2 = r2;
  return s;
}

ManifoldSpec ManifoldSpec::clifford_torus() { return product(1, std::sqrt(0.5), 1, std::sqrt(0.5)); }

ManifoldSpec ManifoldSpec::fkm_level(int m, int k, double t) {
  ManifoldSpec s;
  s.kind = Kind::kFkmLevel;
  s.m = m;
  s.k = k;
  s.t = t;
  return s;
}

ManifoldSpec ManifoldSpec::fkm_focal(int m, int k, FocalSide side) {
  ManifoldSpec s;
  s.kind = Kind::kFkmFocal;
  s.m = m;
  s.k = k;
  s.focal = side;
  return s;
}

std::string ManifoldSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kSphere:
      os << "sphere S^" << dim;
      break;
    case Kind::kProductSpheres:
      os << "product S^" << p << "(" << r1 << ") x S^" << q << "(" << r2 << ")";
      break;
    case Kind::kFkmLevel:
      os << "fkm m=" << m << " k=" << k << " level t=" << t;
      break;
    case Kind::kFkmFocal:
      os << "fkm m=" << m << " k=" << k << " focal " << to_string(focal);
      break;
  }
  return os.str();
}

int ManifoldSpec::manifold_dimension() const {
  switch (kind) {
    case Kind::kSphere:
      return dim;
    case Kind::kProductSpheres:
      return p + q;
    case Kind::kFkmLevel:
      return dimension(fkm_pair(m, k));
    case Kind::kFkmFocal: {
      const auto [d1, d2] = focal_dims(fkm_pair(m, k));
      return focal == FocalSide::kM1 ? d1 : d2;
    }
  }
  return 0;
}

std::optional<double> ManifoldSpec::exact_lambda1() const {
  switch (kind) {
    case Kind::kSphere:
      return static_cast<double>(dim);
    case Kind::kProductSpheres:
      return std::min(p / (r1 * r1), q / (r2 * r2));
    case Kind::kFkmFocal: {
      const MultiplicityPair pair = fkm_pair(m, k);
      if (focal == FocalSide::kM2 && pair.m1 == 1) return static_cast<double>(std::min(4, 2 + pair.m2));
      const FocalCertificate c = certify_focal(pair, focal);
      if (c.lambda1) return static_cast<double>(*c.lambda1);
      return std::nullopt;
    }
    case Kind::kFkmLevel:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

void unit_gaussian(std::mt19937_64& rng, double* out, int n, double radius) {
  std::normal_distribution<double> normal;
  for (;;) {
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      out[i] = normal(rng);
      r2 += out[i] * out[i];
    }
    if (r2 > 1e-12) {
      const double s = radius / std::sqrt(r2);
      for (int i = 0; i < n; ++i) out[i] *= s;
      return;
    }
  }
}

}  // namespace

PointCloud sample_manifold(const ManifoldSpec& spec, std::size_t count, std::uint64_t seed, unsigned threads) {
  switch (spec.kind) {
    case ManifoldSpec::Kind::kFkmLevel:
      return sample_level_set(FkmFamily(spec.m, spec.k), spec.t, count, seed, threads);
    case ManifoldSpec::Kind::kFkmFocal: {
      const FkmFamily fam(spec.m, spec.k);
      return spec.focal == FocalSide::kM1 ? sample_focal_M1(fam, count, seed, threads)
                                          : sample_focal_M2(fam, count, seed, threads);
    }
    default:
      break;
  }
  PointCloud cloud;
  cloud.seed = seed;
  cloud.tolerance = 1e-12;
  cloud.family = spec.describe();
  if (spec.kind == ManifoldSpec::Kind::kSphere) {
    if (spec.dim < 1) throw DomainError("sphere dimension must be at least 1");
    cloud.dim = spec.dim + 1;
  } else {
    if (spec.p < 1 || spec.q < 1 || !(spec.r1 > 0.0) || !(spec.r2 > 0.0))
      throw DomainError("product of spheres needs positive dimensions and radii");
    cloud.dim = spec.p + spec.q + 2;
  }
  cloud.coords.assign(count * static_cast<std::size_t>(cloud.dim), 0.0);
  parallel_for(count, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::mt19937_64 rng = stream_rng(seed, i);
      double* row = cloud.coords.data() + i * cloud.dim;
      if (spec.kind == ManifoldSpec::Kind::kSphere) {
        unit_gaussian(rng, row, cloud.dim, 1.0);
      } else {
        unit_gaussian(rng, row, spec.p + 1, spec.r1);
        unit_gaussian(rng, row + spec.p + 1, spec.q + 1, spec.r2);
      }
    }
  });
  return cloud;
}

SpectrumEstimate estimate_spectrum(const PointCloud& cloud, const EstimatorOptions& options) {
  if (cloud.size() < 2) throw DomainError("spectrum estimation needs at least two points");
  const GraphLaplacian g = build_graph_laplacian(cloud, options.graph);
  const int n = g.matrix.dimension();
  const int nev = std::min(options.nev, n - 1);
  LanczosOptions lo;
  lo.tol = options.lanczos_tol;
  lo.max_iterations = options.max_iterations;
  lo.seed = derive_seed(cloud.seed, 0x4c414e43ULL);
  lo.threads = options.graph.threads;
  const LanczosResult lr = lanczos_smallest(g.matrix, nev, lo);

  SpectrumEstimate est;
  est.points = cloud.size();
  est.bandwidth = g.bandwidth;
  est.radius = g.radius;
  est.mean_degree = g.mean_degree;
  est.normalization = g.normalization;
  est.lanczos_iterations = lr.iterations;
  est.seed = cloud.seed;
  for (double v : lr.eigenvalues) est.eigenvalues.push_back(options.scale * v);
  est.clusters = cluster_multiplicities(est.eigenvalues, options.gap_tol);
  est.cluster_id.assign(est.eigenvalues.size(), 0);
  for (std::size_t c = 0; c < est.clusters.size(); ++c)
    for (int i = 0; i < est.clusters[c].size; ++i) est.cluster_id[est.clusters[c].first + i] = static_cast<int>(c);
  if (est.clusters.size() >= 2) {
    est.lambda1 = est.clusters[1].mean;
    est.multiplicity = est.clusters[1].size;
  }
  return est;
}

SpectrumEstimate estimate_lambda1(const ManifoldSpec& spec, std::size_t points, std::uint64_t seed,
                                  const EstimatorOptions& options) {
  if (options.trend_fractions.empty()) throw DomainError("at least one trend size is required");
  std::vector<TrendPoint> trend;
  SpectrumEstimate last;
  for (std::size_t i = 0; i < options.trend_fractions.size(); ++i) {
    const double frac = options.trend_fractions[i];
    if (!(frac > 0.0 && frac <= 1.0)) throw DomainError("trend fractions must lie in (0, 1]");
    const auto n = static_cast<std::size_t>(std::llround(frac * static_cast<double>(points)));
    const PointCloud cloud = sample_manifold(spec, n, seed, options.graph.threads);
    last = estimate_spectrum(cloud, options);
    trend.push_back({n, last.lambda1, last.multiplicity});
  }
  last.trend = std::move(trend);
  return last;
}

}  // namespace isospec
