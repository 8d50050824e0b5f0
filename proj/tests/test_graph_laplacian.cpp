#include "isospec/error.hpp"
#include "isospec/graph_laplacian.hpp"
#include "isospec/lanczos.hpp"
#include "isospec/manifolds.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace isospec;

namespace {

// Mean distance to the knn-th neighbour, squared, by brute force.
double bandwidth_oracle(const PointCloud& c, int knn) {
  double sum = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<double> d;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j == i) continue;
      double s = 0.0;
      for (int k = 0; k < c.dim; ++k) s += (c.point(i)[k] - c.point(j)[k]) * (c.point(i)[k] - c.point(j)[k]);
      d.push_back(s);
    }
    std::nth_element(d.begin(), d.begin() + (knn - 1), d.end());
    sum += std::sqrt(d[knn - 1]);
  }
  const double mean = sum / static_cast<double>(c.size());
  return mean * mean;
}

}  // namespace

TEST_SUITE("graph_laplacian") {
  TEST_CASE("default bandwidth") {
    const PointCloud c = sample_manifold(ManifoldSpec::sphere(2), 400, 3);
    CHECK(default_bandwidth(c) == doctest::Approx(bandwidth_oracle(c, 12)).epsilon(1e-12));
    CHECK(default_bandwidth(c, 5) == doctest::Approx(bandwidth_oracle(c, 5)).epsilon(1e-12));
  }

  TEST_CASE("kernel weights and unnormalized Laplacian") {
    const PointCloud c = sample_manifold(ManifoldSpec::clifford_torus(), 500, 4);
    const double t = default_bandwidth(c);
    const SparseSymmetric w = kernel_weights(c, t);
    CHECK(w.is_symmetric());
    const auto rp = w.row_ptr();
    const auto cols = w.cols();
    const auto vals = w.values();
    const double r2 = 9.0 * 4.0 * t;
    for (std::int32_t i = 0; i < w.dimension(); ++i)
      for (std::int64_t e = rp[i]; e < rp[i + 1]; ++e) {
        CHECK(cols[e] != i);
        double d2 = 0.0;
        for (int k = 0; k < c.dim; ++k) d2 += std::pow(c.point(i)[k] - c.point(cols[e])[k], 2);
        CHECK(d2 <= r2);
        CHECK(vals[e] == doctest::Approx(std::exp(-d2 / (4 * t))).epsilon(1e-14));
      }
    const SparseSymmetric l = unnormalized_laplacian(w);
    for (std::int32_t i = 0; i < l.dimension(); ++i) CHECK(std::abs(l.row_sum(i)) < 1e-12);
  }

  TEST_CASE("determinism across runs and thread counts") {
    const PointCloud c = sample_manifold(ManifoldSpec::sphere(2), 1500, 5);
    GraphOptions o1;
    o1.threads = 1;
    GraphOptions o3 = o1;
    o3.threads = 3;
    const GraphLaplacian a = build_graph_laplacian(c, o1);
    const GraphLaplacian b = build_graph_laplacian(c, o1);
    const GraphLaplacian d = build_graph_laplacian(c, o3);
    CHECK(a.matrix == b.matrix);
    CHECK(a.matrix == d.matrix);
    CHECK(a.matrix.is_symmetric());
    CHECK(a.bandwidth == d.bandwidth);
  }

  TEST_CASE("tiny bandwidth disconnects the graph") {
    const PointCloud c = sample_manifold(ManifoldSpec::sphere(2), 300, 6);
    GraphOptions o;
    o.bandwidth = 1e-8;
    CHECK_THROWS_AS(build_graph_laplacian(c, o), ConnectivityError);
  }

  TEST_CASE("positive semidefinite with a constant null vector") {
    for (Normalization norm : {Normalization::kRandomWalk, Normalization::kSymmetric}) {
      const PointCloud c = sample_manifold(ManifoldSpec::sphere(2), 800, 7);
      GraphOptions o;
      o.normalization = norm;
      const GraphLaplacian g = build_graph_laplacian(c, o);
      const LanczosResult r = lanczos_smallest(g.matrix, 5);
      CHECK(r.eigenvalues.front() >= -1e-9);
      CHECK(std::abs(r.eigenvalues.front()) < 1e-8);
      CHECK(normalization_from_string(to_string(norm)) == norm);
    }
    CHECK_THROWS_AS(normalization_from_string("bogus"), DomainError);
  }
}

TEST_SUITE("estimator") {
  TEST_CASE("round S2 at N = 4000") {
    EstimatorOptions o;
    o.trend_fractions = {1.0};
    const SpectrumEstimate e = estimate_lambda1(ManifoldSpec::sphere(2), 4000, 11, o);
    CHECK(std::abs(e.lambda1 - 2.0) / 2.0 < 0.05);
    CHECK(e.multiplicity == 3);
    CHECK(e.eigenvalues.front() > -1e-9);
    CHECK(e.points == 4000);
    CHECK(e.seed == 11);
  }

  TEST_CASE("S2 error does not grow with N") {
    EstimatorOptions o;
    o.trend_fractions = {1000.0 / 16000.0, 4000.0 / 16000.0, 1.0};
    const SpectrumEstimate e = estimate_lambda1(ManifoldSpec::sphere(2), 16000, 12, o);
    REQUIRE(e.trend.size() == 3);
    std::vector<double> err;
    for (const TrendPoint& p : e.trend) err.push_back(std::abs(p.lambda1 - 2.0));
    MESSAGE("S2 errors at N = 1000, 4000, 16000: " << err[0] << ", " << err[1] << ", " << err[2]);
    CHECK(err[1] <= err[0]);
    CHECK(err[2] <= err[1]);
  }

  TEST_CASE("estimate from a cloud matches the manifold entry point") {
    EstimatorOptions o;
    o.trend_fractions = {1.0};
    const ManifoldSpec spec = ManifoldSpec::fkm_focal(1, 3, FocalSide::kM2);
    const PointCloud c = sample_manifold(spec, 2000, 13);
    const SpectrumEstimate a = estimate_spectrum(c, o);
    const SpectrumEstimate b = estimate_lambda1(spec, 2000, 13, o);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(spec.exact_lambda1().value() == 3.0);
    CHECK(spec.manifold_dimension() == 3);
  }
}
