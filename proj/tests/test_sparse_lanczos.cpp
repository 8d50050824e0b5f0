#include "isospec/error.hpp"
#include "isospec/lanczos.hpp"
#include "isospec/sparse.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace isospec;

namespace {

SparseSymmetric random_spd(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> col(0, n - 1);
  std::vector<Triplet> t;
  std::vector<double> rowabs(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < 4; ++e) {
      int j = col(rng);
      if (j == i) continue;
      const double v = u(rng);
      t.push_back({std::min(i, j), std::max(i, j), v});
      rowabs[i] += std::abs(v);
      rowabs[j] += std::abs(v);
    }
  // Diagonal dominance makes the matrix positive definite.
  for (int i = 0; i < n; ++i) t.push_back({i, i, rowabs[i] + 0.1 + 0.01 * i});
  return SparseSymmetric::from_upper_triplets(n, t);
}

}  // namespace

TEST_SUITE("sparse") {
  TEST_CASE("triplet assembly sums duplicates and mirrors") {
    const std::vector<Triplet> t{{0, 1, 2.0}, {0, 1, 1.0}, {1, 1, 5.0}, {0, 2, -1.0}};
    const SparseSymmetric a = SparseSymmetric::from_upper_triplets(3, t);
    const Eigen::MatrixXd d = a.to_dense();
    CHECK(d(0, 1) == 3.0);
    CHECK(d(1, 0) == 3.0);
    CHECK(d(2, 0) == -1.0);
    CHECK(d(1, 1) == 5.0);
    CHECK(a.is_symmetric());
    CHECK(a.nnz() == 5);
    CHECK(a.row_sum(0) == 2.0);
    CHECK(SparseSymmetric::from_upper_triplets(3, a.upper_triplets()) == a);
  }

  TEST_CASE("multiply matches dense") {
    const SparseSymmetric a = random_spd(150, 2);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> nd;
    std::vector<double> x(150);
    for (double& v : x) v = nd(rng);
    const auto y = a.multiply(x);
    const Eigen::VectorXd ref = a.to_dense() * Eigen::Map<Eigen::VectorXd>(x.data(), 150);
    for (int i = 0; i < 150; ++i) CHECK(y[i] == doctest::Approx(ref[i]).epsilon(1e-13));
    CHECK(a.multiply(x, 4) == y);
  }

  TEST_CASE("asymmetric input is rejected") {
    std::vector<std::vector<std::pair<std::int32_t, double>>> rows{{{1, 1.0}}, {{0, 2.0}}};
    CHECK_THROWS_AS(SparseSymmetric::from_rows(2, std::move(rows)), DomainError);
    CHECK_THROWS_AS(SparseSymmetric::from_csr(2, {0, 1, 1}, {1}, {1.0}), DomainError);
    CHECK_NOTHROW(SparseSymmetric::from_csr(2, {0, 1, 2}, {1, 0}, {1.0, 1.0}));
  }
}

TEST_SUITE("lanczos") {
  TEST_CASE("diagonal matrix") {
    std::vector<Triplet> t;
    for (int i = 0; i < 60; ++i) t.push_back({59 - i, 59 - i, static_cast<double>(i)});
    const SparseSymmetric a = SparseSymmetric::from_upper_triplets(60, t);
    const LanczosResult r = lanczos_smallest(a, 6);
    REQUIRE(r.eigenvalues.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(r.eigenvalues[i] == doctest::Approx(i).epsilon(1e-9).scale(1.0));
  }

  TEST_CASE("random sparse SPD against the dense solver") {
    const SparseSymmetric a = random_spd(200, 7);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.to_dense(), Eigen::EigenvaluesOnly);
    LanczosOptions opts;
    opts.tol = 1e-10;
    const LanczosResult r = lanczos_smallest(a, 10, opts);
    REQUIRE(r.eigenvalues.size() == 10);
    for (int i = 0; i < 10; ++i) CHECK(std::abs(r.eigenvalues[i] - es.eigenvalues()[i]) < 1e-8);
    for (double res : r.residuals) CHECK(res < 1e-10 * std::max(1.0, r.norm_estimate));
  }

  TEST_CASE("path graph") {
    std::vector<Triplet> t;
    for (int i = 0; i < 5; ++i) t.push_back({i, i, (i == 0 || i == 4) ? 1.0 : 2.0});
    for (int i = 0; i < 4; ++i) t.push_back({i, i + 1, -1.0});
    const SparseSymmetric a = SparseSymmetric::from_upper_triplets(5, t);
    const LanczosResult r = lanczos_smallest(a, 4);
    for (int j = 0; j < 4; ++j)
      CHECK(r.eigenvalues[j] == doctest::Approx(2.0 - 2.0 * std::cos(std::numbers::pi * j / 5)).epsilon(1e-9).scale(1.0));
  }

  TEST_CASE("deterministic in seed and threads") {
    const SparseSymmetric a = random_spd(300, 9);
    LanczosOptions o1;
    o1.seed = 5;
    LanczosOptions o4 = o1;
    o4.threads = 4;
    const LanczosResult r1 = lanczos_smallest(a, 8, o1);
    const LanczosResult r4 = lanczos_smallest(a, 8, o4);
    CHECK(r1.eigenvalues == r4.eigenvalues);
    CHECK(r1.iterations == r4.iterations);
    CHECK(lanczos_smallest(a, 8, o1).eigenvalues == r1.eigenvalues);
  }

  TEST_CASE("iteration cap and argument errors") {
    const SparseSymmetric a = random_spd(300, 10);
    LanczosOptions o;
    o.max_iterations = 12;
    o.tol = 1e-14;
    CHECK_THROWS_AS(lanczos_smallest(a, 8, o), ConvergenceError);
    CHECK_THROWS_AS(lanczos_smallest(a, 300), DomainError);
  }

  TEST_CASE("tridiagonal eigenvector last component") {
    const std::vector<double> diag{2.0, 1.0, 3.0, 0.5, 4.0};
    const std::vector<double> off{0.3, -0.7, 0.2, 0.9};
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(5, 5);
    for (int i = 0; i < 5; ++i) t(i, i) = diag[i];
    for (int i = 0; i < 4; ++i) t(i, i + 1) = t(i + 1, i) = off[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    for (int j = 0; j < 5; ++j) {
      const double s = tridiagonal_eigvec_last(diag, off, es.eigenvalues()[j]);
      CHECK(std::abs(s) == doctest::Approx(std::abs(es.eigenvectors()(4, j))).epsilon(1e-10));
    }
  }
}
