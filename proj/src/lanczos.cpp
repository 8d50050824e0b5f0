#include "isospec/lanczos.hpp"

#include "isospec/error.hpp"
#include "isospec/random.hpp"
#include "isospec/simd.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace isospec {

double tridiagonal_eigvec_last(const std::vector<double>& diag, const std::vector<double>& off, double theta) {
  const std::size_t m = diag.size();
  if (m == 1) return 1.0;
  double scale = std::abs(theta);
  for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, std::abs(diag[i]));
  for (double e : off) scale = std::max(scale, std::abs(e));
  const double tiny = std::max(scale, 1.0) * std::numeric_limits<double>::epsilon();

  std::vector<double> y(m, 1.0 / std::sqrt(static_cast<double>(m)));
  for (int sweep = 0; sweep < 3; ++sweep) {
    // Gaussian elimination with partial pivoting on T - theta I; dl becomes the fill-in superdiagonal.
    std::vector<double> d(m), du(off.begin(), off.begin() + (m - 1)), dl(off.begin(), off.begin() + (m - 1));
    for (std::size_t i = 0; i < m; ++i) d[i] = diag[i] - theta;
    std::vector<double> b = y;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = tiny;
        const double fact = dl[i] / d[i];
        d[i + 1] -= fact * du[i];
        b[i + 1] -= fact * b[i];
        dl[i] = 0.0;
      } else {
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        const double temp = d[i + 1];
        d[i + 1] = du[i] - fact * temp;
        if (i + 2 < m) {
          dl[i] = du[i + 1];
          du[i + 1] = -fact * dl[i];
        } else {
          dl[i] = 0.0;
        }
        du[i] = temp;
        const double bt = b[i];
        b[i] = b[i + 1];
        b[i + 1] = bt - fact * b[i + 1];
      }
    }
    if (d[m - 1] == 0.0) d[m - 1] = tiny;
    b[m - 1] /= d[m - 1];
    b[m - 2] = (b[m - 2] - du[m - 2] * b[m - 1]) / d[m - 2];
    for (std::size_t i = m - 2; i-- > 0;) b[i] = (b[i] - du[i] * b[i + 1] - dl[i] * b[i + 2]) / d[i];
    double nrm = 0.0;
    for (double v : b) nrm += v * v;
    nrm = std::sqrt(nrm);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) break;
    for (std::size_t i = 0; i < m; ++i) y[i] = b[i] / nrm;
  }
  return y[m - 1];
}

namespace {

void random_unit(std::uint64_t seed, std::uint64_t stream, std::vector<double>& v) {
  std::mt19937_64 rng = stream_rng(seed, stream);
  std::normal_distribution<double> normal;
  for (double& x : v) x = normal(rng);
}

// Two passes of classical Gram-Schmidt against basis[0..count).
void reorthogonalize(const std::vector<std::vector<double>>& basis, std::size_t count, std::vector<double>& w) {
  const auto& k = simd::active();
  std::vector<double> coef(count);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < count; ++i) coef[i] = k.dot(basis[i].data(), w.data(), w.size());
    for (std::size_t i = 0; i < count; ++i) k.axpy(-coef[i], basis[i].data(), w.data(), w.size());
  }
}

double norm2(const std::vector<double>& v) {
  return std::sqrt(simd::active().dot(v.data(), v.data(), v.size()));
}

}  // namespace

LanczosResult lanczos_smallest(const SparseSymmetric& a, int k, const LanczosOptions& options) {
  const std::int32_t n = a.dimension();
  if (k < 1 || k >= n) throw DomainError("lanczos_smallest requires 1 <= k < N");
  const auto& kern = simd::active();
  const int cap = std::min<int>(options.max_iterations, n);
  const int check_every = std::max(1, options.check_every);

  std::vector<std::vector<double>> basis;
  std::vector<double> alpha, beta;
  std::vector<double> v(n), w(n);
  random_unit(options.seed, 0, v);
  {
    const double r = norm2(v);
    for (double& x : v) x /= r;
  }
  basis.push_back(v);

  LanczosResult result;
  std::uint64_t restarts = 0;
  for (int j = 0; j < cap; ++j) {
    a.multiply(basis[j], w, options.threads);
    const double aj = kern.dot(basis[j].data(), w.data(), w.size());
    alpha.push_back(aj);
    kern.axpy(-aj, basis[j].data(), w.data(), w.size());
    if (j > 0) kern.axpy(-beta[j - 1], basis[j - 1].data(), w.data(), w.size());
    reorthogonalize(basis, basis.size(), w);
    double bj = norm2(w);

    double scale = 0.0;
    for (double x : alpha) scale = std::max(scale, std::abs(x));
    for (double x : beta) scale = std::max(scale, std::abs(x));
    const bool exhausted = j + 1 == n;
    const bool breakdown = bj <= 1e-10 * std::max(scale, 1.0);
    beta.push_back(breakdown ? 0.0 : bj);

    const bool check = exhausted || j + 1 == cap || (!breakdown && (j + 1) % check_every == 0 && j + 1 >= k);
    if (check && j + 1 >= k) {
      const int m = j + 1;
      Eigen::VectorXd d(m), e(std::max(m - 1, 0));
      for (int i = 0; i < m; ++i) d(i) = alpha[i];
      for (int i = 0; i + 1 < m; ++i) e(i) = beta[i];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
      solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
      const Eigen::VectorXd& theta = solver.eigenvalues();
      const double norm_est = std::max(std::abs(theta(0)), std::abs(theta(m - 1)));
      const double limit = options.tol * std::max(1.0, norm_est);
      std::vector<double> dv(alpha.begin(), alpha.begin() + m);
      std::vector<double> ev(beta.begin(), beta.begin() + (m - 1));
      std::vector<double> res(k);
      bool converged = true;
      for (int i = 0; i < k; ++i) {
        res[i] = std::abs(beta[j] * tridiagonal_eigvec_last(dv, ev, theta(i)));
        converged = converged && res[i] <= limit;
      }
      if (converged || exhausted) {
        result.eigenvalues.assign(theta.data(), theta.data() + k);
        result.residuals = std::move(res);
        result.iterations = m;
        result.norm_estimate = norm_est;
        return result;
      }
    }
    if (j + 1 == cap) break;

    if (breakdown) {
      // Invariant subspace: continue from a fresh direction orthogonal to it.
      random_unit(options.seed, ++restarts, w);
      reorthogonalize(basis, basis.size(), w);
      bj = norm2(w);
      if (!(bj > 0.0)) throw ConvergenceError("Lanczos restart produced a dependent vector");
    }
    for (double& x : w) x /= bj;
    basis.push_back(w);
  }
  throw ConvergenceError("Lanczos did not converge within " + std::to_string(cap) + " iterations");
}

}  // namespace isospec
