#include "isospec/graph_laplacian.hpp"

#include "isospec/error.hpp"
#include "isospec/parallel.hpp"
#include "isospec/simd.hpp"

#include <algorithm>
#include <cmath>

namespace isospec {

std::string to_string(Normalization n) { return n == Normalization::kRandomWalk ? "random-walk" : "symmetric"; }

Normalization normalization_from_string(const std::string& s) {
  if (s == "random-walk") return Normalization::kRandomWalk;
  if (s == "symmetric") return Normalization::kSymmetric;
  throw DomainError("unknown normalization '" + s + "' (expected random-walk or symmetric)");
}

namespace {

// Coordinates transposed to dimension-major order for the distance kernel.
std::vector<double> transpose(const PointCloud& cloud) {
  const std::size_t n = cloud.size();
  const std::size_t dim = static_cast<std::size_t>(cloud.dim);
  std::vector<double> soa(n * dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 0; d < dim; ++d) soa[d * n + i] = cloud.coords[i * dim + d];
  return soa;
}

void require_points(const PointCloud& cloud, std::size_t minimum) {
  if (cloud.size() < minimum)
    throw DomainError("point cloud needs at least " + std::to_string(minimum) + " points");
}

}  // namespace

double default_bandwidth(const PointCloud& cloud, int knn, unsigned threads) {
  if (knn < 1) throw DomainError("knn must be positive");
  require_points(cloud, static_cast<std::size_t>(knn) + 1);
  const std::size_t n = cloud.size();
  const std::vector<double> soa = transpose(cloud);
  const auto& k = simd::active();
  std::vector<double> kth(n);
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> dist(n);
    for (std::size_t i = begin; i < end; ++i) {
      k.squared_distances(cloud.coords.data() + i * cloud.dim, soa.data(), n, cloud.dim, 0, n, dist.data());
      dist[i] = dist[i == 0 ? 1 : 0];
      // dist[i] now duplicates another entry, so select among the remaining n - 1 values.
      std::swap(dist[i], dist[n - 1]);
      std::nth_element(dist.begin(), dist.begin() + (knn - 1), dist.begin() + (n - 1));
      kth[i] = std::sqrt(dist[knn - 1]);
    }
  });
  double sum = 0.0;
  for (double v : kth) sum += v;
  const double h = sum / static_cast<double>(n);
  return h * h;
}

SparseSymmetric kernel_weights(const PointCloud& cloud, double bandwidth, double truncation, unsigned threads) {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) throw DomainError("bandwidth must be positive and finite");
  if (!(truncation > 0.0)) throw DomainError("truncation must be positive");
  require_points(cloud, 2);
  const std::size_t n = cloud.size();
  if (n > static_cast<std::size_t>(INT32_MAX)) throw DomainError("point cloud too large");
  const std::vector<double> soa = transpose(cloud);
  const auto& k = simd::active();
  const double four_t = 4.0 * bandwidth;
  const double r2 = truncation * truncation * four_t;
  std::vector<std::vector<std::pair<std::int32_t, double>>> rows(n);
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<double> dist(n);
    for (std::size_t i = begin; i < end; ++i) {
      k.squared_distances(cloud.coords.data() + i * cloud.dim, soa.data(), n, cloud.dim, 0, n, dist.data());
      auto& row = rows[i];
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && dist[j] <= r2) row.emplace_back(static_cast<std::int32_t>(j), std::exp(-dist[j] / four_t));
      row.shrink_to_fit();
    }
  });
  return SparseSymmetric::from_rows(static_cast<std::int32_t>(n), std::move(rows));
}

SparseSymmetric unnormalized_laplacian(const SparseSymmetric& weights) {
  const std::int32_t n = weights.dimension();
  std::vector<Triplet> upper;
  for (std::int32_t i = 0; i < n; ++i) {
    double degree = 0.0;
    for (std::int64_t p = weights.row_ptr()[i]; p < weights.row_ptr()[i + 1]; ++p) {
      const std::int32_t j = weights.cols()[p];
      if (j == i) throw DomainError("weight matrix must have a zero diagonal");
      degree += weights.values()[p];
      if (j > i) upper.push_back({i, j, -weights.values()[p]});
    }
    upper.push_back({i, i, degree});
  }
  return SparseSymmetric::from_upper_triplets(n, upper);
}

void require_connected(const SparseSymmetric& weights) {
  const std::int32_t n = weights.dimension();
  if (n == 0) return;
  std::vector<char> seen(n, 0);
  std::vector<std::int32_t> stack{0};
  seen[0] = 1;
  std::int32_t reached = 1;
  while (!stack.empty()) {
    const std::int32_t i = stack.back();
    stack.pop_back();
    for (std::int64_t p = weights.row_ptr()[i]; p < weights.row_ptr()[i + 1]; ++p) {
      const std::int32_t j = weights.cols()[p];
      if (!seen[j] && weights.values()[p] > 0.0) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  if (reached != n)
    throw ConnectivityError("neighbourhood graph is disconnected (" + std::to_string(reached) + " of " +
                            std::to_string(n) + " points reachable); increase the bandwidth");
}

GraphLaplacian build_graph_laplacian(const PointCloud& cloud, const GraphOptions& options) {
  GraphLaplacian out;
  out.normalization = options.normalization;
  out.bandwidth = options.bandwidth ? *options.bandwidth : default_bandwidth(cloud, options.knn, options.threads);
  out.radius = options.truncation * std::sqrt(4.0 * out.bandwidth);
  const SparseSymmetric w = kernel_weights(cloud, out.bandwidth, options.truncation, options.threads);
  require_connected(w);

  const std::int32_t n = w.dimension();
  const auto ptr = w.row_ptr();
  const auto cols = w.cols();
  std::vector<double> vals(w.values().begin(), w.values().end());
  out.mean_degree = static_cast<double>(w.nnz()) / n;

  if (options.normalization == Normalization::kRandomWalk) {
    std::vector<double> q(n);
    for (std::int32_t i = 0; i < n; ++i) q[i] = w.row_sum(i);
    for (std::int32_t i = 0; i < n; ++i)
      for (std::int64_t p = ptr[i]; p < ptr[i + 1]; ++p) vals[p] = vals[p] / (q[i] * q[cols[p]]);
  }
  std::vector<double> inv_sqrt_d(n);
  for (std::int32_t i = 0; i < n; ++i) {
    double d = 0.0;
    for (std::int64_t p = ptr[i]; p < ptr[i + 1]; ++p) d += vals[p];
    inv_sqrt_d[i] = 1.0 / std::sqrt(d);
  }
  // (I - D^{-1/2} W D^{-1/2}) / t in CSR, one extra slot per row for the diagonal.
  const double inv_t = 1.0 / out.bandwidth;
  std::vector<std::int64_t> lptr(static_cast<std::size_t>(n) + 1);
  for (std::int32_t i = 0; i <= n; ++i) lptr[i] = ptr[i] + i;
  std::vector<std::int32_t> lcols(static_cast<std::size_t>(lptr[n]));
  std::vector<double> lvals(static_cast<std::size_t>(lptr[n]));
  parallel_for(static_cast<std::size_t>(n), options.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t ii = begin; ii < end; ++ii) {
      const auto i = static_cast<std::int32_t>(ii);
      std::int64_t out_pos = lptr[i];
      bool placed = false;
      for (std::int64_t p = ptr[i]; p < ptr[i + 1]; ++p) {
        const std::int32_t j = cols[p];
        if (!placed && j > i) {
          lcols[out_pos] = i;
          lvals[out_pos++] = inv_t;
          placed = true;
        }
        // Ordered by (min, max) index so both triangles round identically.
        const double a = inv_sqrt_d[std::min(i, j)];
        const double b = inv_sqrt_d[std::max(i, j)];
        lcols[out_pos] = j;
        lvals[out_pos++] = -(a * vals[p] * b) * inv_t;
      }
      if (!placed) {
        lcols[out_pos] = i;
        lvals[out_pos] = inv_t;
      }
    }
  });
  vals.clear();
  vals.shrink_to_fit();
  out.matrix = SparseSymmetric::from_csr(n, std::move(lptr), std::move(lcols), std::move(lvals));
  return out;
}

}  // namespace isospec
