#include "pauliest/estimation.hpp"

#include <cmath>
#include <stdexcept>

namespace pauliest {

CovarianceMatrix3::CovarianceMatrix3(const Eigen::Matrix3d& values) : values_(values) {
  if ((values_ - values_.transpose()).cwiseAbs().maxCoeff() > tol::kStructural) {
    throw std::invalid_argument("CovarianceMatrix3: not symmetric");
  }
  if (values_.diagonal().minCoeff() < 0.0) {
    throw std::invalid_argument("CovarianceMatrix3: negative variance");
  }
}

PauliEstimate estimate_pauli(const OutcomeCounts& bell_counts) {
  if (bell_counts.counts.size() != 4) {
    throw std::invalid_argument("estimate_pauli: expects four Bell outcome counts");
  }
  const std::uint64_t total = bell_counts.total();
  if (total == 0) {
    throw std::invalid_argument("estimate_pauli: empty sample");
  }
  const auto perm = bell_permutation();
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) {
    p[static_cast<std::size_t>(i)] =
        static_cast<double>(bell_counts[static_cast<std::size_t>(perm[i])]) /
        static_cast<double>(total);
  }
  return {PauliProbabilities(p), total};
}

DcEstimate estimate_dc(std::uint64_t n_ss, std::uint64_t c_int) {
  if (n_ss + c_int == 0) {
    throw std::invalid_argument("estimate_dc: no events recorded");
  }
  const double p = static_cast<double>(n_ss) / static_cast<double>(n_ss + c_int);
  return {p, n_ss, c_int};
}

CovarianceMatrix3 min_covariance(const PauliProbabilities& probs) {
  Eigen::Matrix3d v;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double pi = probs[i + 1];
      const double pj = probs[j + 1];
      v(i, j) = i == j ? pi * (1.0 - pi) : -pi * pj;
    }
  }
  return CovarianceMatrix3(v);
}

double dc_std_bound(double p, std::uint64_t n) {
  require_unit_interval(p, "dc_std_bound");
  if (n == 0) {
    throw std::invalid_argument("dc_std_bound: sample size must be positive");
  }
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

CovarianceMatrix3 empirical_covariance(std::span<const Eigen::Vector3d> samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("empirical_covariance: needs at least two samples");
  }
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  for (const auto& s : samples) mean += s;
  mean /= static_cast<double>(samples.size());

  Eigen::Matrix3d acc = Eigen::Matrix3d::Zero();
  for (const auto& s : samples) {
    const Eigen::Vector3d d = s - mean;
    acc += d * d.transpose();
  }
  acc /= static_cast<double>(samples.size() - 1);
  return CovarianceMatrix3(0.5 * (acc + acc.transpose()));
}

SampleStats sample_stats(std::span<const double> values) {
  if (values.size() < 2) {
    throw std::invalid_argument("sample_stats: needs at least two values");
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

}  // namespace pauliest
