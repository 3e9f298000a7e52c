#pragma once

#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "pauliest/channel.hpp"
#include "pauliest/measurement.hpp"

namespace pauliest {

/// Plug-in estimate of the Pauli probabilities from Bell counts.
struct PauliEstimate {
  PauliProbabilities probs;
  std::uint64_t total_counts;
};

/// Covariance over the free parameters (p1, p2, p3).
class CovarianceMatrix3 {
 public:
  explicit CovarianceMatrix3(const Eigen::Matrix3d& values);

  const Eigen::Matrix3d& values() const { return values_; }
  double operator()(int i, int j) const { return values_(i, j); }

 private:
  Eigen::Matrix3d values_;
};

/// Depolarizing estimate p = n_ss / (n_ss + c_int), where n_ss counts the
/// non-singlet (same-side) events and c_int the singlet coincidences.
struct DcEstimate {
  double p_hat;
  std::uint64_t n_ss;
  std::uint64_t c_int;
};

struct SampleStats {
  double mean;
  double std;  // divisor n - 1
};

/// Relative frequencies mapped back through the inverse Bell permutation.
/// Throws std::invalid_argument on an empty sample.
PauliEstimate estimate_pauli(const OutcomeCounts& bell_counts);

DcEstimate estimate_dc(std::uint64_t n_ss, std::uint64_t c_int);

/// Inverse quantum Fisher information for a maximally entangled input:
/// p_i (1 - p_i) on the diagonal and -p_i p_j off it.
CovarianceMatrix3 min_covariance(const PauliProbabilities& probs);

/// sqrt(p (1 - p) / n).
double dc_std_bound(double p, std::uint64_t n);

/// Unbiased sample covariance of (p1, p2, p3) vectors; needs at least two.
CovarianceMatrix3 empirical_covariance(std::span<const Eigen::Vector3d> samples);

/// Mean and unbiased standard deviation; needs at least two values.
SampleStats sample_stats(std::span<const double> values);

}  // namespace pauliest
