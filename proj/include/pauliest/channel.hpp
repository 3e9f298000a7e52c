#pragma once

#include <array>

#include "pauliest/qcore.hpp"

namespace pauliest {

/// Probabilities (p0, p1, p2, p3) of applying identity, sigma_x, sigma_y,
/// sigma_z. Entries lie in [0, 1] and sum to 1 within 1e-12; values within
/// that tolerance outside [0, 1] are clamped on construction.
class PauliProbabilities {
 public:
  PauliProbabilities(double p0, double p1, double p2, double p3);
  explicit PauliProbabilities(const std::array<double, 4>& values);

  double operator[](int index) const { return values_[static_cast<std::size_t>(index)]; }
  const std::array<double, 4>& values() const { return values_; }

  friend bool operator==(const PauliProbabilities&, const PauliProbabilities&) = default;

 private:
  std::array<double, 4> values_;
};

/// Liquid-crystal activation times for sigma_x, sigma_y, sigma_z within one
/// cycle of length `period`. Only the ratios t_i / period matter.
struct TimingConfig {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double period = 1.0;

  double noisy_time() const { return t1 + t2 + t3; }
  void validate() const;

  friend bool operator==(const TimingConfig&, const TimingConfig&) = default;
};

/// 4x4 process matrix in the (sigma_0, sigma_x, sigma_y, sigma_z) basis,
/// trace-normalized. Hermitian and unit trace within 1e-9.
class ChiMatrix {
 public:
  explicit ChiMatrix(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return matrix_; }
  Complex operator()(int i, int j) const { return matrix_(i, j); }

 private:
  ComplexMatrix matrix_;
};

/// sum_i p_i sigma_i rho sigma_i on a single qubit.
DensityMatrix apply_pauli_channel(const PauliProbabilities& probs, const DensityMatrix& rho);

/// sum_i p_i (sigma_i (x) I) rho (sigma_i (x) I); only qubit A is noisy.
DensityMatrix apply_channel_one_side(const PauliProbabilities& probs, const DensityMatrix& rho);

/// p_i = t_i / T, p_0 = 1 - (t1 + t2 + t3) / T.
PauliProbabilities timing_to_probs(const TimingConfig& cfg);

/// Isotropic noise: (1 - p, p/3, p/3, p/3).
PauliProbabilities depolarizing_probs(double p);

/// diag(1 - p, p/3, p/3, p/3).
ChiMatrix chi_theoretical_dc(double p);

/// diag(p0, p1, p2, p3).
ChiMatrix chi_of_pauli(const PauliProbabilities& probs);

/// Throws std::invalid_argument unless 0 <= p <= 1.
void require_unit_interval(double p, const char* what);

}  // namespace pauliest
