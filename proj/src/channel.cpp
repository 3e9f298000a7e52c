#include "pauliest/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pauliest {

void require_unit_interval(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": parameter " + std::to_string(p) +
                                " outside [0, 1]");
  }
}

PauliProbabilities::PauliProbabilities(double p0, double p1, double p2, double p3)
    : PauliProbabilities(std::array<double, 4>{p0, p1, p2, p3}) {}

PauliProbabilities::PauliProbabilities(const std::array<double, 4>& values) : values_(values) {
  double sum = 0.0;
  for (double& v : values_) {
    if (!std::isfinite(v) || v < -tol::kStructural || v > 1.0 + tol::kStructural) {
      throw std::invalid_argument("PauliProbabilities: entry " + std::to_string(v) +
                                  " outside [0, 1]");
    }
    v = std::clamp(v, 0.0, 1.0);
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol::kStructural) {
    throw std::invalid_argument("PauliProbabilities: entries sum to " + std::to_string(sum));
  }
}

void TimingConfig::validate() const {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw std::invalid_argument("TimingConfig: period must be positive");
  }
  if (!(t1 >= 0.0 && t2 >= 0.0 && t3 >= 0.0)) {
    throw std::invalid_argument("TimingConfig: activation times must be nonnegative");
  }
  if (noisy_time() > period * (1.0 + tol::kStructural)) {
    throw std::invalid_argument("TimingConfig: t1 + t2 + t3 exceeds the period");
  }
}

ChiMatrix::ChiMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != 4 || matrix_.cols() != 4) {
    throw std::invalid_argument("ChiMatrix: must be 4x4");
  }
  if (!is_hermitian(matrix_, tol::kReconstruction)) {
    throw std::invalid_argument("ChiMatrix: not Hermitian");
  }
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > tol::kReconstruction) {
    throw std::invalid_argument("ChiMatrix: trace " + std::to_string(tr) + " is not 1");
  }
}

namespace {

DensityMatrix apply_kraus_diagonal(const PauliProbabilities& probs, const DensityMatrix& rho,
                                   bool two_qubit) {
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (int i = 0; i < 4; ++i) {
    if (probs[i] == 0.0) continue;
    const ComplexMatrix op =
        two_qubit ? tensor_product(pauli(i), ComplexMatrix::Identity(2, 2)) : pauli(i);
    out += probs[i] * (op * m * op);
  }
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

}  // namespace

DensityMatrix apply_pauli_channel(const PauliProbabilities& probs, const DensityMatrix& rho) {
  if (rho.dimension() != 2) {
    throw std::invalid_argument("apply_pauli_channel: expects a single-qubit state");
  }
  return apply_kraus_diagonal(probs, rho, false);
}

DensityMatrix apply_channel_one_side(const PauliProbabilities& probs, const DensityMatrix& rho) {
  if (rho.dimension() != 4) {
    throw std::invalid_argument("apply_channel_one_side: expects a two-qubit state");
  }
  return apply_kraus_diagonal(probs, rho, true);
}

PauliProbabilities timing_to_probs(const TimingConfig& cfg) {
  cfg.validate();
  const double p1 = cfg.t1 / cfg.period;
  const double p2 = cfg.t2 / cfg.period;
  const double p3 = cfg.t3 / cfg.period;
  const double p0 = std::max(0.0, 1.0 - cfg.noisy_time() / cfg.period);
  return PauliProbabilities(p0, p1, p2, p3);
}

PauliProbabilities depolarizing_probs(double p) {
  require_unit_interval(p, "depolarizing_probs");
  return PauliProbabilities(1.0 - p, p / 3.0, p / 3.0, p / 3.0);
}

ChiMatrix chi_of_pauli(const PauliProbabilities& probs) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) m(i, i) = probs[i];
  return ChiMatrix(std::move(m));
}

ChiMatrix chi_theoretical_dc(double p) {
  require_unit_interval(p, "chi_theoretical_dc");
  return chi_of_pauli(depolarizing_probs(p));
}

}  // namespace pauliest
