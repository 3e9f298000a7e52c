#pragma once

// Small dense complex linear algebra for one- and two-qubit states.
//
// Two-qubit basis order is |00>, |01>, |10>, |11> with the noisy qubit (A)
// as the left tensor factor.

#include <array>
#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace pauliest {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

namespace tol {
/// Structural checks: normalization, Hermiticity, trace.
inline constexpr double kStructural = 1e-12;
/// Reconstruction and positivity checks.
inline constexpr double kReconstruction = 1e-9;
}  // namespace tol

/// Bell states in canonical order. The enumerator value is the index used
/// everywhere Bell outcome counts or probabilities are stored.
enum class BellLabel : int { PsiMinus = 0, PhiMinus = 1, PhiPlus = 2, PsiPlus = 3 };

inline constexpr std::array<BellLabel, 4> kBellLabels = {
    BellLabel::PsiMinus, BellLabel::PhiMinus, BellLabel::PhiPlus, BellLabel::PsiPlus};

std::string_view to_string(BellLabel label);

/// Normalized state vector of dimension 2 or 4.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  Eigen::Index dimension() const { return amplitudes_.size(); }
  ComplexMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2 or 4.
/// Construction validates all three properties.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix);
  explicit DensityMatrix(const PureState& state);

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dimension() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

/// sigma_0 (identity), sigma_x, sigma_y, sigma_z for index 0..3.
const ComplexMatrix& pauli(int index);

PureState bell_state(BellLabel label);

/// Kronecker product a (x) b.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tolerance);

/// Principal square root of a Hermitian matrix; negative eigenvalues are
/// clipped to zero first.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m);

/// Clips negative eigenvalues to zero and renormalizes to unit trace.
/// Throws std::invalid_argument if the input is not square and Hermitian
/// within 1e-9, or std::domain_error if nothing positive survives clipping.
DensityMatrix psd_project(const ComplexMatrix& m);

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2, clamped to [0, 1].
double uhlmann_fidelity(const DensityMatrix& a, const DensityMatrix& b);

/// Fidelity against `b` given a precomputed sqrt(a). Used by the fitting
/// loop where `a` is fixed across many evaluations.
double fidelity_from_sqrt(const ComplexMatrix& sqrt_a, const ComplexMatrix& b);

/// Half the trace norm of (a - b); both Hermitian.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace pauliest
