#include "pauliest/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pauliest {

namespace {

using HermitianSolver = Eigen::SelfAdjointEigenSolver<ComplexMatrix>;

void require_valid_dimension(Eigen::Index dim, const char* what) {
  if (dim != 2 && dim != 4) {
    throw std::invalid_argument(std::string(what) + ": dimension must be 2 or 4, got " +
                                std::to_string(dim));
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

std::string_view to_string(BellLabel label) {
  switch (label) {
    case BellLabel::PsiMinus: return "psi-";
    case BellLabel::PhiMinus: return "phi-";
    case BellLabel::PhiPlus: return "phi+";
    case BellLabel::PsiPlus: return "psi+";
  }
  return "?";
}

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  require_valid_dimension(amplitudes_.size(), "PureState");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol::kStructural) {
    throw std::invalid_argument("PureState: squared norm " + std::to_string(norm2) +
                                " is not 1");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("DensityMatrix: matrix is not square");
  }
  require_valid_dimension(matrix_.rows(), "DensityMatrix");
  if (!is_hermitian(matrix_, tol::kStructural)) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > tol::kStructural) {
    throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr) + " is not 1");
  }
  HermitianSolver solver(hermitian_part(matrix_), Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol::kReconstruction) {
    throw std::invalid_argument("DensityMatrix: matrix has a negative eigenvalue");
  }
}

DensityMatrix::DensityMatrix(const PureState& state) : DensityMatrix(state.projector()) {}

const ComplexMatrix& pauli(int index) {
  static const std::array<ComplexMatrix, 4> matrices = [] {
    const Complex i(0.0, 1.0);
    std::array<ComplexMatrix, 4> m;
    m[0] = ComplexMatrix::Identity(2, 2);
    m[1] = ComplexMatrix(2, 2);
    m[1] << 0.0, 1.0, 1.0, 0.0;
    m[2] = ComplexMatrix(2, 2);
    m[2] << 0.0, -i, i, 0.0;
    m[3] = ComplexMatrix(2, 2);
    m[3] << 1.0, 0.0, 0.0, -1.0;
    return m;
  }();
  if (index < 0 || index > 3) {
    throw std::out_of_range("pauli: index must be in 0..3");
  }
  return matrices[static_cast<std::size_t>(index)];
}

PureState bell_state(BellLabel label) {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexVector v = ComplexVector::Zero(4);
  switch (label) {
    case BellLabel::PsiMinus: v(1) = h; v(2) = -h; break;
    case BellLabel::PsiPlus: v(1) = h; v(2) = h; break;
    case BellLabel::PhiMinus: v(0) = h; v(3) = -h; break;
    case BellLabel::PhiPlus: v(0) = h; v(3) = h; break;
  }
  return PureState(std::move(v));
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
  HermitianSolver solver(hermitian_part(m));
  const Eigen::VectorXd roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix& u = solver.eigenvectors();
  return u * roots.cast<Complex>().asDiagonal() * u.adjoint();
}

DensityMatrix psd_project(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("psd_project: matrix is not square");
  }
  if (!is_hermitian(m, tol::kReconstruction)) {
    throw std::invalid_argument("psd_project: matrix is not Hermitian");
  }
  HermitianSolver solver(hermitian_part(m));
  const Eigen::VectorXd clipped = solver.eigenvalues().cwiseMax(0.0);
  const double tr = clipped.sum();
  if (tr <= tol::kStructural) {
    throw std::domain_error("psd_project: no positive spectrum left after clipping");
  }
  const ComplexMatrix& u = solver.eigenvectors();
  ComplexMatrix out = u * (clipped / tr).cast<Complex>().asDiagonal() * u.adjoint();
  return DensityMatrix(hermitian_part(out));
}

double fidelity_from_sqrt(const ComplexMatrix& sqrt_a, const ComplexMatrix& b) {
  const ComplexMatrix inner = sqrt_a * b * sqrt_a;
  HermitianSolver solver(hermitian_part(inner), Eigen::EigenvaluesOnly);
  const double root_trace = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(root_trace * root_trace, 0.0, 1.0);
}

double uhlmann_fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("uhlmann_fidelity: dimension mismatch");
  }
  return fidelity_from_sqrt(hermitian_sqrt(a.matrix()), b.matrix());
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  HermitianSolver solver(hermitian_part(a - b), Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace pauliest
