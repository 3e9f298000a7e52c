#pragma once

// Random generators for property tests and independent oracles. Nothing
// here calls into the code path it is used to check.

#include <cmath>
#include <random>
#include <vector>

#include "pauliest/channel.hpp"
#include "pauliest/qcore.hpp"

namespace testing {

using pauliest::Complex;
using pauliest::ComplexMatrix;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5EED'2012ULL);
  return engine;
}

inline ComplexMatrix random_complex(int rows, int cols) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng()), normal(rng()));
  return m;
}

/// Ginibre-distributed density matrix of dimension `dim`.
inline pauliest::DensityMatrix random_density(int dim) {
  const ComplexMatrix g = random_complex(dim, dim);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return pauliest::DensityMatrix(rho);
}

/// Flat Dirichlet draw on the probability simplex.
inline std::array<double, 4> random_simplex() {
  std::exponential_distribution<double> expo(1.0);
  std::array<double, 4> v{};
  double sum = 0.0;
  for (double& x : v) sum += (x = expo(rng()));
  for (double& x : v) x /= sum;
  return v;
}

inline pauliest::PauliProbabilities random_probs() {
  return pauliest::PauliProbabilities(random_simplex());
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Fidelity of commuting (diagonal) states: (sum_i sqrt(a_i b_i))^2.
inline double commuting_fidelity(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::sqrt(a[i] * b[i]);
  return s * s;
}

/// Explicit 4x4 Kronecker-free application of sigma_i on qubit A: the
/// operator is written out element by element.
inline ComplexMatrix pauli_on_a(int i) {
  const Complex I(0.0, 1.0);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  switch (i) {
    case 0: m = ComplexMatrix::Identity(4, 4); break;
    case 1: m(0, 2) = m(1, 3) = m(2, 0) = m(3, 1) = 1.0; break;
    case 2: m(0, 2) = m(1, 3) = -I; m(2, 0) = m(3, 1) = I; break;
    case 3: m(0, 0) = m(1, 1) = 1.0; m(2, 2) = m(3, 3) = -1.0; break;
  }
  return m;
}

inline ComplexMatrix brute_channel_one_side(const std::array<double, 4>& p, const ComplexMatrix& rho) {
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) out += p[static_cast<std::size_t>(i)] * pauli_on_a(i) * rho * pauli_on_a(i);
  return out;
}

/// Written-out Bell vectors in |00>,|01>,|10>,|11> order, indexed
/// psi-, phi-, phi+, psi+.
inline std::array<pauliest::ComplexVector, 4> bell_vectors() {
  const double h = 1.0 / std::sqrt(2.0);
  std::array<pauliest::ComplexVector, 4> v;
  for (auto& x : v) x = pauliest::ComplexVector::Zero(4);
  v[0](1) = h; v[0](2) = -h;
  v[1](0) = h; v[1](3) = -h;
  v[2](0) = h; v[2](3) = h;
  v[3](1) = h; v[3](2) = h;
  return v;
}

}  // namespace testing
