#include "pauliest/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "pauliest/rng.hpp"

namespace pauliest {

namespace {

constexpr double kGridStep = 1e-3;
constexpr double kRefineTolerance = 1e-7;

int outcome_sign(int outcome, int qubit) {
  // qubit 0 is A (high bit), qubit 1 is B.
  const int bit = qubit == 0 ? (outcome >> 1) & 1 : outcome & 1;
  return bit == 0 ? 1 : -1;
}

ComplexMatrix dc_chi_diagonal(double p) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0 - p;
  m(1, 1) = m(2, 2) = m(3, 3) = p / 3.0;
  return m;
}

std::array<ComplexVector, 4> pauli_bell_basis(BellLabel input) {
  const PureState state = bell_state(input);
  const ComplexVector& ket = state.amplitudes();
  std::array<ComplexVector, 4> basis;
  for (int i = 0; i < 4; ++i) {
    basis[static_cast<std::size_t>(i)] =
        tensor_product(pauli(i), ComplexMatrix::Identity(2, 2)) * ket;
  }
  return basis;
}

}  // namespace

TomographySettings TomographySettings::pauli_product(double counts_per_setting) {
  TomographySettings s;
  s.counts_per_setting = counts_per_setting;
  for (LocalBasis a : {LocalBasis::X, LocalBasis::Y, LocalBasis::Z}) {
    for (LocalBasis b : {LocalBasis::X, LocalBasis::Y, LocalBasis::Z}) s.pairs.emplace_back(a, b);
  }
  return s;
}

void TomographySettings::validate() const {
  if (pairs.size() != kQstSettings) {
    throw std::invalid_argument("TomographySettings: expected 9 settings, got " +
                                std::to_string(pairs.size()));
  }
  std::set<std::pair<LocalBasis, LocalBasis>> seen(pairs.begin(), pairs.end());
  if (seen.size() != pairs.size()) {
    throw std::invalid_argument("TomographySettings: duplicate basis pair");
  }
}

ComplexMatrix local_projector(LocalBasis basis, int sign) {
  return 0.5 * (pauli(0) + static_cast<double>(sign) * pauli(static_cast<int>(basis)));
}

QstTable qst_probabilities(const DensityMatrix& rho, const TomographySettings& settings) {
  settings.validate();
  if (rho.dimension() != 4) {
    throw std::invalid_argument("qst_probabilities: expects a two-qubit state");
  }
  QstTable table{};
  for (int s = 0; s < kQstSettings; ++s) {
    const auto [a, b] = settings.pairs[static_cast<std::size_t>(s)];
    auto& row = table[static_cast<std::size_t>(s)];
    double sum = 0.0;
    for (int k = 0; k < kQstOutcomes; ++k) {
      const ComplexMatrix proj =
          tensor_product(local_projector(a, outcome_sign(k, 0)), local_projector(b, outcome_sign(k, 1)));
      const double prob = std::max(0.0, (rho.matrix() * proj).trace().real());
      row[static_cast<std::size_t>(k)] = prob;
      sum += prob;
    }
    for (double& v : row) v /= sum;
  }
  return table;
}

TomographyCounts simulate_qst_counts(const DensityMatrix& rho, const TomographySettings& settings,
                                     const SamplingConfig& cfg) {
  cfg.validate();
  const QstTable probs = qst_probabilities(rho, settings);

  TomographyCounts out;
  out.settings = settings;
  out.settings.counts_per_setting = cfg.shots_or_mean / kQstSettings;

  const auto total_shots = static_cast<std::uint64_t>(cfg.shots_or_mean);
  for (int s = 0; s < kQstSettings; ++s) {
    SamplingConfig sub = cfg;
    sub.seed = derive_seed(cfg.seed, {static_cast<std::uint64_t>(s)});
    if (cfg.mode == SamplingMode::Multinomial) {
      const std::uint64_t extra = static_cast<std::uint64_t>(s) < total_shots % kQstSettings ? 1 : 0;
      sub.shots_or_mean = static_cast<double>(total_shots / kQstSettings + extra);
    } else {
      sub.shots_or_mean = cfg.shots_or_mean / kQstSettings;
    }
    const auto& row = probs[static_cast<std::size_t>(s)];
    const OutcomeCounts drawn =
        sample_counts(OutcomeDistribution(std::vector<double>(row.begin(), row.end())), sub);
    std::copy(drawn.counts.begin(), drawn.counts.end(),
              out.counts[static_cast<std::size_t>(s)].begin());
  }
  return out;
}

ComplexMatrix linear_inversion_raw(const QstTable& frequencies, const TomographySettings& settings) {
  settings.validate();
  // expectation(i, j) of sigma_i (x) sigma_j; index 0 is the identity.
  Eigen::Matrix4d expectation = Eigen::Matrix4d::Zero();
  Eigen::Matrix4d samples = Eigen::Matrix4d::Zero();
  expectation(0, 0) = 1.0;
  samples(0, 0) = 1.0;

  for (int s = 0; s < kQstSettings; ++s) {
    const auto [a, b] = settings.pairs[static_cast<std::size_t>(s)];
    const int ia = static_cast<int>(a);
    const int ib = static_cast<int>(b);
    const auto& f = frequencies[static_cast<std::size_t>(s)];
    double corr = 0.0, mark_a = 0.0, mark_b = 0.0;
    for (int k = 0; k < kQstOutcomes; ++k) {
      const double fk = f[static_cast<std::size_t>(k)];
      corr += outcome_sign(k, 0) * outcome_sign(k, 1) * fk;
      mark_a += outcome_sign(k, 0) * fk;
      mark_b += outcome_sign(k, 1) * fk;
    }
    expectation(ia, ib) += corr;
    samples(ia, ib) += 1.0;
    expectation(ia, 0) += mark_a;
    samples(ia, 0) += 1.0;
    expectation(0, ib) += mark_b;
    samples(0, ib) += 1.0;
  }

  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (samples(i, j) == 0.0) continue;
      rho += (expectation(i, j) / samples(i, j)) * tensor_product(pauli(i), pauli(j));
    }
  }
  return 0.25 * rho;
}

DensityMatrix linear_inversion_state(const QstTable& frequencies,
                                     const TomographySettings& settings) {
  return psd_project(linear_inversion_raw(frequencies, settings));
}

DensityMatrix linear_inversion_state(const TomographyCounts& counts) {
  QstTable freq{};
  for (int s = 0; s < kQstSettings; ++s) {
    const auto& row = counts.counts[static_cast<std::size_t>(s)];
    std::uint64_t total = 0;
    for (auto c : row) total += c;
    if (total == 0) {
      throw std::invalid_argument("linear_inversion_state: setting " + std::to_string(s) +
                                  " has no counts");
    }
    for (int k = 0; k < kQstOutcomes; ++k) {
      freq[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] =
          static_cast<double>(row[static_cast<std::size_t>(k)]) / static_cast<double>(total);
    }
  }
  return linear_inversion_state(freq, counts.settings);
}

ChiMatrix chi_from_output(const ComplexMatrix& rho_out, BellLabel input) {
  if (rho_out.rows() != 4 || rho_out.cols() != 4) {
    throw std::invalid_argument("chi_from_output: expects a 4x4 matrix");
  }
  const double tr = rho_out.trace().real();
  if (std::abs(tr - 1.0) > 1e-6) {
    throw std::invalid_argument("chi_from_output: trace " + std::to_string(tr) + " is not 1");
  }
  const auto basis = pauli_bell_basis(input);
  ComplexMatrix chi(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      chi(i, j) = basis[static_cast<std::size_t>(i)].dot(rho_out * basis[static_cast<std::size_t>(j)]);
    }
  }
  chi = 0.5 * (chi + chi.adjoint());
  return ChiMatrix(chi / chi.trace().real());
}

ChiMatrix chi_from_output(const DensityMatrix& rho_out, BellLabel input) {
  return chi_from_output(rho_out.matrix(), input);
}

FidelityFit fit_p_fidelity(const ChiMatrix& chi_exp) {
  const DensityMatrix projected = psd_project(chi_exp.matrix());
  const ComplexMatrix sqrt_chi = hermitian_sqrt(projected.matrix());
  auto objective = [&](double p) { return fidelity_from_sqrt(sqrt_chi, dc_chi_diagonal(p)); };

  const int steps = static_cast<int>(std::lround(1.0 / kGridStep));
  int best = 0;
  double best_f = objective(0.0);
  for (int k = 1; k <= steps; ++k) {
    const double f = objective(k * kGridStep);
    if (f > best_f) {
      best_f = f;
      best = k;
    }
  }
  const double grid_p = best * kGridStep;

  // Square-root fidelity is concave in p, so the bracket around the grid
  // maximum holds the global one.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::max(0.0, grid_p - kGridStep);
  double hi = std::min(1.0, grid_p + kGridStep);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > kRefineTolerance) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    }
  }

  FidelityFit fit{grid_p, best_f};
  const double refined_p = 0.5 * (lo + hi);
  for (double candidate : {lo, refined_p, hi}) {
    const double f = objective(candidate);
    if (f > fit.fidelity || (f == fit.fidelity && candidate < fit.p)) fit = {candidate, f};
  }
  return fit;
}

AaqptResult aaqpt_pipeline(double p_true, const std::optional<SamplingConfig>& cfg,
                           BellLabel input) {
  require_unit_interval(p_true, "aaqpt_pipeline");
  const DensityMatrix rho_in(bell_state(input));
  const DensityMatrix rho_out = apply_channel_one_side(depolarizing_probs(p_true), rho_in);
  const TomographySettings settings = TomographySettings::pauli_product();

  const DensityMatrix reconstructed =
      cfg ? linear_inversion_state(simulate_qst_counts(rho_out, settings, *cfg))
          : linear_inversion_state(qst_probabilities(rho_out, settings), settings);

  ChiMatrix chi = chi_from_output(reconstructed, input);
  const FidelityFit fit = fit_p_fidelity(chi);
  return {std::move(chi), fit.p, fit.fidelity};
}

}  // namespace pauliest
