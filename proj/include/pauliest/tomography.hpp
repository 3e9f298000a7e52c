#pragma once

// Ancilla-assisted process tomography of the depolarizing channel: two-qubit
// state tomography of the channel output, chi-matrix extraction in the
// Bell-derived basis, and a fidelity fit of the depolarizing parameter.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pauliest/channel.hpp"
#include "pauliest/measurement.hpp"

namespace pauliest {

enum class LocalBasis : int { X = 1, Y = 2, Z = 3 };

inline constexpr int kQstSettings = 9;
inline constexpr int kQstOutcomes = 4;

/// The nine local Pauli-pair settings, each with four outcomes ordered
/// (++, +-, -+, --) where the first sign belongs to qubit A.
struct TomographySettings {
  std::vector<std::pair<LocalBasis, LocalBasis>> pairs;
  /// Shots (multinomial) or mean count (Poisson) allotted to each setting.
  double counts_per_setting = 0.0;

  /// All nine pairs in (X,X), (X,Y), ..., (Z,Z) order.
  static TomographySettings pauli_product(double counts_per_setting = 0.0);

  /// Throws std::invalid_argument unless the nine pairs are distinct.
  void validate() const;
};

using QstTable = std::array<std::array<double, kQstOutcomes>, kQstSettings>;
using QstCountTable = std::array<std::array<std::uint64_t, kQstOutcomes>, kQstSettings>;

struct TomographyCounts {
  QstCountTable counts{};
  TomographySettings settings;
};

struct FidelityFit {
  double p;
  double fidelity;
};

struct AaqptResult {
  ChiMatrix chi_exp;
  double p_fit;
  double fidelity_at_fit;
};

/// Rank-one eigenprojector of a local Pauli: (I + sign * sigma) / 2.
ComplexMatrix local_projector(LocalBasis basis, int sign);

/// Exact outcome probabilities Tr[rho (P_a (x) P_b)] per setting.
QstTable qst_probabilities(const DensityMatrix& rho, const TomographySettings& settings);

/// Samples the tomography counts. `cfg.shots_or_mean` is the total budget,
/// spread uniformly over the nine settings; each setting has its own
/// derived sub-stream.
TomographyCounts simulate_qst_counts(const DensityMatrix& rho, const TomographySettings& settings,
                                     const SamplingConfig& cfg);

/// Linear inversion from per-setting frequencies, without positivity
/// projection. Single-qubit expectations average the three settings that
/// share the basis.
ComplexMatrix linear_inversion_raw(const QstTable& frequencies, const TomographySettings& settings);

/// Linear inversion followed by psd_project.
DensityMatrix linear_inversion_state(const QstTable& frequencies,
                                     const TomographySettings& settings);
DensityMatrix linear_inversion_state(const TomographyCounts& counts);

/// chi_ij = <B_i| rho_out |B_j> with B_i = (sigma_i (x) I)|input>.
ChiMatrix chi_from_output(const DensityMatrix& rho_out, BellLabel input = BellLabel::PsiMinus);

/// Raw overload for unprojected reconstructions; the trace must be within
/// 1e-6 of one and the result is renormalized.
ChiMatrix chi_from_output(const ComplexMatrix& rho_out, BellLabel input = BellLabel::PsiMinus);

/// argmax over p in [0, 1] of F(psd_project(chi_exp), chi_theoretical_dc(p)).
/// Grid at 1e-3, then golden-section refinement to 1e-6; ties go to the
/// smaller p.
FidelityFit fit_p_fidelity(const ChiMatrix& chi_exp);

/// Prepare `input`, send qubit A through the depolarizing channel, run state
/// tomography (exact probabilities when `cfg` is empty), extract chi, fit p.
AaqptResult aaqpt_pipeline(double p_true, const std::optional<SamplingConfig>& cfg,
                           BellLabel input = BellLabel::PsiMinus);

}  // namespace pauliest
