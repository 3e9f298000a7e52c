#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pauliest/channel.hpp"

namespace pauliest {

/// Outcome indices for the coarse-grained measurement {|psi-><psi-|, 1 - |psi-><psi-|}.
enum class TwoOutcome : int { PsiMinus = 0, Rest = 1 };

/// Probabilities over a finite outcome set. The producer fixes the labels
/// (BellLabel order, TwoOutcome order, or tomography projector order).
class OutcomeDistribution {
 public:
  explicit OutcomeDistribution(std::vector<double> probabilities);

  std::span<const double> probabilities() const { return probabilities_; }
  std::size_t size() const { return probabilities_.size(); }
  double operator[](std::size_t k) const { return probabilities_[k]; }

 private:
  std::vector<double> probabilities_;
};

struct OutcomeCounts {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  std::uint64_t operator[](std::size_t k) const { return counts[k]; }
};

enum class SamplingMode { Multinomial, PoissonPerOutcome };

struct SamplingConfig {
  SamplingMode mode = SamplingMode::Multinomial;
  /// Total shots N (multinomial; must be integral) or mean total count (Poisson).
  double shots_or_mean = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Bell state reached from |psi-> by sigma_i (x) I, indexed by Pauli index.
std::array<BellLabel, 4> bell_permutation();

/// Bell measurement statistics of the channel output for input |psi->.
OutcomeDistribution bell_outcome_probs(const PauliProbabilities& probs);

/// (1 - p, p) over TwoOutcome for the depolarizing channel.
OutcomeDistribution two_outcome_probs(double p);

/// Draws counts per `cfg`. Multinomial mode conditions binomials outcome by
/// outcome; Poisson mode draws each outcome from its own seeded sub-stream.
OutcomeCounts sample_counts(const OutcomeDistribution& dist, const SamplingConfig& cfg);

}  // namespace pauliest
