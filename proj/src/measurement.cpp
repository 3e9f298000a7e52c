#include "pauliest/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pauliest/rng.hpp"

namespace pauliest {

OutcomeDistribution::OutcomeDistribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) {
    throw std::invalid_argument("OutcomeDistribution: empty outcome set");
  }
  double sum = 0.0;
  for (double& p : probabilities_) {
    if (!std::isfinite(p) || p < -tol::kStructural || p > 1.0 + tol::kStructural) {
      throw std::invalid_argument("OutcomeDistribution: probability " + std::to_string(p) +
                                  " outside [0, 1]");
    }
    p = std::clamp(p, 0.0, 1.0);
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::kStructural) {
    throw std::invalid_argument("OutcomeDistribution: probabilities sum to " +
                                std::to_string(sum));
  }
}

std::uint64_t OutcomeCounts::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

void SamplingConfig::validate() const {
  if (!std::isfinite(shots_or_mean) || shots_or_mean < 0.0) {
    throw std::invalid_argument("SamplingConfig: shots_or_mean must be nonnegative");
  }
  if (mode == SamplingMode::Multinomial && std::floor(shots_or_mean) != shots_or_mean) {
    throw std::invalid_argument("SamplingConfig: multinomial shot count must be an integer");
  }
}

std::array<BellLabel, 4> bell_permutation() {
  return {BellLabel::PsiMinus, BellLabel::PhiMinus, BellLabel::PhiPlus, BellLabel::PsiPlus};
}

OutcomeDistribution bell_outcome_probs(const PauliProbabilities& probs) {
  std::vector<double> out(4, 0.0);
  const auto perm = bell_permutation();
  for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(perm[i])] = probs[i];
  return OutcomeDistribution(std::move(out));
}

OutcomeDistribution two_outcome_probs(double p) {
  require_unit_interval(p, "two_outcome_probs");
  return OutcomeDistribution({1.0 - p, p});
}

OutcomeCounts sample_counts(const OutcomeDistribution& dist, const SamplingConfig& cfg) {
  cfg.validate();
  const std::size_t k = dist.size();
  OutcomeCounts out{std::vector<std::uint64_t>(k, 0)};

  if (cfg.mode == SamplingMode::Multinomial) {
    auto remaining = static_cast<std::uint64_t>(cfg.shots_or_mean);
    double mass_left = 1.0;
    Engine engine = make_engine(cfg.seed);
    for (std::size_t i = 0; i + 1 < k && remaining > 0; ++i) {
      const double q = mass_left > 0.0 ? std::clamp(dist[i] / mass_left, 0.0, 1.0) : 0.0;
      std::uint64_t draw = 0;
      if (q >= 1.0) {
        draw = remaining;
      } else if (q > 0.0) {
        std::binomial_distribution<std::uint64_t> binomial(remaining, q);
        draw = binomial(engine);
      }
      out.counts[i] = draw;
      remaining -= draw;
      mass_left -= dist[i];
    }
    out.counts[k - 1] += remaining;
    return out;
  }

  for (std::size_t i = 0; i < k; ++i) {
    const double mean = cfg.shots_or_mean * dist[i];
    if (mean <= 0.0) continue;
    Engine engine = make_engine(derive_seed(cfg.seed, {i}));
    std::poisson_distribution<std::uint64_t> poisson(mean);
    out.counts[i] = poisson(engine);
  }
  return out;
}

}  // namespace pauliest
