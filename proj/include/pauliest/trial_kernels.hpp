#pragma once

// Monte Carlo trial loops. Each trial is a pure function of its index, so
// the OpenMP loop and the serial reference produce identical vectors.

#include <cstddef>
#include <exception>
#include <vector>

#include <omp.h>

namespace pauliest {

enum class Execution { Serial, Parallel };

template <class TrialFn>
std::vector<double> run_trials_serial(std::size_t trials, TrialFn&& trial) {
  std::vector<double> out(trials);
  for (std::size_t t = 0; t < trials; ++t) out[t] = trial(t);
  return out;
}

/// `threads` <= 0 uses the OpenMP default. The first exception thrown by
/// any trial (lowest index) is rethrown after the loop.
template <class TrialFn>
std::vector<double> run_trials_parallel(std::size_t trials, TrialFn&& trial, int threads = 0) {
  std::vector<double> out(trials);
  std::vector<std::exception_ptr> errors(trials);
  const long n = static_cast<long>(trials);
  const int team = threads > 0 ? threads : omp_get_max_threads();

  #pragma omp parallel for schedule(static) num_threads(team)
  for (long t = 0; t < n; ++t) {
    try {
      out[static_cast<std::size_t>(t)] = trial(static_cast<std::size_t>(t));
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

template <class TrialFn>
std::vector<double> run_trials(std::size_t trials, TrialFn&& trial, Execution exec) {
  if (exec == Execution::Serial) return run_trials_serial(trials, trial);
  return run_trials_parallel(trials, trial);
}

}  // namespace pauliest
