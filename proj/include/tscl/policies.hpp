#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tscl/rng.hpp"

namespace tscl {

/// |q(a)| per task when use_abs, q(a) itself otherwise.
std::vector<double> preference(std::span<const double> q, bool use_abs);

/// Argmax with ties broken uniformly at random among the maximizers.
int argmax_random_tie(std::span<const double> values, Rng& rng);

/// With probability epsilon a uniform random task, otherwise the argmax of
/// pref (ties uniform). epsilon must lie in [0, 1].
int eps_greedy_select(std::span<const double> pref, double epsilon, Rng& rng);

/// Softmax of pref / tau, computed with max subtraction. tau must be > 0.
std::vector<double> boltzmann_probs(std::span<const double> pref, double tau);

/// One draw from a categorical distribution (entries nonnegative, sum ~ 1).
int sample_categorical(std::span<const double> probs, Rng& rng);

/// (1 - epsilon) mass on the argmax of pref (ties uniform) plus epsilon / N
/// on every task.
std::vector<double> eps_greedy_distribution(std::span<const double> pref, double epsilon,
                                            Rng& rng);

/// Ordinary least squares slope of y against t. nullopt when fewer than two
/// points or all t coincide; callers treat that as "no progress signal yet".
std::optional<double> ols_slope(std::span<const double> t, std::span<const double> y);

}  // namespace tscl
