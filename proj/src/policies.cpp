#include "tscl/policies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tscl {

std::vector<double> preference(std::span<const double> q, bool use_abs) {
    std::vector<double> out(q.begin(), q.end());
    if (use_abs) {
        for (auto& v : out) v = std::abs(v);
    }
    return out;
}

int argmax_random_tie(std::span<const double> values, Rng& rng) {
    if (values.empty()) {
        throw std::domain_error("argmax_random_tie: empty input");
    }
    const double best = *std::max_element(values.begin(), values.end());
    int ties = 0;
    for (double v : values) {
        if (v == best) ++ties;
    }
    if (ties == 1) {
        return static_cast<int>(std::max_element(values.begin(), values.end()) - values.begin());
    }
    int pick = rng.uniform_int(ties);
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i] == best && pick-- == 0) {
            return static_cast<int>(i);
        }
    }
    return static_cast<int>(values.size()) - 1;  // unreachable
}

int eps_greedy_select(std::span<const double> pref, double epsilon, Rng& rng) {
    if (pref.empty()) {
        throw std::domain_error("eps_greedy_select: empty preference vector");
    }
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::domain_error("eps_greedy_select: epsilon must lie in [0, 1]");
    }
    if (rng.bernoulli(epsilon)) {
        return rng.uniform_int(static_cast<int>(pref.size()));
    }
    return argmax_random_tie(pref, rng);
}

std::vector<double> boltzmann_probs(std::span<const double> pref, double tau) {
    if (pref.empty()) {
        throw std::domain_error("boltzmann_probs: empty preference vector");
    }
    if (!(tau > 0.0)) {
        throw std::domain_error("boltzmann_probs: tau must be > 0");
    }
    const double m = *std::max_element(pref.begin(), pref.end());
    std::vector<double> out(pref.size());
    double denom = 0.0;
    for (size_t i = 0; i < pref.size(); ++i) {
        out[i] = std::exp((pref[i] - m) / tau);
        denom += out[i];
    }
    for (auto& v : out) v /= denom;
    return out;
}

int sample_categorical(std::span<const double> probs, Rng& rng) {
    if (probs.empty()) {
        throw std::domain_error("sample_categorical: empty distribution");
    }
    const double u = rng.uniform();
    double cum = 0.0;
    for (size_t i = 0; i < probs.size(); ++i) {
        cum += probs[i];
        if (u < cum) {
            return static_cast<int>(i);
        }
    }
    return static_cast<int>(probs.size()) - 1;  // rounding slack lands on last
}

std::vector<double> eps_greedy_distribution(std::span<const double> pref, double epsilon,
                                            Rng& rng) {
    if (pref.empty()) {
        throw std::domain_error("eps_greedy_distribution: empty preference vector");
    }
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::domain_error("eps_greedy_distribution: epsilon must lie in [0, 1]");
    }
    const int n = static_cast<int>(pref.size());
    std::vector<double> out(pref.size(), epsilon / n);
    out[static_cast<size_t>(argmax_random_tie(pref, rng))] += 1.0 - epsilon;
    return out;
}

std::optional<double> ols_slope(std::span<const double> t, std::span<const double> y) {
    if (t.size() != y.size()) {
        throw std::invalid_argument("ols_slope: mismatched lengths");
    }
    const size_t n = t.size();
    if (n < 2) {
        return std::nullopt;
    }
    double t_mean = 0.0;
    double y_mean = 0.0;
    for (size_t i = 0; i < n; ++i) {
        t_mean += t[i];
        y_mean += y[i];
    }
    t_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);

    double sxx = 0.0;
    double sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double dt = t[i] - t_mean;
        sxx += dt * dt;
        sxy += dt * (y[i] - y_mean);
    }
    if (sxx == 0.0) {
        return std::nullopt;
    }
    return sxy / sxx;
}

}  // namespace tscl
