#pragma once

#include <cmath>
#include <stdexcept>

namespace symcap {

/// Gamma-extended factorial, x! = Gamma(x+1).
inline double factorial_gamma(double x) {
    if (x < 0.0) throw std::invalid_argument("factorial_gamma: negative argument");
    return std::exp(std::lgamma(x + 1.0));
}

/// Binomial coefficient extended to non-integer arguments via the Gamma
/// function: Gamma(n+1) / (Gamma(k+1) * Gamma(n-k+1)). Requires n >= k >= 0.
inline double gamma_binomial(double n, double k) {
    if (k < 0.0 || n < 0.0) throw std::invalid_argument("gamma_binomial: negative argument");
    if (n < k) throw std::invalid_argument("gamma_binomial: requires n >= k");
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

/// Volume of the Euclidean unit ball in R^m.
inline double euclidean_ball_volume(int m) {
    if (m <= 0) throw std::invalid_argument("euclidean_ball_volume: dimension must be positive");
    return std::pow(3.14159265358979323846, 0.5 * m) / factorial_gamma(0.5 * m);
}

} // namespace symcap
