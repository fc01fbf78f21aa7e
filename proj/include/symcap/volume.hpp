#pragma once

#include "symcap/hamiltonian.hpp"

#include <cstdint>

namespace symcap {

enum class VolumeMethod { Exact, MonteCarlo };

struct VolumeEstimate {
    double value = 0.0;
    double std_error = 0.0; // zero for exact results
    VolumeMethod method = VolumeMethod::Exact;
};

/// Volume of the unit ball of a norm on R^m. Closed forms for the known
/// kinds; custom norms fall back to hit-or-miss Monte Carlo.
VolumeEstimate norm_ball_volume(const NormDescriptor& norm, int m,
                                std::uint64_t mc_samples = 2'000'000, std::uint64_t seed = 0);

/// vol(K° ⊕₂ K) = vol(K°) vol(K) / binom(n, n/2), with the Gamma-extended
/// binomial coefficient.
double l2_sum_volume(const L2SumSpec& spec);

/// Hit-or-miss estimate of vol{h <= level}. The bounding box is derived from
/// homogeneity by sampling directional values; deterministic for a fixed seed
/// and independent of how the sample range is split across threads.
VolumeEstimate monte_carlo_volume(const ConvexHamiltonian& h, double level,
                                  std::uint64_t samples, std::uint64_t seed, int threads = 1);

} // namespace symcap
