#pragma once

#include "symcap/hamiltonian.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace symcap {

/// Deterministic set of roughly uniform unit directions.
/// dim 2 uses an exact angular grid, dim 3 a Fibonacci sphere lattice, higher
/// dimensions normalized counter-RNG Gaussians. The +-coordinate axes are
/// always included.
std::vector<Vec> unit_directions(int dim, std::size_t count, std::uint64_t seed = 0);

struct SphereOptimum {
    Vec direction;
    double value = 0.0;
    std::size_t evaluations = 0;
};

struct SphereOptimizerOptions {
    std::size_t grid = 4096; // coarse scan size
    int starts = 8;          // refined local searches from the best grid points
    int iterations = 120;    // pattern-search iterations per start
    std::uint64_t seed = 0;
};

/// Multi-start maximization of f over the unit sphere: coarse grid scan
/// followed by projected pattern search around the best candidates.
SphereOptimum maximize_on_sphere(int dim, const std::function<double(const Vec&)>& f,
                                 const SphereOptimizerOptions& opt = {});

/// Minimization convenience wrapper.
SphereOptimum minimize_on_sphere(int dim, const std::function<double(const Vec&)>& f,
                                 const SphereOptimizerOptions& opt = {});

/// Projected-gradient polish of a local sphere maximum. Returns the improved
/// direction; leaves `u` untouched if the gradient is unavailable there.
Vec polish_max_on_sphere(const std::function<double(const Vec&)>& f,
                         const std::function<std::optional<Vec>(const Vec&)>& grad, Vec u,
                         int iterations = 200);

} // namespace symcap
