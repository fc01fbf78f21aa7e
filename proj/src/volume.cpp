#include "symcap/volume.hpp"

#include "symcap/errors.hpp"
#include "symcap/rng.hpp"
#include "symcap/special.hpp"
#include "symcap/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace symcap {

VolumeEstimate norm_ball_volume(const NormDescriptor& norm, int m,
                                std::uint64_t mc_samples, std::uint64_t seed) {
    if (m <= 0) throw std::invalid_argument("norm_ball_volume: dimension must be positive");
    if (m != norm.dimension())
        throw std::invalid_argument("norm_ball_volume: dimension does not match the descriptor");
    switch (norm.kind()) {
        case NormKind::L1:
            return {std::pow(2.0, m) / factorial_gamma(m), 0.0, VolumeMethod::Exact};
        case NormKind::LInf:
            return {std::pow(2.0, m), 0.0, VolumeMethod::Exact};
        case NormKind::L2:
            return {euclidean_ball_volume(m), 0.0, VolumeMethod::Exact};
        case NormKind::WeightedL2: {
            // ellipsoid with semi-axes 1/w_i
            double v = euclidean_ball_volume(m);
            for (int i = 0; i < m; ++i) v /= norm.weights()[i];
            return {v, 0.0, VolumeMethod::Exact};
        }
        case NormKind::Custom: {
            return monte_carlo_volume(norm.squared(), 1.0, mc_samples, seed);
        }
    }
    throw std::invalid_argument("norm_ball_volume: unknown kind");
}

double l2_sum_volume(const L2SumSpec& spec) {
    const double vq = norm_ball_volume(spec.norm, spec.n).value;
    const double vp = norm_ball_volume(spec.dual_norm, spec.n).value;
    return vp * vq / gamma_binomial(spec.n, 0.5 * spec.n);
}

namespace {

// Bounding half-width for {h <= level} from the homogeneity relation
// t_max(u) = (level / h(u))^(1/deg), maximized over sampled directions.
// A multiplicative guard keeps the box conservative (clipping would bias the
// hit-or-miss estimate), at the cost of some efficiency.
double bounding_half_width(const ConvexHamiltonian& h, double level) {
    const int d = h.dimension();
    const auto dirs = unit_directions(d, 4096, /*seed=*/17);
    double min_dir_value = std::numeric_limits<double>::infinity();
    for (const auto& u : dirs) {
        const double v = h(u);
        if (v <= 0.0)
            throw NumericError("monte_carlo_volume: nonpositive directional value; body unbounded?");
        min_dir_value = std::min(min_dir_value, v);
    }
    const double radius = std::pow(level / min_dir_value, 1.0 / h.homogeneity_degree());
    return 1.5 * radius;
}

} // namespace

VolumeEstimate monte_carlo_volume(const ConvexHamiltonian& h, double level,
                                  std::uint64_t samples, std::uint64_t seed, int threads) {
    if (samples == 0) throw std::invalid_argument("monte_carlo_volume: samples must be positive");
    if (level <= 0.0) throw std::invalid_argument("monte_carlo_volume: level must be positive");
    if (threads < 1) threads = 1;

    const int d = h.dimension();
    const double half = bounding_half_width(h, level);
    const double box_volume = std::pow(2.0 * half, d);
    const CounterRng rng(seed);

    auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t hits = 0;
        Vec x(d);
        for (std::uint64_t i = begin; i < end; ++i) {
            for (int c = 0; c < d; ++c)
                x[c] = rng.uniform(i, static_cast<std::uint32_t>(c), -half, half);
            if (h(x) <= level) ++hits;
        }
        return hits;
    };

    std::uint64_t hits = 0;
    if (threads == 1) {
        hits = count_range(0, samples);
    } else {
        std::vector<std::uint64_t> partial(threads, 0);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = samples / threads;
        for (int t = 0; t < threads; ++t) {
            const std::uint64_t b = t * chunk;
            const std::uint64_t e = (t == threads - 1) ? samples : b + chunk;
            pool.emplace_back([&, t, b, e] { partial[t] = count_range(b, e); });
        }
        for (auto& th : pool) th.join();
        for (auto p : partial) hits += p; // integer sum, split-independent
    }

    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    const double se = box_volume * std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(samples));
    return {box_volume * p, se, VolumeMethod::MonteCarlo};
}

} // namespace symcap
