#include "symcap/sphere.hpp"

#include "symcap/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace symcap {

std::vector<Vec> unit_directions(int dim, std::size_t count, std::uint64_t seed) {
    if (dim <= 0) throw std::invalid_argument("unit_directions: dimension must be positive");
    std::vector<Vec> dirs;
    dirs.reserve(count + 2 * dim);
    for (int i = 0; i < dim; ++i) {
        Vec e = Vec::Zero(dim);
        e[i] = 1.0;
        dirs.push_back(e);
        dirs.push_back(-e);
    }
    if (dim == 1) return dirs;
    if (dim == 2) {
        for (std::size_t j = 0; j < count; ++j) {
            const double phi = 6.283185307179586477 * (static_cast<double>(j) + 0.5) / count;
            Vec u(2);
            u << std::cos(phi), std::sin(phi);
            dirs.push_back(u);
        }
        return dirs;
    }
    if (dim == 3) {
        // Fibonacci sphere lattice
        const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        for (std::size_t j = 0; j < count; ++j) {
            const double z = 1.0 - (2.0 * j + 1.0) / count;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double phi = 6.283185307179586477 * (j / golden - std::floor(j / golden));
            Vec u(3);
            u << r * std::cos(phi), r * std::sin(phi), z;
            dirs.push_back(u);
        }
        return dirs;
    }
    CounterRng rng(seed ^ 0x5fe5u);
    for (std::size_t j = 0; j < count; ++j) {
        Vec u(dim);
        for (int c = 0; c < dim; ++c) u[c] = rng.normal(j, static_cast<std::uint32_t>(c));
        const double n = u.norm();
        if (n < 1e-12) continue;
        dirs.push_back(u / n);
    }
    return dirs;
}

namespace {

SphereOptimum refine(const Vec& start, double start_value,
                     const std::function<double(const Vec&)>& f, int iterations) {
    SphereOptimum best{start, start_value, 0};
    const int dim = static_cast<int>(start.size());
    double step = 0.3;
    Vec cand(dim);
    for (int it = 0; it < iterations && step > 1e-10; ++it) {
        bool improved = false;
        for (int i = 0; i < dim; ++i) {
            for (int sgn : {+1, -1}) {
                cand = best.direction;
                cand[i] += sgn * step;
                const double n = cand.norm();
                if (n < 1e-12) continue;
                cand /= n;
                const double v = f(cand);
                ++best.evaluations;
                if (v > best.value) {
                    best.value = v;
                    best.direction = cand;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

} // namespace

SphereOptimum maximize_on_sphere(int dim, const std::function<double(const Vec&)>& f,
                                 const SphereOptimizerOptions& opt) {
    const auto dirs = unit_directions(dim, opt.grid, opt.seed);
    // rank the grid, keep the best few as starts
    std::vector<std::pair<double, std::size_t>> ranked;
    ranked.reserve(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) ranked.emplace_back(f(dirs[i]), i);
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    SphereOptimum best{dirs[ranked.front().second], ranked.front().first, dirs.size()};
    const int starts = std::min<int>(opt.starts, static_cast<int>(ranked.size()));
    for (int s = 0; s < starts; ++s) {
        auto r = refine(dirs[ranked[s].second], ranked[s].first, f, opt.iterations);
        best.evaluations += r.evaluations;
        if (r.value > best.value) {
            best.value = r.value;
            best.direction = r.direction;
        }
    }
    return best;
}

SphereOptimum minimize_on_sphere(int dim, const std::function<double(const Vec&)>& f,
                                 const SphereOptimizerOptions& opt) {
    auto neg = [&f](const Vec& u) { return -f(u); };
    SphereOptimum r = maximize_on_sphere(dim, neg, opt);
    r.value = -r.value;
    return r;
}

Vec polish_max_on_sphere(const std::function<double(const Vec&)>& f,
                         const std::function<std::optional<Vec>(const Vec&)>& grad, Vec u,
                         int iterations) {
    double value = f(u);
    double step = 0.1;
    for (int it = 0; it < iterations; ++it) {
        auto g = grad(u);
        if (!g) return u;
        const Vec tangent = *g - u.dot(*g) * u;
        const double r = tangent.norm();
        if (r < 1e-15 * (1.0 + g->norm())) break;
        bool moved = false;
        while (step > 1e-14) {
            Vec cand = u + step * tangent;
            cand /= cand.norm();
            const double v = f(cand);
            if (v > value) {
                u = cand;
                value = v;
                moved = true;
                step *= 1.5;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
    return u;
}

} // namespace symcap
