#include "symcap/legendre.hpp"

#include "symcap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace symcap {

namespace {

void require_2hom(const ConvexHamiltonian& f, const char* who) {
    if (std::abs(f.homogeneity_degree() - 2.0) > 1e-12)
        throw std::invalid_argument(std::string(who) + ": requires a 2-homogeneous function");
}

} // namespace

double legendre_2hom(const ConvexHamiltonian& f, const Vec& p, const SphereOptimizerOptions& opt) {
    require_2hom(f, "legendre_2hom");
    if (p.size() != f.dimension())
        throw std::invalid_argument("legendre_2hom: dimension mismatch");
    if (p.lpNorm<Eigen::Infinity>() == 0.0) return 0.0;
    auto objective = [&f, &p](const Vec& u) {
        const double fu = f(u);
        if (fu <= 0.0)
            throw NumericError("legendre_2hom: nonpositive value of f on the sphere");
        const double s = p.dot(u);
        if (s <= 0.0) return 0.0; // the ray contributes nothing
        return s * s / (4.0 * fu);
    };
    const auto r = maximize_on_sphere(f.dimension(), objective, opt);
    if (!(r.value > 0.0))
        throw NumericError("legendre_2hom: optimizer found no positive ray value (p = " +
                           std::to_string(p.norm()) + ")");
    return r.value;
}

ConvexHamiltonian legendre_transform_2hom(const ConvexHamiltonian& f,
                                          const SphereOptimizerOptions& opt) {
    require_2hom(f, "legendre_transform_2hom");
    ConvexHamiltonian copy = f;
    auto eval = [copy, opt](const Vec& p) { return legendre_2hom(copy, p, opt); };
    return ConvexHamiltonian(f.dimension(), 2.0, f.is_even(), eval, {},
                             f.label().empty() ? "legendre" : f.label() + "^L");
}

QuadraticBound tightest_quadratic_bound(const ConvexHamiltonian& V,
                                        const SphereOptimizerOptions& opt) {
    require_2hom(V, "tightest_quadratic_bound");
    if (!V.is_even()) throw std::invalid_argument("tightest_quadratic_bound: V must be even");
    auto objective = [&V](const Vec& u) { return V(u); };
    const auto r = maximize_on_sphere(V.dimension(), objective, opt);
    if (!(r.value > 0.0)) throw NumericError("tightest_quadratic_bound: V not positive on the sphere");
    return {r.value, r.direction};
}

SandwichReport sandwich_check(const ConvexHamiltonian& T, const ConvexHamiltonian& V,
                              const Mat& Q, std::size_t directions,
                              const SphereOptimizerOptions& opt) {
    require_2hom(T, "sandwich_check");
    require_2hom(V, "sandwich_check");
    const int d = V.dimension();
    if (Q.rows() != d || Q.cols() != d)
        throw std::invalid_argument("sandwich_check: Q has the wrong dimension");

    const ConvexHamiltonian TL = legendre_transform_2hom(T, opt);

    // C = min over the sphere of T^L / V; equality T^L = C V at the minimizer.
    auto ratio = [&TL, &V](const Vec& u) {
        const double tv = V(u);
        if (tv <= 0.0) throw NumericError("sandwich_check: V vanishes on the sphere");
        return TL(u) / tv;
    };
    // Direction scans re-evaluate T^L, which is itself an optimization; keep
    // the outer scan moderate.
    SphereOptimizerOptions outer = opt;
    outer.grid = std::min<std::size_t>(opt.grid, 512);
    outer.starts = std::min(opt.starts, 4);
    const auto cmin = minimize_on_sphere(d, ratio, outer);

    SandwichReport rep;
    rep.C = cmin.value;
    rep.q0 = cmin.direction;
    rep.holds = true;
    rep.margin = std::numeric_limits<double>::infinity();

    const auto dirs = unit_directions(d, directions);
    const double tol = 1e-9;
    for (const auto& u : dirs) {
        const double q = u.dot(Q * u);
        const double upper = TL(u) - q;        // want >= 0
        const double lower = q - rep.C * V(u); // want >= 0
        const double m = std::min(upper, lower);
        if (m < rep.margin) rep.margin = m;
        if (m < -tol && rep.holds) {
            rep.holds = false;
            rep.witness = u;
        }
    }
    return rep;
}

} // namespace symcap
