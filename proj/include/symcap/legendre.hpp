#pragma once

#include "symcap/hamiltonian.hpp"
#include "symcap/sphere.hpp"

namespace symcap {

/// Legendre transform of a 2-homogeneous convex f at a point p. The supremum
/// over rays q = t u reduces in closed form to
///     f^L(p) = max_{|u| = 1} max(<p, u>, 0)^2 / (4 f(u)),
/// which is maximized over unit directions.
double legendre_2hom(const ConvexHamiltonian& f, const Vec& p,
                     const SphereOptimizerOptions& opt = {});

/// The transform packaged as a Hamiltonian descriptor (2-homogeneous, even
/// when f is even); evaluation runs the direction optimization.
ConvexHamiltonian legendre_transform_2hom(const ConvexHamiltonian& f,
                                          const SphereOptimizerOptions& opt = {});

struct QuadraticBound {
    double alpha = 0.0; // max of V on the unit sphere, so V(q) <= alpha |q|^2
    Vec q0;             // unit maximizer
};

/// Tightest quadratic upper bound alpha |q|^2 >= V(q) for even 2-homogeneous V.
QuadraticBound tightest_quadratic_bound(const ConvexHamiltonian& V,
                                        const SphereOptimizerOptions& opt = {});

struct SandwichReport {
    double C = 0.0;       // largest constant with C V <= T^L, i.e. min of T^L / V
    Vec q0;               // direction attaining the ratio minimum
    bool holds = false;   // T^L >= Q >= C V on all sampled directions
    Vec witness;          // a violating direction when holds is false
    double margin = 0.0;  // worst signed margin over the sampled directions
};

/// Verifies the two-sided bound T^L >= Q >= C V by dense direction sampling,
/// where Q(q) = q . M q and C is computed from the ratio minimum. Equality of
/// T^L and C V at q0 holds by construction of C.
SandwichReport sandwich_check(const ConvexHamiltonian& T, const ConvexHamiltonian& V,
                              const Mat& Q, std::size_t directions = 10000,
                              const SphereOptimizerOptions& opt = {});

} // namespace symcap
