#pragma once

#include "symcap/hamiltonian.hpp"
#include "symcap/volume.hpp"

#include <vector>

namespace symcap {

/// Positive definite quadratic Hamiltonian H(x) = x . A x on R^{2n},
/// coordinates ordered (p_1..p_n, q_1..q_n). Symmetry is required exactly;
/// positive definiteness is verified by a Cholesky attempt.
class QuadraticForm {
public:
    explicit QuadraticForm(Mat A);

    const Mat& matrix() const { return A_; }
    int dim() const { return static_cast<int>(A_.rows()); }
    int dof() const { return dim() / 2; } // n

    double operator()(const Vec& x) const { return x.dot(A_ * x); }
    Vec gradient(const Vec& x) const { return 2.0 * (A_ * x); }

    ConvexHamiltonian hamiltonian() const;

private:
    Mat A_;
};

/// The standard symplectic structure on R^{2n} in (p, q) coordinates:
/// J maps a gradient (dH/dp, dH/dq) to the Hamiltonian velocity (pdot, qdot).
struct SymplecticStructure {
    explicit SymplecticStructure(int n);
    int n;
    Mat J; // [[0, -I], [I, 0]]
};

/// The n positive imaginary parts of the spectrum of the flow matrix 2 J A,
/// sorted ascending, with multiplicity. Throws if the spectrum is not purely
/// imaginary within tolerance (A not positive definite, or numerics failed).
std::vector<double> symplectic_frequencies(const QuadraticForm& A);

/// Smallest action of a closed characteristic of {x . A x = level}:
/// level * 2 pi / max_j omega_j (action = level x period for 2-homogeneous H).
double ellipsoid_capacity(const QuadraticForm& A, double level);

/// Exact volume of {x . A x <= level} = level^n pi^n / (n! sqrt(det A)).
double ellipsoid_volume(const QuadraticForm& A, double level);

// ---- flow simulation helpers ----------------------------------------------

/// Classic fixed-step RK4 for xdot = f(x).
Vec rk4_integrate(const std::function<Vec(const Vec&)>& f, Vec x, double total_time, int steps);

struct ReturnTimeResult {
    double time = 0.0;          // first return time measured by section crossing
    double closure_error = 0.0; // |x(T) - x0| at the measured return
    Vec start;
};

/// Integrates xdot = 2 J A x from a point of the eigenplane of the given
/// frequency and measures the first-return time through a Poincare section at
/// the start point. Serves as an independent oracle for 2 pi / omega.
ReturnTimeResult linear_flow_return_time(const QuadraticForm& A, double level, double omega,
                                         int steps_per_period = 16384);

// ---- executable theorem pipelines -------------------------------------------

struct EvenHomOptions {
    std::uint64_t mc_samples = 500'000;
    std::uint64_t seed = 0;
    std::size_t containment_samples = 100'000;
    std::size_t plane_samples = 64;
    int flow_steps = 1 << 16;
    double containment_tol = 1e-9;
    double closure_tol = 1e-8;
};

/// Report for the pipeline around H = |p|^2/2 + V(q) at level 1 with V even,
/// proper, 2-homogeneous: the tightest quadratic bound V <= alpha |q|^2 yields
/// an inscribed ellipsoid X' sharing a closed characteristic with X.
struct EvenHomReport {
    double alpha = 0.0;
    Vec q0;
    double capacity = 0.0;            // of X' (equals the capacity of X)
    double volume_lower_bound = 0.0;  // vol X' = pi^n (2/alpha)^(n/2) / n!
    bool containment_ok = false;
    Vec containment_witness;
    bool gradient_agreement_ok = false;
    bool nonsmooth_maximizer = false; // gradient queries hit a nonsmooth stratum
    Vec nonsmooth_witness;
    bool shared_characteristic_ok = false;
    double closure_error = 0.0;
    VolumeEstimate volume_mc;
    double ratio = 0.0; // vol_mc * n! / capacity^n
    bool viterbo_ok = false;

    bool all_ok() const {
        return containment_ok && gradient_agreement_ok && shared_characteristic_ok && viterbo_ok;
    }
};

EvenHomReport verify_theorem_even_2hom(const ConvexHamiltonian& V, const EvenHomOptions& opt = {});

struct SandwichTheoremOptions {
    std::uint64_t mc_samples = 500'000;
    std::uint64_t seed = 0;
    std::size_t containment_samples = 100'000;
    std::size_t directions = 10000;
    int flow_steps = 1 << 16;
    double closure_tol = 1e-8;
};

/// Report for the pipeline around H = T(p) + V(q) under the hypothesis that a
/// positive definite quadratic Q separates T^L and C V. After the coordinate
/// change that turns Q into |q|^2/2 (and absorbs C into V), the unit ball is
/// inscribed and shares a circle characteristic; capacity pi at level 1/2.
struct SandwichTheoremReport {
    double C = 0.0;
    Vec q0;
    bool q_found = false;
    Mat Q;                       // certificate, Q(q) = q . M q
    bool containment_ok = false;
    bool shared_characteristic_ok = false;
    double closure_error = 0.0;
    double capacity = 0.0;       // pi after normalization
    VolumeEstimate volume_mc;    // of the normalized body at level 1/2
    double ratio = 0.0;
    bool viterbo_ok = false;
    bool holds = false;          // hypothesis certified and all checks passed
};

SandwichTheoremReport verify_theorem_sandwich(const ConvexHamiltonian& T,
                                              const ConvexHamiltonian& V,
                                              const SandwichTheoremOptions& opt = {});

} // namespace symcap
