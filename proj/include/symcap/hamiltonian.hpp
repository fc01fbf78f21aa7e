#pragma once

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace symcap {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Descriptor of a proper convex function H : R^d -> R+, positively
/// homogeneous of a fixed degree (degree 2 everywhere in this project).
/// Gradient queries return nullopt on strata where the function is not
/// differentiable (gauge ridges, the origin of a gauge); a central
/// finite-difference fallback is used where no analytic gradient was given.
class ConvexHamiltonian {
public:
    using Evaluator = std::function<double(const Vec&)>;
    using Gradient = std::function<std::optional<Vec>(const Vec&)>;

    ConvexHamiltonian(int dimension, double homogeneity_degree, bool is_even,
                      Evaluator evaluate, Gradient gradient = {}, std::string label = {});

    int dimension() const { return dimension_; }
    double homogeneity_degree() const { return degree_; }
    bool is_even() const { return even_; }
    const std::string& label() const { return label_; }

    double operator()(const Vec& x) const { return evaluate_(x); }

    /// Analytic gradient when available, otherwise central finite differences
    /// with step 1e-6 * (1 + |x|). nullopt flags a nonsmooth stratum.
    std::optional<Vec> gradient(const Vec& x) const;

    /// Gradient that treats a nonsmooth stratum as an error.
    Vec gradient_or_throw(const Vec& x) const;

    bool has_analytic_gradient() const { return static_cast<bool>(gradient_); }

private:
    int dimension_;
    double degree_;
    bool even_;
    Evaluator evaluate_;
    Gradient gradient_;
    std::string label_;
};

enum class NormKind { L1, L2, LInf, WeightedL2, Custom };

/// A norm on R^d by kind; custom norms carry an evaluator. Gradients of the
/// L1/LInf gauges are flagged (nullopt) on their nonsmooth strata instead of
/// choosing a subgradient.
class NormDescriptor {
public:
    static NormDescriptor l1(int dim);
    static NormDescriptor l2(int dim);
    static NormDescriptor linf(int dim);
    /// |x| = sqrt(sum (w_i x_i)^2), all w_i > 0.
    static NormDescriptor weighted_l2(const Vec& weights);
    static NormDescriptor custom(int dim, std::function<double(const Vec&)> f, std::string name);

    NormKind kind() const { return kind_; }
    int dimension() const { return dim_; }
    const std::string& name() const { return name_; }
    const Vec& weights() const { return weights_; }

    double operator()(const Vec& x) const;
    std::optional<Vec> gradient(const Vec& x) const;

    /// Dual norm (polar gauge). Available for the closed-form kinds only.
    NormDescriptor dual() const;

    /// The convex Hamiltonian scale * |x|^2.
    ConvexHamiltonian squared(double scale = 1.0) const;

private:
    NormDescriptor(NormKind kind, int dim, std::string name)
        : kind_(kind), dim_(dim), name_(std::move(name)) {}

    NormKind kind_;
    int dim_;
    std::string name_;
    Vec weights_;
    std::function<double(const Vec&)> custom_;
};

/// The body {|p|_*^2 + |q|^2 <= 1} built from a norm (acting on q) and its
/// dual (acting on p), each factor living in R^n.
struct L2SumSpec {
    NormDescriptor norm;      // for q
    NormDescriptor dual_norm; // for p
    int n;

    L2SumSpec(NormDescriptor norm_q, NormDescriptor dual_p);

    /// H(p, q) = |p|_*^2 + |q|^2 on R^{2n}, coordinates ordered (p, q).
    ConvexHamiltonian hamiltonian() const;
};

// ---- factories ------------------------------------------------------------

/// H(x) = x . A x for symmetric positive semidefinite A (checked for symmetry).
ConvexHamiltonian make_quadratic_hamiltonian(const Mat& A, std::string label = {});

/// H(p, q) = T(p) + V(q); coordinates ordered (p, q).
ConvexHamiltonian make_split_hamiltonian(const ConvexHamiltonian& T, const ConvexHamiltonian& V,
                                         std::string label = {});

/// H(p, q) = sum_i h_i(p_i, q_i) for one-degree-of-freedom summands h_i on R^2;
/// global coordinates ordered (p_1..p_n, q_1..q_n).
ConvexHamiltonian make_pair_sum_hamiltonian(const std::vector<ConvexHamiltonian>& subsystems,
                                            std::string label = {});

/// Even 2-homogeneous smooth mixture ((sum_i w_i (x.B_i x)^m)^(1/m), m >= 1.
ConvexHamiltonian make_quadratic_mixture(const std::vector<Mat>& forms, const Vec& weights,
                                         int power, std::string label = {});

} // namespace symcap
