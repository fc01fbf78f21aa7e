#include "symcap/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace symcap {

namespace {

// relative slack used to detect ties / zero coordinates of gauges
constexpr double kStratumTol = 1e-12;

} // namespace

ConvexHamiltonian::ConvexHamiltonian(int dimension, double homogeneity_degree, bool is_even,
                                     Evaluator evaluate, Gradient gradient, std::string label)
    : dimension_(dimension),
      degree_(homogeneity_degree),
      even_(is_even),
      evaluate_(std::move(evaluate)),
      gradient_(std::move(gradient)),
      label_(std::move(label)) {
    if (dimension_ <= 0) throw std::invalid_argument("ConvexHamiltonian: dimension must be positive");
    if (degree_ <= 0.0) throw std::invalid_argument("ConvexHamiltonian: degree must be positive");
    if (!evaluate_) throw std::invalid_argument("ConvexHamiltonian: evaluator required");
}

std::optional<Vec> ConvexHamiltonian::gradient(const Vec& x) const {
    if (gradient_) return gradient_(x);
    const double h = 1e-6 * (1.0 + x.norm());
    Vec g(dimension_);
    Vec xp = x, xm = x;
    for (int i = 0; i < dimension_; ++i) {
        xp[i] = x[i] + h;
        xm[i] = x[i] - h;
        g[i] = (evaluate_(xp) - evaluate_(xm)) / (2.0 * h);
        xp[i] = x[i];
        xm[i] = x[i];
    }
    return g;
}

Vec ConvexHamiltonian::gradient_or_throw(const Vec& x) const {
    auto g = gradient(x);
    if (!g) throw std::runtime_error("gradient query on a nonsmooth stratum");
    return *g;
}

// ---- NormDescriptor --------------------------------------------------------

NormDescriptor NormDescriptor::l1(int dim) { return NormDescriptor(NormKind::L1, dim, "l1"); }
NormDescriptor NormDescriptor::l2(int dim) { return NormDescriptor(NormKind::L2, dim, "l2"); }
NormDescriptor NormDescriptor::linf(int dim) { return NormDescriptor(NormKind::LInf, dim, "linf"); }

NormDescriptor NormDescriptor::weighted_l2(const Vec& weights) {
    if (weights.size() == 0 || weights.minCoeff() <= 0.0)
        throw std::invalid_argument("weighted_l2: weights must be positive");
    NormDescriptor n(NormKind::WeightedL2, static_cast<int>(weights.size()), "weighted-l2");
    n.weights_ = weights;
    return n;
}

NormDescriptor NormDescriptor::custom(int dim, std::function<double(const Vec&)> f, std::string name) {
    if (dim <= 0) throw std::invalid_argument("custom norm: dimension must be positive");
    NormDescriptor n(NormKind::Custom, dim, std::move(name));
    n.custom_ = std::move(f);
    return n;
}

double NormDescriptor::operator()(const Vec& x) const {
    switch (kind_) {
        case NormKind::L1: return x.lpNorm<1>();
        case NormKind::L2: return x.norm();
        case NormKind::LInf: return x.lpNorm<Eigen::Infinity>();
        case NormKind::WeightedL2: return (weights_.array() * x.array()).matrix().norm();
        case NormKind::Custom: return custom_(x);
    }
    return 0.0;
}

std::optional<Vec> NormDescriptor::gradient(const Vec& x) const {
    const double nx = (*this)(x);
    switch (kind_) {
        case NormKind::L1: {
            // nonsmooth where any coordinate vanishes
            const double scale = x.lpNorm<Eigen::Infinity>();
            if (scale == 0.0) return std::nullopt;
            Vec g(dim_);
            for (int i = 0; i < dim_; ++i) {
                if (std::abs(x[i]) <= kStratumTol * scale) return std::nullopt;
                g[i] = x[i] > 0 ? 1.0 : -1.0;
            }
            return g;
        }
        case NormKind::L2: {
            if (nx == 0.0) return std::nullopt;
            return Vec(x / nx);
        }
        case NormKind::LInf: {
            // nonsmooth where the argmax ties (the origin ties everything)
            if (nx == 0.0) return std::nullopt;
            int arg = -1;
            int hits = 0;
            for (int i = 0; i < dim_; ++i) {
                if (std::abs(x[i]) >= nx * (1.0 - kStratumTol)) {
                    ++hits;
                    arg = i;
                }
            }
            if (hits != 1) return std::nullopt;
            Vec g = Vec::Zero(dim_);
            g[arg] = x[arg] > 0 ? 1.0 : -1.0;
            return g;
        }
        case NormKind::WeightedL2: {
            if (nx == 0.0) return std::nullopt;
            return Vec((weights_.array().square() * x.array()).matrix() / nx);
        }
        case NormKind::Custom:
            return std::nullopt; // callers fall back to finite differences on the square
    }
    return std::nullopt;
}

NormDescriptor NormDescriptor::dual() const {
    switch (kind_) {
        case NormKind::L1: return linf(dim_);
        case NormKind::LInf: return l1(dim_);
        case NormKind::L2: return l2(dim_);
        case NormKind::WeightedL2: return weighted_l2(weights_.cwiseInverse());
        case NormKind::Custom:
            throw std::invalid_argument("dual(): not available for custom norms");
    }
    throw std::invalid_argument("dual(): unknown kind");
}

ConvexHamiltonian NormDescriptor::squared(double scale) const {
    if (scale <= 0.0) throw std::invalid_argument("squared: scale must be positive");
    NormDescriptor self = *this;
    auto eval = [self, scale](const Vec& x) {
        const double n = self(x);
        return scale * n * n;
    };
    ConvexHamiltonian::Gradient grad;
    if (kind_ != NormKind::Custom) {
        grad = [self, scale](const Vec& x) -> std::optional<Vec> {
            if (x.lpNorm<Eigen::Infinity>() == 0.0) {
                // the square of a gauge has derivative 0 at the origin only for
                // the smooth kinds; gauge ridges through the origin are flagged
                if (self.kind() == NormKind::L2 || self.kind() == NormKind::WeightedL2)
                    return Vec(Vec::Zero(self.dimension()));
                return std::nullopt;
            }
            auto g = self.gradient(x);
            if (!g) return std::nullopt;
            return Vec(2.0 * scale * self(x) * (*g));
        };
    }
    return ConvexHamiltonian(dim_, 2.0, true, eval, grad, name_ + "^2");
}

// ---- L2SumSpec -------------------------------------------------------------

L2SumSpec::L2SumSpec(NormDescriptor norm_q, NormDescriptor dual_p)
    : norm(std::move(norm_q)), dual_norm(std::move(dual_p)), n(norm.dimension()) {
    if (norm.dimension() != dual_norm.dimension())
        throw std::invalid_argument("L2SumSpec: factor dimensions differ");
}

ConvexHamiltonian L2SumSpec::hamiltonian() const {
    return make_split_hamiltonian(dual_norm.squared(), norm.squared(),
                                  dual_norm.name() + "^2+" + norm.name() + "^2");
}

// ---- factories -------------------------------------------------------------

ConvexHamiltonian make_quadratic_hamiltonian(const Mat& A, std::string label) {
    if (A.rows() != A.cols()) throw std::invalid_argument("quadratic Hamiltonian: square matrix required");
    if (!A.isApprox(A.transpose(), 0.0))
        throw std::invalid_argument("quadratic Hamiltonian: matrix must be exactly symmetric");
    const int d = static_cast<int>(A.rows());
    auto eval = [A](const Vec& x) { return x.dot(A * x); };
    auto grad = [A](const Vec& x) -> std::optional<Vec> { return Vec(2.0 * (A * x)); };
    return ConvexHamiltonian(d, 2.0, true, eval, grad, std::move(label));
}

ConvexHamiltonian make_split_hamiltonian(const ConvexHamiltonian& T, const ConvexHamiltonian& V,
                                         std::string label) {
    const int np = T.dimension(), nq = V.dimension();
    if (T.homogeneity_degree() != V.homogeneity_degree())
        throw std::invalid_argument("split Hamiltonian: mixed homogeneity degrees");
    auto eval = [T, V, np, nq](const Vec& x) {
        return T(x.head(np)) + V(x.tail(nq));
    };
    auto grad = [T, V, np, nq](const Vec& x) -> std::optional<Vec> {
        auto gt = T.gradient(x.head(np));
        if (!gt) return std::nullopt;
        auto gv = V.gradient(x.tail(nq));
        if (!gv) return std::nullopt;
        Vec g(np + nq);
        g.head(np) = *gt;
        g.tail(nq) = *gv;
        return g;
    };
    return ConvexHamiltonian(np + nq, T.homogeneity_degree(), T.is_even() && V.is_even(),
                             eval, grad, std::move(label));
}

ConvexHamiltonian make_pair_sum_hamiltonian(const std::vector<ConvexHamiltonian>& subsystems,
                                            std::string label) {
    if (subsystems.empty()) throw std::invalid_argument("pair sum: no subsystems");
    const int n = static_cast<int>(subsystems.size());
    for (const auto& h : subsystems)
        if (h.dimension() != 2) throw std::invalid_argument("pair sum: subsystems must live on R^2");
    bool even = true;
    for (const auto& h : subsystems) even = even && h.is_even();
    auto eval = [subsystems, n](const Vec& x) {
        double s = 0.0;
        Vec xi(2);
        for (int i = 0; i < n; ++i) {
            xi << x[i], x[n + i];
            s += subsystems[i](xi);
        }
        return s;
    };
    auto grad = [subsystems, n](const Vec& x) -> std::optional<Vec> {
        Vec g(2 * n);
        Vec xi(2);
        for (int i = 0; i < n; ++i) {
            xi << x[i], x[n + i];
            auto gi = subsystems[i].gradient(xi);
            if (!gi) return std::nullopt;
            g[i] = (*gi)[0];
            g[n + i] = (*gi)[1];
        }
        return g;
    };
    return ConvexHamiltonian(2 * n, subsystems.front().homogeneity_degree(), even, eval, grad,
                             std::move(label));
}

ConvexHamiltonian make_quadratic_mixture(const std::vector<Mat>& forms, const Vec& weights,
                                         int power, std::string label) {
    if (forms.empty() || static_cast<int>(forms.size()) != weights.size())
        throw std::invalid_argument("quadratic mixture: forms/weights mismatch");
    if (power < 1) throw std::invalid_argument("quadratic mixture: power must be >= 1");
    if (weights.minCoeff() <= 0.0)
        throw std::invalid_argument("quadratic mixture: weights must be positive");
    const int d = static_cast<int>(forms.front().rows());
    for (const auto& B : forms)
        if (B.rows() != d || B.cols() != d)
            throw std::invalid_argument("quadratic mixture: inconsistent dimensions");
    const int m = static_cast<int>(forms.size());
    auto eval = [forms, weights, power, m](const Vec& x) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += weights[i] * std::pow(x.dot(forms[i] * x), power);
        return std::pow(s, 1.0 / power);
    };
    auto grad = [forms, weights, power, m, d](const Vec& x) -> std::optional<Vec> {
        if (x.lpNorm<Eigen::Infinity>() == 0.0) return Vec(Vec::Zero(d));
        double s = 0.0;
        std::vector<double> gi(m);
        for (int i = 0; i < m; ++i) {
            gi[i] = x.dot(forms[i] * x);
            s += weights[i] * std::pow(gi[i], power);
        }
        Vec g = Vec::Zero(d);
        const double outer = std::pow(s, 1.0 / power - 1.0);
        for (int i = 0; i < m; ++i)
            g += outer * weights[i] * std::pow(gi[i], power - 1) * 2.0 * (forms[i] * x);
        return g;
    };
    return ConvexHamiltonian(d, 2.0, true, eval, grad, std::move(label));
}

} // namespace symcap
