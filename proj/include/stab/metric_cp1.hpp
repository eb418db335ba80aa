#pragma once

#include <vector>

namespace stab {

// Per-level Bergman data for a metric: k and the squared L2 norms of the
// monomial sections w^0 .. w^k of the k-th tensor power.
struct BergmanLevel {
    long long k = 0;
    std::vector<double> norms;
};

// Rotation-invariant Kaehler metric on the Riemann sphere, described in
// action-angle coordinates by its symplectic potential on the moment
// interval [0,1]:
//
//   u(x) = (1/2) [x ln x + (1-x) ln(1-x)] + s(x),   s(x) = epsilon x^2 (1-x)^2.
//
// epsilon = 0 is the round metric.  The constructor rejects perturbations for
// which u stops being strictly convex, since those no longer define a metric;
// positivity of u'' is certified on a fine grid together with a Lipschitz
// bound on its derivative.
//
// All densities and norms live on the moment interval with the unit-mass
// pushforward measure dx, so for the round metric the density of states is
// exactly k + 1 and every section norm is a Beta integral.
class ProjectiveLineMetric {
  public:
    explicit ProjectiveLineMetric(double epsilon);

    double epsilon() const { return epsilon_; }

    // g = 1/u''; extends smoothly to the closed interval with g(0) = g(1) = 0
    double metric_coefficient(double x) const;
    // scalar curvature S = -(1/4) g''; identically 1 for the round metric
    double scalar_curvature(double x) const;
    // integral of S over [0,1]; equals 1 for every admissible perturbation
    double average_curvature() const;
    // integral of S(x) x over [0,1]; equals 1/2 for every admissible perturbation
    double curvature_first_moment() const;
    // Lq norm of S - 1 with respect to dx
    double curvature_deviation_norm(double q) const;
    // integral of (S(x) - 1)(x - 1/2) dx
    double curvature_pairing() const;

    // pointwise squared norm of w^j against the k-th power weight
    double point_norm(long long k, long long j, double x) const;
    // squared L2 norms of w^0 .. w^k (each a smooth integral over [0,1])
    BergmanLevel bergman_level(long long k) const;
    // density of states rho_k(x); equals k + 1 identically for the round metric
    double density_of_states(const BergmanLevel& level, double x) const;
    // sup over a uniform grid of |rho_k(x) - k - S(x)|
    double density_deviation_sup(const BergmanLevel& level, int grid_points = 512) const;

    // diagonal entries of the moment matrix of the level-k embedding; their
    // sum is exactly k and for the round metric every entry is k/(k+1)
    std::vector<double> moment_diagonal(const BergmanLevel& level) const;
    // Euclidean norm of the trace-free part of the moment diagonal
    double balanced_defect(const BergmanLevel& level) const;

  private:
    double epsilon_;

    void eval_sections(long long k, double x, const std::vector<double>& norms,
                       std::vector<double>& t, std::vector<double>& dt) const;
};

} // namespace stab
