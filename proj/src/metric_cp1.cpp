#include "stab/metric_cp1.hpp"
#include "stab/errors.hpp"
#include "stab/quadrature.hpp"
#include "stab/threading.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace stab {

namespace {

double perturbation(double e, double x) { return e * x * x * (1.0 - x) * (1.0 - x); }
double perturbation_d1(double e, double x) { return e * (2.0 * x - 6.0 * x * x + 4.0 * x * x * x); }
double perturbation_d2(double e, double x) { return e * (2.0 - 12.0 * x + 12.0 * x * x); }
double perturbation_d3(double e, double x) { return e * (-12.0 + 24.0 * x); }
double perturbation_d4(double e, double) { return 24.0 * e; }

} // namespace

ProjectiveLineMetric::ProjectiveLineMetric(double epsilon) : epsilon_(epsilon) {
    // u'' = Q/P with P = 2x(1-x) > 0 inside the interval, so strict convexity
    // means Q = 1 + P s'' > 0 on [0,1].  Between grid points Q moves by at
    // most |Q'| h / 2 and |Q'| <= |P'| |s''| + |P| |s'''| <= 10 |epsilon|.
    const int n = 4096;
    const double margin = 10.0 * std::abs(epsilon) / (2.0 * n);
    for (int i = 0; i <= n; ++i) {
        double x = static_cast<double>(i) / n;
        double q = 1.0 + 2.0 * x * (1.0 - x) * perturbation_d2(epsilon, x);
        if (q - margin <= 0.0)
            throw NonConvexPotential("potential is not strictly convex near x = " +
                                     std::to_string(x));
    }
}

double ProjectiveLineMetric::metric_coefficient(double x) const {
    double p = 2.0 * x * (1.0 - x);
    return p / (1.0 + p * perturbation_d2(epsilon_, x));
}

double ProjectiveLineMetric::scalar_curvature(double x) const {
    double p = 2.0 * x * (1.0 - x);
    double p1 = 2.0 - 4.0 * x;
    double s2 = perturbation_d2(epsilon_, x);
    double s3 = perturbation_d3(epsilon_, x);
    double s4 = perturbation_d4(epsilon_, x);
    double q = 1.0 + p * s2;
    double q1 = p1 * s2 + p * s3;
    double q2 = -4.0 * s2 + 2.0 * p1 * s3 + p * s4;
    double g2 = (-4.0 * q * q - p * q2 * q - 2.0 * p1 * q1 * q + 2.0 * p * q1 * q1) / (q * q * q);
    return -0.25 * g2;
}

double ProjectiveLineMetric::average_curvature() const {
    return integrate_smooth([this](double x) { return scalar_curvature(x); }, 0.0, 1.0);
}

double ProjectiveLineMetric::curvature_first_moment() const {
    return integrate_smooth([this](double x) { return scalar_curvature(x) * x; }, 0.0, 1.0);
}

double ProjectiveLineMetric::curvature_deviation_norm(double q) const {
    if (q < 1.0) throw BadInput("curvature_deviation_norm: q must be >= 1");
    double integral = integrate_adaptive(
        [this, q](double x) { return std::pow(std::abs(scalar_curvature(x) - 1.0), q); }, 0.0,
        1.0, 1e-12);
    return std::pow(integral, 1.0 / q);
}

double ProjectiveLineMetric::curvature_pairing() const {
    return integrate_smooth([this](double x) { return (scalar_curvature(x) - 1.0) * (x - 0.5); },
                            0.0, 1.0);
}

double ProjectiveLineMetric::point_norm(long long k, long long j, double x) const {
    if (k < 1 || j < 0 || j > k) throw BadInput("point_norm: need k >= 1 and 0 <= j <= k");
    double expo = 2.0 * ((static_cast<double>(j) - static_cast<double>(k) * x) *
                             perturbation_d1(epsilon_, x) +
                         static_cast<double>(k) * perturbation(epsilon_, x));
    return std::pow(x, static_cast<double>(j)) * std::pow(1.0 - x, static_cast<double>(k - j)) *
           std::exp(expo);
}

BergmanLevel ProjectiveLineMetric::bergman_level(long long k) const {
    if (k < 1) throw BadInput("bergman_level: k must be >= 1");
    BergmanLevel level;
    level.k = k;
    level.norms.assign(static_cast<std::size_t>(k) + 1, 0.0);
    std::string failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
#endif
    for (long long j = 0; j <= k; ++j) {
        try {
            // normalize by the peak at x = j/k so the convergence test acts on
            // the relative error even when the norm itself is tiny
            double scale = point_norm(k, j, static_cast<double>(j) / static_cast<double>(k));
            level.norms[static_cast<std::size_t>(j)] =
                scale * integrate_smooth(
                            [&, j, scale](double x) { return point_norm(k, j, x) / scale; },
                            0.0, 1.0);
        } catch (const Error& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            failure = e.what();
        }
    }
    if (!failure.empty()) throw QuadratureNotConverged(failure);
    return level;
}

double ProjectiveLineMetric::density_of_states(const BergmanLevel& level, double x) const {
    double rho = 0.0;
    for (long long j = 0; j <= level.k; ++j)
        rho += point_norm(level.k, j, x) / level.norms[static_cast<std::size_t>(j)];
    return rho;
}

double ProjectiveLineMetric::density_deviation_sup(const BergmanLevel& level,
                                                   int grid_points) const {
    if (grid_points < 2) throw BadInput("density_deviation_sup: grid too coarse");
    double sup = 0.0;
    for (int i = 0; i <= grid_points; ++i) {
        double x = static_cast<double>(i) / grid_points;
        double dev = std::abs(density_of_states(level, x) - static_cast<double>(level.k) -
                              scalar_curvature(x));
        sup = std::max(sup, dev);
    }
    return sup;
}

void ProjectiveLineMetric::eval_sections(long long k, double x, const std::vector<double>& norms,
                                         std::vector<double>& t, std::vector<double>& dt) const {
    double s0 = perturbation(epsilon_, x);
    double s1 = perturbation_d1(epsilon_, x);
    double s2 = perturbation_d2(epsilon_, x);
    t.assign(norms.size(), 0.0);
    dt.assign(norms.size(), 0.0);
    for (long long j = 0; j <= k; ++j) {
        double jd = static_cast<double>(j);
        double kd = static_cast<double>(k);
        double expo = std::exp(2.0 * ((jd - kd * x) * s1 + kd * s0));
        double xa = std::pow(x, jd);
        double yb = std::pow(1.0 - x, kd - jd);
        double base = xa * yb;
        double dbase = 0.0;
        if (j > 0) dbase += jd * std::pow(x, jd - 1.0) * yb;
        if (j < k) dbase -= (kd - jd) * xa * std::pow(1.0 - x, kd - jd - 1.0);
        double scale = expo / norms[static_cast<std::size_t>(j)];
        t[static_cast<std::size_t>(j)] = base * scale;
        dt[static_cast<std::size_t>(j)] = (dbase + base * 2.0 * (jd - kd * x) * s2) * scale;
    }
}

std::vector<double> ProjectiveLineMetric::moment_diagonal(const BergmanLevel& level) const {
    long long k = level.k;
    std::vector<double> moments(static_cast<std::size_t>(k) + 1, 0.0);
    std::string failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
#endif
    for (long long j = 0; j <= k; ++j) {
        std::vector<double> t, dt;
        auto fraction = [&](double x) {
            eval_sections(k, x, level.norms, t, dt);
            double rho = std::accumulate(t.begin(), t.end(), 0.0);
            return t[static_cast<std::size_t>(j)] / rho;
        };
        // the level-k embedding spreads the Fubini-Study measure as
        // (k + (1/2) d/dx [rho' g / rho]) dx; integrating the second term by
        // parts against the fraction h_j kills the boundary values since g
        // vanishes at both ends
        auto correction = [&](double x) {
            eval_sections(k, x, level.norms, t, dt);
            double rho = std::accumulate(t.begin(), t.end(), 0.0);
            double drho = std::accumulate(dt.begin(), dt.end(), 0.0);
            double h = t[static_cast<std::size_t>(j)] / rho;
            double hp = dt[static_cast<std::size_t>(j)] / rho - h * drho / rho;
            double p = 2.0 * x * (1.0 - x);
            double q = 1.0 + p * perturbation_d2(epsilon_, x);
            return hp * drho * p / (rho * q);
        };
        try {
            double i1 = integrate_smooth(fraction, 0.0, 1.0);
            double i2 = integrate_smooth(correction, 0.0, 1.0);
            moments[static_cast<std::size_t>(j)] = static_cast<double>(k) * i1 - 0.5 * i2;
        } catch (const Error& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            failure = e.what();
        }
    }
    if (!failure.empty()) throw QuadratureNotConverged(failure);
    return moments;
}

double ProjectiveLineMetric::balanced_defect(const BergmanLevel& level) const {
    auto moments = moment_diagonal(level);
    double mean = std::accumulate(moments.begin(), moments.end(), 0.0) /
                  static_cast<double>(moments.size());
    double sum = 0.0;
    for (double m : moments) sum += (m - mean) * (m - mean);
    return std::sqrt(sum);
}

} // namespace stab
