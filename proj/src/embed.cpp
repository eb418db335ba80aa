#include "stab/embed.hpp"
#include "stab/errors.hpp"
#include "stab/quadrature.hpp"
#include "stab/threading.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <utility>

namespace stab {

namespace {

constexpr double kPi = 3.14159265358979323846;

long long component_degree(const std::vector<Complex>& c) {
    for (std::size_t m = c.size(); m-- > 0;)
        if (c[m] != Complex(0, 0)) return static_cast<long long>(m);
    return -1;
}

long long degree_unchecked(const EmbeddedCurve& curve) {
    long long deg = -1;
    for (const auto& c : curve.components) deg = std::max(deg, component_degree(c));
    return deg;
}

void validate(const EmbeddedCurve& curve) {
    if (curve.components.empty()) throw BadInput("curve has no components");
    bool nonzero_at_origin = false;
    for (const auto& c : curve.components)
        if (!c.empty() && c[0] != Complex(0, 0)) nonzero_at_origin = true;
    long long deg = degree_unchecked(curve);
    if (deg < 0) throw BadInput("curve has only zero components");
    if (!nonzero_at_origin)
        throw BadInput("components share a root at w = 0; divide out the common power");
    if (deg == 0) throw BadInput("curve is constant");
}

Complex eval_poly(const std::vector<Complex>& c, Complex w) {
    Complex v(0, 0);
    for (std::size_t m = c.size(); m-- > 0;) v = v * w + c[m];
    return v;
}

Complex eval_poly_derivative(const std::vector<Complex>& c, Complex w) {
    Complex v(0, 0);
    for (std::size_t m = c.size(); m-- > 1;) v = v * w + static_cast<double>(m) * c[m];
    return v;
}

// chart at infinity: reverse every component against the total degree
EmbeddedCurve reversed_curve(const EmbeddedCurve& curve, long long deg) {
    EmbeddedCurve out;
    for (const auto& c : curve.components) {
        std::vector<Complex> r(static_cast<std::size_t>(deg) + 1, Complex(0, 0));
        for (std::size_t m = 0; m < c.size(); ++m)
            r[static_cast<std::size_t>(deg) - m] = c[m];
        out.components.push_back(std::move(r));
    }
    return out;
}

// sigma_a conj(sigma_b) / |sigma|^2 times the pullback density at w
Complex moment_integrand(const EmbeddedCurve& c, std::size_t a, std::size_t b, Complex w) {
    double n2 = 0.0, d2 = 0.0;
    Complex ip(0, 0), sa(0, 0), sb(0, 0);
    for (std::size_t i = 0; i < c.components.size(); ++i) {
        Complex s = eval_poly(c.components[i], w);
        Complex ds = eval_poly_derivative(c.components[i], w);
        if (i == a) sa = s;
        if (i == b) sb = s;
        n2 += std::norm(s);
        d2 += std::norm(ds);
        ip += ds * std::conj(s);
    }
    double rho = (n2 * d2 - std::norm(ip)) / (kPi * n2 * n2);
    return sa * std::conj(sb) / n2 * rho;
}

// polar integration over the closed unit disk: adaptive in the radius,
// doubling trapezoid sums in the periodic angular direction
Complex disk_integral(const std::function<Complex(double, double)>& f) {
    const double radial_tol = 1e-10;
    Complex previous(0, 0);
    bool have_previous = false;
    for (int n = 16; n <= 8192; n *= 2) {
        Complex sum(0, 0);
        for (int j = 0; j < n; ++j) {
            double theta = 2.0 * kPi * j / n;
            double re = integrate_adaptive(
                [&](double r) { return f(r, theta).real() * r; }, 0.0, 1.0, radial_tol);
            double im = integrate_adaptive(
                [&](double r) { return f(r, theta).imag() * r; }, 0.0, 1.0, radial_tol);
            sum += Complex(re, im);
        }
        Complex value = sum * (2.0 * kPi / static_cast<double>(n));
        if (have_previous && std::abs(value - previous) <= 1e-8 * (1.0 + std::abs(value)))
            return value;
        previous = value;
        have_previous = true;
    }
    throw QuadratureNotConverged("disk integral did not converge in the angular direction");
}

double poly_eval(const std::vector<double>& a, double x) {
    double v = 0.0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
    return v;
}

double poly_eval_d1(const std::vector<double>& a, double x) {
    double v = 0.0;
    for (std::size_t i = a.size(); i-- > 1;) v = v * x + static_cast<double>(i) * a[i];
    return v;
}

double poly_eval_d2(const std::vector<double>& a, double x) {
    double v = 0.0;
    for (std::size_t i = a.size(); i-- > 2;)
        v = v * x + static_cast<double>(i) * static_cast<double>(i - 1) * a[i];
    return v;
}

bool is_monomial_curve(const EmbeddedCurve& curve) {
    for (const auto& c : curve.components) {
        int nonzero = 0;
        for (const auto& v : c)
            if (v != Complex(0, 0)) ++nonzero;
        if (nonzero > 1) return false;
    }
    return true;
}

// For monomial components the angular integrals vanish unless the exponents
// match, so M is assembled from the radial profiles
//   J_e = int tau^e / H dx(tau),   H(tau) = sum |c_a|^2 tau^{e_a},
// where x = tau H'/H is the radial moment coordinate.  The range splits at
// tau = 1 and the outer half mirrors to [0,1] with reversed coefficients.
HermitianMatrix monomial_moment_matrix(const EmbeddedCurve& curve, long long deg) {
    std::size_t n = curve.components.size();
    std::vector<long long> expo(n, -1);
    std::vector<Complex> coef(n, Complex(0, 0));
    std::vector<double> hcoef(static_cast<std::size_t>(deg) + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        long long d = component_degree(curve.components[i]);
        if (d < 0) continue;
        expo[i] = d;
        coef[i] = curve.components[i][static_cast<std::size_t>(d)];
        hcoef[static_cast<std::size_t>(d)] += std::norm(coef[i]);
    }
    std::vector<double> hrev(hcoef.rbegin(), hcoef.rend());
    auto half = [](const std::vector<double>& h, long long e) {
        return integrate_adaptive(
            [&h, e](double tau) {
                double v0 = poly_eval(h, tau);
                double v1 = poly_eval_d1(h, tau);
                double v2 = poly_eval_d2(h, tau);
                double xp = (v1 * v0 + tau * v2 * v0 - tau * v1 * v1) / (v0 * v0);
                return std::pow(tau, static_cast<double>(e)) / v0 * xp;
            },
            0.0, 1.0, 1e-11);
    };
    std::map<long long, double> profile;
    for (std::size_t i = 0; i < n; ++i)
        if (expo[i] >= 0 && profile.find(expo[i]) == profile.end())
            profile[expo[i]] = half(hcoef, expo[i]) + half(hrev, deg - expo[i]);
    HermitianMatrix m(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            if (expo[a] >= 0 && expo[a] == expo[b])
                m.set(a, b, coef[a] * std::conj(coef[b]) * profile[expo[a]]);
    return m;
}

HermitianMatrix generic_moment_matrix(const EmbeddedCurve& curve, long long deg) {
    std::size_t n = curve.components.size();
    EmbeddedCurve mirrored = reversed_curve(curve, deg);
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            if (component_degree(curve.components[a]) >= 0 &&
                component_degree(curve.components[b]) >= 0)
                entries.emplace_back(a, b);
    HermitianMatrix m(n);
    std::string failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
#endif
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        auto [a, b] = entries[idx];
        try {
            Complex inner = disk_integral([&](double r, double theta) {
                return moment_integrand(curve, a, b, std::polar(r, theta));
            });
            Complex outer = disk_integral([&](double r, double theta) {
                return moment_integrand(mirrored, a, b, std::polar(r, theta));
            });
            m.set(a, b, inner + outer);
        } catch (const Error& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            failure = e.what();
        }
    }
    if (!failure.empty()) throw QuadratureNotConverged(failure);
    return m;
}

} // namespace

long long curve_degree(const EmbeddedCurve& curve) {
    validate(curve);
    return degree_unchecked(curve);
}

double fs_density(const EmbeddedCurve& curve, Complex w) {
    double n2 = 0.0, d2 = 0.0;
    Complex ip(0, 0);
    for (const auto& c : curve.components) {
        Complex s = eval_poly(c, w);
        Complex ds = eval_poly_derivative(c, w);
        n2 += std::norm(s);
        d2 += std::norm(ds);
        ip += ds * std::conj(s);
    }
    return (n2 * d2 - std::norm(ip)) / (kPi * n2 * n2);
}

double fs_mass(const EmbeddedCurve& curve) {
    validate(curve);
    EmbeddedCurve mirrored = reversed_curve(curve, degree_unchecked(curve));
    auto chart = [](const EmbeddedCurve& c) {
        return disk_integral([&c](double r, double theta) {
                   return Complex(fs_density(c, std::polar(r, theta)), 0.0);
               })
            .real();
    };
    return chart(curve) + chart(mirrored);
}

HermitianMatrix moment_matrix(const EmbeddedCurve& curve) {
    validate(curve);
    long long deg = degree_unchecked(curve);
    if (is_monomial_curve(curve)) return monomial_moment_matrix(curve, deg);
    return generic_moment_matrix(curve, deg);
}

double chow_weight(const HermitianMatrix& action, const EmbeddedCurve& curve) {
    if (action.size() != curve.components.size())
        throw BadInput("action size does not match the number of components");
    HermitianMatrix m = moment_matrix(curve);
    double deg = static_cast<double>(curve_degree(curve));
    return deg / static_cast<double>(action.size()) * action.trace() - trace_product(action, m);
}

double moment_pairing(const HermitianMatrix& action, const EmbeddedCurve& curve) {
    if (action.size() != curve.components.size())
        throw BadInput("action size does not match the number of components");
    HermitianMatrix m = moment_matrix(curve);
    double deg = static_cast<double>(curve_degree(curve));
    return trace_product(trace_free(action, action.trace()), trace_free(m, deg));
}

double chow_weight_of_cycle(const HermitianMatrix& action, const WeightedCycle& cycle) {
    if (cycle.parts.empty()) throw BadInput("cycle has no parts");
    double total_degree = 0.0, moment = 0.0;
    for (const auto& [part, multiplicity] : cycle.parts) {
        if (multiplicity < 1) throw BadInput("cycle multiplicities must be positive");
        if (action.size() != part.components.size())
            throw BadInput("action size does not match a cycle part");
        total_degree += static_cast<double>(multiplicity * curve_degree(part));
        moment +=
            static_cast<double>(multiplicity) * trace_product(action, moment_matrix(part));
    }
    return total_degree / static_cast<double>(action.size()) * action.trace() - moment;
}

EmbeddedCurve scaled_curve(const EmbeddedCurve& curve, const std::vector<double>& weights,
                           double t) {
    if (weights.size() != curve.components.size())
        throw BadInput("need exactly one flow weight per component");
    if (!(t > 0.0)) throw BadInput("flow parameter must be positive");
    double wmin = *std::min_element(weights.begin(), weights.end());
    EmbeddedCurve out = curve;
    for (std::size_t i = 0; i < out.components.size(); ++i) {
        double factor = std::pow(t, weights[i] - wmin);
        for (auto& v : out.components[i]) v *= factor;
    }
    return out;
}

DegenerationExample degeneration_example(const std::string& name) {
    const Complex one(1, 0), zero(0, 0);
    DegenerationExample ex;
    ex.curve.components = {{one}, {zero, one}, {zero, zero, one}}; // (1, w, w^2)
    ex.action = HermitianMatrix(3);
    if (name == "conic-a") {
        // scaling z0 to zero breaks the conic into the two coordinate lines
        ex.action.set(0, 0, 1.0);
        ex.flow_weights = {1.0, 0.0, 0.0};
        EmbeddedCurve vertical;                                   // z0 = 0
        vertical.components = {{}, {one}, {zero, one}};
        EmbeddedCurve horizontal;                                 // z2 = 0
        horizontal.components = {{one}, {zero, one}, {}};
        ex.limit.parts = {{vertical, 1}, {horizontal, 1}};
        ex.limit_chow_weight = 1.0 / 6.0;
    } else if (name == "conic-b") {
        // blowing z0 up flattens the conic onto the line z1 = 0, twice
        ex.action.set(0, 0, -1.0);
        ex.flow_weights = {-1.0, 0.0, 0.0};
        EmbeddedCurve doubled;                                    // z1 = 0
        doubled.components = {{one}, {}, {zero, one}};
        ex.limit.parts = {{doubled, 2}};
        ex.limit_chow_weight = 1.0 / 3.0;
    } else {
        throw BadInput("unknown degeneration example: " + name);
    }
    return ex;
}

} // namespace stab
