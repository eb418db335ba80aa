#include "stab/quadrature.hpp"
#include "stab/errors.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace stab {

double integrate_smooth(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    if (!(a < b)) {
        if (a == b) return 0.0;
        throw BadInput("integrate_smooth: empty interval");
    }
    constexpr int kMaxLevel = 18;
    std::vector<double> row(kMaxLevel + 1, 0.0);
    double h = b - a;
    row[0] = 0.5 * h * (f(a) + f(b));
    double previous = row[0];
    for (int level = 1; level <= kMaxLevel; ++level) {
        long long nodes = 1LL << (level - 1);
        h *= 0.5;
        std::vector<double> values(static_cast<std::size_t>(nodes));
        for (long long i = 0; i < nodes; ++i)
            values[static_cast<std::size_t>(i)] = f(a + h * static_cast<double>(2 * i + 1));
        double sum = 0.0;
        for (double v : values) sum += v;
        double trapezoid = 0.5 * row[0] + h * sum;
        double factor = 4.0;
        double carry = trapezoid;
        for (int j = 0; j < level; ++j) {
            double next = carry + (carry - row[j]) / (factor - 1.0);
            row[j] = carry;
            carry = next;
            factor *= 4.0;
        }
        row[level] = carry;
        if (level >= 4 && std::abs(carry - previous) <= tol * (1.0 + std::abs(carry)))
            return carry;
        previous = carry;
    }
    throw QuadratureNotConverged("integrate_smooth: tolerance not reached");
}

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double b,
                     double fa, double fm, double fb, double whole, double tol,
                     int depth) {
    if (depth > 40) throw QuadratureNotConverged("integrate_adaptive: max depth reached");
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    double delta = left + right - whole;
    // stop when within tolerance, or once the correction is indistinguishable
    // from roundoff at the local scale, where refining cannot help
    if (std::abs(delta) <= 15.0 * tol ||
        std::abs(delta) <=
            4.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right)))
        return left + right + delta / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    if (!(a < b)) {
        if (a == b) return 0.0;
        throw BadInput("integrate_adaptive: empty interval");
    }
    double fa = f(a);
    double fb = f(b);
    double fm = f(0.5 * (a + b));
    double whole = simpson(fa, fm, fb, b - a);
    return adaptive_step(f, a, b, fa, fm, fb, whole, tol, 0);
}

} // namespace stab
