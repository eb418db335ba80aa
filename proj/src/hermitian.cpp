#include "stab/hermitian.hpp"
#include "stab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace stab {

void HermitianMatrix::set(std::size_t i, std::size_t j, Complex v) {
    if (i == j) v = Complex(v.real(), 0.0);
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = std::conj(v);
}

double HermitianMatrix::trace() const {
    double t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i].real();
    return t;
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
    HermitianMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
    if (o.n_ != n_) throw BadInput("matrix size mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
    if (o.n_ != n_) throw BadInput("matrix size mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
    for (auto& x : a_) x *= s;
    return *this;
}

double HermitianMatrix::max_abs() const {
    double m = 0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
}

HermitianMatrix trace_free(const HermitianMatrix& m, double volume) {
    HermitianMatrix out = m;
    double shift = volume / static_cast<double>(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out.set(i, i, m.at(i, i).real() - shift);
    return out;
}

std::vector<double> eigenvalues(const HermitianMatrix& m) {
    std::size_t n = m.size();
    HermitianMatrix a = m;
    auto off_norm = [&]() {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a.at(i, j));
        return std::sqrt(2.0 * s);
    };
    double scale = std::max(1.0, a.max_abs());
    const double tol = 1e-13 * scale;
    for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                Complex apq = a.at(p, q);
                double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                Complex phase = apq / mag;
                double app = a.at(p, p).real(), aqq = a.at(q, q).real();
                double tau = (aqq - app) / (2.0 * mag);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                // unitary mixing of rows/columns p and q, phase absorbed
                a.set(p, p, app - t * mag);
                a.set(q, q, aqq + t * mag);
                a.set(p, q, 0.0);
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    Complex aip = a.at(i, p), aiq = a.at(i, q);
                    a.set(i, p, c * aip - s * std::conj(phase) * aiq);
                    a.set(i, q, c * aiq + s * phase * aip);
                }
            }
    }
    if (off_norm() > tol) throw Error("eigenvalue iteration did not converge");
    std::vector<double> ev;
    for (std::size_t i = 0; i < n; ++i) ev.push_back(a.at(i, i).real());
    std::sort(ev.begin(), ev.end());
    return ev;
}

double q_norm(const HermitianMatrix& m, double q) {
    if (q < 1.0) throw BadInput("q_norm: q must be >= 1");
    double s = 0;
    for (double ev : eigenvalues(m)) s += std::pow(std::abs(ev), q);
    return std::pow(s, 1.0 / q);
}

double trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.size() != b.size()) throw BadInput("matrix size mismatch");
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            s += (a.at(i, j) * b.at(j, i)).real();
    return s;
}

} // namespace stab
