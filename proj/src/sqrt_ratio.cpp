#include "stab/sqrt_ratio.hpp"
#include "stab/errors.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace stab {

RootRatio RootRatio::times_sqrt(const Rational& q, const Rational& s) {
    if (s.sign() < 0) throw BadInput("times_sqrt: negative radicand");
    RootRatio r;
    r.sign_ = s.is_zero() ? 0 : q.sign();
    r.mag_ = r.sign_ == 0 ? Rational(0) : q * q * s;
    r.root_ = 2;
    return r;
}

RootRatio RootRatio::over_sqrt(const Rational& q, const Rational& s) {
    if (s.sign() <= 0) throw BadInput("over_sqrt: radicand must be positive");
    RootRatio r;
    r.sign_ = q.sign();
    r.mag_ = q * q / s;
    r.root_ = 2;
    return r;
}

RootRatio RootRatio::pth_root(int sign, const Rational& mag, long long p) {
    if (p < 1) throw BadInput("pth_root: root must be >= 1");
    if (mag.sign() < 0) throw BadInput("pth_root: negative magnitude");
    RootRatio r;
    r.sign_ = mag.is_zero() ? 0 : (sign > 0 ? 1 : (sign < 0 ? -1 : 0));
    r.mag_ = r.sign_ == 0 ? Rational(0) : mag;
    r.root_ = p;
    return r;
}

RootRatio RootRatio::exact(const Rational& q) {
    RootRatio r;
    r.sign_ = q.sign();
    r.mag_ = q.abs();
    r.root_ = 1;
    return r;
}

double RootRatio::to_double() const {
    if (sign_ == 0) return 0.0;
    double m = root_ == 2 ? std::sqrt(mag_.to_double())
                          : std::pow(mag_.to_double(), 1.0 / static_cast<double>(root_));
    return sign_ > 0 ? m : -m;
}

std::string RootRatio::str() const {
    if (sign_ == 0) return "0";
    std::ostringstream os;
    if (sign_ < 0) os << "-";
    os << "(" << mag_.str() << ")^(1/" << root_ << ")";
    return os.str();
}

int compare(const RootRatio& a, const RootRatio& b) {
    if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
    if (a.sign() == 0) return 0;
    long long l = std::lcm(a.root(), b.root());
    Rational pa = a.mag().pow(l / a.root());
    Rational pb = b.mag().pow(l / b.root());
    int c = pa == pb ? 0 : (pa < pb ? -1 : 1);
    return a.sign() > 0 ? c : -c;
}

} // namespace stab
