#include "stab/rational.hpp"
#include "stab/errors.hpp"

#include <ostream>
#include <sstream>

namespace stab {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw BadInput("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw BadInput("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(long long e) const {
    if (e == 0) return Rational(1);
    if (num_ == 0) {
        if (e < 0) throw BadInput("zero to a negative power");
        return Rational(0);
    }
    bool invert = e < 0;
    unsigned long long k = invert ? static_cast<unsigned long long>(-e)
                                  : static_cast<unsigned long long>(e);
    Rational r;
    r.num_ = mp::pow(num_, static_cast<unsigned>(k));
    r.den_ = mp::pow(den_, static_cast<unsigned>(k));
    if (invert) std::swap(r.num_, r.den_);
    if (r.den_ < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num_ << '/' << den_;
    return os.str();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt n(s.substr(0, slash));
        BigInt d(s.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::exception&) {
        throw BadInput("cannot parse rational: '" + s + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    // gcd(a/b, c/d) = gcd(a, c)/lcm(b, d); keeps optimal integer rescalings exact
    BigInt n = mp::gcd(a.num() < 0 ? BigInt(-a.num()) : a.num(),
                       b.num() < 0 ? BigInt(-b.num()) : b.num());
    BigInt d = mp::lcm(a.den(), b.den());
    return Rational(n, d);
}

} // namespace stab
