#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>

namespace stab {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always reduced, denominator > 0.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const BigInt& n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d);
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const { return num_ >= 0 ? *this : -*this; }
    // negative exponents require a nonzero value
    Rational pow(long long e) const;

    double to_double() const;
    // "num/den", always with the slash
    std::string str() const;
    // accepts "3", "-3", "3/4", "-3/4"
    static Rational parse(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    void normalize();
    BigInt num_, den_;
};

Rational rational_gcd(const Rational& a, const Rational& b);

} // namespace stab
