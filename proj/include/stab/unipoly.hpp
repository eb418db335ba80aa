#pragma once
#include "stab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace stab {

// Univariate polynomial with exact rational coefficients, lowest degree first.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& r) { return UniPoly({r}); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Rational& s) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string str() const; // human readable, highest degree first

  private:
    void trim();
    std::vector<Rational> c_;
};

using Sample = std::pair<long long, Rational>; // (k, value)

// Interpolates the first degree+1 samples exactly (Newton divided differences)
// and checks every remaining sample against the result.  Throws GuardMismatch
// on the first disagreement, DegenerateSamples on repeated k or too few points.
UniPoly fit_polynomial(const std::vector<Sample>& samples, int degree, int guard);

// Coefficient of k^expected_degree; zero when the actual degree is lower.
// Throws DegreeExceeded when the polynomial has higher degree than expected.
Rational leading_coefficient(const UniPoly& p, int expected_degree);

} // namespace stab
