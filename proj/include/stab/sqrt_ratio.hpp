#pragma once
#include "stab/rational.hpp"

#include <string>

namespace stab {

// sign * mag^(1/root) with mag a nonnegative rational.  Closed under the
// operations we need (squares, p-th powers, rational scaling) and admits
// exact comparison, so suprema of slope data never touch floating point.
class RootRatio {
  public:
    RootRatio() : sign_(0), mag_(0), root_(2) {}

    // q * sqrt(s), s >= 0
    static RootRatio times_sqrt(const Rational& q, const Rational& s);
    // q / sqrt(s), s > 0
    static RootRatio over_sqrt(const Rational& q, const Rational& s);
    // sign * mag^(1/p), mag >= 0, p >= 1
    static RootRatio pth_root(int sign, const Rational& mag, long long p);
    static RootRatio exact(const Rational& q);

    int sign() const { return sign_; }
    const Rational& mag() const { return mag_; }
    long long root() const { return root_; }

    bool is_zero() const { return sign_ == 0; }
    double to_double() const;
    std::string str() const;

  private:
    int sign_;
    Rational mag_;
    long long root_;
};

// -1, 0, +1; exact, mixed roots are compared through the common power
int compare(const RootRatio& a, const RootRatio& b);
inline bool operator==(const RootRatio& a, const RootRatio& b) { return compare(a, b) == 0; }
inline bool operator<(const RootRatio& a, const RootRatio& b) { return compare(a, b) < 0; }

using SqrtRatio = RootRatio;

} // namespace stab
