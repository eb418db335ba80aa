#include "doctest.h"

#include "stab/errors.hpp"
#include "stab/rational.hpp"
#include "stab/sqrt_ratio.hpp"
#include "stab/unipoly.hpp"

#include <cmath>
#include <vector>

using namespace stab;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(0).den() == 1);

    Rational a(1, 6), b(1, 10);
    CHECK(a + b == Rational(4, 15));
    CHECK(a - b == Rational(1, 15));
    CHECK(a * b == Rational(1, 60));
    CHECK(a / b == Rational(5, 3));
    CHECK(-a == Rational(-1, 6));
    CHECK(a.abs() == a);
    CHECK((-a).abs() == a);

    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2, 3).pow(-3) == Rational(-27, 8));
    CHECK(Rational(7).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), BadInput);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), BadInput);
    CHECK_THROWS_AS(Rational(1, 0), BadInput);
}

TEST_CASE("rational ordering and conversion") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7, 2).to_double() == doctest::Approx(3.5).epsilon(1e-15));
    CHECK(Rational(1, 3).sign() == 1);
    CHECK(Rational(-1, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("rational string round trip") {
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("6/-8") == Rational(-3, 4));
    CHECK_THROWS_AS(Rational::parse("x/y"), BadInput);
    CHECK_THROWS_AS(Rational::parse("1/0"), BadInput);
    for (long long n = -5; n <= 5; ++n)
        for (long long d = 1; d <= 4; ++d) CHECK(Rational::parse(Rational(n, d).str()) == Rational(n, d));
}

TEST_CASE("rational gcd helper") {
    CHECK(rational_gcd(Rational(3, 2), Rational(2, 3)) == Rational(1, 6));
    CHECK(rational_gcd(Rational(4), Rational(6)) == Rational(2));
    CHECK(rational_gcd(Rational(-3, 2), Rational(9, 4)) == Rational(3, 4));
}

TEST_CASE("unipoly basics") {
    UniPoly p({Rational(1), Rational(2), Rational(1)}); // 1 + 2x + x^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(3)) == Rational(16));
    CHECK(p.eval(Rational(-1, 2)) == Rational(1, 4));

    UniPoly q({Rational(1), Rational(1)});
    CHECK(q * q == p);
    CHECK((p - q * q).is_zero());
    CHECK(UniPoly().degree() == -1);
    CHECK(p.scaled(Rational(1, 2)).coeff(1) == Rational(1));

    UniPoly trimmed({Rational(1), Rational(0), Rational(0)});
    CHECK(trimmed.degree() == 0);
}

TEST_CASE("fit recovers triangular numbers") {
    std::vector<Sample> s;
    for (long long k = 1; k <= 5; ++k) s.push_back({k, Rational(k * (k + 1) / 2)});
    UniPoly p = fit_polynomial(s, 2, 2);
    CHECK(p.coeff(0) == Rational(0));
    CHECK(p.coeff(1) == Rational(1, 2));
    CHECK(p.coeff(2) == Rational(1, 2));
    CHECK(leading_coefficient(p, 2) == Rational(1, 2));
    CHECK(leading_coefficient(p, 5) == Rational(0));
    CHECK_THROWS_AS(leading_coefficient(p, 1), DegreeExceeded);
}

TEST_CASE("fit recovers an exact cubic from shifted nodes") {
    // 2x^3 - x/3 + 5/7 sampled away from the origin
    UniPoly truth({Rational(5, 7), Rational(-1, 3), Rational(0), Rational(2)});
    std::vector<Sample> s;
    for (long long k = 4; k <= 11; ++k) s.push_back({k, truth.eval(Rational(k))});
    CHECK(fit_polynomial(s, 3, 4) == truth);
}

TEST_CASE("fit guards catch non-polynomial data") {
    std::vector<Sample> s;
    for (long long k = 1; k <= 6; ++k) s.push_back({k, Rational(k * k * k)});
    CHECK_THROWS_AS(fit_polynomial(s, 2, 3), GuardMismatch);
    try {
        fit_polynomial(s, 2, 3);
    } catch (const GuardMismatch& g) {
        CHECK(g.bad_k == 4); // first held-out sample
    }
}

TEST_CASE("fit rejects degenerate sample sets") {
    std::vector<Sample> dup = {{1, Rational(1)}, {2, Rational(2)}, {2, Rational(3)}, {4, Rational(4)}};
    CHECK_THROWS_AS(fit_polynomial(dup, 1, 2), DegenerateSamples);
    std::vector<Sample> few = {{1, Rational(1)}, {2, Rational(2)}};
    CHECK_THROWS_AS(fit_polynomial(few, 1, 2), DegenerateSamples);
}

TEST_CASE("root ratio equality across forms") {
    CHECK(SqrtRatio::times_sqrt(Rational(2), Rational(2)) == SqrtRatio::times_sqrt(Rational(1), Rational(8)));
    CHECK(SqrtRatio::over_sqrt(Rational(2), Rational(2)) == SqrtRatio::times_sqrt(Rational(1), Rational(2)));
    CHECK(SqrtRatio::pth_root(1, Rational(8), 3) == SqrtRatio::exact(Rational(2)));
    CHECK(SqrtRatio::times_sqrt(Rational(0), Rational(5)).is_zero());
    CHECK(SqrtRatio::times_sqrt(Rational(5), Rational(0)).is_zero());
}

TEST_CASE("root ratio ordering") {
    CHECK(compare(SqrtRatio::times_sqrt(Rational(1), Rational(2)), SqrtRatio::exact(Rational(3, 2))) < 0);
    CHECK(compare(SqrtRatio::exact(Rational(-2)), SqrtRatio::pth_root(-1, Rational(5), 2)) > 0);
    CHECK(compare(SqrtRatio::pth_root(1, Rational(5), 2), SqrtRatio::pth_root(1, Rational(11), 3)) > 0);
    CHECK(compare(SqrtRatio(), SqrtRatio::exact(Rational(0))) == 0);
    CHECK_THROWS_AS(SqrtRatio::over_sqrt(Rational(1), Rational(0)), BadInput);
    CHECK_THROWS_AS(SqrtRatio::times_sqrt(Rational(1), Rational(-1)), BadInput);
}

TEST_CASE("root ratio ordering matches floating point when separated") {
    std::vector<RootRatio> vals;
    for (int sign : {-1, 1})
        for (long long num = 1; num <= 9; num += 2)
            for (long long den = 1; den <= 3; ++den)
                for (long long p : {1, 2, 3, 4}) vals.push_back(RootRatio::pth_root(sign, Rational(num, den), p));
    vals.push_back(RootRatio());
    for (const auto& a : vals)
        for (const auto& b : vals) {
            double fa = a.to_double(), fb = b.to_double();
            if (std::abs(fa - fb) > 1e-9) CHECK(compare(a, b) == (fa < fb ? -1 : 1));
            CHECK(compare(a, b) == -compare(b, a));
        }
}

TEST_CASE("root ratio rendering") {
    CHECK(SqrtRatio::times_sqrt(Rational(1), Rational(5)).str() == "(5/1)^(1/2)");
    CHECK(SqrtRatio::pth_root(-1, Rational(2, 3), 4).str() == "-(2/3)^(1/4)");
    CHECK(SqrtRatio().str() == "0");
    CHECK(SqrtRatio::times_sqrt(Rational(3), Rational(1)).to_double() == doctest::Approx(3.0));
}
