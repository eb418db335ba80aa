#include "doctest.h"

#include "stab/bundle.hpp"
#include "stab/errors.hpp"

#include <cstdint>
#include <vector>

using namespace stab;

TEST_CASE("slope and flag invariants") {
    CHECK(slope(2, -3) == Rational(-3, 2));
    CHECK_THROWS_AS(slope(0, 1), BadInput);

    Flag f = {{1, 2}, {1, -1}};
    CHECK(phi(f) == SqrtRatio::times_sqrt(Rational(1), Rational(5)));
    CHECK_THROWS_AS(phi(Flag{}), BadInput);
}

TEST_CASE("harder narasimhan groups equal slopes and sorts decreasing") {
    BundleSpec spec{{{1, 2, 1}, {2, -1, 1}, {1, 2, 2}}};
    Flag hn = harder_narasimhan(spec);
    REQUIRE(hn.size() == 2);
    CHECK(hn[0].rank == 3);
    CHECK(hn[0].degree == 6);
    CHECK(hn[1].rank == 2);
    CHECK(hn[1].degree == -1);

    // same-slope pieces of different rank collapse to one step
    BundleSpec mixed{{{2, 1, 1}, {4, 2, 1}, {1, -1, 1}}};
    Flag hn2 = harder_narasimhan(mixed);
    REQUIRE(hn2.size() == 2);
    CHECK(hn2[0].rank == 6);
    CHECK(hn2[0].degree == 3);
}

TEST_CASE("optimal weights rescale slopes to coprime integers") {
    Flag f = {{2, 3}, {1, 0}, {3, -2}};
    auto w = optimal_weights(f);
    REQUIRE(w.size() == 3);
    CHECK(w[0] == Rational(-9));
    CHECK(w[1] == Rational(0));
    CHECK(w[2] == Rational(4));
    for (const auto& x : w) CHECK(x.is_integer());

    CHECK_THROWS_AS(optimal_weights(Flag{{1, 1}, {1, 1}}), NotSlopeDecreasing);
    CHECK_THROWS_AS(optimal_weights(Flag{{2, 0}}), AllSlopesZero);
}

TEST_CASE("psi of a flag with its optimal weights is phi") {
    std::vector<BundleSpec> specs = {
        {{{1, 1, 1}, {1, -1, 1}}},
        {{{2, 3, 1}, {1, 0, 2}, {3, -2, 1}}},
        {{{3, 4, 1}, {2, -3, 1}}},
    };
    for (const auto& spec : specs) {
        Flag hn = harder_narasimhan(spec);
        CHECK(psi_flag(hn, optimal_weights(hn)) == phi(hn));
    }
}

TEST_CASE("psi flag error paths") {
    Flag f = {{1, 1}, {1, -1}};
    CHECK_THROWS_AS(psi_flag(f, {Rational(1)}), WeightsDiffer);
    CHECK_THROWS_AS(psi_flag(f, {Rational(0), Rational(0)}), ZeroWeights);
}

TEST_CASE("merge step combines adjacent subquotients") {
    Flag f = {{1, 2}, {2, -1}, {1, 0}};
    Flag m = merge_step(f, 1);
    REQUIRE(m.size() == 2);
    CHECK(m[0].rank == 1);
    CHECK(m[1].rank == 3);
    CHECK(m[1].degree == -1);
    CHECK_THROWS_AS(merge_step(f, 2), BadInput);
    CHECK_THROWS_AS(merge_step(Flag{{1, 0}}, 0), BadInput);
}

TEST_CASE("brute force finds the two-line optimum") {
    BundleSpec spec{{{1, 1, 1}, {1, -1, 1}}};
    auto res = brute_force_sup_psi_serial(spec, weight_bound_for(spec));
    CHECK(res.sup == phi_hn(spec));
    CHECK(res.sup == SqrtRatio::times_sqrt(Rational(1), Rational(2)));
    REQUIRE(res.blocks.size() == 2);
    CHECK(res.weights.size() == 2);
    CHECK(res.weights[0] < res.weights[1]);
}

TEST_CASE("brute force on a semistable twisted piece") {
    BundleSpec spec{{{2, 1, 1}}};
    auto res = brute_force_sup_psi_serial(spec, weight_bound_for(spec));
    CHECK(res.sup == SqrtRatio::times_sqrt(Rational(1), Rational(1, 2)));
}

TEST_CASE("degree zero spec has zero supremum") {
    BundleSpec spec{{{1, 0, 2}, {2, 0, 1}}};
    auto res = brute_force_sup_psi_serial(spec, weight_bound_for(spec));
    CHECK(res.sup.is_zero());
    CHECK(phi_hn(spec).is_zero());
}

TEST_CASE("weight bound covers the harder narasimhan optimizer") {
    BundleSpec spec{{{2, 3, 1}, {3, -4, 1}}};
    // lcm(2,3) * max(3/2, 4/3) = 9
    CHECK(weight_bound_for(spec) == 9);
    CHECK(weight_bound_for(BundleSpec{{{1, 0, 1}}}) == 1);
}

TEST_CASE("brute force size guards") {
    BundleSpec nine{{{1, 1, 9}}};
    CHECK_THROWS_AS(brute_force_sup_psi_serial(nine, 1), TooLarge);
    BundleSpec five{{{1, 4, 1}, {1, -4, 1}, {2, 3, 1}, {3, -2, 1}, {1, 0, 1}}};
    CHECK_THROWS_AS(brute_force_sup_psi_serial(five, weight_bound_for(five), 1000), TooLarge);
    CHECK_THROWS_AS(brute_force_sup_psi_serial(five, 0), BadInput);
    CHECK_THROWS_AS(brute_force_sup_psi_serial(five, 2000000), TooLarge);
}

namespace {

// deterministic corpus driver shared with the acceptance suite
std::uint64_t lcg(std::uint64_t& s) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 33;
}

BundleSpec random_spec(std::uint64_t& s, int max_pieces, int max_rank, int max_abs_degree) {
    BundleSpec spec;
    int total = 1 + static_cast<int>(lcg(s) % static_cast<std::uint64_t>(max_pieces));
    while (total > 0) {
        BundlePiece p;
        p.rank = 1 + static_cast<long long>(lcg(s) % static_cast<std::uint64_t>(max_rank));
        p.degree = static_cast<long long>(lcg(s) % static_cast<std::uint64_t>(2 * max_abs_degree + 1)) -
                   max_abs_degree;
        p.multiplicity = 1 + static_cast<long long>(lcg(s) % static_cast<std::uint64_t>(total));
        total -= static_cast<int>(p.multiplicity);
        spec.pieces.push_back(p);
    }
    return spec;
}

} // namespace

TEST_CASE("exhaustive supremum equals the slope bound on a trial corpus") {
    std::uint64_t seed = 20260814ULL;
    for (int trial = 0; trial < 40; ++trial) {
        BundleSpec spec = random_spec(seed, 4, 3, 3);
        auto res = brute_force_sup_psi_serial(spec, weight_bound_for(spec));
        CHECK(compare(res.sup, phi_hn(spec)) == 0);
    }
}

TEST_CASE("parallel and serial enumerations agree exactly") {
    std::uint64_t seed = 97ULL;
    for (int trial = 0; trial < 12; ++trial) {
        BundleSpec spec = random_spec(seed, 4, 3, 3);
        long long b = weight_bound_for(spec);
        auto a = brute_force_sup_psi_serial(spec, b);
        auto p = brute_force_sup_psi(spec, b);
        CHECK(compare(a.sup, p.sup) == 0);
        CHECK(a.blocks == p.blocks);
        CHECK(a.weights == p.weights);
        CHECK(a.leaves == p.leaves);
    }
}

TEST_CASE("coarsening a flag never beats the slope bound") {
    BundleSpec spec{{{1, 3, 1}, {2, 1, 1}, {1, -2, 1}}};
    Flag hn = harder_narasimhan(spec);
    SqrtRatio bound = phi(hn);
    for (std::size_t i = 0; i + 1 < hn.size(); ++i) {
        Flag coarse = merge_step(hn, i);
        auto w = optimal_weights(coarse);
        CHECK(compare(psi_flag(coarse, w), bound) <= 0);
    }
}
