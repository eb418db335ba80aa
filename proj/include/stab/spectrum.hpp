#pragma once
#include "stab/rational.hpp"
#include "stab/sqrt_ratio.hpp"

#include <map>
#include <string>
#include <vector>

namespace stab {

// Weights of a one-parameter action on the degree-k pieces, k >= 1.
struct WeightSpectrum {
    int n = 1;        // growth order: dim of the k-th piece is O(k^n)
    long long r = 1;  // volume scale entering the normalized invariants
    std::map<long long, std::vector<long long>> weights;
};

struct ConfigInvariants {
    int n = 1;
    long long r = 1;
    Rational a0, a1; // dimension expansion
    Rational b0, b1; // trace expansion
    Rational Q;      // leading coefficient of the squared trace
    std::map<long long, Rational> np_pow; // p -> N_p^p, centered p-th moments
    Rational futaki;
    SqrtRatio psi;
    std::map<long long, RootRatio> psi_hat;
};

bool operator==(const ConfigInvariants& a, const ConfigInvariants& b);

// Derived fields (futaki, psi, psi_hat) recomputed from the core ones.
ConfigInvariants make_invariants(int n, long long r, const Rational& a0, const Rational& a1,
                                 const Rational& b0, const Rational& b1, const Rational& Q,
                                 const std::map<long long, Rational>& np_pow);

// Exact polynomial fits of dim, Tr A, Tr A^2, ..., with `guard` held-out
// samples verifying each fit.  p_list selects which centered moments N_p
// to extract (even p only; computed from uncentered traces by binomial
// recombination, never by fitting the centered series).
ConfigInvariants invariants_from_spectrum(const WeightSpectrum& spec,
                                          const std::vector<long long>& p_list = {2, 4},
                                          int guard = 2);

ConfigInvariants twist(const ConfigInvariants& inv, const Rational& nu);
ConfigInvariants base_change(const ConfigInvariants& inv, long long d);

// w -> w + nu*k on every weight; matches twist() on the invariants
WeightSpectrum twist_spectrum(const WeightSpectrum& spec, long long nu);
// w -> d*w; matches base_change() on the invariants
WeightSpectrum base_change_spectrum(const WeightSpectrum& spec, long long d);

// Maximizer of psi over rational twists; requires futaki < 0.
Rational optimal_nu(const ConfigInvariants& inv);
// psi at the optimal twist; equals sqrt(a1^2/a0/r^(n-2) + psi_hat_2^2).
SqrtRatio twist_supremum(const ConfigInvariants& inv);

struct LowerBoundReport {
    ConfigInvariants inv;
    bool destabilizing = false; // futaki < 0
    Rational nu_star;           // only meaningful when destabilizing
    SqrtRatio sup;              // best twisted psi when destabilizing
    Rational n2_centered;       // Q - b0^2/a0
    Rational n2_alternative;    // Q - b1^2/a0, kept for comparison
    std::string note;
};

LowerBoundReport lower_bound_report(const ConfigInvariants& inv);

} // namespace stab
