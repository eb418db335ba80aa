#pragma once

#include "stab/hermitian.hpp"

#include <string>
#include <utility>
#include <vector>

namespace stab {

// Rational curve in complex projective space given by polynomial components
// sigma_alpha(w) = sum_m components[alpha][m] w^m.  Individual components may
// be identically zero, but the components must not share a root; in
// particular some component must be nonzero at w = 0 (otherwise divide out
// the common power of w first).
struct EmbeddedCurve {
    std::vector<std::vector<Complex>> components;
};

// formal sum of curves with positive multiplicities
struct WeightedCycle {
    std::vector<std::pair<EmbeddedCurve, long long>> parts;
};

// highest power of w appearing in any component; this is also the total mass
// of the pulled-back Fubini-Study measure
long long curve_degree(const EmbeddedCurve& curve);

// density of the pulled-back Fubini-Study measure against Lebesgue measure
double fs_density(const EmbeddedCurve& curve, Complex w);

// total mass of the pulled-back measure, integrated over two polar charts;
// agrees with the degree
double fs_mass(const EmbeddedCurve& curve);

// moment matrix M[a][b] = int sigma_a conj(sigma_b) / |sigma|^2 dmu_FS.
// Curves whose components are single monomials reduce to radial integrals;
// everything else is integrated over two polar charts.
HermitianMatrix moment_matrix(const EmbeddedCurve& curve);

// (deg/(N+1)) tr A - tr(A M); zero when the embedding is balanced
double chow_weight(const HermitianMatrix& action, const EmbeddedCurve& curve);

// pairing tr(A0 M0) of the trace-free parts of the action and of the moment
// matrix; equal to minus the Chow weight of the same curve
double moment_pairing(const HermitianMatrix& action, const EmbeddedCurve& curve);

// Chow weight of a weighted cycle: the mass term uses the total degree and
// the moment term sums the parts with their multiplicities
double chow_weight_of_cycle(const HermitianMatrix& action, const WeightedCycle& cycle);

// rescale component alpha by t^{weights[alpha]}, normalized so the smallest
// weight carries scale one; t = 1 returns the curve unchanged
EmbeddedCurve scaled_curve(const EmbeddedCurve& curve, const std::vector<double>& weights,
                           double t);

// A curve, a diagonal one-parameter flow that degenerates it, the flat limit
// cycle of the family, and the exact Chow weight of that limit.
struct DegenerationExample {
    EmbeddedCurve curve;
    HermitianMatrix action;
    std::vector<double> flow_weights;
    WeightedCycle limit;
    double limit_chow_weight;

    DegenerationExample() : action(0) {}
};

// registered examples: "conic-a" and "conic-b"
DegenerationExample degeneration_example(const std::string& name);

} // namespace stab
