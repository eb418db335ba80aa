#pragma once
#include "stab/rational.hpp"
#include "stab/spectrum.hpp"

#include <vector>

namespace stab {

struct Facet {
    std::vector<long long> normal;
    long long offset = 0; // <normal, x> + offset >= 0 inside
};

// Bounded lattice polytope, dimensions 1 to 3, given by matching vertex and
// facet data.  validate() cross-checks the two descriptions.
struct LatticePolytope {
    int n = 1;
    std::vector<std::vector<long long>> vertices;
    std::vector<Facet> facets;
};

void validate(const LatticePolytope& p);

LatticePolytope segment_polytope(long long lo, long long hi);
// axis-aligned box [0,s1] x ... x [0,sn]
LatticePolytope box_polytope(const std::vector<long long>& sides);
// {x >= 0, x1 + ... + xn <= m}
LatticePolytope simplex_polytope(int n, long long m);

struct PLPiece {
    std::vector<long long> c;
    long long d = 0;
};

// max of affine pieces <c_j, x> + d_j; convex by construction
struct PLConvexFunction {
    std::vector<PLPiece> pieces;
};

void validate(const LatticePolytope& p, const PLConvexFunction& f);

Rational pl_eval(const PLConvexFunction& f, const std::vector<Rational>& x);

// lattice points of k*P, sorted lexicographically
std::vector<std::vector<long long>> lattice_points(const LatticePolytope& p, long long k);

// weight at alpha in k*P: max_j (<c_j, alpha> + d_j * k)
long long point_weight(const PLConvexFunction& f, const std::vector<long long>& alpha,
                       long long k);

WeightSpectrum weight_spectrum_serial(const LatticePolytope& p, const PLConvexFunction& f,
                                      long long k_min, long long k_max);
WeightSpectrum weight_spectrum(const LatticePolytope& p, const PLConvexFunction& f,
                               long long k_min, long long k_max);

} // namespace stab
