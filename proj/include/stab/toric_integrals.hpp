#pragma once
#include "stab/polytope.hpp"
#include "stab/rational.hpp"

#include <map>
#include <vector>

namespace stab {

using RPoint = std::vector<Rational>;

// maximal cell where one affine piece dominates; vertices are ordered along
// the boundary for n = 2
struct LinearityRegion {
    std::size_t piece = 0;
    std::vector<RPoint> vertices;
};

// full-dimensional cells only; every piece that is active somewhere yields one
std::vector<LinearityRegion> linearity_regions(const LatticePolytope& p,
                                               const PLConvexFunction& f);

Rational polytope_volume(const LatticePolytope& p);

// integral of f over P divided by the volume
Rational average_value(const LatticePolytope& p, const PLConvexFunction& f);

// integral over P of f^power (or (f - mean)^power when centered), exact.
// Piecewise integrands are supported for n <= 2; in dimension 3 the function
// must consist of a single affine piece.
Rational exact_integral(const LatticePolytope& p, const PLConvexFunction& f, long long power,
                        bool centered);

// sup norm of f - mean over P, attained at a cell vertex
Rational n_infinity(const LatticePolytope& p, const PLConvexFunction& f);

struct RateEntry {
    long long k = 0;
    Rational residual;
};

struct MomentRateReport {
    Rational volume;
    Rational target_mean; // integral of f over P
    std::vector<RateEntry> mean_residuals;
    Rational mean_rate_constant; // max over k of k * residual
    std::map<long long, Rational> centered_targets;
    std::map<long long, std::vector<RateEntry>> centered_residuals;
    std::map<long long, Rational> centered_rate_constants;
};

// residuals of the trace sums against their limiting integrals:
//   |Tr A_k / k^(n+1) - integral(f)| and, per r in r_list,
//   |Tr (A_k - mean)^r / k^(n+r) - integral((f - mean)^r)|
MomentRateReport moment_rate_report(const LatticePolytope& p, const PLConvexFunction& f,
                                    long long k_min, long long k_max,
                                    const std::vector<long long>& r_list);

} // namespace stab
