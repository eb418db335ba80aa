#pragma once
#include "stab/rational.hpp"
#include "stab/sqrt_ratio.hpp"

#include <cstdint>
#include <vector>

namespace stab {

struct BundlePiece {
    long long rank = 1;
    long long degree = 0;
    long long multiplicity = 1;
};

// Direct sum of stable pieces, each repeated `multiplicity` times.
struct BundleSpec {
    std::vector<BundlePiece> pieces;
};

// Equal (rank, degree) pieces merged, sorted by decreasing slope then rank.
std::vector<BundlePiece> canonical_pieces(const BundleSpec& spec);
long long total_units(const BundleSpec& spec);

struct FlagStep {
    long long rank = 1;
    long long degree = 0;
};
// Successive subquotients of a filtration, sub-object first.
using Flag = std::vector<FlagStep>;

Rational slope(long long rank, long long degree);

// sqrt(sum_i rank_i * slope_i^2)
SqrtRatio phi(const Flag& flag);

// -(sum_i degree_i * w_i) / sqrt(sum_i rank_i * w_i^2)
SqrtRatio psi_flag(const Flag& flag, const std::vector<Rational>& weights);

// w_i = -C * slope_i with the smallest C > 0 making every w_i an integer.
// Requires strictly decreasing slopes, not all zero.
std::vector<Rational> optimal_weights(const Flag& flag);

// Merge steps at `index` and `index`+1 (0-based) into one.
Flag merge_step(const Flag& flag, std::size_t index);

// Subquotients grouped by slope, strictly decreasing.
Flag harder_narasimhan(const BundleSpec& spec);

SqrtRatio phi_hn(const BundleSpec& spec);

// Smallest weight bound guaranteed to contain the optimizer:
// lcm(piece ranks) * max |slope|, at least 1.
long long weight_bound_for(const BundleSpec& spec);

struct SupPsiResult {
    SqrtRatio sup;
    // counts[t] of canonical piece type t in each successive block
    std::vector<std::vector<long long>> blocks;
    std::vector<long long> weights; // strictly increasing, one per block
    std::vector<BundlePiece> types; // canonical piece types the counts refer to
    unsigned long long leaves = 0;  // weight vectors inspected
};

inline constexpr unsigned long long kDefaultSupPsiBudget = 6'000'000'000ULL;

// Exhaustive maximum of psi over ordered partitions of the pieces and strictly
// increasing integer weight vectors in [-weight_bound, weight_bound].
SupPsiResult brute_force_sup_psi_serial(const BundleSpec& spec, long long weight_bound,
                                        unsigned long long budget = kDefaultSupPsiBudget);
SupPsiResult brute_force_sup_psi(const BundleSpec& spec, long long weight_bound,
                                 unsigned long long budget = kDefaultSupPsiBudget);

} // namespace stab
