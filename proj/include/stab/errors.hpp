#pragma once
#include <stdexcept>
#include <string>

namespace stab {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// polynomial fit verified against held-out samples and disagreed
struct GuardMismatch : Error {
    long long bad_k;
    GuardMismatch(long long k, const std::string& what) : Error(what), bad_k(k) {}
};

struct DegenerateSamples : Error {
    using Error::Error;
};

struct DegreeExceeded : Error {
    using Error::Error;
};

struct NotSlopeDecreasing : Error {
    using Error::Error;
};

struct ZeroWeights : Error {
    using Error::Error;
};

struct AllSlopesZero : Error {
    using Error::Error;
};

struct WeightsDiffer : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct NonPositiveQ : Error {
    using Error::Error;
};

struct NonNegativeFutaki : Error {
    using Error::Error;
};

struct UnsupportedDimension : Error {
    using Error::Error;
};

struct QuadratureNotConverged : Error {
    using Error::Error;
};

struct NonConvexPotential : Error {
    using Error::Error;
};

struct MonotonicityViolated : Error {
    using Error::Error;
};

struct BadInput : Error {
    using Error::Error;
};

} // namespace stab
