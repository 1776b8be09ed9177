// Ramsey likelihood and Bayesian updating on the field grid.
#pragma once

#include "ramsey/core/distribution.hpp"
#include "ramsey/core/params.hpp"

namespace ramsey {

/// Evidence at or below this is treated as an impossible outcome.
inline constexpr double kZeroEvidence = 1e-300;

/// Both outcome probabilities at one field value. zero + one == 1 exactly.
struct LikelihoodPair {
    double zero;
    double one;
};

/// Pr(X=0|b) = 1/2 + c cos(2 mu b tau + theta)/2 and its complement, c = e^{-tau/T}.
LikelihoodPair likelihood_pair(double b, const RamseyParams& p) noexcept;

inline double likelihood(Outcome x, double b, const RamseyParams& p) noexcept {
    const auto l = likelihood_pair(b, p);
    return x == Outcome::Zero ? l.zero : l.one;
}

/// Pr(X=x) under d, by trapezoidal quadrature.
double predictive_prob(const FieldDistribution& d, const RamseyParams& p, Outcome x);

/// Posterior after observing x. Throws ZeroEvidence when the outcome is impossible under d.
FieldDistribution bayes_update(const FieldDistribution& d, const RamseyParams& p, Outcome x);

} // namespace ramsey
