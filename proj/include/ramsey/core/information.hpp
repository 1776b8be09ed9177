// Information functionals of field distributions.
#pragma once

#include "ramsey/core/distribution.hpp"
#include "ramsey/core/params.hpp"

namespace ramsey {

/// -p ln p - (1-p) ln(1-p) with 0 ln 0 = 0.
double binary_entropy(double p) noexcept;

/// Differential entropy in nats; may be negative for sharp densities.
double entropy(const FieldDistribution& d);

double mean(const FieldDistribution& d);

/// <B^2> - <B>^2, clamped at zero against round-off.
double variance(const FieldDistribution& d);

/// Conditional entropy H(X|B): prior-weighted binary entropy of the likelihood.
double conditional_entropy(const FieldDistribution& d, const RamseyParams& p);

/// I(B;X) = H(X) - H(X|B) computed directly from the prior and the likelihoods.
double mutual_information(const FieldDistribution& d, const RamseyParams& p);

enum class Functional { Entropy, Variance };

/// Sum over outcomes of Pr(X=x) G[posterior_x]. Impossible outcomes are skipped.
double expected_posterior_functional(const FieldDistribution& d, const RamseyParams& p,
                                     Functional g);

} // namespace ramsey
