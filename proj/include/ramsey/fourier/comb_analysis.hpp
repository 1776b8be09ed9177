// Fourier-domain views of posteriors and Ramsey likelihoods.
#pragma once

#include "ramsey/core/distribution.hpp"
#include "ramsey/core/params.hpp"
#include "ramsey/fourier/alpha_series.hpp"
#include "ramsey/fourier/delta_comb.hpp"

#include <span>

namespace ramsey::fourier {

/// Characteristic-function samples of d at xi = 0 and at +-xi for each requested xi.
DeltaComb comb_from_distribution(const FieldDistribution& d, std::span<const double> frequencies);

/// Peaks of the likelihood Pr(X=x|b): 1/2 at 0, c e^{+-i(theta + pi x)}/4 at +-2 mu tau.
DeltaComb measurement_comb(const RamseyParams& p, Outcome x);

/// |Pr(X=0) - 1/2| = (c/2) |Re(e^{-i theta} F(2 mu tau))|.
double bias_from_comb(const DeltaComb& c, const RamseyParams& p);

/**
 * @brief H(X|B) = alpha_0 + sum_j alpha_j Re(e^{-2ij theta} F(4 j mu tau)).
 *
 * Only peaks sitting on a multiple of 4 mu tau contribute. Requires infinite
 * coherence time. Throws InsufficientSeries when a contributing j exceeds a.j_max().
 */
double conditional_entropy_from_comb(const DeltaComb& c, const RamseyParams& p,
                                     const AlphaSeries& a);

/// Triangular comb of the rezeroed posterior after n KPE steps on a diffuse prior:
/// weight 1 - |j|/2^n at xi = 2^{2-n} mu tau1 j, |j| < 2^n.
DeltaComb kpe_posterior_comb(int n, double tau1, double mu = 1.0);

} // namespace ramsey::fourier
