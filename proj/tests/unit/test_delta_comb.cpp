// DeltaComb construction
#include "ramsey/fourier/delta_comb.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using namespace ramsey::fourier;
using cd = std::complex<double>;

TEST(DeltaComb, SortsPeaks) {
    DeltaComb c({{2.0, cd(0.1, 0)}, {-2.0, cd(0.1, 0)}, {0.0, cd(1, 0)}});
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c.peaks()[0].xi, -2.0);
    EXPECT_EQ(c.peaks()[2].xi, 2.0);
    EXPECT_DOUBLE_EQ(c.max_frequency(), 2.0);
}

TEST(DeltaComb, MergesCloseFrequencies) {
    DeltaComb c({{1.0, cd(0.2, 0)}, {1.0 + 5e-10, cd(0.3, 0.1)}, {0.0, cd(1, 0)}});
    ASSERT_EQ(c.size(), 2u);
    EXPECT_NEAR(c.amplitude_at(1.0).real(), 0.5, 1e-15);
    EXPECT_NEAR(c.amplitude_at(1.0).imag(), 0.1, 1e-15);
}

TEST(DeltaComb, KeepsSeparatedFrequencies) {
    DeltaComb c({{1.0, cd(0.2, 0)}, {1.0 + 1e-6, cd(0.3, 0)}});
    EXPECT_EQ(c.size(), 2u);
}

TEST(DeltaComb, PrunesTinyAmplitudes) {
    DeltaComb c({{0.0, cd(1, 0)}, {3.0, cd(1e-13, 0)}, {-3.0, cd(1e-13, 0)}});
    EXPECT_EQ(c.size(), 1u);
    EXPECT_FALSE(c.has_peak(3.0));
    EXPECT_EQ(c.amplitude_at(3.0), cd(0, 0));
}

TEST(DeltaComb, CancellingPeaksVanish) {
    DeltaComb c({{1.0, cd(0.5, 0)}, {1.0, cd(-0.5, 0)}});
    EXPECT_TRUE(c.empty());
}

TEST(DeltaComb, HermitianAndNormalized) {
    DeltaComb good({{0.0, cd(1, 0)}, {1.5, cd(0.2, 0.3)}, {-1.5, cd(0.2, -0.3)}});
    EXPECT_TRUE(good.is_hermitian());
    EXPECT_TRUE(good.is_normalized());
    DeltaComb lopsided({{0.0, cd(1, 0)}, {1.5, cd(0.2, 0.3)}});
    EXPECT_FALSE(lopsided.is_hermitian());
    DeltaComb wrong_phase({{0.0, cd(1, 0)}, {1.5, cd(0.2, 0.3)}, {-1.5, cd(0.2, 0.3)}});
    EXPECT_FALSE(wrong_phase.is_hermitian());
    DeltaComb heavy({{0.0, cd(2, 0)}});
    EXPECT_FALSE(heavy.is_normalized());
}

TEST(DeltaComb, RejectsNonFinite) {
    EXPECT_THROW(DeltaComb({{NAN, cd(1, 0)}}), std::invalid_argument);
    EXPECT_THROW(DeltaComb({{0.0, cd(INFINITY, 0)}}), std::invalid_argument);
}

TEST(DeltaComb, NearZeroSnapsToZero) {
    DeltaComb c({{3e-10, cd(1, 0)}});
    EXPECT_EQ(c.peaks()[0].xi, 0.0);
}
