// Ramsey measurement controls and outcomes.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace ramsey {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.141592653589793238462643383280;

/// Wraps an angle into [0, 2pi).
double wrap_phase(double theta);

/// Coherence time T; infinite means no contrast decay (factor exactly 1).
class CoherenceTime {
public:
    static CoherenceTime infinite() noexcept { return CoherenceTime(); }
    explicit CoherenceTime(double T);

    bool is_infinite() const noexcept { return !value_.has_value(); }
    /// Finite value, or +inf.
    double value() const noexcept;
    /// e^{-tau/T}; exactly 1 when infinite.
    double decay(double tau) const noexcept;

    std::string to_string() const;
    bool operator==(const CoherenceTime&) const = default;

private:
    CoherenceTime() = default;
    std::optional<double> value_;
};

/**
 * @brief One Ramsey shot: exposure tau, readout phase theta, coherence T, coupling mu.
 *
 * Natural units by default (mu = 1). theta is wrapped to [0, 2pi) on construction.
 */
class RamseyParams {
public:
    RamseyParams(double tau, double theta, CoherenceTime coherence = CoherenceTime::infinite(),
                 double mu = 1.0);

    double tau() const noexcept { return tau_; }
    double theta() const noexcept { return theta_; }
    const CoherenceTime& coherence() const noexcept { return coherence_; }
    double mu() const noexcept { return mu_; }

    /// Fringe contrast e^{-tau/T}.
    double contrast() const noexcept { return coherence_.decay(tau_); }
    /// Angular frequency of the fringe in b: 2 mu tau.
    double fringe_frequency() const noexcept { return 2.0 * mu_ * tau_; }

    bool operator==(const RamseyParams&) const = default;

private:
    double tau_;
    double theta_;
    CoherenceTime coherence_;
    double mu_;
};

/// Binary readout label. Zero takes the "+" branch of the fringe.
enum class Outcome : std::uint8_t { Zero = 0, One = 1 };

constexpr int to_int(Outcome x) noexcept { return static_cast<int>(x); }
Outcome outcome_from_int(int v);

} // namespace ramsey
