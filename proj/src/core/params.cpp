#include "ramsey/core/params.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ramsey {

double wrap_phase(double theta) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("phase must be finite");
    double w = std::fmod(theta, kTwoPi);
    if (w < 0.0)
        w += kTwoPi;
    if (w >= kTwoPi)
        w = 0.0;
    return w;
}

CoherenceTime::CoherenceTime(double T) {
    if (std::isinf(T) && T > 0.0)
        return;
    if (!(T > 0.0) || !std::isfinite(T))
        throw std::invalid_argument("coherence time must be > 0");
    value_ = T;
}

double CoherenceTime::value() const noexcept {
    return value_ ? *value_ : std::numeric_limits<double>::infinity();
}

double CoherenceTime::decay(double tau) const noexcept {
    if (!value_)
        return 1.0;
    return std::exp(-tau / *value_);
}

std::string CoherenceTime::to_string() const {
    if (!value_)
        return "inf";
    std::ostringstream out;
    out.precision(17);
    out << *value_;
    return out.str();
}

RamseyParams::RamseyParams(double tau, double theta, CoherenceTime coherence, double mu)
    : tau_(tau), theta_(wrap_phase(theta)), coherence_(coherence), mu_(mu) {
    if (!std::isfinite(tau) || tau < 0.0)
        throw std::invalid_argument("tau must be finite and >= 0");
    if (!std::isfinite(mu) || !(mu > 0.0))
        throw std::invalid_argument("mu must be finite and > 0");
}

Outcome outcome_from_int(int v) {
    if (v == 0)
        return Outcome::Zero;
    if (v == 1)
        return Outcome::One;
    throw std::invalid_argument("outcome must be 0 or 1");
}

} // namespace ramsey
