#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace shatir {

inline constexpr double kDegPerRad = 180.0 / std::numbers::pi;

inline double rad(double deg) { return deg / kDegPerRad; }
inline double deg(double rad_) { return rad_ * kDegPerRad; }

// Reduce into [0, 360).
inline double norm360(double x) {
    double r = std::fmod(x, 360.0);
    if (r < 0.0) r += 360.0;
    return r;
}

// Reduce into (-180, 180].
inline double wrap180(double x) {
    double r = std::fmod(x, 360.0);
    if (r <= -180.0) r += 360.0;
    if (r > 180.0) r -= 360.0;
    return r;
}

// Minimal arc between two longitudes, in [0, 180].
inline double circular_delta(double a, double b) {
    return std::fabs(wrap180(a - b));
}

enum class Err {
    MalformedSexagesimal,
    DigitOutOfRange,
    FieldOutOfRange,
    UnknownPointLabel,
    PreconditionViolated,
    UnknownBody,
    UnsupportedPair,
    InfeasibleTargets,
    DegenerateGeometry,
    SpanMismatch,
};

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace shatir
