#pragma once

#include <stdexcept>
#include <string>

namespace mfliq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error { using Error::Error; };
struct StandingAssumptionViolated : Error { using Error::Error; };
struct NonpositiveHorizon : Error { using Error::Error; };
struct NegativeVariance : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct LiquidationViolation : Error { using Error::Error; };
struct MissingDiffusionRecord : Error { using Error::Error; };
struct SeedCollision : Error { using Error::Error; };
struct BoundsDoNotBracket : Error { using Error::Error; };

// A coefficient system left the finite range: reported as a failed
// well-posedness regime rather than a crash.
struct NonFiniteCoefficient : Error {
    double blowup_time;
    NonFiniteCoefficient(const std::string& what, double t)
        : Error(what), blowup_time(t) {}
};

struct NoPsdLambdaFound : Error {
    double best_min_eigenvalue;
    NoPsdLambdaFound(const std::string& what, double best)
        : Error(what), best_min_eigenvalue(best) {}
};

struct SingularDenominator : Error {
    int step;
    SingularDenominator(const std::string& what, int n) : Error(what), step(n) {}
};

}  // namespace mfliq
