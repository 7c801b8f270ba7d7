#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mfliq/errors.hpp"

namespace mfliq {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using RowVec3 = Eigen::RowVector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

// Right-continuous piecewise-constant schedule on [0, T]; a constant value
// is the single-segment case.
class Schedule {
public:
    Schedule() : times_{0.0}, values_{0.0} {}
    explicit Schedule(double constant) : times_{0.0}, values_{constant} {}
    Schedule(std::vector<double> breakpoints, std::vector<double> values);

    double operator()(double t) const;
    bool is_constant() const { return values_.size() == 1; }
    double min_value() const;
    const std::vector<double>& breakpoints() const { return times_; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> times_;  // ascending, times_[0] == 0
    std::vector<double> values_;
};

struct ModelParams {
    double gamma1 = 0.0;  // price impact of the expected child-order flow
    double gamma2 = 0.5;  // instantaneous/transient self impact, > 0
    double rho = 0.0;     // impact decay rate
    double alpha = 0.0;   // child-order excitation rate
    double beta = 0.0;    // child-order mean-reversion rate
    double lambda = 0.0;  // risk-aversion weight
    double T = 1.0;       // horizon, > 0
    Schedule sigma;       // deterministic volatility schedule, >= 0
    double x0_mean = 0.0;
    double x0_var = 0.0;
    double y0 = 0.0;
    double c0 = 0.0;

    // feedback-gain denominators; both positive under the standing assumption
    double a_tilde() const { return gamma2 * rho + lambda; }
    double a() const { return gamma2 * rho - gamma1 * alpha + lambda; }
};

// Checks the standing assumption and basic sanity; returns the params
// unchanged.  beta = alpha = 0 is permitted as the documented degenerate
// case without child-order feedback (the C state stays at c0).
ModelParams validate_params(const ModelParams& raw);

struct StateMatrices {
    Mat3 H;       // drift
    Mat3 Hbar;    // mean-field drift
    Vec3 G;       // constant drift
    Vec3 K;       // control loading (-1, gamma2, 0)
    Mat3 Q;       // running cost, only Q(0,0) = lambda
    Schedule sigma;

    Vec3 Dvec(double t) const { return Vec3(0.0, sigma(t), 0.0); }
};

StateMatrices build_state_matrices(const ModelParams& p);

// Law of the initial state (X, Y, C).  Only the inventory component is
// random; Y and C start at deterministic values.
struct InitialLaw {
    Vec3 mean = Vec3::Zero();
    Mat3 cov = Mat3::Zero();

    static InitialLaw from_params(const ModelParams& p);
    void validate() const;  // symmetric, PSD within tolerance
};

}  // namespace mfliq
