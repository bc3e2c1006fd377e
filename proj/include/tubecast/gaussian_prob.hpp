#ifndef TUBECAST_GAUSSIAN_PROB_HPP
#define TUBECAST_GAUSSIAN_PROB_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "tubecast/error_covariance.hpp"
#include "tubecast/predictor.hpp"

namespace tubecast {

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
};

/// Per-step, per-coordinate bounds the future values must stay inside.
/// steps[i][s] is the interval for step i+1, coordinate s+1; open sides
/// are expressed with +-infinity.
struct ForecastTube {
    std::vector<std::vector<Interval>> steps;

    int horizon() const { return static_cast<int>(steps.size()); }
    int width() const { return steps.empty() ? 0 : static_cast<int>(steps.front().size()); }
};

/// Bounds on the stacked error coordinates, step-major: coordinate s of
/// step i lives at index (i-1)*m + (s-1).
struct ErrorBox {
    int steps = 0;
    int coords_per_step = 1;
    std::vector<Interval> bounds;

    int dim() const { return static_cast<int>(bounds.size()); }
};

struct McConfig {
    long long samples = 1'000'000;
    std::uint64_t seed = 42;
};

struct BoxProbability {
    double estimate = 0.0;
    double standard_error = 0.0;
    long long samples = 0;
    std::uint64_t seed = 0;
};

/// All tube-event probabilities evaluated on one shared sample stream:
/// the intersection (every step inside), the union (at least one step
/// inside), and the per-step marginals.
struct TubeProbabilities {
    BoxProbability intersection;
    BoxProbability union_any;
    std::vector<BoxProbability> marginals;
};

/// Value-space bounds become error-space bounds via
/// [P - c2, P - c1] per coordinate.
ErrorBox tube_to_error_box(const ForecastTube& tube, const ForecastVector& forecast);

/// Rank-revealing Cholesky factor L (dim x rank) with sigma ~ L L^T.
/// Pivots below 1e-10 * max(1, largest initial diagonal) truncate the rank;
/// pivots below the negative of that tolerance raise NumericError.
Eigen::MatrixXd psd_cholesky_factor(const Eigen::MatrixXd& sigma);

TubeProbabilities evaluate_tube(const ErrorJointDistribution& dist, const ErrorBox& box,
                                const McConfig& config);

/// P(every coordinate inside its interval).
BoxProbability box_probability(const ErrorJointDistribution& dist, const ErrorBox& box,
                               const McConfig& config);

/// P(at least one step's event holds), steps taken from the box layout.
BoxProbability union_probability(const ErrorJointDistribution& dist, const ErrorBox& box,
                                 const McConfig& config);

/// Closed-form P(lo <= e <= hi) for a one-dimensional zero-mean Gaussian.
double gaussian_interval_probability(double variance, const Interval& interval);

} // namespace tubecast

#endif
