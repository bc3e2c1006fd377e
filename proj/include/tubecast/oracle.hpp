#ifndef TUBECAST_ORACLE_HPP
#define TUBECAST_ORACLE_HPP

#include <cstdint>

#include <Eigen/Dense>

#include "tubecast/model.hpp"

namespace tubecast {

/// Realized prediction errors (forecast minus truth) across simulated
/// sample paths.  Every path shares the model spec, window length and
/// predictor coefficients; only the innovations differ, re-seeded per path
/// so path order and count never change any individual path.
struct SimulationEnsemble {
    int paths = 0;
    std::uint64_t seed = 0;
    int burn_in = 0;
    int horizon = 0;
    int dim = 0;              ///< horizon (univariate) or m * horizon
    Eigen::MatrixXd errors;   ///< paths x dim
};

/// Sample mean and covariance of the realized errors, with per-entry
/// standard errors for z-scoring against an analytic covariance.
struct EmpiricalCovariance {
    Eigen::MatrixXd cov;
    Eigen::MatrixXd se;
    Eigen::VectorXd mean;
    Eigen::VectorXd mean_se;
    long long paths = 0;
};

struct ComparisonReport {
    Eigen::MatrixXd z;
    double max_abs_z = 0.0;
    double frobenius_rel_error = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// Simulates `paths` independent realizations of the process, applies the
/// pipeline's own forecaster to each window, and records forecast - truth.
/// Burn-in of 50 * max(1, p+q) steps precedes every retained window.
SimulationEnsemble simulate_paths(const ArimaSpec& spec, int n, int horizon,
                                  int paths, std::uint64_t seed);
SimulationEnsemble simulate_paths(const VarmaSpec& spec, int n, int horizon,
                                  int paths, std::uint64_t seed);

/// One full sample path (n observed + horizon future rows) for debugging
/// dumps; path_index selects the same stream the ensemble would use.
Eigen::MatrixXd simulate_one_path(const ArimaSpec& spec, int n, int horizon,
                                  std::uint64_t seed, int path_index);
Eigen::MatrixXd simulate_one_path(const VarmaSpec& spec, int n, int horizon,
                                  std::uint64_t seed, int path_index);

/// Order-independent aggregation (compensated sums) of the ensemble.
EmpiricalCovariance empirical_error_covariance(const SimulationEnsemble& ensemble);

/// Entrywise z-scores of empirical against analytic values.
ComparisonReport compare_covariance(const Eigen::MatrixXd& analytic,
                                    const Eigen::MatrixXd& empirical,
                                    const Eigen::MatrixXd& se, double z_threshold);

} // namespace tubecast

#endif
